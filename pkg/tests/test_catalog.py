import json
from fractions import Fraction
from pathlib import Path

import pytest

from so4 import (
    ABSTRACT_TYPES,
    H1,
    H2,
    X1,
    X2,
    Y1,
    Y2,
    ClassLabel,
    NonconstructibleOverFieldError,
    NotSolvableError,
    Scalar,
    UnsupportedDimensionError,
    abstract_type_of,
    catalog_to_json,
    classify,
    enumerate_catalog,
    load_catalog_file,
    representative_of,
    span_close,
    type_l3,
)
from so4.catalog import SAMPLE_A, SAMPLE_L3_A

ZERO = Scalar(0)


# -- labels ---------------------------------------------------------------------


def test_label_names():
    assert ClassLabel("J", 5).name() == "J5"
    assert ClassLabel("J", 8, a_squared=Scalar(9)).name() == "J8[a^2=9]"
    assert ClassLabel("K2", 2, a_squared=Scalar(4)).name() == "K2^2[a^2=4]"
    assert ClassLabel("L3", 1, a=Scalar(Fraction(-3, 16))).name() == "L3[a=-3/16, branch=1]"
    assert ClassLabel("L3", 2, a=ZERO).name() == "L_{3,0}^2"
    assert ClassLabel("A1+J", 4).name() == "(A1⊕J)^4"
    assert ClassLabel("zero").name() == "0"
    assert ClassLabel("full").name() == "so(4,C)"


def test_label_validation():
    with pytest.raises(ValueError):
        ClassLabel("J", 9)
    with pytest.raises(ValueError):
        ClassLabel("J", 8)  # missing parameter
    with pytest.raises(ValueError):
        ClassLabel("J", 8, a_squared=ZERO)  # J8 excludes a = 0
    with pytest.raises(ValueError):
        ClassLabel("J", 5, a_squared=Scalar(1))
    with pytest.raises(ValueError):
        ClassLabel("L3", 1, a=Scalar(Fraction(-1, 4)))  # degenerate branch point
    with pytest.raises(ValueError):
        ClassLabel("L3", 3, a=Scalar(2))  # nonzero a has two branches only
    with pytest.raises(ValueError):
        ClassLabel("K1", 2, a=Scalar(1))


def test_label_sign_identification_is_structural():
    a = Scalar(Fraction(5, 3), Fraction(1, 2))
    assert ClassLabel("J", 8, a_squared=a * a) == ClassLabel("J", 8, a_squared=(-a) * (-a))


def test_label_json_round_trip():
    for rep in enumerate_catalog():
        assert ClassLabel.from_json(rep.label.to_json()) == rep.label


# -- abstract types -----------------------------------------------------------------


def _jacobi_holds(t):
    dim = t.dim
    basis = [tuple(Scalar(1) if i == k else ZERO for i in range(dim)) for k in range(dim)]
    for a in range(dim):
        for b in range(dim):
            for c in range(dim):
                lhs = t.abstract_bracket(basis[a], t.abstract_bracket(basis[b], basis[c]))
                mid = t.abstract_bracket(basis[b], t.abstract_bracket(basis[c], basis[a]))
                rhs = t.abstract_bracket(basis[c], t.abstract_bracket(basis[a], basis[b]))
                total = tuple(x + y + z for x, y, z in zip(lhs, mid, rhs))
                if any(not v.is_zero() for v in total):
                    return False
    return True


def test_abstract_structure_constants_satisfy_jacobi():
    for t in ABSTRACT_TYPES:
        assert _jacobi_holds(t), t.name
    for a in (Scalar(2), Scalar(Fraction(-3, 16)), Scalar(0, 1)):
        assert _jacobi_holds(type_l3(a))


def test_abstract_antisymmetry_encoding():
    t = type_l3(Scalar(2))
    z1 = (Scalar(1), ZERO, ZERO)
    z3 = (ZERO, ZERO, Scalar(1))
    image = t.abstract_bracket(z3, z1)
    assert image == (ZERO, Scalar(1), ZERO)  # [z3, z1] = z2
    back = t.abstract_bracket(z1, z3)
    assert back == (ZERO, Scalar(-1), ZERO)


def test_abstract_type_examples():
    assert abstract_type_of(span_close([X1, X2, H1 - H2])).name == "L4"
    t = abstract_type_of(span_close([H1, X2, H2]))
    assert t.name == "L3" and t.a == ZERO
    t2 = abstract_type_of(span_close([X1, X2, 3 * H1 + H2]))
    assert t2.name == "L3" and t2.a == Scalar(Fraction(-3, 16))


def test_abstract_l3_parameter_oracle():
    # independent oracle: a = 2d(2d-1) for the torus d*h1 + e*h2 normalized
    # against z1 = x1 + x2; here t = 3h1 + h2 scaled to d = 3/8, e = 1/8
    d = Fraction(3, 8)
    assert Scalar(2 * d * (2 * d - 1)) == Scalar(Fraction(-3, 16))
    e = Fraction(1, 8)
    assert Scalar(2 * e * (2 * e - 1)) == Scalar(Fraction(-3, 16))


def test_abstract_type_dispatch_small():
    assert abstract_type_of(span_close([X1])).name == "J"
    assert abstract_type_of(span_close([X1, X2])).name == "K1"
    assert abstract_type_of(span_close([X1, H1])).name == "K2"
    assert abstract_type_of(span_close([X1, X2, H1 + H2])).name == "L2"
    assert abstract_type_of(span_close([H1, H2, X1, X2])).name == "M8"


def test_abstract_type_errors():
    with pytest.raises(NotSolvableError):
        abstract_type_of(span_close([H1, X1, Y1]))
    with pytest.raises(UnsupportedDimensionError):
        abstract_type_of(span_close([X1, Y1, H1, X2, H2]))
    with pytest.raises(UnsupportedDimensionError):
        abstract_type_of(span_close([]))


# -- representatives ------------------------------------------------------------------


def test_representative_examples():
    assert representative_of(ClassLabel("J", 5)).generators == (X1 + X2,)
    rep = representative_of(ClassLabel("A1+K2", 2))
    assert span_close(rep.generators) == span_close(
        [X2, __import__("so4").Y2, H2, X1, H1]
    )
    l3 = representative_of(ClassLabel("L3", 1, a=Scalar(Fraction(-3, 16))))
    assert span_close(l3.generators) == span_close(
        [X1, X2, Scalar(Fraction(3, 2)) * H1 + Scalar(Fraction(1, 2)) * H2]
    )


def test_representative_l3_branches_differ():
    a = Scalar(Fraction(-3, 16))
    b1 = span_close(representative_of(ClassLabel("L3", 1, a=a)).generators)
    b2 = span_close(representative_of(ClassLabel("L3", 2, a=a)).generators)
    assert b1 != b2


def test_representative_j8_accepts_matching_hint():
    label = ClassLabel("J", 8, a_squared=Scalar(4))
    rep = representative_of(label, a_hint=Scalar(-2))
    assert rep.generators == (H1 + Scalar(-2) * H2,)
    with pytest.raises(ValueError):
        representative_of(label, a_hint=Scalar(3))


def test_representative_j8_materializes_root():
    rep = representative_of(ClassLabel("J", 8, a_squared=Scalar(-4)))
    a = rep.generators[0].coeffs[3]
    assert a * a == Scalar(-4)


def test_nonconstructible_labels():
    # 1 + 4a = 5 has no square root in Q(i); the label is valid, the basis is not
    label = ClassLabel("L3", 1, a=Scalar(1))
    with pytest.raises(NonconstructibleOverFieldError):
        representative_of(label)
    with pytest.raises(NonconstructibleOverFieldError):
        representative_of(ClassLabel("J", 8, a_squared=Scalar(2)))


def test_l3_quarter_rejected_everywhere():
    with pytest.raises(ValueError):
        representative_of(ClassLabel("L3", 1, a=Scalar(Fraction(-1, 4))))


# -- enumeration -----------------------------------------------------------------------


def test_catalog_counts_by_dimension():
    by_dim = {}
    for rep in enumerate_catalog():
        by_dim.setdefault(rep.subalgebra().dim, []).append(rep.label)
    assert len(by_dim[1]) == 7 + len(SAMPLE_A)
    assert len(by_dim[2]) == 4 + 3 + 2 * (1 + len(SAMPLE_A))
    assert len(by_dim[3]) == 1 + 4 + 1 + 2 * len(SAMPLE_L3_A) + 3
    assert len(by_dim[4]) == 1 + 4
    assert len(by_dim[5]) == 2
    assert len(by_dim[6]) == 1
    semisimple3 = [l for l in by_dim[3] if l.family == "A1"]
    assert len(semisimple3) == 3


def test_catalog_labels_unique():
    labels = [rep.label for rep in enumerate_catalog()]
    assert len(labels) == len(set(labels))


def test_every_representative_self_classifies():
    for rep in enumerate_catalog():
        assert classify(rep.subalgebra()) == rep.label, rep.label.name()


def test_abstract_type_matches_label_family():
    implied = {"J": "J", "K1": "K1", "K2": "K2", "L2": "L2", "L3": "L3", "L4": "L4", "M8": "M8"}
    for rep in enumerate_catalog():
        s = rep.subalgebra()
        if rep.label.family in implied and 1 <= s.dim <= 4:
            t = abstract_type_of(s)
            assert t.name == implied[rep.label.family]
            if t.name == "L3":
                assert t.a == rep.label.a


# -- shipped data file -------------------------------------------------------------------


def test_shipped_catalog_matches_code():
    data_path = Path(__file__).resolve().parents[1] / "src" / "so4" / "data" / "catalog.json"
    on_disk = json.loads(data_path.read_text())
    assert on_disk == catalog_to_json()


def test_load_catalog_file_default():
    entries = load_catalog_file()
    fresh = enumerate_catalog()
    assert [e.label for e in entries] == [r.label for r in fresh]
    assert [e.generators for e in entries] == [r.generators for r in fresh]
