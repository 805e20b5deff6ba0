"""Class labels, abstract solvable types, and canonical representatives.

Every subalgebra of so(4,C) falls, up to inner automorphism, into one of
the named classes below (dimension in parentheses):

    0;  J^1..J^7, J^{8,a} (1);  K1^1..K1^4, K2^1..K2^5 (2);
    L2^1, L_{3,0}^1..4, L3(a, branch 1|2), L4^1, A1^1..A1^3 (3);
    M8^1, (A1+J)^1..4 (4);  (A1+K2)^1, (A1+K2)^2 (5);  so(4,C) (6).

Three families carry a continuous parameter identified up to sign
(J^{8,a}, K2^{2,a}, K2^{4,a}); their labels store the complete invariant
a^2 so that a and -a collide by construction.  The L3 family keeps a
itself (distinct a are abstractly non-isomorphic) together with a branch
index distinguishing the two inequivalent embeddings at each a.

The module also encodes the abstract solvable algebras of dimension <= 4
that the classification rests on (J, K1, K2, L1..L5, M8) together with a
dimension-by-dimension recognizer, and it can emit or reload the whole
catalog as JSON (shipped as package data so the CLI needs no external
files).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import liecore
from .liecore import (
    BASIS,
    H1,
    H2,
    InternalInconsistencyError,
    Subalgebra,
    X1,
    X2,
    Y1,
    Y2,
    Element,
    bracket,
    component_types,
    derived_series,
    derived_subalgebra,
    factor_intersection,
    is_solvable,
    span_close,
)
from .scalars import ONE, ZERO, Scalar, parse_scalar, render_scalar, sqrt_in_field

CATALOG_FORMAT_VERSION = "1"


class UnsupportedDimensionError(ValueError):
    pass


class NotSolvableError(ValueError):
    pass


class NonconstructibleOverFieldError(ValueError):
    """A valid label whose canonical basis needs a square root outside Q(i)."""


# -- labels --------------------------------------------------------------------

_FAMILY_INDEX_RANGE = {
    "zero": (None,),
    "J": (1, 2, 3, 4, 5, 6, 7, 8),
    "K1": (1, 2, 3, 4),
    "K2": (1, 2, 3, 4, 5),
    "L2": (1,),
    "L3": (1, 2, 3, 4),
    "L4": (1,),
    "A1": (1, 2, 3),
    "M8": (1,),
    "A1+J": (1, 2, 3, 4),
    "A1+K2": (1, 2),
    "full": (None,),
}

_QUARTER = Scalar(Fraction(-1, 4))


@dataclass(frozen=True)
class ClassLabel:
    """A class name plus its exact parameter data.

    family/index follow the table above.  a_squared is present exactly for
    J^8 and the parametric K2 families; a is present exactly for family L3
    (a = 0 selects the four discrete classes, any other a has two branches,
    a = -1/4 is rejected outright since the two branches would coincide).
    """

    family: str
    index: int | None = None
    a_squared: Scalar | None = None
    a: Scalar | None = None

    def __post_init__(self):
        if self.family not in _FAMILY_INDEX_RANGE:
            raise ValueError(f"unknown family {self.family!r}")
        if self.index not in _FAMILY_INDEX_RANGE[self.family]:
            raise ValueError(f"bad index {self.index} for family {self.family}")
        parametric = (self.family == "J" and self.index == 8) or (
            self.family == "K2" and self.index in (2, 4)
        )
        if parametric:
            if self.a_squared is None:
                raise ValueError(f"{self.family}^{self.index} requires a_squared")
            if self.family == "J" and self.a_squared.is_zero():
                raise ValueError("J^8 requires a nonzero parameter")
        elif self.a_squared is not None:
            raise ValueError("a_squared only applies to J^8, K2^2, K2^4")
        if self.family == "L3":
            if self.a is None:
                raise ValueError("L3 requires the parameter a")
            if self.a == _QUARTER:
                raise ValueError("L3 with a = -1/4 does not occur in so(4,C)")
            if self.a.is_zero():
                if self.index not in (1, 2, 3, 4):
                    raise ValueError("L3 with a = 0 has classes 1..4")
            elif self.index not in (1, 2):
                raise ValueError("L3 with a != 0 has branches 1 and 2")
        elif self.a is not None:
            raise ValueError("the parameter a only applies to family L3")

    @property
    def is_parametric(self) -> bool:
        return self.a_squared is not None or (
            self.family == "L3" and self.a is not None and not self.a.is_zero()
        )

    def name(self) -> str:
        """Display name matching the classification tables."""
        if self.family == "zero":
            return "0"
        if self.family == "full":
            return "so(4,C)"
        if self.family == "J":
            if self.index == 8:
                return f"J8[a^2={render_scalar(self.a_squared)}]"
            return f"J{self.index}"
        if self.family == "K2" and self.a_squared is not None:
            return f"K2^{self.index}[a^2={render_scalar(self.a_squared)}]"
        if self.family == "L3":
            if self.a.is_zero():
                return f"L_{{3,0}}^{self.index}"
            return f"L3[a={render_scalar(self.a)}, branch={self.index}]"
        if self.family == "A1+J":
            return f"(A1⊕J)^{self.index}"
        if self.family == "A1+K2":
            return f"(A1⊕K2)^{self.index}"
        return f"{self.family}^{self.index}"

    def to_json(self) -> dict:
        out: dict = {"family": self.family}
        if self.index is not None:
            out["index"] = self.index
        if self.a_squared is not None:
            out["a_squared"] = render_scalar(self.a_squared)
        if self.a is not None:
            out["a"] = render_scalar(self.a)
        return out

    @staticmethod
    def from_json(obj: dict) -> "ClassLabel":
        return ClassLabel(
            family=obj["family"],
            index=obj.get("index"),
            a_squared=parse_scalar(obj["a_squared"]) if "a_squared" in obj else None,
            a=parse_scalar(obj["a"]) if "a" in obj else None,
        )

    def __str__(self) -> str:
        return self.name()


ZERO_LABEL = ClassLabel("zero")
FULL_LABEL = ClassLabel("full")


# -- abstract solvable types -----------------------------------------------------


@dataclass(frozen=True)
class AbstractSolvableType:
    """An abstract solvable algebra of dimension <= 4, by structure constants.

    brackets maps (i, j) with i < j (1-based) to the coordinate vector of
    [z_i, z_j] over the abstract basis z_1..z_dim; absent pairs commute.
    """

    name: str
    dim: int
    brackets: tuple[tuple[tuple[int, int], tuple[Scalar, ...]], ...]
    a: Scalar | None = None

    def bracket_table(self) -> dict[tuple[int, int], tuple[Scalar, ...]]:
        return dict(self.brackets)

    def abstract_bracket(self, u: tuple[Scalar, ...], v: tuple[Scalar, ...]) -> tuple[Scalar, ...]:
        out = [ZERO] * self.dim
        table = self.bracket_table()
        for i in range(self.dim):
            for j in range(self.dim):
                if i == j:
                    continue
                key, sign = ((i + 1, j + 1), ONE) if i < j else ((j + 1, i + 1), -ONE)
                if key not in table:
                    continue
                c = u[i] * v[j] * sign
                if c.is_zero():
                    continue
                for k, coeff in enumerate(table[key]):
                    out[k] = out[k] + c * coeff
        return tuple(out)

    def __str__(self) -> str:
        if self.name == "L3":
            return f"L3(a={render_scalar(self.a)})"
        return self.name


def _sc(dim: int, *entries: tuple[int, int, dict[int, Scalar | int]]):
    rows = []
    for i, j, image in entries:
        vec = [ZERO] * dim
        for k, c in image.items():
            vec[k - 1] = c if isinstance(c, Scalar) else Scalar(c)
        rows.append(((i, j), tuple(vec)))
    return tuple(rows)


TYPE_J = AbstractSolvableType("J", 1, _sc(1))
TYPE_K1 = AbstractSolvableType("K1", 2, _sc(2))
TYPE_K2 = AbstractSolvableType("K2", 2, _sc(2, (1, 2, {1: 1})))
TYPE_L1 = AbstractSolvableType("L1", 3, _sc(3))
TYPE_L2 = AbstractSolvableType("L2", 3, _sc(3, (1, 3, {1: -1}), (2, 3, {2: -1})))
TYPE_L4 = AbstractSolvableType("L4", 3, _sc(3, (1, 3, {2: -1}), (2, 3, {1: -1})))
TYPE_L5 = AbstractSolvableType("L5", 3, _sc(3, (1, 3, {2: -1})))
TYPE_M8 = AbstractSolvableType("M8", 4, _sc(4, (1, 2, {2: 1}), (3, 4, {4: 1})))


def type_l3(a: Scalar) -> AbstractSolvableType:
    """[z3,z1] = z2, [z3,z2] = a*z1 + z2; one type per value of a."""
    return AbstractSolvableType(
        "L3", 3, _sc(3, (1, 3, {2: -1}), (2, 3, {1: -a, 2: -1})), a=a
    )


ABSTRACT_TYPES = (TYPE_J, TYPE_K1, TYPE_K2, TYPE_L1, TYPE_L2, TYPE_L4, TYPE_L5, TYPE_M8)


def _action_on_derived(s: Subalgebra) -> tuple[Subalgebra, "list[list[Scalar]]"]:
    """A complement element's ad action on [S,S], as a matrix over its basis."""
    d = derived_subalgebra(s)
    t = next(b for b in s.basis if b not in d)
    cols = []
    for b in d.basis:
        c = d.coords_of(bracket(t, b))
        if c is None:
            raise InternalInconsistencyError("derived algebra is not an ideal")
        cols.append(c)
    return d, [[cols[k][i] for k in range(d.dim)] for i in range(d.dim)]


def abstract_type_of(s: Subalgebra) -> AbstractSolvableType:
    """The abstract isomorphism type of a solvable subalgebra of dimension <= 4.

    Decided purely from structure constants: dimension, derived dimension,
    and for dimension 3 the trace/determinant of the adjoint action of a
    complement element on the derived algebra.  This deliberately shares no
    logic with the factor-based classifier, so the two can cross-check.
    """
    if not (1 <= s.dim <= 4):
        raise UnsupportedDimensionError(f"no abstract type catalog for dim {s.dim}")
    if not is_solvable(s):
        raise NotSolvableError("abstract solvable types require a solvable algebra")
    if s.dim == 1:
        return TYPE_J
    if s.dim == 2:
        return TYPE_K1 if derived_subalgebra(s).dim == 0 else TYPE_K2
    if s.dim == 4:
        series = derived_series(s)
        if series.dims != (4, 2, 0) or derived_subalgebra(series.terms[1]).dim != 0:
            raise InternalInconsistencyError(
                "4-dim solvable subalgebra without the Borel derived pattern"
            )
        return TYPE_M8
    # dimension 3
    d = derived_subalgebra(s)
    if d.dim == 0:
        return TYPE_L1
    if d.dim == 1:
        # L5 iff the derived line is central; L3(0) iff something acts on it
        n = d.basis[0]
        acts = any(not bracket(b, n).is_zero() for b in s.basis)
        return type_l3(ZERO) if acts else TYPE_L5
    if d.dim == 2:
        _, m = _action_on_derived(s)
        tr = m[0][0] + m[1][1]
        dt = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if dt.is_zero():
            raise InternalInconsistencyError("singular action on a 2-dim derived algebra")
        if tr.is_zero():
            return TYPE_L4
        disc = tr * tr - 4 * dt
        if disc.is_zero():
            scalar_action = m[0][1].is_zero() and m[1][0].is_zero() and m[0][0] == m[1][1]
            return TYPE_L2 if scalar_action else type_l3(_QUARTER)
        return type_l3(-dt / (tr * tr))
    raise InternalInconsistencyError("3-dim solvable algebra with 3-dim derived algebra")


# -- canonical representatives ---------------------------------------------------


@dataclass(frozen=True)
class Representative:
    """A canonical basis for one class, with a human-readable construction note."""

    label: ClassLabel
    generators: tuple[Element, ...]
    notes: str

    def subalgebra(self) -> Subalgebra:
        return span_close(self.generators)


def _sqrt_or_fail(value: Scalar, what: str) -> Scalar:
    root = sqrt_in_field(value)
    if root is None:
        raise NonconstructibleOverFieldError(
            f"{what} needs a square root of {render_scalar(value)}, "
            "which does not exist in Q(i)"
        )
    return root


def representative_of(label: ClassLabel, a_hint: Scalar | None = None) -> Representative:
    """The canonical generators for a label.

    Parametric families are materialized from the stored invariant: for
    J^8 / K2^2 / K2^4 the basis needs a itself, so any a with a^2 equal to
    the stored invariant is accepted via a_hint, and otherwise an exact
    square root is taken in Q(i).  L3 branch bases need a square root of
    1+4a; labels without one in Q(i) remain valid classification outputs
    but have no canonical basis, reported as NonconstructibleOverFieldError.
    """
    f, idx = label.family, label.index
    if a_hint is not None:
        if label.a_squared is None:
            raise ValueError("a_hint only applies to the a^2-parametrized families")
        if a_hint * a_hint != label.a_squared:
            raise ValueError("a_hint does not square to the stored invariant")

    def rep(gens, notes):
        return Representative(label, tuple(gens), notes)

    if f == "zero":
        return rep([], "the zero subalgebra")
    if f == "full":
        return rep(BASIS, "all of so(4,C)")
    if f == "J":
        fixed = {
            1: ([X1], "nilpotent line in factor 1"),
            2: ([X2], "nilpotent line in factor 2"),
            3: ([H1], "torus line in factor 1"),
            4: ([H2], "torus line in factor 2"),
            5: ([X1 + X2], "diagonal nilpotent line"),
            6: ([X1 + H2], "nilpotent plus opposite-factor torus"),
            7: ([H1 + X2], "torus plus opposite-factor nilpotent"),
        }
        if idx in fixed:
            return rep(*fixed[idx])
        a = a_hint if a_hint is not None else _sqrt_or_fail(label.a_squared, "J8 basis")
        return rep([H1 + a * H2], "torus line h1 + a*h2 with invariant a^2")
    if f == "K1":
        gens = {
            1: [X1, X2],
            2: [X1, H2],
            3: [H1, X2],
            4: [H1, H2],
        }[idx]
        return rep(gens, "abelian: one line in each factor")
    if f == "K2":
        if idx == 1:
            return rep([X1 + X2, H1 + H2], "diagonal non-abelian pair")
        if idx == 3:
            return rep([X1, H1 + X2], "derived line x1, torus skewed by x2")
        if idx == 5:
            return rep([X2, H2 + X1], "derived line x2, torus skewed by x1")
        a = a_hint if a_hint is not None else _sqrt_or_fail(label.a_squared, "K2 basis")
        if idx == 2:
            return rep([X1, H1 + a * H2], "derived line x1, torus h1 + a*h2")
        return rep([X2, H2 + a * H1], "derived line x2, torus h2 + a*h1")
    if f == "L2":
        return rep([X1, X2, H1 + H2], "both nilpotent lines, equal-weight torus")
    if f == "L4":
        return rep([X1, X2, H1 - H2], "both nilpotent lines, opposite-weight torus")
    if f == "L3":
        if label.a.is_zero():
            gens = {
                1: [H1, X2, H2],
                2: [X1, X2, H2],
                3: [X1, H1, H2],
                4: [X1, H1, X2],
            }[idx]
            return rep(gens, "derived line in one factor plus a 2-dim complement")
        root = _sqrt_or_fail(ONE + 4 * label.a, "L3 branch basis")
        if idx == 2:
            root = -root
        t = (ONE + root) * H1 + (ONE - root) * H2
        return rep(
            [X1, X2, t],
            "both nilpotent lines, torus weighted by the two roots of 1+4a",
        )
    if f == "A1":
        gens = {
            1: [H1, X1, Y1],
            2: [H2, X2, Y2],
            3: [H1 + H2, X1 + X2, Y1 + Y2],
        }[idx]
        return rep(gens, "sl2 copy: a factor or the diagonal")
    if f == "M8":
        return rep([X1, X2, H1, H2], "the Borel subalgebra")
    if f == "A1+J":
        gens = {
            1: [X1, Y1, H1, H2],
            2: [X1, Y1, H1, X2],
            3: [X2, Y2, H2, H1],
            4: [X2, Y2, H2, X1],
        }[idx]
        return rep(gens, "one factor plus a line in the other")
    if f == "A1+K2":
        gens = {1: [X1, Y1, H1, X2, H2], 2: [X2, Y2, H2, X1, H1]}[idx]
        return rep(gens, "one factor plus the Borel of the other")
    raise AssertionError(f"unhandled family {f}")


# Parameter samples for the enumerated catalog.  The a^2-identified families
# take a from SAMPLE_A (rational, negative, and non-real values); the L3
# family needs 1+4a to be a square in Q(i) for its basis to exist, so it is
# sampled at SAMPLE_L3_A (with respective roots 3, i, 1/2, 1+i).
SAMPLE_A = tuple(
    Scalar(v) if not isinstance(v, Scalar) else v
    for v in (1, 2, Fraction(1, 2), Fraction(3, 16), Scalar(0, 1), Scalar(1, 1))
)
SAMPLE_L3_A = (
    Scalar(2),
    Scalar(Fraction(-1, 2)),
    Scalar(Fraction(-3, 16)),
    Scalar(Fraction(-1, 4), Fraction(1, 2)),
)


def enumerate_catalog() -> list[Representative]:
    """All discrete classes plus the documented parametric samples."""
    out: list[Representative] = []

    def add(label: ClassLabel, a_hint: Scalar | None = None):
        out.append(representative_of(label, a_hint))

    add(ZERO_LABEL)
    for i in range(1, 8):
        add(ClassLabel("J", i))
    for a in SAMPLE_A:
        add(ClassLabel("J", 8, a_squared=a * a), a_hint=a)
    for i in range(1, 5):
        add(ClassLabel("K1", i))
    for i in (1, 3, 5):
        add(ClassLabel("K2", i))
    for i in (2, 4):
        add(ClassLabel("K2", i, a_squared=ZERO))
        for a in SAMPLE_A:
            add(ClassLabel("K2", i, a_squared=a * a), a_hint=a)
    add(ClassLabel("L2", 1))
    for i in range(1, 5):
        add(ClassLabel("L3", i, a=ZERO))
    for a in SAMPLE_L3_A:
        add(ClassLabel("L3", 1, a=a))
        add(ClassLabel("L3", 2, a=a))
    add(ClassLabel("L4", 1))
    for i in range(1, 4):
        add(ClassLabel("A1", i))
    add(ClassLabel("M8", 1))
    for i in range(1, 5):
        add(ClassLabel("A1+J", i))
    for i in (1, 2):
        add(ClassLabel("A1+K2", i))
    add(FULL_LABEL)
    return out


# -- JSON form --------------------------------------------------------------------


def catalog_to_json(entries: list[Representative] | None = None) -> dict:
    if entries is None:
        entries = enumerate_catalog()
    return {
        "format_version": CATALOG_FORMAT_VERSION,
        "entries": [
            {
                "label": r.label.to_json(),
                "name": r.label.name(),
                "generators": [
                    [render_scalar(c) for c in g.coeffs] for g in r.generators
                ],
                "notes": r.notes,
            }
            for r in entries
        ],
    }


def catalog_from_json(obj: dict) -> list[Representative]:
    if obj.get("format_version") != CATALOG_FORMAT_VERSION:
        raise ValueError(
            f"unsupported catalog format_version {obj.get('format_version')!r}"
        )
    entries = []
    for item in obj["entries"]:
        label = ClassLabel.from_json(item["label"])
        gens = tuple(
            Element([parse_scalar(c) for c in row]) for row in item["generators"]
        )
        entries.append(Representative(label, gens, item.get("notes", "")))
    return entries


def load_catalog_file(path: str | None = None) -> list[Representative]:
    """Load the catalog from a JSON file, defaulting to the shipped package data."""
    if path is None:
        text = resources.files("so4").joinpath("data/catalog.json").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return catalog_from_json(json.loads(text))
