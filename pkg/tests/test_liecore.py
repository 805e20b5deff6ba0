import random
from fractions import Fraction

import pytest

from so4 import (
    BASIS,
    H1,
    H2,
    X1,
    X2,
    Y1,
    Y2,
    Element,
    NotClosedError,
    Scalar,
    bracket,
    component_types,
    derived_series,
    derived_subalgebra,
    element_from_matrix,
    factor_component,
    factor_intersection,
    factor_projection,
    is_solvable,
    killing_form,
    killing_is_nondegenerate,
    levi_factor,
    matrix_form,
    radical,
    sl2_element_type,
    span_close,
)
from so4._linalg import det

from conftest import rand_element

ZERO = Scalar(0)


# -- bracket -------------------------------------------------------------------


def test_chevalley_relations():
    assert bracket(H1, X1) == 2 * X1
    assert bracket(H1, Y1) == -2 * Y1
    assert bracket(X1, Y1) == H1
    assert bracket(H2, X2) == 2 * X2
    assert bracket(H2, Y2) == -2 * Y2
    assert bracket(X2, Y2) == H2


def test_factors_commute():
    for u in (H1, X1, Y1):
        for v in (H2, X2, Y2):
            assert bracket(u, v).is_zero()


def test_diagonal_bracket():
    assert bracket(X1 + X2, Y1 + Y2) == H1 + H2


def test_bracket_antisymmetry_and_jacobi(rng):
    for _ in range(60):
        u, v, w = (rand_element(rng) for _ in range(3))
        assert bracket(u, v) == -bracket(v, u)
        jac = (
            bracket(u, bracket(v, w))
            + bracket(v, bracket(w, u))
            + bracket(w, bracket(u, v))
        )
        assert jac.is_zero()


def _commutator(a, b):
    n = len(a)
    prod1 = [[sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]
    prod2 = [[sum((b[i][k] * a[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(prod1, prod2)]


def test_bracket_matches_matrix_commutator(rng):
    for _ in range(40):
        u, v = rand_element(rng), rand_element(rng)
        lhs = matrix_form(bracket(u, v))
        rhs = _commutator(matrix_form(u), matrix_form(v))
        assert [list(r) for r in lhs] == rhs


# -- matrix form -----------------------------------------------------------------


def test_matrix_form_h1():
    m = matrix_form(H1)
    assert m[0][0] == Scalar(1) and m[1][1] == Scalar(-1)
    assert all(m[i][j].is_zero() for i in range(4) for j in range(4) if (i, j) not in ((0, 0), (1, 1)))


def test_matrix_form_x2_slot():
    m = matrix_form(X2)
    assert m[2][3] == Scalar(1)
    assert sum(1 for i in range(4) for j in range(4) if not m[i][j].is_zero()) == 1


def test_matrix_form_zero():
    m = matrix_form(Element([0] * 6))
    assert all(x.is_zero() for row in m for x in row)


def test_element_from_matrix_round_trip(rng):
    for _ in range(25):
        u = rand_element(rng)
        assert element_from_matrix(matrix_form(u)) == u


def test_element_from_matrix_rejects_off_block():
    bad = [[0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    with pytest.raises(ValueError):
        element_from_matrix(bad)


def test_element_from_matrix_rejects_trace():
    bad = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    with pytest.raises(ValueError):
        element_from_matrix(bad)


# -- spans ----------------------------------------------------------------------


def test_span_close_k2_line():
    s = span_close([X1, H1 + 2 * H2])
    assert s.dim == 2


def test_span_close_rejects_open_span():
    with pytest.raises(NotClosedError) as exc:
        span_close([X1, Y1])
    assert exc.value.pair == (0, 1)
    assert exc.value.witness == H1


def test_span_close_borel():
    assert span_close([H1, H2, X1, X2]).dim == 4


def test_canonical_basis_is_span_invariant(rng):
    s = span_close([X1 + X2, H1 + H2])
    t = span_close([3 * (H1 + H2) + X1 + X2, -2 * (X1 + X2)])
    assert s == t
    assert s.basis == t.basis


def test_membership():
    s = span_close([X1, H1 + 2 * H2])
    assert X1 in s
    assert (H1 + 2 * H2 - 5 * X1) in s
    assert H1 not in s


# -- derived series ---------------------------------------------------------------


def test_derived_series_borel():
    assert derived_series(span_close([H1, H2, X1, X2])).dims == (4, 2, 0)


def test_derived_series_sl2_stable():
    series = derived_series(span_close([H1, X1, Y1]))
    assert series.dims == (3,)
    assert not series.is_solvable


def test_derived_series_abelian():
    assert derived_series(span_close([H1, H2])).dims == (2, 0)


def test_derived_terms_relation():
    s = span_close([H1, H2, X1, X2])
    series = derived_series(s)
    for a, b in zip(series.terms, series.terms[1:]):
        assert derived_subalgebra(a) == b
    assert derived_subalgebra(series.final) == series.final


# -- killing form ------------------------------------------------------------------


def _brute_force_killing(s):
    # independent oracle: ad matrices assembled by solving by hand over coords
    n = s.dim
    ads = []
    for b in s.basis:
        cols = [s.coords_of(bracket(b, c)) for c in s.basis]
        ads.append([[cols[k][i] for k in range(n)] for i in range(n)])
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = [
                [sum((ads[i][p][q] * ads[j][q][r] for q in range(n)), ZERO) for r in range(n)]
                for p in range(n)
            ]
            out[i][j] = sum((prod[p][p] for p in range(n)), ZERO)
    return out


def test_killing_sl2_nondegenerate():
    s = span_close([H1, X1, Y1])
    k = killing_form(s)
    assert k == _brute_force_killing(s)
    # frozen from the oracle: basis (h, x, y) gives det(K) = -128
    assert det(k) == Scalar(-128)
    assert killing_is_nondegenerate(s)


def test_killing_abelian_zero():
    k = killing_form(span_close([H1, H2]))
    assert all(x.is_zero() for row in k for x in row)


def test_killing_borel_degenerate():
    assert not killing_is_nondegenerate(span_close([H1, H2, X1, X2]))


# -- radical and levi factor --------------------------------------------------------


def test_radical_of_levi_sum():
    s = span_close([X1, Y1, H1, H2])
    assert radical(s) == span_close([H2])


def test_radical_semisimple_is_zero():
    assert radical(span_close([H1 + H2, X1 + X2, Y1 + Y2])).dim == 0


def test_radical_solvable_is_itself():
    borel = span_close([H1, H2, X1, X2])
    assert radical(borel) == borel


def test_radical_is_solvable_ideal(rng):
    for gens in ([X1, Y1, H1, X2], [X2, Y2, H2, X1, H1], [H1, X1, Y1, H2, X2]):
        s = span_close(gens)
        r = radical(s)
        assert is_solvable(r)
        for b in s.basis:
            for c in r.basis:
                assert bracket(b, c) in r


def test_levi_factor_examples():
    assert levi_factor(span_close([X1, Y1, H1, X2, H2])) == span_close([X1, Y1, H1])
    assert levi_factor(span_close(BASIS)) == span_close(BASIS)
    assert levi_factor(span_close([X2, Y2, H2, X1])) == span_close([X2, Y2, H2])


def test_levi_factor_rejects_solvable():
    with pytest.raises(ValueError):
        levi_factor(span_close([H1, H2, X1, X2]))


def test_levi_complements_radical():
    for gens in ([X1, Y1, H1, H2], [X2, Y2, H2, X1, H1], list(BASIS)):
        s = span_close(gens)
        levi = levi_factor(s)
        assert killing_is_nondegenerate(levi)
        assert levi.dim + radical(s).dim == s.dim


# -- factor projections and intersections --------------------------------------------


def test_projection_examples():
    a11 = span_close([H1, X1, Y1])
    assert factor_projection(a11, 2).dim == 0
    diag = span_close([H1 + H2, X1 + X2, Y1 + Y2])
    assert factor_projection(diag, 1) == span_close([H1, X1, Y1])
    k2a = span_close([X1, H1 + 2 * H2])
    assert factor_projection(k2a, 2) == span_close([H2])


def test_intersection_examples():
    s = span_close([X1, Y1, H1, X2])
    assert factor_intersection(s, 2) == span_close([X2])
    j5 = span_close([X1 + X2])
    assert factor_intersection(j5, 1).dim == 0
    l2 = span_close([X1, X2, H1 + H2])
    assert factor_intersection(l2, 1) == span_close([X1])


def test_projection_and_intersection_are_subalgebras(rng):
    for gens in ([X1 + X2, H1 + H2], [X1, X2, 3 * H1 + H2], [X1, Y1, H1, X2]):
        s = span_close(gens)
        for which in (1, 2):
            p = factor_projection(s, which)
            span_close(list(p.basis))  # re-closing must succeed
            i = factor_intersection(s, which)
            for b in i.basis:
                assert b in s


# -- element types ----------------------------------------------------------------


def test_sl2_element_type_examples():
    assert sl2_element_type(factor_component(X1, 1)).kind == "nilpotent"
    t = sl2_element_type(factor_component(H1, 1))
    assert t.kind == "semisimple" and t.det == Scalar(-1)
    t2 = sl2_element_type(factor_component(H1 + X1, 1))
    assert t2.kind == "semisimple" and t2.det == Scalar(-1)
    assert sl2_element_type(factor_component(X1, 2)).kind == "zero"


def test_component_types_pair():
    assert tuple(t.kind for t in component_types(X1 + H2)) == ("nilpotent", "semisimple")
