"""The Lie algebra so(4,C) = sl(2,C) + sl(2,C) in its Chevalley basis.

Elements live in the fixed coordinate order (h1, x1, y1, h2, x2, y2):
two commuting sl(2,C) factors, each with the relations

    [h, x] = 2x,   [h, y] = -2y,   [x, y] = h.

Under the block-matrix picture, an element a*h1 + c*x1 + c'*y1 + b*h2 +
d*x2 + d'*y2 is the 4x4 block-diagonal matrix

    [ a   c   .   . ]
    [ c' -a   .   . ]
    [ .   .   b   d ]
    [ .   .   d' -b ]

and the bracket is the matrix commutator.

Subalgebra bases are kept in reduced row echelon form with the pivot
convention of ``_linalg.rref``, so a span has exactly one basis and
subalgebras compare by equality.  This module also provides the
structural machinery the classifier is built on: derived series, Killing
form, radical (Killing-orthogonal complement of the derived algebra),
Levi factor via derived-series stabilization, factor projections and
intersections, and the zero/nilpotent/semisimple trichotomy for sl(2,C)
elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import _linalg
from .scalars import ONE, ZERO, Scalar, render_scalar

DIM = 6
COORD_NAMES = ("h1", "x1", "y1", "h2", "x2", "y2")


class NotClosedError(ValueError):
    """A spanning set whose span is not closed under the bracket.

    ``pair`` indexes the two input vectors whose bracket leaves the span;
    ``witness`` is that bracket.
    """

    def __init__(self, pair: tuple[int, int], witness: "Element"):
        self.pair = pair
        self.witness = witness
        super().__init__(
            f"span is not a subalgebra: bracket of input vectors "
            f"{pair[0]} and {pair[1]} leaves the span ({witness})"
        )


class InternalInconsistencyError(RuntimeError):
    """A structural assumption that holds for all subalgebras of so(4,C) failed."""


def _as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as a coordinate")


class Element:
    """A vector in the 6-dim Chevalley coordinate system (h1,x1,y1,h2,x2,y2)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = tuple(_as_scalar(c) for c in coeffs)
        if len(coeffs) != DIM:
            raise ValueError(f"expected {DIM} coordinates, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @staticmethod
    def _raw(coeffs: tuple[Scalar, ...]) -> "Element":
        e = object.__new__(Element)
        object.__setattr__(e, "coeffs", coeffs)
        return e

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return Element._raw(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return Element._raw(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        return Element._raw(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar) -> "Element":
        try:
            s = _as_scalar(scalar)
        except TypeError:
            return NotImplemented
        return Element._raw(tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Element({self})"

    def __str__(self) -> str:
        terms = []
        for c, name in zip(self.coeffs, COORD_NAMES):
            if c.is_zero():
                continue
            if c == ONE:
                terms.append(name if not terms else f"+ {name}")
            elif c == -ONE:
                terms.append(f"-{name}" if not terms else f"- {name}")
            else:
                text = render_scalar(c)
                if "+" in text[1:] or "-" in text[1:]:
                    text = f"({text})"
                if not terms:
                    terms.append(f"{text}*{name}")
                elif text.startswith("-"):
                    terms.append(f"- {text[1:]}*{name}")
                else:
                    terms.append(f"+ {text}*{name}")
        return " ".join(terms) if terms else "0"


ZERO_ELEMENT = Element([0, 0, 0, 0, 0, 0])
H1 = Element([1, 0, 0, 0, 0, 0])
X1 = Element([0, 1, 0, 0, 0, 0])
Y1 = Element([0, 0, 1, 0, 0, 0])
H2 = Element([0, 0, 0, 1, 0, 0])
X2 = Element([0, 0, 0, 0, 1, 0])
Y2 = Element([0, 0, 0, 0, 0, 1])
BASIS = (H1, X1, Y1, H2, X2, Y2)


def _factor_bracket(a, c, e, b, d, f) -> tuple[Scalar, Scalar, Scalar]:
    # [a*h + c*x + e*y, b*h + d*x + f*y] in one sl2 factor
    return (c * f - e * d, 2 * (a * d - c * b), 2 * (e * b - a * f))


def bracket(u: Element, v: Element) -> Element:
    """The Lie bracket; bilinear, antisymmetric, factors commute."""
    uc, vc = u.coeffs, v.coeffs
    h1, x1, y1 = _factor_bracket(uc[0], uc[1], uc[2], vc[0], vc[1], vc[2])
    h2, x2, y2 = _factor_bracket(uc[3], uc[4], uc[5], vc[3], vc[4], vc[5])
    return Element._raw((h1, x1, y1, h2, x2, y2))


def matrix_form(u: Element) -> tuple[tuple[Scalar, ...], ...]:
    """The 4x4 block-diagonal matrix of u; bracket = matrix commutator."""
    a, c, cp, b, d, dp = u.coeffs
    z = ZERO
    return (
        (a, c, z, z),
        (cp, -a, z, z),
        (z, z, b, d),
        (z, z, dp, -b),
    )


def element_from_matrix(m: Sequence[Sequence]) -> Element:
    """Inverse of matrix_form; rejects matrices outside the block-diagonal shape."""
    m = [[_as_scalar(x) for x in row] for row in m]
    if len(m) != 4 or any(len(row) != 4 for row in m):
        raise ValueError("expected a 4x4 matrix")
    for i, j in ((0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0), (3, 1)):
        if m[i][j] != ZERO:
            raise ValueError(f"matrix is not block-diagonal at row {i+1}, column {j+1}")
    if m[1][1] != -m[0][0] or m[3][3] != -m[2][2]:
        raise ValueError("diagonal blocks must be traceless")
    return Element([m[0][0], m[0][1], m[1][0], m[2][2], m[2][3], m[3][2]])


# -- factor components --------------------------------------------------------


@dataclass(frozen=True)
class FactorComponent:
    """The traceless 2x2 matrix of one sl2 component of an element."""

    m: tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]

    def __post_init__(self):
        if self.m[0][0] + self.m[1][1] != ZERO:
            raise ValueError("factor component must be traceless")

    def det(self) -> Scalar:
        return self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]

    def is_zero(self) -> bool:
        return all(x == ZERO for row in self.m for x in row)


def factor_component(u: Element, which: int) -> FactorComponent:
    """The 2x2 block of the chosen sl2 factor (which in {1, 2})."""
    if which not in (1, 2):
        raise ValueError("factor index must be 1 or 2")
    o = 0 if which == 1 else 3
    a, c, cp = u.coeffs[o], u.coeffs[o + 1], u.coeffs[o + 2]
    return FactorComponent(((a, c), (cp, -a)))


@dataclass(frozen=True)
class Sl2ElementType:
    """Zero / Nilpotent / Semisimple trichotomy for a traceless 2x2 matrix."""

    kind: str  # "zero" | "nilpotent" | "semisimple"
    det: Scalar | None = None  # recorded for the semisimple kind

    def is_zero(self) -> bool:
        return self.kind == "zero"

    def is_nilpotent(self) -> bool:
        return self.kind == "nilpotent"

    def is_semisimple(self) -> bool:
        return self.kind == "semisimple"


def sl2_element_type(c: FactorComponent) -> Sl2ElementType:
    """Zero iff c = 0; nilpotent iff c != 0 with det 0; else semisimple with det.

    A nonzero traceless 2x2 matrix has eigenvalues +-lam with lam^2 = -det,
    so it is either nilpotent (det 0) or diagonalizable.
    """
    if c.is_zero():
        return Sl2ElementType("zero")
    d = c.det()
    if d.is_zero():
        return Sl2ElementType("nilpotent")
    return Sl2ElementType("semisimple", d)


def component_types(u: Element) -> tuple[Sl2ElementType, Sl2ElementType]:
    return (
        sl2_element_type(factor_component(u, 1)),
        sl2_element_type(factor_component(u, 2)),
    )


# -- subalgebras ---------------------------------------------------------------


class Subalgebra:
    """A bracket-closed subspace with a canonical echelonized basis.

    Construct through :func:`span_close`; instances are immutable and two
    subalgebras are equal exactly when they are the same subspace.
    """

    __slots__ = ("basis", "dim", "_pivots", "_cache")

    def __init__(self, basis: tuple[Element, ...], pivots: tuple[int, ...], _token=None):
        if _token is not _SUBALGEBRA_TOKEN:
            raise TypeError("use span_close() to build a Subalgebra")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "dim", len(basis))
        object.__setattr__(self, "_pivots", pivots)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Subalgebra is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subalgebra):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __contains__(self, u: Element) -> bool:
        return self.coords_of(u) is not None

    def __iter__(self) -> Iterator[Element]:
        return iter(self.basis)

    def coords_of(self, u: Element) -> list[Scalar] | None:
        """Coordinates of u in the canonical basis, or None if u is outside."""
        rows = self._cache.get("rows")
        if rows is None:
            rows = self._cache["rows"] = [list(b.coeffs) for b in self.basis]
        return _linalg.coords_in_span(rows, self._pivots, u.coeffs)

    def contains_subalgebra(self, other: "Subalgebra") -> bool:
        return all(b in self for b in other.basis)

    def __repr__(self) -> str:
        inner = ", ".join(str(b) for b in self.basis)
        return f"<subalgebra dim {self.dim}: {inner}>"


_SUBALGEBRA_TOKEN = object()


def _span(vectors: Iterable[Element]) -> Subalgebra:
    rows = [list(v.coeffs) for v in vectors]
    basis_rows, pivots = _linalg.rref(rows)
    basis = tuple(Element(r) for r in basis_rows)
    return Subalgebra(basis, tuple(pivots), _token=_SUBALGEBRA_TOKEN)


def span_close(vectors: Iterable[Element]) -> Subalgebra:
    """Echelonize the span and verify bracket closure.

    Raises NotClosedError naming the first input pair whose bracket
    escapes the span.
    """
    vectors = list(vectors)
    s = _span(vectors)
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            w = bracket(vectors[i], vectors[j])
            if w not in s:
                raise NotClosedError((i, j), w)
    return s


ZERO_SUBALGEBRA = span_close([])
FACTOR_1 = span_close([H1, X1, Y1])
FACTOR_2 = span_close([H2, X2, Y2])
FULL = span_close(BASIS)


def _cached(s: Subalgebra, key: str, compute):
    cache = s._cache
    if key not in cache:
        cache[key] = compute()
    return cache[key]


# -- structural computations ---------------------------------------------------


@dataclass(frozen=True)
class DerivedSeries:
    """terms[k+1] = [terms[k], terms[k]], stopping once the dimension stabilizes."""

    terms: tuple[Subalgebra, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)

    @property
    def final(self) -> Subalgebra:
        return self.terms[-1]

    @property
    def is_solvable(self) -> bool:
        return self.final.dim == 0


def derived_subalgebra(s: Subalgebra) -> Subalgebra:
    """[S, S]: the span of all brackets of basis vectors."""
    def compute():
        return _span(
            bracket(s.basis[i], s.basis[j])
            for i in range(s.dim)
            for j in range(i + 1, s.dim)
        )

    return _cached(s, "derived", compute)


def derived_series(s: Subalgebra) -> DerivedSeries:
    def compute():
        terms = [s]
        while True:
            nxt = derived_subalgebra(terms[-1])
            if nxt.dim == terms[-1].dim:
                break
            terms.append(nxt)
        return DerivedSeries(tuple(terms))

    return _cached(s, "derived_series", compute)


def is_solvable(s: Subalgebra) -> bool:
    return derived_series(s).is_solvable


def ad_matrix(u: Element) -> _linalg.Matrix:
    """ad(u) on all of so(4,C): column k holds [u, basis_k] in coordinates."""
    cols = [bracket(u, b).coeffs for b in BASIS]
    return [[cols[k][i] for k in range(DIM)] for i in range(DIM)]


def _ad_in(s: Subalgebra, u: Element) -> _linalg.Matrix:
    # ad(u) restricted to s, in the canonical basis of s; u must normalize s.
    cols = []
    for b in s.basis:
        c = s.coords_of(bracket(u, b))
        if c is None:
            raise InternalInconsistencyError("adjoint action leaves the subalgebra")
        cols.append(c)
    return [[cols[k][i] for k in range(s.dim)] for i in range(s.dim)]


def killing_form(s: Subalgebra) -> _linalg.Matrix:
    """K[i][j] = trace(ad b_i . ad b_j), with ad computed inside s."""
    def compute():
        ads = [_ad_in(s, b) for b in s.basis]
        n = s.dim
        k = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            a = ads[i]
            for j in range(i, n):
                b = ads[j]
                # trace of the product without forming it
                t = sum(
                    (
                        a[p][q] * b[q][p]
                        for p in range(n)
                        for q in range(n)
                        if a[p][q] and b[q][p]
                    ),
                    ZERO,
                )
                k[i][j] = t
                k[j][i] = t
        return k

    return _cached(s, "killing_form", compute)


def killing_is_nondegenerate(s: Subalgebra) -> bool:
    if s.dim == 0:
        return True
    return _linalg.det(killing_form(s)) != ZERO


def radical(s: Subalgebra) -> Subalgebra:
    """The maximal solvable ideal: {x in S : K(x, [S,S]) = 0}."""
    def compute():
        if s.dim == 0:
            return s
        d = derived_subalgebra(s)
        if d.dim == 0:
            return s
        k = killing_form(s)
        constraints = []
        for dvec in d.basis:
            dc = s.coords_of(dvec)
            assert dc is not None
            constraints.append(
                [sum((k[i][j] * dc[j] for j in range(s.dim)), ZERO) for i in range(s.dim)]
            )
        coeff_rows = _linalg.right_nullspace(constraints, s.dim)
        vectors = []
        for row in coeff_rows:
            v = ZERO_ELEMENT
            for c, b in zip(row, s.basis):
                v = v + c * b
            vectors.append(v)
        return span_close(vectors)

    return _cached(s, "radical", compute)


def levi_factor(s: Subalgebra) -> Subalgebra:
    """The semisimple part of a non-solvable subalgebra.

    Computed as the stable term of the derived series, which is the Levi
    factor here because every Levi decomposable subalgebra of so(4,C) is a
    direct commuting sum.  The result is checked to be semisimple and to
    complement the radical; failures raise InternalInconsistencyError.
    """
    series = derived_series(s)
    if series.is_solvable:
        raise ValueError("levi_factor requires a non-solvable subalgebra")
    levi = series.final
    if not killing_is_nondegenerate(levi):
        raise InternalInconsistencyError(
            "derived series stabilized at a non-semisimple subalgebra"
        )
    rad = radical(s)
    if levi.dim + rad.dim != s.dim:
        raise InternalInconsistencyError("Levi factor does not complement the radical")
    return levi


def factor_projection(s: Subalgebra, which: int) -> Subalgebra:
    """Image of s under the coordinate projection onto one sl2 factor."""
    if which not in (1, 2):
        raise ValueError("factor index must be 1 or 2")
    keep = (0, 1, 2) if which == 1 else (3, 4, 5)
    projected = []
    for b in s.basis:
        coords = [c if k in keep else ZERO for k, c in enumerate(b.coeffs)]
        projected.append(Element(coords))
    return _span(projected)


def factor_intersection(s: Subalgebra, which: int) -> Subalgebra:
    """s intersected with the chosen sl2 factor, by exact linear algebra."""
    if which not in (1, 2):
        raise ValueError("factor index must be 1 or 2")
    kill = (3, 4, 5) if which == 1 else (0, 1, 2)
    if s.dim == 0:
        return s
    # coefficient vectors c with sum_i c_i * basis_i vanishing on the other factor
    m = [[s.basis[i].coeffs[k] for i in range(s.dim)] for k in kill]
    coeff_rows = _linalg.right_nullspace(m, s.dim)
    vectors = []
    for row in coeff_rows:
        v = ZERO_ELEMENT
        for c, b in zip(row, s.basis):
            v = v + c * b
        vectors.append(v)
    return _span(vectors)
