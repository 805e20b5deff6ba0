"""Adjoint-module decompositions of so(4,C) over an sl2-subalgebra.

Given a triple (h, x, y) with [h,x] = 2x, [h,y] = -2y, [x,y] = h, the
6-dim algebra decomposes under the adjoint action into irreducibles
V(m) of highest weight m and dimension m+1.  Each summand contributes
exactly one highest-weight vector: a v with [x, v] = 0 and [h, v] = m*v.
The triples arising inside so(4,C) act with integer weights, so the
whole computation is exact kernel intersection.

The three sl2 classes give

    factor sl2 (either one):  V(2) + V(0) + V(0) + V(0)
    diagonal sl2:             V(2) + V(2)

and the V(0) part (the centralizer of the triple) is what a 1- or 2-dim
extension of the subalgebra must live in: 3-dim for a factor sl2, zero
for the diagonal, which is why the diagonal extends to nothing smaller
than the whole algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _linalg
from .liecore import (
    BASIS,
    DIM,
    Element,
    InternalInconsistencyError,
    Subalgebra,
    ad_matrix,
    bracket,
    factor_projection,
    is_solvable,
    killing_is_nondegenerate,
    span_close,
    X1,
    X2,
)
from .scalars import ONE, ZERO, Scalar


class NotATripleError(ValueError):
    pass


@dataclass(frozen=True)
class Sl2Triple:
    """Elements (h, x, y) satisfying the standard sl2 relations exactly."""

    h: Element
    x: Element
    y: Element

    def __post_init__(self):
        if (
            bracket(self.h, self.x) != 2 * self.x
            or bracket(self.h, self.y) != -2 * self.y
            or bracket(self.x, self.y) != self.h
        ):
            raise NotATripleError("elements do not satisfy [h,x]=2x, [h,y]=-2y, [x,y]=h")

    def span(self) -> Subalgebra:
        return span_close([self.h, self.x, self.y])


@dataclass(frozen=True)
class ModuleDecomposition:
    """Multiset of highest weights with one highest-weight vector each."""

    summands: tuple[int, ...]  # weights m, descending; V(m) has dim m+1
    highest_weight_vectors: tuple[Element, ...]

    def __post_init__(self):
        if sum(m + 1 for m in self.summands) != DIM:
            raise InternalInconsistencyError("module dimensions do not sum to 6")

    def multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for m in self.summands:
            out[m] = out.get(m, 0) + 1
        return out

    def __str__(self) -> str:
        parts = []
        for m in sorted(self.multiset(), reverse=True):
            k = self.multiset()[m]
            parts.append(f"V({m})" if k == 1 else f"{k}·V({m})")
        return " + ".join(parts)


def _kernel(matrix: _linalg.Matrix) -> _linalg.Matrix:
    return _linalg.right_nullspace(matrix, DIM)


def _shifted(ad_h: _linalg.Matrix, m: int) -> _linalg.Matrix:
    shift = Scalar(m)
    return [
        [ad_h[i][j] - shift if i == j else ad_h[i][j] for j in range(DIM)]
        for i in range(DIM)
    ]


def adjoint_decompose(t: Sl2Triple) -> ModuleDecomposition:
    """Decompose so(4,C) under the adjoint action of the triple.

    Highest-weight vectors are ker(ad x) intersected with each ad(h)
    eigenspace; weights are scanned over the integers 0..5 and anything
    unaccounted for (a non-integral or non-diagonalizable action, which no
    genuine triple in so(4,C) produces) is reported as an inconsistency.
    """
    ad_h = ad_matrix(t.h)
    ad_x = ad_matrix(t.x)
    n_summands = len(_kernel(ad_x))
    summands: list[int] = []
    vectors: list[Element] = []
    for m in range(DIM):
        hw = _linalg.right_nullspace(_shifted(ad_h, m) + ad_x, DIM)
        for row in hw:
            summands.append(m)
            vectors.append(Element(row))
    if sum(m + 1 for m in summands) != DIM:
        raise InternalInconsistencyError(
            "adjoint action does not decompose with integral weights"
        )
    if len(summands) != n_summands:
        raise InternalInconsistencyError(
            "highest-weight count does not match the kernel of ad x"
        )
    order = sorted(range(len(summands)), key=lambda i: -summands[i])
    return ModuleDecomposition(
        tuple(summands[i] for i in order), tuple(vectors[i] for i in order)
    )


def extension_candidates(t: Sl2Triple, k: int) -> Subalgebra:
    """The trivial-isotypic subspace available for a k-dim extension.

    This is the centralizer of the triple's span: the sum of the V(0)
    summands.  For a factor sl2 it is the other 3-dim factor; for the
    diagonal sl2 it is zero, so no 1- or 2-dim extension exists.
    """
    if k not in (1, 2):
        raise ValueError("extension dimension must be 1 or 2")
    stacked = []
    for gen in (t.h, t.x, t.y):
        stacked.extend(ad_matrix(gen))
    rows = _linalg.right_nullspace(stacked, DIM)
    return span_close([Element(r) for r in rows])


def standard_triple(s: Subalgebra) -> Sl2Triple:
    """Extract an sl2-triple spanning a 3-dim semisimple subalgebra.

    Works entirely over Q(i): a rational nilpotent is found by pulling the
    standard one back through a bijective factor projection, and the rest
    of the triple is linear algebra.
    """
    if s.dim != 3:
        raise ValueError("a triple needs a 3-dimensional subalgebra")
    if is_solvable(s) or not killing_is_nondegenerate(s):
        raise ValueError("a triple needs a semisimple (sl2) subalgebra")
    # nilpotent element: preimage of x1 (or x2) under a bijective projection
    if factor_projection(s, 1).dim == 3:
        target, keep = X1, (0, 1, 2)
    else:
        target, keep = X2, (3, 4, 5)
    rows = [[b.coeffs[k] for b in s.basis] for k in keep]
    rhs = [target.coeffs[k] for k in keep]
    x_coords = _linalg.solve(rows, rhs)
    if x_coords is None:
        raise InternalInconsistencyError("projection is not onto its factor")
    x = _combine(s, x_coords)
    # h solves [h, x] = 2x inside s
    bx = [bracket(b, x) for b in s.basis]
    m = [[bx[j].coeffs[i] for j in range(3)] for i in range(DIM)]
    h_coords = _linalg.solve(m, [(2 * c) for c in x.coeffs])
    if h_coords is None:
        raise InternalInconsistencyError("no h with [h, x] = 2x")
    h = _combine(s, h_coords)
    # y solves [x, y] = h and [h, y] = -2y jointly (unique)
    cols_x = [bracket(x, b) for b in s.basis]
    cols_h = [bracket(h, b) for b in s.basis]
    two = Scalar(2)
    m2 = [[cols_x[j].coeffs[i] for j in range(3)] for i in range(DIM)]
    m2 += [
        [cols_h[j].coeffs[i] + two * s.basis[j].coeffs[i] for j in range(3)]
        for i in range(DIM)
    ]
    rhs2 = list(h.coeffs) + [ZERO] * DIM
    y_coords = _linalg.solve(m2, rhs2)
    if y_coords is None:
        raise InternalInconsistencyError("triple completion failed")
    y = _combine(s, y_coords)
    return Sl2Triple(h, x, y)


def _combine(s: Subalgebra, coords: list[Scalar]) -> Element:
    out = Element([0] * DIM)
    for c, b in zip(coords, s.basis):
        out = out + c * b
    return out
