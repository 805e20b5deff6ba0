"""The decision procedure: map any subalgebra of so(4,C) to its class label.

Inner automorphisms act factor-wise, so everything the classifier looks
at is chosen to be a factor-stable invariant: dimensions of factor
projections and intersections, the zero/nilpotent/semisimple type and
determinant of factor components, and eigenvalues of adjoint actions on
factor-stable lines.  All of these stay inside the input field Q(i), so
no square roots are ever extracted; in particular the two branches of
the L3 family are told apart by the sign convention of the quantity
q = (mu1 - mu2)/(mu1 + mu2), whose square is 1 + 4a, without computing
the root itself.

The classifier is total on closed inputs.  Configurations that the
classification theorems exclude (3-dim abelian, nilpotent L5 patterns,
non-diagonalizable torus action at a = -1/4, solvable algebras above
dimension 4, extensions of the diagonal sl2) are unreachable; hitting
one raises InternalInconsistencyError rather than mislabeling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import FULL_LABEL, ZERO_LABEL, ClassLabel
from .liecore import (
    Element,
    InternalInconsistencyError,
    Sl2ElementType,
    Subalgebra,
    bracket,
    component_types,
    derived_series,
    derived_subalgebra,
    factor_component,
    factor_intersection,
    factor_projection,
    is_solvable,
    killing_is_nondegenerate,
    levi_factor,
    radical,
    sl2_element_type,
)
from .scalars import ONE, ZERO, Scalar


@dataclass(frozen=True)
class StructuralProfile:
    """The inner-automorphism invariants the per-dimension dispatch reads."""

    dim: int
    solvable: bool
    derived_dims: tuple[int, ...]
    proj_dims: tuple[int, int]
    inter_dims: tuple[int, int]
    factor_types: tuple[str, str]
    torus_eigendata: tuple[Scalar, ...]


def _compat_kind(s: Subalgebra, which: int) -> str:
    inter = factor_intersection(s, which)
    if inter.dim == 0:
        proj = factor_projection(s, which)
        if proj.dim == 0:
            return "zero"
        if proj.dim == 1:
            return sl2_element_type(factor_component(proj.basis[0], which)).kind
        return f"{proj.dim}-dim"
    if inter.dim == 1:
        return sl2_element_type(factor_component(inter.basis[0], which)).kind
    return f"{inter.dim}-dim"


def structural_profile(s: Subalgebra) -> StructuralProfile:
    """Summarize the invariants; purely informational, classify recomputes lazily."""
    series = derived_series(s)
    eigendata: tuple[Scalar, ...] = ()
    if s.dim >= 1 and series.is_solvable:
        d = derived_subalgebra(s)
        if 1 <= d.dim <= 2 and s.dim == 3:
            try:
                eigendata = _derived_eigenvalues(s, d)
            except InternalInconsistencyError:
                eigendata = ()
    return StructuralProfile(
        dim=s.dim,
        solvable=series.is_solvable,
        derived_dims=series.dims,
        proj_dims=(factor_projection(s, 1).dim, factor_projection(s, 2).dim),
        inter_dims=(factor_intersection(s, 1).dim, factor_intersection(s, 2).dim),
        factor_types=(_compat_kind(s, 1), _compat_kind(s, 2)),
        torus_eigendata=eigendata,
    )


def classify(s: Subalgebra) -> ClassLabel:
    """The class of s up to inner automorphism, with exact parameter data."""
    if s.dim == 0:
        return ZERO_LABEL
    if s.dim == 6:
        return FULL_LABEL
    if s.dim == 1:
        return classify_dim1(s)
    if s.dim == 2:
        return classify_dim2(s)
    if s.dim == 3:
        return classify_dim3(s)
    return classify_dim4plus(s)


def classify_dim1(s: Subalgebra) -> ClassLabel:
    """Dimension 1: the pair of factor component types of the generator.

    Any nonzero coefficient pattern within a type pair is absorbed by
    conjugation and rescaling, so only the pair (and, when both components
    are semisimple, the determinant ratio a^2) matters.
    """
    if s.dim != 1:
        raise ValueError("classify_dim1 requires dim 1")
    t1, t2 = component_types(s.basis[0])
    table = {
        ("nilpotent", "zero"): 1,
        ("zero", "nilpotent"): 2,
        ("semisimple", "zero"): 3,
        ("zero", "semisimple"): 4,
        ("nilpotent", "nilpotent"): 5,
        ("nilpotent", "semisimple"): 6,
        ("semisimple", "nilpotent"): 7,
    }
    key = (t1.kind, t2.kind)
    if key in table:
        return ClassLabel("J", table[key])
    if key == ("semisimple", "semisimple"):
        return ClassLabel("J", 8, a_squared=t2.det / t1.det)
    raise InternalInconsistencyError("1-dim subalgebra with a zero generator")


def _line_type(s: Subalgebra, which: int) -> Sl2ElementType:
    inter = factor_intersection(s, which)
    if inter.dim != 1:
        raise InternalInconsistencyError(
            "expected a 1-dim factor intersection in an abelian 2-dim subalgebra"
        )
    return sl2_element_type(factor_component(inter.basis[0], which))


def classify_dim2(s: Subalgebra) -> ClassLabel:
    """Dimension 2: abelian splits across the factors (K1), otherwise K2.

    For K2 the derived algebra is a nilpotent line n; when n lies inside a
    single factor, the complement element t with [t, n] = n has a factor
    component of determinant -1/4 on n's side, and the type of its other
    component separates K2^{2,a} / K2^3 (and symmetrically K2^{4,a} / K2^5),
    with a^2 recovered as the determinant ratio.
    """
    if s.dim != 2:
        raise ValueError("classify_dim2 requires dim 2")
    d = derived_subalgebra(s)
    if d.dim == 0:
        kinds = (_line_type(s, 1).kind, _line_type(s, 2).kind)
        table = {
            ("nilpotent", "nilpotent"): 1,
            ("nilpotent", "semisimple"): 2,
            ("semisimple", "nilpotent"): 3,
            ("semisimple", "semisimple"): 4,
        }
        if kinds not in table:
            raise InternalInconsistencyError(f"abelian pair with line types {kinds}")
        return ClassLabel("K1", table[kinds])
    if d.dim != 1:
        raise InternalInconsistencyError("2-dim subalgebra with 2-dim derived algebra")
    n = d.basis[0]
    n_types = component_types(n)
    if any(t.is_semisimple() for t in n_types):
        raise InternalInconsistencyError("derived line of a solvable pair not nilpotent")
    if n_types[0].is_nilpotent() and n_types[1].is_nilpotent():
        return ClassLabel("K2", 1)
    # normalize the complement so [t, n] = n
    t = next(b for b in s.basis if b not in d)
    image = d.coords_of(bracket(t, n))
    if image is None or image[0].is_zero():
        raise InternalInconsistencyError("complement does not act invertibly on n")
    t = (ONE / image[0]) * t
    side = 1 if n_types[1].is_zero() else 2
    t_same = sl2_element_type(factor_component(t, side))
    t_other = sl2_element_type(factor_component(t, 3 - side))
    if not t_same.is_semisimple() or t_same.det != Scalar(-1) / 4:
        raise InternalInconsistencyError("normalized torus has determinant != -1/4")
    base = 2 if side == 1 else 4
    if t_other.is_zero():
        return ClassLabel("K2", base, a_squared=ZERO)
    if t_other.is_nilpotent():
        return ClassLabel("K2", 3 if side == 1 else 5)
    return ClassLabel("K2", base, a_squared=t_other.det / t_same.det)


def _derived_eigenvalues(s: Subalgebra, d: Subalgebra) -> tuple[Scalar, Scalar]:
    """(mu1, mu2): eigenvalues of a complement element on the factor-split
    nilpotent lines of a 2-dim derived algebra, factor 1 first."""
    lines = []
    for which in (1, 2):
        inter = factor_intersection(d, which)
        if inter.dim != 1:
            raise InternalInconsistencyError(
                "2-dim derived algebra does not split across the factors"
            )
        if not sl2_element_type(factor_component(inter.basis[0], which)).is_nilpotent():
            raise InternalInconsistencyError("derived eigenline is not nilpotent")
        lines.append(inter.basis[0])
    t = next(b for b in s.basis if b not in d)
    mus = []
    for n in lines:
        image = bracket(t, n)
        coords = [(ic, nc) for ic, nc in zip(image.coeffs, n.coeffs) if not nc.is_zero()]
        mu = coords[0][0] / coords[0][1]
        if any(ic != mu * nc for ic, nc in coords) or not (image - mu * n).is_zero():
            raise InternalInconsistencyError("derived line is not an eigenline")
        mus.append(mu)
    return mus[0], mus[1]


def _branch_of(q: Scalar) -> int:
    # branch 1 iff q is in the open upper half-plane or on the positive real axis
    if q.im > 0 or (q.im == 0 and q.re > 0):
        return 1
    return 2


def classify_dim3(s: Subalgebra) -> ClassLabel:
    """Dimension 3: sl2 copies by projection kernels; solvable by eigendata.

    A 2-dim derived algebra splits into one nilpotent eigenline per factor;
    the eigenvalue pair (mu1, mu2) of any complement element is well defined
    up to common scale, giving L2 (equal), L4 (opposite), or L3 with
    a = -mu1*mu2/(mu1+mu2)^2 and the branch read off the sign convention of
    (mu1-mu2)/(mu1+mu2).  A 1-dim derived algebra sits inside one factor and
    the type of the opposite projection picks the L_{3,0} class.
    """
    if s.dim != 3:
        raise ValueError("classify_dim3 requires dim 3")
    if not is_solvable(s):
        if not killing_is_nondegenerate(s):
            raise InternalInconsistencyError("non-solvable dim-3 with degenerate Killing form")
        p1, p2 = factor_projection(s, 1), factor_projection(s, 2)
        if p2.dim == 0:
            return ClassLabel("A1", 1)
        if p1.dim == 0:
            return ClassLabel("A1", 2)
        i1, i2 = factor_intersection(s, 1), factor_intersection(s, 2)
        if p1.dim == 3 and p2.dim == 3 and i1.dim == 0 and i2.dim == 0:
            return ClassLabel("A1", 3)
        raise InternalInconsistencyError("sl2 copy with unexpected projection pattern")
    d = derived_subalgebra(s)
    if d.dim == 2:
        mu1, mu2 = _derived_eigenvalues(s, d)
        if mu1 == mu2:
            return ClassLabel("L2", 1)
        if (mu1 + mu2).is_zero():
            return ClassLabel("L4", 1)
        a = -(mu1 * mu2) / ((mu1 + mu2) * (mu1 + mu2))
        q = (mu1 - mu2) / (mu1 + mu2)
        return ClassLabel("L3", _branch_of(q), a=a)
    if d.dim == 1:
        n = d.basis[0]
        n_types = component_types(n)
        if n_types[1].is_zero() and n_types[0].is_nilpotent():
            side = 1
        elif n_types[0].is_zero() and n_types[1].is_nilpotent():
            side = 2
        else:
            raise InternalInconsistencyError("1-dim derived algebra not a nilpotent factor line")
        opp = factor_projection(s, 3 - side)
        if opp.dim != 1:
            raise InternalInconsistencyError("opposite projection is not a line")
        kind = sl2_element_type(factor_component(opp.basis[0], 3 - side)).kind
        index = {
            (2, "semisimple"): 1,
            (2, "nilpotent"): 2,
            (1, "semisimple"): 3,
            (1, "nilpotent"): 4,
        }[(side, kind)]
        return ClassLabel("L3", index, a=ZERO)
    raise InternalInconsistencyError(
        f"3-dim solvable subalgebra with {d.dim}-dim derived algebra"
    )


def classify_dim4plus(s: Subalgebra) -> ClassLabel:
    """Dimensions 4 and 5: the Borel, or a Levi decomposable direct sum."""
    if s.dim not in (4, 5):
        raise ValueError("classify_dim4plus requires dim 4 or 5")
    solvable = is_solvable(s)
    if s.dim == 4 and solvable:
        return ClassLabel("M8", 1)
    if solvable:
        raise InternalInconsistencyError("solvable subalgebra of dimension 5")
    levi = levi_factor(s)
    rad = radical(s)
    levi_label = classify_dim3(levi)
    if levi_label != ClassLabel("A1", 1) and levi_label != ClassLabel("A1", 2):
        raise InternalInconsistencyError(
            "Levi factor is the diagonal sl2, which admits no proper extension"
        )
    other = 2 if levi_label.index == 1 else 1
    if factor_projection(rad, levi_label.index).dim != 0:
        raise InternalInconsistencyError("radical meets the Levi factor's side")
    if s.dim == 4:
        if rad.dim != 1:
            raise InternalInconsistencyError("4-dim Levi decomposable with radical dim != 1")
        kind = sl2_element_type(factor_component(rad.basis[0], other)).kind
        if kind == "semisimple":
            return ClassLabel("A1+J", 1 if levi_label.index == 1 else 3)
        if kind == "nilpotent":
            return ClassLabel("A1+J", 2 if levi_label.index == 1 else 4)
        raise InternalInconsistencyError("zero radical generator")
    if rad.dim != 2 or derived_subalgebra(rad).dim != 1:
        raise InternalInconsistencyError(
            "5-dim subalgebra whose radical is not a non-abelian pair"
        )
    return ClassLabel("A1+K2", levi_label.index)
