"""Inner automorphisms of so(4,C) and equivalence of subalgebras.

An inner automorphism is a pair of determinant-1 matrices over Q(i)
acting by conjugation on the two 2x2 blocks.  Random automorphisms are
built as products of elementary unipotent matrices, so their
determinant is 1 exactly by construction and no normalization (hence no
square root) is ever needed.

Equivalence testing rides on the classifier: two subalgebras are
conjugate exactly when their labels agree, parameters included.  Witness
search is the constructive counterpart and is best-effort only: it
normalizes both sides toward the canonical representative where that is
possible inside Q(i) (nilpotent directions always are; semisimple
directions need eigenvalues in the field), tries a small deterministic
move set, and spends any remaining budget on a seeded random walk.
Absence of a witness within budget is a legitimate outcome; every
returned witness is verified exactly first.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .classify import classify
from .liecore import (
    Element,
    FactorComponent,
    Subalgebra,
    _span,
    derived_subalgebra,
    factor_component,
)
from .scalars import ONE, ZERO, Scalar, sqrt_in_field

Mat2 = tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]

IDENTITY_2 = ((ONE, ZERO), (ZERO, ONE))
# rotation by a quarter turn; conjugation by it negates h and swaps x with -y
QUARTER_TURN = ((ZERO, ONE), (-ONE, ZERO))


def _mat2(rows) -> Mat2:
    (a, b), (c, d) = rows

    def s(x):
        return x if isinstance(x, Scalar) else Scalar(x)

    return ((s(a), s(b)), (s(c), s(d)))


def _det2(m: Mat2) -> Scalar:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _mul2(a: Mat2, b: Mat2) -> Mat2:
    return (
        (
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ),
        (
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ),
    )


def _inv2_det1(m: Mat2) -> Mat2:
    # adjugate; valid because det(m) = 1
    return ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))


def _conj(m: Mat2, c: Mat2) -> Mat2:
    return _mul2(_mul2(m, c), _inv2_det1(m))


@dataclass(frozen=True)
class InnerAutomorphism:
    """Factor-wise conjugation by a pair of determinant-1 matrices."""

    a: Mat2
    b: Mat2

    def __post_init__(self):
        object.__setattr__(self, "a", _mat2(self.a))
        object.__setattr__(self, "b", _mat2(self.b))
        if _det2(self.a) != ONE or _det2(self.b) != ONE:
            raise ValueError("both factor matrices must have determinant 1")

    def __matmul__(self, other: "InnerAutomorphism") -> "InnerAutomorphism":
        return InnerAutomorphism(_mul2(self.a, other.a), _mul2(self.b, other.b))

    def inverse(self) -> "InnerAutomorphism":
        return InnerAutomorphism(_inv2_det1(self.a), _inv2_det1(self.b))


IDENTITY = InnerAutomorphism(IDENTITY_2, IDENTITY_2)


def apply(phi: InnerAutomorphism, u: Element) -> Element:
    """Conjugate both factor components and read the coordinates back."""
    c = u.coeffs
    c1 = _conj(phi.a, ((c[0], c[1]), (c[2], -c[0])))
    c2 = _conj(phi.b, ((c[3], c[4]), (c[5], -c[3])))
    return Element._raw((c1[0][0], c1[0][1], c1[1][0], c2[0][0], c2[0][1], c2[1][0]))


def apply_subalgebra(phi: InnerAutomorphism, s: Subalgebra) -> Subalgebra:
    # automorphism images of closed spans are closed, so skip revalidation
    return _span(apply(phi, b) for b in s.basis)


def _random_scalar(rng: random.Random, height: int) -> Scalar:
    def part():
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    return Scalar(part(), part() if rng.random() < 0.5 else Fraction(0))


def _random_unipotent(rng: random.Random, complexity: int, height: int) -> Mat2:
    m = IDENTITY_2
    for _ in range(complexity):
        t = _random_scalar(rng, height)
        if rng.random() < 0.5:
            e = _mat2(((1, t), (0, 1)))
        else:
            e = _mat2(((1, 0), (t, 1)))
        m = _mul2(m, e)
    return m


def random_inner(seed: int, complexity: int, height: int = 10) -> InnerAutomorphism:
    """Deterministic-in-seed product of `complexity` elementary unipotents
    per factor, with numerators and denominators bounded by `height`."""
    if complexity < 1:
        raise ValueError("complexity must be at least 1")
    if height < 1:
        raise ValueError("height must be at least 1")
    rng = random.Random(seed)
    a = _random_unipotent(rng, complexity, height)
    b = _random_unipotent(rng, complexity, height)
    return InnerAutomorphism(a, b)


# -- the outer factor swap ----------------------------------------------------


def factor_swap(u: Element) -> Element:
    """Exchange the two sl2 factors: h1<->h2, x1<->x2, y1<->y2 (outer)."""
    c = u.coeffs
    return Element._raw((c[3], c[4], c[5], c[0], c[1], c[2]))


def factor_swap_subalgebra(s: Subalgebra) -> Subalgebra:
    # the swap preserves brackets, so the image span is closed
    return _span(factor_swap(b) for b in s.basis)


# -- equivalence ----------------------------------------------------------------


def equivalent(s: Subalgebra, t: Subalgebra) -> bool:
    """True iff some inner automorphism carries s onto t.

    Sound and complete because the classification separates all orbits and
    its parameters are complete invariants.
    """
    return classify(s) == classify(t)


# -- witness search ----------------------------------------------------------------


def _nilpotent_normalizer(c: FactorComponent) -> Mat2:
    """A with A c A^-1 a multiple of the standard nilpotent x; always exact."""
    (a, b), (_, _) = c.m
    # kernel vector of c as the first column of a det-1 matrix
    if not b.is_zero():
        p = ((b, ZERO), (-a, ONE / b))
    else:
        # b = 0 and det = 0 force a = 0, so the kernel is spanned by (0, 1)
        p = ((ZERO, -ONE), (ONE, ZERO))
    return _inv2_det1(p)


def _semisimple_normalizer(c: FactorComponent) -> Mat2 | None:
    """A with A c A^-1 diagonal; needs the eigenvalue to lie in Q(i)."""
    lam = sqrt_in_field(-c.det())
    if lam is None or lam.is_zero():
        return None
    (a, b), (cc, _) = c.m
    # eigenvectors for +-lam
    if not b.is_zero():
        vplus, vminus = (b, lam - a), (b, -lam - a)
    elif not cc.is_zero():
        vplus, vminus = (lam + a, cc), (-lam + a, cc)
    else:
        if a == lam:
            return IDENTITY_2
        return QUARTER_TURN
    d = vplus[0] * vminus[1] - vplus[1] * vminus[0]
    p = ((vplus[0], vminus[0] / d), (vplus[1], vminus[1] / d))
    return _inv2_det1(p)


def _component_normalizer(c: FactorComponent) -> Mat2 | None:
    if c.is_zero():
        return IDENTITY_2
    if c.det().is_zero():
        return _nilpotent_normalizer(c)
    return _semisimple_normalizer(c)


def _factor_normalizers(s: Subalgebra, which: int) -> list[Mat2]:
    """Candidate conjugations straightening one factor of s.

    Anchored on factor components of derived-algebra elements first, then
    of basis elements; automorphisms act factor-wise, so the two factors
    can be straightened independently with different anchors.
    """
    anchors = list(derived_subalgebra(s).basis) + list(s.basis)
    out: list[Mat2] = []
    touched = False
    for e in anchors:
        c = factor_component(e, which)
        if c.is_zero():
            continue
        touched = True
        n = _component_normalizer(c)
        if n is not None and n not in out:
            out.append(n)
        if len(out) == 3:
            break
    if not touched:
        out.append(IDENTITY_2)
    return out


def _normalizing_moves(s: Subalgebra) -> list[InnerAutomorphism]:
    return [
        InnerAutomorphism(a, b)
        for a in _factor_normalizers(s, 1)
        for b in _factor_normalizers(s, 2)
    ]


def _diag_move(g1: Scalar, g2: Scalar) -> InnerAutomorphism:
    return InnerAutomorphism(
        ((g1, ZERO), (ZERO, ONE / g1)), ((g2, ZERO), (ZERO, ONE / g2))
    )


def _diag_bridge(sn: Subalgebra, tn: Subalgebra) -> InnerAutomorphism | None:
    """For normalized 1-dim spans, solve for a diagonal rescaling matching
    the nilpotent coefficients.  Diagonal conjugation scales the x-slot of
    each factor by a square and leaves the h-slots alone, so the overall
    scale is pinned by the first nonzero h- or x-coefficient."""
    if sn.dim != 1 or tn.dim != 1:
        return None
    u, v = sn.basis[0].coeffs, tn.basis[0].coeffs
    # normalized coordinates use only the h-slots (0, 3) and x-slots (1, 4)
    if any(not u[k].is_zero() or not v[k].is_zero() for k in (2, 5)):
        return None
    for pin in (0, 3, 1):
        if not u[pin].is_zero():
            if v[pin].is_zero():
                return None
            lam = v[pin] / u[pin]
            break
    else:
        return IDENTITY
    scales = [ONE, ONE]
    for slot, idx in ((1, 0), (4, 1)):
        if u[slot].is_zero():
            continue
        target = lam * u[slot]
        if target == v[slot]:
            continue
        if v[slot].is_zero():
            return None
        g = sqrt_in_field(v[slot] / target)
        if g is None:
            return None
        scales[idx] = g
    return _diag_move(scales[0], scales[1])


_DETERMINISTIC_MOVES = (
    IDENTITY,
    InnerAutomorphism(QUARTER_TURN, IDENTITY_2),
    InnerAutomorphism(IDENTITY_2, QUARTER_TURN),
    InnerAutomorphism(QUARTER_TURN, QUARTER_TURN),
)


def find_witness(
    s: Subalgebra, t: Subalgebra, budget: int, seed: int = 0
) -> InnerAutomorphism | None:
    """Search for phi with phi(s) = t; None when the budget runs out.

    Requires the two sides to be equivalent (checked); completeness of the
    equivalence test does not depend on this search.
    """
    if budget <= 0:
        return None
    if not equivalent(s, t):
        raise ValueError("find_witness requires equivalent subalgebras")

    spent = 0

    def try_phi(phi: InnerAutomorphism) -> bool:
        nonlocal spent
        spent += 1
        return apply_subalgebra(phi, s) == t

    for phi in _DETERMINISTIC_MOVES:
        if spent >= budget:
            return None
        if try_phi(phi):
            return phi

    # normalize both sides toward canonical position, then bridge with the
    # deterministic move set and, for lines, a solved diagonal rescaling
    for ns, nt in itertools.product(_normalizing_moves(s), _normalizing_moves(t)):
        sn = apply_subalgebra(ns, s)
        tn = apply_subalgebra(nt, t)
        for post in _DETERMINISTIC_MOVES:
            if spent >= budget:
                return None
            phi = nt.inverse() @ post @ ns
            if try_phi(phi):
                return phi
            bridge = _diag_bridge(apply_subalgebra(post, sn), tn)
            if bridge is not None:
                if spent >= budget:
                    return None
                phi = nt.inverse() @ bridge @ post @ ns
                if try_phi(phi):
                    return phi

    # long-shot seeded walk over elementary products
    rng = random.Random(seed)
    while spent < budget:
        phi = InnerAutomorphism(
            _random_unipotent(rng, 2, 2), _random_unipotent(rng, 2, 2)
        )
        if try_phi(phi):
            return phi
        for ns in _normalizing_moves(apply_subalgebra(phi, s)):
            if spent >= budget:
                return None
            for nt in _normalizing_moves(t):
                candidate = nt.inverse() @ ns @ phi
                if try_phi(candidate):
                    return candidate
                if spent >= budget:
                    return None
    return None
