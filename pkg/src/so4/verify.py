"""Table-verification harness: the checks behind `so4 verify-tables`.

Runs the whole-catalog consistency suite: every representative
re-classifies to its own label, the per-dimension class inventory is the
expected one, random inner automorphisms never move a label, distinct
labels stay distinct, the outer factor swap induces exactly the expected
label involution, and the non-existence guards hold (no 3-dim abelian or
nilpotent-L5 pattern, no branch-degenerate torus action, no solvable
class above dimension 4).  Deterministic checks always run; the
randomized round-trip check honors (trials, seed) and is skipped at
trials = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import (
    ClassLabel,
    NonconstructibleOverFieldError,
    Representative,
    abstract_type_of,
    enumerate_catalog,
    representative_of,
)
from .classify import classify
from .conjugacy import apply_subalgebra, factor_swap_subalgebra, random_inner
from .liecore import H1, H2, X1, X2, bracket, is_solvable, span_close
from .scalars import ONE, Scalar


def expected_swap_label(label: ClassLabel) -> ClassLabel:
    """The label of the factor-swapped subalgebra.

    Swapping inverts the J8 invariant (a^2 -> 1/a^2) and otherwise
    permutes indices: J1<->J2, J3<->J4, J6<->J7, K1^2<->K1^3,
    K2^2<->K2^4, K2^3<->K2^5, L_{3,0}^1<->L_{3,0}^3, L_{3,0}^2<->L_{3,0}^4,
    L3 branches, A1^1<->A1^2, (A1+J)^1<->^3, ^2<->^4, (A1+K2)^1<->^2.
    """
    f, i = label.family, label.index
    if f == "J":
        if i == 8:
            return ClassLabel("J", 8, a_squared=ONE / label.a_squared)
        return ClassLabel("J", {1: 2, 2: 1, 3: 4, 4: 3, 5: 5, 6: 7, 7: 6}[i])
    if f == "K1":
        return ClassLabel("K1", {1: 1, 2: 3, 3: 2, 4: 4}[i])
    if f == "K2":
        if i in (2, 4):
            return ClassLabel("K2", 6 - i, a_squared=label.a_squared)
        return ClassLabel("K2", {1: 1, 3: 5, 5: 3}[i])
    if f == "L3":
        if label.a.is_zero():
            return ClassLabel("L3", {1: 3, 2: 4, 3: 1, 4: 2}[i], a=label.a)
        return ClassLabel("L3", 3 - i, a=label.a)
    if f == "A1":
        return ClassLabel("A1", {1: 2, 2: 1, 3: 3}[i])
    if f == "A1+J":
        return ClassLabel("A1+J", {1: 3, 2: 4, 3: 1, 4: 2}[i])
    if f == "A1+K2":
        return ClassLabel("A1+K2", 3 - i)
    return label


# (family, index-or-None-for-parametric) structure expected per dimension
EXPECTED_STRUCTURE: dict[int, set[tuple[str, int | None]]] = {
    0: {("zero", None)},
    1: {("J", i) for i in range(1, 8)} | {("J", 8)},
    2: {("K1", i) for i in range(1, 5)} | {("K2", i) for i in range(1, 6)},
    3: {("L2", 1), ("L4", 1), ("A1", 1), ("A1", 2), ("A1", 3)}
    | {("L3,0", i) for i in range(1, 5)}
    | {("L3,a", 1), ("L3,a", 2)},
    4: {("M8", 1)} | {("A1+J", i) for i in range(1, 5)},
    5: {("A1+K2", 1), ("A1+K2", 2)},
    6: {("full", None)},
}


def _structure_key(label: ClassLabel) -> tuple[str, int | None]:
    if label.family == "L3":
        return ("L3,0" if label.a.is_zero() else "L3,a", label.index)
    return (label.family, label.index)


def _label_dim(rep: Representative) -> int:
    return rep.subalgebra().dim


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "failures": self.failures,
        }


@dataclass
class VerificationReport:
    checks: list[CheckResult]
    seed: int
    trials: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "seed": self.seed,
            "trials": self.trials,
            "checks": [c.to_json() for c in self.checks],
        }

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            out.append(f"[{mark}] {c.name}: {c.detail}")
            for f in c.failures[:10]:
                out.append(f"       - {f}")
            if len(c.failures) > 10:
                out.append(f"       ... and {len(c.failures) - 10} more")
        return out


def check_self_classification(entries: list[Representative]) -> CheckResult:
    failures = []
    for rep in entries:
        try:
            got = classify(rep.subalgebra())
        except Exception as exc:  # noqa: BLE001 - report, do not crash the suite
            failures.append(f"{rep.label.name()}: {exc}")
            continue
        if got != rep.label:
            failures.append(f"{rep.label.name()}: classified as {got.name()}")
    return CheckResult(
        "catalog self-classification",
        not failures,
        f"{len(entries)} representatives re-classified",
        failures,
    )


def check_counts(entries: list[Representative]) -> CheckResult:
    failures = []
    by_dim: dict[int, set[tuple[str, int | None]]] = {}
    for rep in entries:
        by_dim.setdefault(_label_dim(rep), set()).add(_structure_key(rep.label))
    for dim, expected in EXPECTED_STRUCTURE.items():
        got = by_dim.get(dim, set())
        if got != expected:
            missing = expected - got
            extra = got - expected
            failures.append(f"dim {dim}: missing {sorted(missing)}, extra {sorted(extra)}")
    counts = {d: len(v) for d, v in sorted(by_dim.items())}
    return CheckResult(
        "class inventory by dimension",
        not failures,
        f"family structure per dimension matches; entry counts {counts}",
        failures,
    )


def check_conjugation(entries: list[Representative], trials: int, seed: int) -> CheckResult:
    failures = []
    total = 0
    for k, rep in enumerate(entries):
        s = rep.subalgebra()
        for t in range(trials):
            phi = random_inner(seed + 7919 * k + t, complexity=3)
            total += 1
            got = classify(apply_subalgebra(phi, s))
            if got != rep.label:
                failures.append(
                    f"{rep.label.name()} moved to {got.name()} under seed {seed + 7919 * k + t}"
                )
    return CheckResult(
        "conjugation round-trips",
        not failures,
        f"{total} random inner automorphisms left every label fixed",
        failures,
    )


def check_separation(entries: list[Representative]) -> CheckResult:
    failures = []
    labels = [rep.label for rep in entries]
    classified = [classify(rep.subalgebra()) for rep in entries]
    n = 0
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            if labels[i] != labels[j]:
                n += 1
                if classified[i] == classified[j]:
                    failures.append(
                        f"{labels[i].name()} and {labels[j].name()} both classify as "
                        f"{classified[i].name()}"
                    )
    return CheckResult(
        "pairwise separation",
        not failures,
        f"{n} distinct-label pairs classify distinctly",
        failures,
    )


def check_swap_pairing(entries: list[Representative]) -> CheckResult:
    failures = []
    for rep in entries:
        expected = expected_swap_label(rep.label)
        got = classify(factor_swap_subalgebra(rep.subalgebra()))
        if got != expected:
            failures.append(
                f"swap({rep.label.name()}) classified as {got.name()}, expected {expected.name()}"
            )
    return CheckResult(
        "outer swap pairing",
        not failures,
        f"{len(entries)} swapped representatives hit the expected involution",
        failures,
    )


def check_nonexistence(entries: list[Representative]) -> CheckResult:
    failures = []
    # (i) no abstract L1/L5 and no solvable label above dimension 4
    for rep in entries:
        s = rep.subalgebra()
        if 1 <= s.dim <= 4 and is_solvable(s):
            t = abstract_type_of(s)
            if t.name in ("L1", "L5"):
                failures.append(f"{rep.label.name()} recognized as abstract {t.name}")
        if s.dim >= 5 and is_solvable(s):
            failures.append(f"{rep.label.name()} is solvable of dimension {s.dim}")
    # (ii) torus actions on the nilpotent plane are always split-diagonal
    grid = [Scalar(Fraction(p, q), Fraction(r, 2)) for p in (-2, -1, 1, 2, 3)
            for q in (1, 2) for r in (-1, 0, 1, 2)]
    checked = 0
    for alpha in grid[:10]:
        for beta in grid:
            t = alpha * H1 + beta * H2
            for n, which in ((X1, 0), (X2, 1)):
                image = bracket(t, n)
                expect = (2 * (alpha if which == 0 else beta)) * n
                if image != expect:
                    failures.append(
                        f"ad({t}) does not act diagonally on the nilpotent plane"
                    )
            checked += 1
    # (iii) the branch-degenerate label is rejected outright
    try:
        ClassLabel("L3", 1, a=Scalar(Fraction(-1, 4)))
        failures.append("L3 label with a = -1/4 was accepted")
    except ValueError:
        pass
    try:
        representative_of(ClassLabel("L3", 1, a=Scalar(Fraction(-1, 4))))
        failures.append("representative for a = -1/4 was produced")
    except (ValueError, NonconstructibleOverFieldError):
        pass
    return CheckResult(
        "non-existence guards",
        not failures,
        f"no excluded pattern over {checked} torus points and the whole catalog",
        failures,
    )


def verify_tables(
    trials: int = 5, seed: int = 0, entries: list[Representative] | None = None
) -> VerificationReport:
    """Run the full verification suite; trials = 0 keeps only deterministic checks."""
    if entries is None:
        entries = enumerate_catalog()
    checks = [
        check_self_classification(entries),
        check_counts(entries),
        check_separation(entries),
        check_swap_pairing(entries),
        check_nonexistence(entries),
    ]
    if trials > 0:
        checks.insert(2, check_conjugation(entries, trials, seed))
    return VerificationReport(checks, seed=seed, trials=trials)
