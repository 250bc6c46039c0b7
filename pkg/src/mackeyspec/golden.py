"""Reference data for small groups, checked against fresh computations.

Each entry describes a p-local picture without relying on class labels:
closure sizes are grouped by subgroup order, and gluing classes are given by
the orders of the subgroups they contain.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .burnside import build_burnside, fiber
from .groups import all_subgroups, build_group, is_prime
from .spectrum import build_spectrum, closure

# (descriptor, prime) -> expected data
GOLDEN: dict[tuple[str, int], dict] = {
    ("D8", 2): {
        "note": "closures: P(C4,0) has 4 points, each P(V4,0) has 5, each P(C2,2) has 2; one closed point",
        "subgroups": 10,
        "classes": 8,
        "zero_closure": {1: [2], 2: [3, 3, 3], 4: [4, 5, 5], 8: [9]},
        "prime_closure": {1: [1], 2: [2, 2, 2], 4: [3, 4, 4], 8: [8]},
        "fibers": [[1, 2, 2, 2, 4, 4, 4, 8]],
    },
    ("D8", 3): {
        "note": "away from 2 nothing is glued",
        "subgroups": 10,
        "classes": 8,
        "zero_closure": {1: [2], 2: [2, 2, 2], 4: [2, 2, 2], 8: [2]},
        "prime_closure": {1: [1], 2: [1, 1, 1], 4: [1, 1, 1], 8: [1]},
        "fibers": [[1], [2], [2], [2], [4], [4], [4], [8]],
    },
    ("S3", 3): {
        "note": "C2 is not 3-subnormal in S3",
        "subgroups": 6,
        "classes": 4,
        "zero_closure": {1: [2], 2: [2], 3: [3], 6: [2]},
        "prime_closure": {1: [1], 2: [1], 3: [2], 6: [1]},
        "fibers": [[1, 3], [2], [6]],
    },
    ("S3", 2): {
        "note": "C3 is 2-subnormal in S3",
        "subgroups": 6,
        "classes": 4,
        "zero_closure": {1: [2], 2: [3], 3: [2], 6: [3]},
        "prime_closure": {1: [1], 2: [2], 3: [1], 6: [2]},
        "fibers": [[1, 2], [3, 6]],
    },
    ("Q8", 2): {
        "note": "from the lattice 1 < C2 < three C4 < Q8, checked by hand",
        "subgroups": 6,
        "classes": 6,
        "zero_closure": {1: [2], 2: [3], 4: [4, 4, 4], 8: [7]},
        "prime_closure": {1: [1], 2: [2], 4: [3, 3, 3], 8: [6]},
        "fibers": [[1, 2, 4, 4, 4, 8]],
    },
}

for _p in (2, 3, 5, 7, 11, 13):
    GOLDEN[(f"C{_p}", _p)] = {
        "note": f"the two closed points at {_p} are glued in the Burnside ring",
        "subgroups": 2,
        "classes": 2,
        "zero_closure": {1: [2], _p: [3]},
        "prime_closure": {1: [1], _p: [2]},
        "fibers": [[1, _p]],
    }


@dataclass
class GoldenReport:
    descriptor: str
    prime: int
    failures: list[str] = field(default_factory=list)
    checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        head = f"golden {self.descriptor} at {self.prime}: {'pass' if self.ok else 'FAIL'} ({self.checks} checks)"
        return "\n".join([head] + [f"  mismatch: {f}" for f in self.failures])


def compute_summary(descriptor: str, prime: int) -> dict:
    G = build_group(descriptor)
    X = build_spectrum(G, local=prime)
    B = build_burnside(X)
    zero: dict[int, list[int]] = {}
    pr: dict[int, list[int]] = {}
    for c in X.classes:
        zero.setdefault(c.order, []).append(len(closure(X, X.point(c, 0))))
        pr.setdefault(c.order, []).append(len(closure(X, X.point(c, prime))))
    fibers = sorted(
        sorted(P.subgroup_class.order for P in fiber(B, b))
        for b in B.points if not b.slot.is_zero
    )
    return {
        "subgroups": len(all_subgroups(G)),
        "classes": len(X.classes),
        "zero_closure": {k: sorted(v) for k, v in zero.items()},
        "prime_closure": {k: sorted(v) for k, v in pr.items()},
        "fibers": fibers,
    }


def golden_check(descriptor: str, prime: int) -> GoldenReport:
    """Compare the computed p-local picture with the stored reference data."""
    if not is_prime(prime):
        raise ValueError(f"{prime} is not a prime")
    try:
        expected = GOLDEN[(descriptor, prime)]
    except KeyError:
        raise KeyError(f"no golden data for {descriptor} at {prime}; available: "
                       + ", ".join(f"{d}@{p}" for d, p in sorted(GOLDEN))) from None
    got = compute_summary(descriptor, prime)
    report = GoldenReport(descriptor, prime)
    for key in ("subgroups", "classes", "zero_closure", "prime_closure", "fibers"):
        want = expected[key]
        if isinstance(want, dict):
            want = {k: sorted(v) for k, v in want.items()}
        if key == "fibers":
            want = sorted(sorted(f) for f in want)
        report.checks += 1
        if got[key] != want:
            report.failures.append(f"{key}: expected {want}, computed {got[key]}")
    return report
