"""Spec(A(G)) as a quotient of the Mackey spectrum under the comparison map rho.

Two points at the same prime ``p`` are identified exactly when the O^p
residuals of their subgroups are conjugate.  Points at ``0`` and at the
symbolic slot ``q*`` are never identified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .groups import class_of, conjugates, next_prime_not_dividing, o_p_residual
from .spectrum import SpecPoint, SpecSpace, SpectrumError, closure


@dataclass(frozen=True)
class BurnsidePoint:
    members: frozenset[SpecPoint]
    canonical: SpecPoint = field(compare=False)

    @property
    def slot(self):
        return self.canonical.slot

    def __str__(self) -> str:
        return f"rho[{self.canonical}]"


def _point_key(space: SpecSpace, P: SpecPoint) -> tuple:
    return (P.subgroup_class.index, P.slot.sort_key)


@dataclass(frozen=True, eq=False)
class BurnsideSpace:
    source: SpecSpace
    points: tuple[BurnsidePoint, ...]
    rho_map: dict[SpecPoint, BurnsidePoint] = field(repr=False)

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def position(self) -> dict[BurnsidePoint, int]:
        return {b: i for i, b in enumerate(self.points)}

    @cached_property
    def leq(self) -> np.ndarray:
        """``leq[a, b]`` when ``points[a]`` lies in the closure of ``points[b]`` (quotient topology)."""
        n = len(self.points)
        out = np.zeros((n, n), dtype=bool)
        for b, pt in enumerate(self.points):
            for a in self.closure_indices(pt):
                out[a, b] = True
        out.setflags(write=False)
        return out

    def saturate(self, S) -> frozenset[SpecPoint]:
        return frozenset(Q for P in S for Q in self.rho_map[P].members)

    def closure_indices(self, b: BurnsidePoint) -> list[int]:
        # smallest closed set containing b: its preimage is saturated and specialization closed
        S = frozenset(b.members)
        while True:
            T = self.saturate(closure(self.source, S))
            if T == S:
                break
            S = T
        return sorted({self.position[self.rho_map[P]] for P in S})

    def closure(self, b: BurnsidePoint) -> frozenset[BurnsidePoint]:
        return frozenset(self.points[i] for i in self.closure_indices(b))

    def closed_points(self) -> list[BurnsidePoint]:
        return [b for i, b in enumerate(self.points) if self.leq[:, i].sum() == 1]


def build_burnside(space: SpecSpace) -> BurnsideSpace:
    glue: dict[tuple, list[SpecPoint]] = {}
    residual_class: dict[tuple[int, int], int] = {}
    for P in space.points:
        c = P.subgroup_class
        if P.slot.kind == "prime":
            p = P.slot.p
            if (c.index, p) not in residual_class:
                residual_class[c.index, p] = class_of(o_p_residual(c.representative, p)).index
            key = (P.slot.sort_key, residual_class[c.index, p])
        else:
            key = (P.slot.sort_key, ("own", c.index))
        glue.setdefault(key, []).append(P)
    points = []
    rho_map = {}
    for members in glue.values():
        canonical = min(members, key=lambda P: _point_key(space, P))
        b = BurnsidePoint(frozenset(members), canonical)
        points.append(b)
        for P in members:
            rho_map[P] = b
    points.sort(key=lambda b: (b.slot.sort_key, _point_key(space, b.canonical)))
    return BurnsideSpace(space, tuple(points), rho_map)


def rho(space: BurnsideSpace, P: SpecPoint) -> BurnsidePoint:
    try:
        return space.rho_map[P]
    except KeyError:
        raise SpectrumError(f"{P} is not a point of the source space") from None


def fiber(space: BurnsideSpace, b: BurnsidePoint) -> list[SpecPoint]:
    if b not in space.position:
        raise SpectrumError(f"{b} is not a point of this space")
    return sorted(b.members, key=lambda P: _point_key(space.source, P))


def _concrete_prime(space: SpecSpace, P: SpecPoint) -> int:
    if P.slot.kind == "prime":
        return P.slot.p
    return next_prime_not_dividing(space.group.order)


def _intersection_criterion(space: SpecSpace, P: SpecPoint, Q: SpecPoint) -> bool:
    """Same nonzero prime p, and H and some conjugate K' meet in a subgroup p-subnormal in both."""
    if P.slot.is_zero or Q.slot.is_zero or P.slot != Q.slot:
        return False
    p = _concrete_prime(space, P)
    H = P.subgroup_class.representative
    res_H = o_p_residual(H, p)
    for K in conjugates(Q.subgroup_class):
        L = H.intersection(K)
        if res_H <= L and o_p_residual(K, p) <= L:
            return True
    return False


@dataclass
class QuotientReport:
    pairs_checked: int = 0
    violations: list[str] = field(default_factory=list)
    surjective: bool = True
    closed_map: bool = True
    preserves_specialization: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations and self.surjective and self.closed_map and self.preserves_specialization


def verify_quotient_characterization(space: BurnsideSpace) -> QuotientReport:
    """Check that rho glues exactly the pairs of nonzero points with intersecting closures.

    For each pair of distinct points three conditions are compared: equal rho
    images, nonzero slots with intersecting closures, and the subgroup
    intersection criterion.  Also checks that rho is surjective, closed and
    order preserving.
    """
    src = space.source
    report = QuotientReport()
    pts = src.points
    for i, P in enumerate(pts):
        for Q in pts[i + 1:]:
            report.pairs_checked += 1
            glued = space.rho_map[P] == space.rho_map[Q]
            meets = (
                not P.slot.is_zero
                and not Q.slot.is_zero
                and bool(np.any(src.leq[:, src.index(P)] & src.leq[:, src.index(Q)]))
            )
            crit = _intersection_criterion(src, P, Q)
            if not glued == meets == crit:
                report.violations.append(f"{P} vs {Q}: glued={glued} closures_meet={meets} criterion={crit}")
    report.surjective = set(space.rho_map.values()) == set(space.points)
    for P in pts:
        image = {space.rho_map[Q] for Q in closure(src, P)}
        preimage = space.saturate(Q for b in image for Q in b.members)
        if closure(src, preimage) != preimage:
            report.closed_map = False
        for Q in closure(src, P):
            a, b = space.position[space.rho_map[Q]], space.position[space.rho_map[P]]
            if not space.leq[a, b]:
                report.preserves_specialization = False
    return report
