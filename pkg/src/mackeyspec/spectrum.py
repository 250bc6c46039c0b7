"""The spectrum of derived Mackey functors as a finite symbolic space.

Points are pairs (conjugacy class of subgroups, prime slot).  The slots are
``0``, one explicit slot per prime dividing the group order, and one symbol
``q*`` standing for every prime that does not divide it.  Those primes all
have discrete, identical fibres, so a single representative is exact.

``leq[i, j]`` holds when ``points[i]`` lies in the closure of ``points[j]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .groups import (
    PermGroup,
    QuotientPresentation,
    Subgroup,
    SubgroupClass,
    class_of,
    conjugacy_classes_of_subgroups,
    is_conjugate_p_subnormal,
    is_prime,
    is_subconjugate,
    prime_divisors,
)


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeSlot:
    kind: str  # "zero", "prime" or "generic"
    p: int = 0

    @classmethod
    def zero(cls) -> PrimeSlot:
        return cls("zero")

    @classmethod
    def prime(cls, p: int) -> PrimeSlot:
        if not is_prime(p):
            raise SpectrumError(f"{p} is not a prime")
        return cls("prime", p)

    @classmethod
    def generic(cls) -> PrimeSlot:
        return cls("generic")

    @classmethod
    def parse(cls, token: str) -> PrimeSlot:
        if token == "0":
            return cls.zero()
        if token == "q*":
            return cls.generic()
        try:
            return cls.prime(int(token))
        except ValueError:
            raise SpectrumError(f"bad slot token {token!r}") from None

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    @property
    def sort_key(self) -> tuple[int, int]:
        return ({"zero": 0, "prime": 1, "generic": 2}[self.kind], self.p)

    def __str__(self) -> str:
        return {"zero": "0", "generic": "q*"}.get(self.kind, str(self.p))


ZERO = PrimeSlot.zero()
GENERIC = PrimeSlot.generic()


@dataclass(frozen=True)
class SpecPoint:
    subgroup_class: SubgroupClass
    slot: PrimeSlot

    def __str__(self) -> str:
        return f"P({self.subgroup_class.label},{self.slot})"


@dataclass(frozen=True)
class GeneratorObject:
    """Label for the compact generator attached to the orbit ``G/H``."""

    subgroup_class: SubgroupClass


@dataclass(frozen=True)
class ChromaticPoint:
    subgroup_class: SubgroupClass
    prime: PrimeSlot
    height: float

    def __str__(self) -> str:
        h = "inf" if math.isinf(self.height) else str(int(self.height))
        return f"P({self.subgroup_class.label},{self.prime},{h})"


@dataclass(frozen=True, eq=False)
class SpecSpace:
    group: PermGroup
    classes: tuple[SubgroupClass, ...]
    slots: tuple[PrimeSlot, ...]
    points: tuple[SpecPoint, ...]
    leq: np.ndarray = field(repr=False)
    local: int | None = None

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[SpecPoint]:
        return iter(self.points)

    def __contains__(self, P: object) -> bool:
        return P in self.position

    @cached_property
    def position(self) -> dict[SpecPoint, int]:
        return {P: i for i, P in enumerate(self.points)}

    def index(self, P: SpecPoint) -> int:
        try:
            return self.position[P]
        except KeyError:
            raise SpectrumError(f"{P} is not a point of this space") from None

    def point(self, subgroup_class: SubgroupClass | int | str, slot: PrimeSlot | int | str) -> SpecPoint:
        """Look up a point by class (object, index or label) and slot (object, prime, 0 or 'q*')."""
        if isinstance(subgroup_class, int):
            c = self.classes[subgroup_class]
        elif isinstance(subgroup_class, str):
            matches = [c for c in self.classes if c.label == subgroup_class]
            if not matches:
                raise SpectrumError(f"no subgroup class labelled {subgroup_class!r}")
            c = matches[0]
        else:
            c = subgroup_class
        if isinstance(slot, int):
            slot = ZERO if slot == 0 else PrimeSlot.prime(slot)
        elif isinstance(slot, str):
            slot = PrimeSlot.parse(slot)
        P = SpecPoint(c, slot)
        self.index(P)
        return P

    def parse_point(self, token: str) -> SpecPoint:
        token = token.strip()
        if not (token.startswith("P(") and token.endswith(")")):
            raise SpectrumError(f"bad point token {token!r}")
        label, _, slot = token[2:-1].rpartition(",")
        return self.point(label, slot)

    @property
    def explicit_primes(self) -> tuple[int, ...]:
        return tuple(s.p for s in self.slots if s.kind == "prime")

    def slot_for(self, prime: int) -> PrimeSlot | None:
        """The slot representing the prime ideal ``(prime)`` (``0`` for the zero ideal)."""
        if prime == 0:
            return ZERO
        if prime in self.explicit_primes:
            return PrimeSlot.prime(prime)
        if GENERIC in self.slots and self.group.order % prime:
            return GENERIC
        return None

    def covers(self, slot: PrimeSlot, prime: int) -> bool:
        return self.slot_for(prime) == slot

    def points_of(self, slot: PrimeSlot) -> list[SpecPoint]:
        return [P for P in self.points if P.slot == slot]

    def mask(self, S: Iterable[SpecPoint]) -> np.ndarray:
        m = np.zeros(len(self.points), dtype=bool)
        for P in S:
            m[self.index(P)] = True
        return m

    def from_mask(self, m: np.ndarray) -> frozenset[SpecPoint]:
        return frozenset(self.points[i] for i in np.flatnonzero(m))


def build_spectrum(G: PermGroup, local: int | None = None) -> SpecSpace:
    """Points and specialization order of the spectrum of ``G``.

    With ``local=p`` only the slots ``0`` and ``p`` are kept (the p-local slice);
    ``p`` need not divide ``|G|``.
    """
    classes = tuple(conjugacy_classes_of_subgroups(G))
    if local is None:
        primes = prime_divisors(G.order)
        slots = (ZERO, *(PrimeSlot.prime(p) for p in primes), GENERIC)
    else:
        if not is_prime(local):
            raise SpectrumError(f"local prime {local} is not a prime")
        primes = [local]
        slots = (ZERO, PrimeSlot.prime(local))
    points = tuple(SpecPoint(c, s) for c in classes for s in slots)
    n = len(classes)
    subnormal = {
        p: np.array([[is_conjugate_p_subnormal(K, H, p) for H in classes] for K in classes], dtype=bool)
        for p in primes
    }
    same = np.eye(n, dtype=bool)
    leq = np.zeros((len(points), len(points)), dtype=bool)
    for i, Q in enumerate(points):
        k = Q.subgroup_class.index
        for j, P in enumerate(points):
            h = P.subgroup_class.index
            s, t = Q.slot, P.slot
            if s.kind == "prime":
                ok = subnormal[s.p][k, h] and (t == s or t.is_zero)
            elif s.is_zero:
                ok = t.is_zero and same[k, h]
            else:
                ok = same[k, h] and (t == s or t.is_zero)
            leq[i, j] = ok
    leq.setflags(write=False)
    return SpecSpace(G, classes, slots, points, leq, local)


def specializes(space: SpecSpace, Q: SpecPoint, P: SpecPoint) -> bool:
    """Whether ``Q`` lies in the closure of ``P``."""
    return bool(space.leq[space.index(Q), space.index(P)])


def closure(space: SpecSpace, P: SpecPoint | Iterable[SpecPoint]) -> frozenset[SpecPoint]:
    """Closure of a point, or of a finite set of points."""
    if isinstance(P, SpecPoint):
        return space.from_mask(space.leq[:, space.index(P)])
    m = space.mask(P)
    return space.from_mask(space.leq[:, m].any(axis=1))


def is_specialization_closed(space: SpecSpace, S: Iterable[SpecPoint]) -> bool:
    m = space.mask(S)
    return not np.any(space.leq[:, m].any(axis=1) & ~m)


def irreducible_components(space: SpecSpace) -> list[frozenset[SpecPoint]]:
    """Closures of the maximal points (the points ``P(H, 0)``)."""
    strictly_above = space.leq & ~np.eye(len(space), dtype=bool)
    maximal = ~strictly_above.any(axis=1)
    return [closure(space, space.points[i]) for i in np.flatnonzero(maximal)]


def _as_class(g: GeneratorObject | SubgroupClass) -> SubgroupClass:
    return g.subgroup_class if isinstance(g, GeneratorObject) else g


def generator_support(space: SpecSpace, g: GeneratorObject | SubgroupClass) -> frozenset[SpecPoint]:
    """Support of the generator for ``G/H``: every point whose subgroup is subconjugate to ``H``."""
    H = _as_class(g)
    if H not in space.classes:
        raise SpectrumError(f"{H} is not a subgroup class of {space.group!r}")
    return frozenset(P for P in space.points if is_subconjugate(P.subgroup_class, H))


@dataclass(frozen=True, eq=False)
class PointMap:
    """A map between spectra given pointwise.

    A point carrying the symbolic slot ``q*`` may have several images: one for
    each explicit slot of the target covering primes that ``q*`` stands for.
    """

    source: SpecSpace
    target: SpecSpace
    images: dict[SpecPoint, tuple[SpecPoint, ...]] = field(repr=False)

    def __call__(self, P: SpecPoint) -> tuple[SpecPoint, ...]:
        self.source.index(P)
        return self.images[P]

    def image(self) -> frozenset[SpecPoint]:
        return frozenset(x for ys in self.images.values() for x in ys)

    def preserves_specialization(self) -> bool:
        """Every image of ``Q`` lies below some image of ``P`` whenever ``Q`` lies below ``P``."""
        src, tgt = self.source, self.target
        for i, Q in enumerate(src.points):
            for j in np.flatnonzero(src.leq[i]):
                P = src.points[j]
                for y in self.images[Q]:
                    if not any(specializes(tgt, y, x) for x in self.images[P]):
                        return False
        return True


def _slot_images(source: SpecSpace, target: SpecSpace, slot: PrimeSlot) -> tuple[PrimeSlot, ...]:
    """Slots of ``target`` representing at least one prime represented by ``slot`` in ``source``."""
    if slot.is_zero:
        return (ZERO,)
    if slot.kind == "prime":
        t = target.slot_for(slot.p)
        return (t,) if t is not None else ()
    out = []
    for t in target.slots:
        if t.kind == "prime" and source.slot_for(t.p) == slot:
            out.append(t)
        elif t.kind == "generic":
            out.append(t)
    return tuple(out)


def _build_map(source: SpecSpace, target: SpecSpace, class_map: dict[SubgroupClass, SubgroupClass]) -> PointMap:
    images = {}
    for P in source.points:
        c = class_map[P.subgroup_class]
        images[P] = tuple(SpecPoint(c, t) for t in _slot_images(source, target, P.slot))
    return PointMap(source, target, images)


def _check_local(a: SpecSpace, b: SpecSpace) -> None:
    if a.local != b.local:
        raise SpectrumError("both spaces must be full spectra or slices at the same prime")


def restriction_map(space_G: SpecSpace, space_H: SpecSpace, H: Subgroup) -> PointMap:
    """The map induced by restriction from ``G`` to ``H``: ``P_H(K, s) -> P_G(K, s)``.

    ``space_H`` must be built on ``H.as_group()`` (or any group whose elements are
    exactly those of ``H``).
    """
    G = space_G.group
    _check_local(space_G, space_H)
    if H.parent is not G:
        raise SpectrumError("H is not a subgroup of G")
    Hgrp = space_H.group
    try:
        to_G = [G.index_of[g] for g in Hgrp.elements]
    except KeyError:
        raise SpectrumError("space_H is not built on a subgroup of G") from None
    if sorted(to_G) != list(H.members):
        raise SpectrumError("space_H is not built on H")
    class_map = {
        c: class_of(Subgroup(G, tuple(sorted(to_G[k] for k in c.representative.members))))
        for c in space_H.classes
    }
    return _build_map(space_H, space_G, class_map)


def quotient_maps(space_G: SpecSpace, space_Q: SpecSpace, qp: QuotientPresentation) -> tuple[PointMap, PointMap]:
    """Inflation ``P_G(K, s) -> P_{G/N}(KN/N, s)`` and geometric fixed points ``P_{G/N}(K/N, s) -> P_G(K, s)``."""
    if qp.source is not space_G.group or qp.quotient is not space_Q.group:
        raise SpectrumError("quotient presentation does not match the given spaces")
    _check_local(space_G, space_Q)
    infl = {c: class_of(qp.image(c.representative)) for c in space_G.classes}
    fixed = {c: class_of(qp.preimage(c.representative)) for c in space_Q.classes}
    return _build_map(space_G, space_Q, infl), _build_map(space_Q, space_G, fixed)


def chromatic_image(space: SpecSpace, P: SpecPoint) -> ChromaticPoint:
    """Image in the equivariant stable homotopy spectrum: ``P(H, p) -> P(H, p, inf)``, ``P(H, 0) -> P(H, 0, 1)``."""
    space.index(P)
    if P.slot.is_zero:
        return ChromaticPoint(P.subgroup_class, ZERO, 1)
    return ChromaticPoint(P.subgroup_class, P.slot, math.inf)
