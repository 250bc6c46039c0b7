"""Thick tensor-ideals as admissible subsets of Con(G) x Spec(Z).

A subset is admissible when
  (a) containing ``(H, 0)`` forces ``(H, s)`` for every other slot ``s``, and
  (b) containing ``(H, p)`` forces ``(K, p)`` for every class ``K`` conjugate to a
      p-subnormal subgroup of ``H``.
The conditions are checked directly against the group, not through the
stored specialization relation, so agreement with specialization-closed
subsets is a genuine cross-check.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .groups import is_conjugate_p_subnormal, next_prime_not_dividing, prime_divisors
from .spectrum import (
    GeneratorObject,
    SpecPoint,
    SpecSpace,
    build_spectrum,
    generator_support,
)

log = logging.getLogger(__name__)

LIST_LIMIT = 2**20


class EnumerationLimitExceeded(RuntimeError):
    def __init__(self, count: int, limit: int):
        super().__init__(f"{count} admissible sets exceed the listing limit {limit}; use count mode")
        self.count = count
        self.limit = limit


@dataclass(frozen=True, eq=False)
class AdmissibleSet:
    space: SpecSpace
    members: frozenset[SpecPoint]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdmissibleSet):
            return NotImplemented
        return self.space is other.space and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, P: object) -> bool:
        return P in self.members

    def __le__(self, other: AdmissibleSet) -> bool:
        return self.members <= other.members

    def tokens(self) -> list[str]:
        return [str(P) for P in sorted(self.members, key=self.space.index)]


def _subnormal_matrix(space: SpecSpace, p: int) -> np.ndarray:
    cache = space.__dict__.setdefault("_subnormal", {})
    if p not in cache:
        cls = space.classes
        cache[p] = np.array([[is_conjugate_p_subnormal(K, H, p) for K in cls] for H in cls], dtype=bool)
    return cache[p]


def _forced(space: SpecSpace, P: SpecPoint) -> list[SpecPoint]:
    """Points that conditions (a) and (b) require alongside ``P``."""
    c, s = P.subgroup_class, P.slot
    if s.is_zero:
        return [SpecPoint(c, t) for t in space.slots if not t.is_zero]
    if s.kind == "prime":
        row = _subnormal_matrix(space, s.p)[c.index]
        return [SpecPoint(space.classes[k], s) for k in np.flatnonzero(row)]
    # the symbolic slot stands for primes not dividing |G|: only H itself is p-subnormal in H
    return [P]


def is_admissible(space: SpecSpace, S: Iterable[SpecPoint]) -> bool:
    S = set(S)
    for P in S:
        space.index(P)
        if any(Q not in S for Q in _forced(space, P)):
            return False
    return True


def admissible_closure(space: SpecSpace, S: Iterable[SpecPoint]) -> AdmissibleSet:
    """Smallest admissible superset of ``S``."""
    out = set()
    todo = list(S)
    while todo:
        P = todo.pop()
        space.index(P)
        if P in out:
            continue
        out.add(P)
        todo.extend(Q for Q in _forced(space, P) if Q not in out)
    return AdmissibleSet(space, frozenset(out))


def support_of_objects(space: SpecSpace, gens: Iterable[GeneratorObject]) -> AdmissibleSet:
    """Support of the thick tensor-ideal generated by the given orbit generators."""
    points: set[SpecPoint] = set()
    for g in gens:
        points |= generator_support(space, g)
    return admissible_closure(space, points)


# ---------------------------------------------------------------------------
# p-local enumeration
#
# In the p-local slice every class H contributes a chain (H, p) < (H, 0), and
# (H, 0) lies above exactly the closure of (H, p).  A down-set is therefore a
# down-set D of the prime row together with any subset of {(H, 0) : (H, p) in D},
# so the count is the sum of 2^|D| over down-sets D of the prime row.


def local_slice(space: SpecSpace, p: int) -> SpecSpace:
    if space.local == p:
        return space
    return build_spectrum(space.group, local=p)


def _prime_row_order(space: SpecSpace, p: int) -> tuple[list[int], list[int]]:
    """Bitmasks over classes: ``below[k]`` and ``above[k]`` (both including k)."""
    sub = _subnormal_matrix(space, p)
    n = len(space.classes)
    below = [sum(1 << j for j in range(n) if sub[k, j]) for k in range(n)]
    above = [sum(1 << j for j in range(n) if sub[j, k]) for k in range(n)]
    return below, above


def _components(mask: int, below: list[int], above: list[int]) -> list[int]:
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            k = frontier.bit_length() - 1
            frontier &= ~(1 << k)
            nbrs = (below[k] | above[k]) & rest & ~comp
            comp |= nbrs
            frontier |= nbrs
        comps.append(comp)
        rest &= ~comp
    return comps


def count_admissible_local(space: SpecSpace, p: int) -> int:
    """Number of admissible subsets of the p-local slice (exact, without listing them)."""
    n = len(space.classes)
    below, above = _prime_row_order(space, p)

    @lru_cache(maxsize=None)
    def weighted(mask: int) -> int:
        # sum over down-sets D of the classes in mask of 2^|D|
        if not mask:
            return 1
        comps = _components(mask, below, above)
        if len(comps) > 1:
            total = 1
            for c in comps:
                total *= weighted(c)
            return total
        # branch on a minimal element: excluded (drop everything above) or included (weight 2)
        k = min((i for i in range(n) if mask >> i & 1 and not (below[i] & mask & ~(1 << i))),
                key=lambda i: -bin(above[i] & mask).count("1"))
        return weighted(mask & ~above[k]) + 2 * weighted(mask & ~(1 << k))

    return weighted((1 << n) - 1)


def _prime_downsets(space: SpecSpace, p: int) -> Iterator[int]:
    """Down-sets of the prime row as class bitmasks, largest class decided first."""
    n = len(space.classes)
    below, _ = _prime_row_order(space, p)

    def rec(k: int, chosen: int) -> Iterator[int]:
        if k < 0:
            yield chosen
            return
        forced = any(chosen >> j & 1 and below[j] >> k & 1 for j in range(k + 1, n))
        if not forced:
            yield from rec(k - 1, chosen)
        yield from rec(k - 1, chosen | 1 << k)

    # class indices are sorted by order, so decreasing index visits bigger classes first
    yield from rec(n - 1, 0)


def iter_admissible_local(space: SpecSpace, p: int) -> Iterator[AdmissibleSet]:
    L = local_slice(space, p)
    zero_slot, prime_slot = L.slots
    for D in _prime_downsets(L, p):
        members = [k for k in range(len(L.classes)) if D >> k & 1]
        base = [SpecPoint(L.classes[k], prime_slot) for k in members]
        for flags in range(1 << len(members)):
            extra = [SpecPoint(L.classes[k], zero_slot) for i, k in enumerate(members) if flags >> i & 1]
            yield AdmissibleSet(L, frozenset(base + extra))


def enumerate_admissible_local(space: SpecSpace, p: int, limit: int = LIST_LIMIT) -> list[AdmissibleSet]:
    """All admissible subsets of the p-local slice, in a deterministic order.

    Raises :class:`EnumerationLimitExceeded` (after a warning) when there are more
    than ``limit`` of them; :func:`count_admissible_local` still works then.
    """
    L = local_slice(space, p)
    count = count_admissible_local(L, p)
    if count > limit:
        warnings.warn(f"{count} admissible sets; listing suppressed", stacklevel=2)
        raise EnumerationLimitExceeded(count, limit)
    out = list(iter_admissible_local(L, p))
    log.debug("enumerated %d admissible sets at p=%d", len(out), p)
    return out


def slice_primes(space: SpecSpace) -> list[int]:
    """Primes dividing the group order plus one prime that does not."""
    G = space.group
    return prime_divisors(G.order) + [next_prime_not_dividing(G.order)]
