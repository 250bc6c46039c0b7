"""Finite permutation groups: subgroups, conjugacy classes, quotients, O^p residuals.

Elements of a :class:`PermGroup` are stored as image tuples in sorted order, so
index 0 is always the identity.  Subgroups are sorted tuples of indices into
that table.  Composition follows the right-to-left convention
``(a * b)(x) = a(b(x))``.
"""

from __future__ import annotations

import logging
import math
import re
import warnings
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

log = logging.getLogger(__name__)

DEFAULT_ORDER_CAP = 2000
SUBGROUP_WARN_ORDER = 256

Permutation = tuple[int, ...]


class GroupError(ValueError):
    """Base class for group construction and query errors."""


class DescriptorError(GroupError):
    """A group descriptor could not be parsed."""


class OrderCapExceeded(GroupError):
    def __init__(self, cap: int, partial_order: int):
        super().__init__(
            f"group order exceeds cap {cap} (closure reached {partial_order} elements)"
        )
        self.cap = cap
        self.partial_order = partial_order


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def next_prime_not_dividing(n: int) -> int:
    p = 2
    while not is_prime(p) or n % p == 0:
        p += 1
    return p


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise GroupError(f"{p} is not a prime")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a * b``, i.e. apply ``b`` first."""
    return tuple(a[x] for x in b)


def invert(a: Permutation) -> Permutation:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
    images = list(range(degree))
    seen: set[int] = set()
    for cyc in cycles:
        for x in cyc:
            if x in seen or not 0 <= x < degree:
                raise DescriptorError(f"bad cycle {tuple(cyc)} for degree {degree}")
            seen.add(x)
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def to_cycles(a: Permutation) -> str:
    seen = set()
    parts = []
    for start in range(len(a)):
        if start in seen or a[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = a[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = a[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


@dataclass(frozen=True, eq=False)
class PermGroup:
    """A finite group given by permutations of ``range(degree)``.

    Use :func:`build_group` or :meth:`generated_by` rather than the constructor;
    they compute the full sorted element table.
    """

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]
    name: str = ""

    @classmethod
    def generated_by(
        cls,
        generators: Iterable[Sequence[int]],
        degree: int | None = None,
        name: str = "",
        cap: int = DEFAULT_ORDER_CAP,
    ) -> PermGroup:
        gens = [tuple(g) for g in generators]
        if degree is None:
            degree = max((len(g) for g in gens), default=1)
        gens = [g + tuple(range(len(g), degree)) for g in gens]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise GroupError(f"not a permutation of {degree} points: {g}")
        identity = tuple(range(degree))
        seen = {identity}
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise OrderCapExceeded(cap, len(seen))
                    queue.append(y)
        return cls(degree, tuple(gens), tuple(sorted(seen)), name)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"PermGroup({self.name or '?'}, order={self.order}, degree={self.degree})"

    @cached_property
    def index_of(self) -> dict[Permutation, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        n = self.order
        arr = np.array(self.elements, dtype=np.int64).reshape(n, self.degree)
        lookup = self.index_of
        dtype = np.int16 if n < 2**15 else np.int32
        out = np.empty((n, n), dtype=dtype)
        for i in range(n):
            rows = arr[i][arr]
            out[i] = [lookup[tuple(r)] for r in rows.tolist()]
        return out

    @cached_property
    def inverse(self) -> np.ndarray:
        return np.argmax(self.table == 0, axis=1)

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.order, dtype=np.int64)
        t = self.table
        for i in range(1, self.order):
            k, x = 1, i
            while x != 0:
                x = t[x, i]
                k += 1
            orders[i] = k
        return orders

    @cached_property
    def conjugation(self) -> np.ndarray:
        """``conjugation[g, h]`` is the index of ``g h g^-1``."""
        t = self.table
        inv = self.inverse
        return np.stack([t[t[g], inv[g]] for g in range(self.order)])

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(sorted({self.index_of[g] for g in self.generators} - {0}))

    @cached_property
    def trivial(self) -> Subgroup:
        return Subgroup(self, (0,))

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, tuple(range(self.order)))

    def subgroup(self, generators: Iterable[int | Permutation]) -> Subgroup:
        """Subgroup generated by the given element indices or permutations."""
        idx = [g if isinstance(g, (int, np.integer)) else self.index_of[tuple(g)] for g in generators]
        return Subgroup(self, closure(self, idx))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))


def closure(G: PermGroup, gens: Iterable[int], start: Iterable[int] = (0,)) -> tuple[int, ...]:
    """Sorted indices of the subgroup generated by ``gens`` and ``start``."""
    t = G.table
    members = {0} | {int(x) for x in start}
    mult = sorted(({int(g) for g in gens} | members) - {0})
    frontier = sorted(members)
    while frontier and mult:
        prods = np.unique(t[np.ix_(frontier, mult)])
        frontier = [y for y in prods.tolist() if y not in members]
        members.update(frontier)
    return tuple(sorted(members))


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: PermGroup = field(repr=False)
    members: tuple[int, ...]

    def __post_init__(self):
        if not self.members or self.members[0] != 0:
            raise GroupError("subgroup must contain the identity")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.member_set

    def __le__(self, other: Subgroup) -> bool:
        if self.parent is not other.parent:
            raise GroupError("subgroups of different groups are not comparable")
        return self.member_set <= other.member_set

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.order < other.order

    def sort_key(self) -> tuple:
        return (self.order, self.members)

    def conjugate(self, g: int) -> Subgroup:
        """``g H g^-1``."""
        c = self.parent.conjugation[g]
        return Subgroup(self.parent, tuple(sorted(c[list(self.members)].tolist())))

    def intersection(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, tuple(sorted(self.member_set & other.member_set)))

    def is_normal_in(self, other: Subgroup) -> bool:
        if not self <= other:
            return False
        conj = self.parent.conjugation
        mine = list(self.members)
        return all(self.member_set.issuperset(conj[g, mine].tolist()) for g in other.members)

    def is_normal(self) -> bool:
        return self.is_normal_in(self.parent.whole)

    def is_subgroup(self) -> bool:
        t = self.parent.table
        m = list(self.members)
        return 0 in self.member_set and set(t[np.ix_(m, m)].ravel().tolist()) <= self.member_set

    def normalizer(self) -> Subgroup:
        return Subgroup(
            self.parent,
            tuple(g for g in range(self.parent.order) if self.conjugate(g) == self),
        )

    def as_group(self, name: str = "") -> PermGroup:
        """This subgroup as a standalone permutation group on the same points."""
        P = self.parent
        return PermGroup.generated_by(
            [P.elements[i] for i in self.members if i != 0] or [P.elements[0]],
            degree=P.degree,
            name=name,
            cap=max(DEFAULT_ORDER_CAP, self.order),
        )


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups with its lexicographically least member."""

    representative: Subgroup
    class_size: int
    label: str = field(default="", compare=False)
    index: int = field(default=-1, compare=False)

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def group(self) -> PermGroup:
        return self.representative.parent

    def __str__(self) -> str:
        return self.label or f"<{self.order}>"


@dataclass(frozen=True, eq=False)
class QuotientPresentation:
    source: PermGroup
    kernel: Subgroup
    quotient: PermGroup
    projection: tuple[int, ...]

    def image(self, K: Subgroup) -> Subgroup:
        """The subgroup ``KN/N`` of the quotient."""
        return Subgroup(self.quotient, tuple(sorted({self.projection[k] for k in K.members})))

    def preimage(self, Kbar: Subgroup) -> Subgroup:
        """The subgroup of the source containing the kernel that maps onto ``Kbar``."""
        want = Kbar.member_set
        return Subgroup(
            self.source, tuple(g for g, q in enumerate(self.projection) if q in want)
        )

    def subgroup_correspondence(self) -> dict[Subgroup, Subgroup]:
        return {Q: self.preimage(Q) for Q in all_subgroups(self.quotient)}


def all_subgroups(G: PermGroup) -> list[Subgroup]:
    """Every subgroup of ``G`` once, sorted by (order, member tuple).

    Seeds with the cyclic subgroups and joins a cyclic subgroup onto each newly
    found subgroup until nothing new appears.
    """
    return list(_subgroup_cache(G))


def _subgroup_cache(G: PermGroup) -> tuple[Subgroup, ...]:
    cached = G.__dict__.get("_subgroups")
    if cached is not None:
        return cached
    if G.order > SUBGROUP_WARN_ORDER:
        warnings.warn(
            f"enumerating subgroups of a group of order {G.order} may be slow",
            stacklevel=3,
        )
    cyclic: dict[tuple[int, ...], int] = {}
    for g in range(G.order):
        m = closure(G, [g])
        cyclic.setdefault(m, g)
    found: dict[tuple[int, ...], None] = dict.fromkeys(cyclic)
    frontier = list(cyclic)
    cyc_items = sorted(cyclic.items(), key=lambda kv: len(kv[0]))
    while frontier:
        new = []
        for m in frontier:
            ms = set(m)
            for cm, g in cyc_items:
                if g in ms:
                    continue
                joined = closure(G, [g], start=m)
                if joined not in found:
                    found[joined] = None
                    new.append(joined)
        frontier = new
    subs = tuple(sorted((Subgroup(G, m) for m in found), key=Subgroup.sort_key))
    log.debug("%r has %d subgroups", G, len(subs))
    G.__dict__["_subgroups"] = subs
    return subs


def _conjugacy_orbit(H: Subgroup) -> set[tuple[int, ...]]:
    G = H.parent
    orbit = {H.members}
    queue = [H.members]
    conj = G.conjugation
    gens = G.generator_indices
    while queue:
        m = queue.pop()
        for g in gens:
            c = tuple(sorted(conj[g, list(m)].tolist()))
            if c not in orbit:
                orbit.add(c)
                queue.append(c)
    return orbit


def conjugacy_classes_of_subgroups(G: PermGroup) -> list[SubgroupClass]:
    """Con(G), sorted by (order, canonical representative)."""
    cached = G.__dict__.get("_classes")
    if cached is not None:
        return list(cached)
    reps = []
    seen: set[tuple[int, ...]] = set()
    for H in _subgroup_cache(G):
        if H.members in seen:
            continue
        orbit = _conjugacy_orbit(H)
        seen |= orbit
        reps.append((Subgroup(G, min(orbit)), len(orbit)))
    reps.sort(key=lambda r: r[0].sort_key())
    labels = _class_labels(G, [r for r, _ in reps])
    classes = tuple(
        SubgroupClass(rep, size, label, i) for i, ((rep, size), label) in enumerate(zip(reps, labels))
    )
    G.__dict__["_classes"] = classes
    G.__dict__["_class_of"] = {
        m: c for c in classes for m in _conjugacy_orbit(c.representative)
    }
    return list(classes)


def class_of(H: Subgroup) -> SubgroupClass:
    G = H.parent
    conjugacy_classes_of_subgroups(G)
    return G.__dict__["_class_of"][H.members]


def conjugates(c: SubgroupClass) -> list[Subgroup]:
    G = c.group
    return [Subgroup(G, m) for m in sorted(_conjugacy_orbit(c.representative))]


def is_subconjugate(K: SubgroupClass, H: SubgroupClass) -> bool:
    """Whether some conjugate of ``K`` lies in ``H``'s representative."""
    if H.order % K.order:
        return False
    return any(K2 <= H.representative for K2 in conjugates(K))


def o_p_residual(H: Subgroup, p: int) -> Subgroup:
    """O^p(H): the subgroup generated by the elements of ``H`` of order prime to ``p``."""
    _check_prime(p)
    orders = H.parent.element_orders
    gens = [h for h in H.members if orders[h] % p]
    return Subgroup(H.parent, closure(H.parent, gens))


def is_p_subnormal(K: Subgroup, H: Subgroup, p: int) -> bool:
    """Whether ``K`` sits in a tower ``K = K_0 ⊴ K_1 ⊴ ... ⊴ K_t = H`` of index-p steps."""
    if not K <= H:
        raise GroupError("K is not contained in H")
    return o_p_residual(H, p) <= K


def is_p_subnormal_by_towers(K: Subgroup, H: Subgroup, p: int) -> bool:
    """Breadth-first search for an index-p subnormal tower from ``K`` up to ``H``.

    Independent of :func:`o_p_residual`; used to cross-check :func:`is_p_subnormal`.
    """
    if not K <= H:
        raise GroupError("K is not contained in H")
    _check_prime(p)
    if H.order % K.order:
        return False
    between = [L for L in _subgroup_cache(H.parent) if K <= L <= H]
    reached = {K.members}
    queue = deque([K])
    while queue:
        L = queue.popleft()
        if L.members == H.members:
            return True
        for M in between:
            if M.order == L.order * p and M.members not in reached and L.is_normal_in(M):
                reached.add(M.members)
                queue.append(M)
    return False


def is_conjugate_p_subnormal(K: SubgroupClass, H: SubgroupClass, p: int, G: PermGroup | None = None) -> bool:
    """Whether some conjugate of ``K`` is a p-subnormal subgroup of ``H``'s representative."""
    if G is not None and (K.group is not G or H.group is not G):
        raise GroupError("subgroup classes do not belong to the given group")
    if K.group is not H.group:
        raise GroupError("subgroup classes belong to different groups")
    Hrep = H.representative
    if Hrep.order % K.order:
        return False
    res = o_p_residual(Hrep, p)
    return any(res <= K2 <= Hrep for K2 in conjugates(K))


def quotient(G: PermGroup, N: Subgroup) -> QuotientPresentation:
    """G/N acting faithfully on the left cosets of ``N``."""
    if N.parent is not G or not N.is_normal():
        raise GroupError("N is not a normal subgroup of G")
    t = G.table
    coset_of = [-1] * G.order
    cosets: list[int] = []
    for g in range(G.order):
        if coset_of[g] < 0:
            for x in t[g, list(N.members)].tolist():
                coset_of[x] = len(cosets)
            cosets.append(g)
    m = len(cosets)

    def act(g: int) -> Permutation:
        return tuple(coset_of[int(t[g, c])] for c in cosets)

    gens = [act(g) for g in G.generator_indices] or [tuple(range(m))]
    name = f"{G.name}/{_subgroup_label(N, G)}" if G.name else ""
    Q = PermGroup.generated_by(gens, degree=m, name=name, cap=max(DEFAULT_ORDER_CAP, m))
    projection = tuple(Q.index_of[act(g)] for g in range(G.order))
    return QuotientPresentation(G, N, Q, projection)


def _subgroup_label(N: Subgroup, G: PermGroup) -> str:
    if N.order == 1:
        return "1"
    if N.order == G.order:
        return G.name or describe(N)
    try:
        return class_of(N).label
    except KeyError:
        return describe(N)


def center(G: PermGroup) -> Subgroup:
    t = G.table
    return Subgroup(G, tuple(g for g in range(G.order) if np.array_equal(t[g], t[:, g])))


# ---------------------------------------------------------------------------
# naming


def _abelian_type(H: Subgroup) -> list[int]:
    """Elementary divisors of an abelian subgroup, e.g. [2, 4] for C2 x C4."""
    orders = H.parent.element_orders[list(H.members)]
    factors = []
    for p in prime_divisors(H.order):
        # n_j = #{x : x^(p^j) = 1}; log_p(n_j / n_{j-1}) counts cyclic factors of order >= p^j
        prev, j, counts = 1, 1, []
        while True:
            n = int(np.sum(p**j % orders == 0))
            if n == prev:
                break
            counts.append(round(math.log(n // prev, p)))
            prev, j = n, j + 1
        # counts[j-1] = number of factors with exponent >= j
        for j, c in enumerate(counts, start=1):
            nxt = counts[j] if j < len(counts) else 0
            factors += [p**j] * (c - nxt)
    return sorted(factors)


def describe(H: Subgroup) -> str:
    """A short structural name for ``H`` (not an isomorphism invariant beyond small orders)."""
    n = H.order
    if n == 1:
        return "1"
    orders = H.parent.element_orders[list(H.members)]
    if orders.max() == n:
        return f"C{n}"
    t = H.parent.table
    m = list(H.members)
    sub = t[np.ix_(m, m)]
    if np.array_equal(sub, sub.T):
        factors = _abelian_type(H)
        if factors == [2, 2]:
            return "V4"
        return "x".join(f"C{f}" for f in factors)
    counts = {k: int(np.sum(orders == k)) for k in set(orders.tolist())}
    if orders.max() == n // 2:
        # cyclic subgroup of index 2
        if counts.get(2, 0) == 1 and n % 4 == 0:
            return "Q8" if n == 8 else f"Dic{n}"
        if n == 6:
            return "S3"
        if counts.get(2, 0) >= n // 2 + 1 and n % 2 == 0:
            return f"D{n}"
    if n == 12 and counts.get(2) == 3 and counts.get(3) == 8:
        return "A4"
    if n == 24 and counts.get(2) == 9 and counts.get(3) == 8 and counts.get(4) == 6:
        return "S4"
    if n == 60 and counts.get(2) == 15 and counts.get(3) == 20 and counts.get(5) == 24:
        return "A5"
    if n == 120 and counts.get(2) == 25 and counts.get(6) == 20:
        return "S5"
    return f"G{n}"


def _class_labels(G: PermGroup, reps: list[Subgroup]) -> list[str]:
    base = [describe(r) for r in reps]
    if G.name and G.order > 1:
        base[-1] = G.name
    totals: dict[str, int] = {}
    for b in base:
        totals[b] = totals.get(b, 0) + 1
    seen: dict[str, int] = {}
    out = []
    for b in base:
        if totals[b] == 1:
            out.append(b)
        else:
            k = seen.get(b, 0)
            seen[b] = k + 1
            out.append(b + _suffix(k))
    return out


def _suffix(k: int) -> str:
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = chr(ord("a") + r) + s
    return s


# ---------------------------------------------------------------------------
# descriptors


_ATOM = re.compile(r"^(?P<kind>C|D|S|A)(?P<n>\d+)$|^Q8$|^Dih\((?P<deg>\d+)\)$")
_PRODUCT_SPLIT = re.compile(r"\s+x\s+|\s*×\s*|(?<=\d)x(?=[A-Z])")


def _cyclic(n: int) -> list[Permutation]:
    return [tuple((i + 1) % n for i in range(n))]


def _dihedral_on(m: int) -> tuple[list[Permutation], int]:
    """Dihedral group of order 2m acting on m points (m >= 3) or on 4 points for m = 2."""
    if m == 1:
        return [(1, 0)], 2
    if m == 2:
        return [(1, 0, 3, 2), (2, 3, 0, 1)], 4
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return [rot, ref], m


def _quaternion() -> list[Permutation]:
    # points 0..7 encode (+1, -1, +i, -i, +j, -j, +k, -k); left multiplication by i and j
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    mul = {("i", "1"): "i", ("i", "i"): "-1", ("i", "j"): "k", ("i", "k"): "-j",
           ("j", "1"): "j", ("j", "i"): "-k", ("j", "j"): "-1", ("j", "k"): "i"}

    def left(u: str) -> Permutation:
        out = []
        for x in names:
            sign = -1 if x.startswith("-") else 1
            r = mul[(u, x.lstrip("-"))]
            rs = -1 if r.startswith("-") else 1
            out.append(names.index(("-" if sign * rs < 0 else "") + r.lstrip("-")))
        return tuple(out)

    return [left("i"), left("j")]


def _atom(token: str) -> tuple[list[Permutation], int, str]:
    token = token.strip()
    if token.startswith("perm:"):
        return _parse_perm(token[5:]) + (token,)
    m = _ATOM.match(token)
    if not m:
        raise DescriptorError(f"cannot parse group descriptor {token!r}")
    if token == "Q8":
        return _quaternion(), 8, "Q8"
    if m.group("deg") is not None:
        k = int(m.group("deg"))
        if k < 1:
            raise DescriptorError("Dih(n) needs n >= 1")
        gens, deg = _dihedral_on(k)
        return gens, deg, f"D{2 * k}"
    kind, n = m.group("kind"), int(m.group("n"))
    if kind == "C":
        if n < 1:
            raise DescriptorError("C<n> needs n >= 1")
        return (_cyclic(n) if n > 1 else []), max(n, 1), f"C{n}"
    if kind == "D":
        if n < 4 or n % 2:
            raise DescriptorError(f"D<n> is the dihedral group of order n; need even n >= 4, got {n}")
        gens, deg = _dihedral_on(n // 2)
        return gens, deg, f"D{n}"
    if n < 1:
        raise DescriptorError(f"{kind}<n> needs n >= 1")
    if kind == "S":
        gens = [] if n == 1 else [from_cycles([(0, 1)], n), tuple((i + 1) % n for i in range(n))]
        return gens, n, f"S{n}"
    gens = [from_cycles([(0, 1, i)], n) for i in range(2, n)]
    return gens, n, f"A{n}"


def _parse_perm(body: str) -> tuple[list[Permutation], int]:
    gens_txt, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise DescriptorError(f"unbalanced parentheses in {body!r}")
        if ch == "," and depth == 0:
            gens_txt.append(cur)
            cur = ""
        else:
            cur += ch
    if depth:
        raise DescriptorError(f"unbalanced parentheses in {body!r}")
    gens_txt.append(cur)
    parsed = []
    for g in gens_txt:
        g = g.strip()
        if not re.fullmatch(r"(\(\s*(\d+(\s+\d+)*)?\s*\)\s*)+", g):
            raise DescriptorError(f"bad cycle notation {g!r}")
        cycles = [tuple(int(x) for x in c.split()) for c in re.findall(r"\(([^()]*)\)", g)]
        parsed.append(cycles)
    degree = 1 + max((x for cs in parsed for c in cs for x in c), default=0)
    return [from_cycles(cs, degree) for cs in parsed], degree


def build_group(descriptor: str | Sequence[Sequence[int]], cap: int = DEFAULT_ORDER_CAP, name: str = "") -> PermGroup:
    """Build a group from a catalog descriptor or a list of permutations (image lists).

    Descriptor grammar: ``C<n>``, ``D<n>`` (dihedral of ORDER n), ``Dih(n)``
    (dihedral acting on n points, order 2n), ``Q8``, ``S<n>``, ``A<n>``,
    direct products ``<g> x <g>``, and ``perm:(0 1 2)(3 4),(0 1)``.
    """
    if not isinstance(descriptor, str):
        return PermGroup.generated_by(descriptor, name=name, cap=cap)
    parts = [p for p in _PRODUCT_SPLIT.split(descriptor.strip()) if p.strip()]
    if not parts:
        raise DescriptorError("empty group descriptor")
    gens: list[Permutation] = []
    offset = 0
    names = []
    for part in parts:
        pgens, deg, pname = _atom(part)
        for g in pgens:
            gens.append(tuple(range(offset)) + tuple(x + offset for x in g))
        offset += deg
        names.append(pname)
    gens = [g + tuple(range(len(g), offset)) for g in gens]
    return PermGroup.generated_by(gens, degree=offset, name=name or "x".join(names), cap=cap)


CATALOG_SMALL = (
    ["C1"] + [f"C{n}" for n in range(2, 25)]
    + [f"D{n}" for n in range(4, 25, 2)]
    + ["Q8", "S3", "A4", "S4", "C2 x C2", "C2 x C2 x C2", "C2 x C4", "C2 x C6", "C3 x C3",
       "C2 x C8", "C4 x C4", "C2 x C2 x C2 x C2", "C2 x D8", "C2 x Q8", "C3 x S3", "C2 x A4",
       "C3 x C6", "C2 x C2 x C4", "C4 x S3", "C2 x C2 x S3"]
)
"""Descriptors of catalog groups of order at most 24."""


def catalog(max_order: int = 24) -> list[str]:
    out = []
    for d in CATALOG_SMALL:
        G = build_group(d)
        if G.order <= max_order:
            out.append(d)
    return out
