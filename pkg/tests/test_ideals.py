import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CATALOG_16
from mackeyspec.groups import all_subgroups, prime_divisors, quotient
from mackeyspec.ideals import (
    EnumerationLimitExceeded,
    admissible_closure,
    count_admissible_local,
    enumerate_admissible_local,
    is_admissible,
    iter_admissible_local,
    slice_primes,
    support_of_objects,
)
from mackeyspec.spectrum import (
    GeneratorObject,
    SpectrumError,
    build_spectrum,
    closure,
    generator_support,
    is_specialization_closed,
    quotient_maps,
)
from oracles import closed_subset_masks, count_downsets


def subset(space, mask):
    return {P for i, P in enumerate(space.points) if mask >> i & 1}


def test_s3_examples(spaces):
    X = spaces("S3")
    assert is_admissible(X, set())
    assert is_admissible(X, X.points)
    assert not is_admissible(X, {X.point("S3", 2)})
    assert is_admissible(X, {X.point("S3", 3)})
    assert admissible_closure(X, {X.point("S3", 2)}).members == {X.point("S3", 2), X.point("C3", 2)}
    top = admissible_closure(X, {X.point("S3", 0)}).members
    assert top == closure(X, X.point("S3", 0))


def test_support_of_objects(spaces):
    X = spaces("D8")
    assert support_of_objects(X, []).members == frozenset()
    assert support_of_objects(X, [GeneratorObject(X.classes[-1])]).members == set(X.points)
    G = X.group
    for N in all_subgroups(G):
        if not N.is_normal():
            continue
        qp = quotient(G, N)
        _, fixed = quotient_maps(X, build_spectrum(qp.quotient), qp)
        gens = [GeneratorObject(c) for c in X.classes if not N <= c.representative]
        assert support_of_objects(X, gens).members == set(X.points) - fixed.image()


def test_foreign_points_rejected(spaces):
    X = spaces("S3")
    with pytest.raises(SpectrumError):
        is_admissible(X, {spaces("D8").points[0]})
    with pytest.raises(SpectrumError):
        admissible_closure(X, {spaces("D8").points[0]})


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_cp_has_seven_local_sets(spaces, p):
    X = spaces(f"C{p}", p)
    sets = enumerate_admissible_local(X, p)
    assert len(sets) == 7 == count_admissible_local(X, p)
    assert len(set(sets)) == 7


@pytest.mark.parametrize("p", [2, 3, 7])
def test_trivial_group_has_three_local_sets(spaces, p):
    X = spaces("C1", p)
    assert sorted(len(S) for S in enumerate_admissible_local(X, p)) == [0, 1, 2]


@pytest.mark.parametrize("descriptor, q", [("S3", 5), ("D8", 3), ("A4", 7), ("C6", 5), ("S4", 5)])
def test_coprime_slice_product_formula(spaces, descriptor, q):
    X = spaces(descriptor, q)
    n = len(X.classes)
    assert count_admissible_local(X, q) == 3**n
    if n <= 8:
        assert len(enumerate_admissible_local(X, q)) == 3**n


@pytest.mark.parametrize("descriptor", CATALOG_16)
def test_admissible_equals_specialization_closed(spaces, descriptor):
    for p in slice_primes(spaces(descriptor)):
        X = spaces(descriptor, p)
        n = len(X)
        if n > 14:
            continue
        closed = set(closed_subset_masks(X.leq).tolist())
        for mask in range(1 << n):
            S = subset(X, mask)
            assert is_admissible(X, S) == (mask in closed)
        listed = enumerate_admissible_local(X, p)
        assert len(listed) == len(closed) == count_admissible_local(X, p)
        as_masks = {sum(1 << X.index(P) for P in A.members) for A in listed}
        assert as_masks == closed


@pytest.mark.parametrize("descriptor", CATALOG_16)
def test_count_matches_downset_oracle(spaces, descriptor):
    for p in slice_primes(spaces(descriptor)):
        X = spaces(descriptor, p)
        assert count_admissible_local(X, p) == count_downsets(X.leq)


@pytest.mark.parametrize("descriptor", ["D8", "S3", "A4", "C2 x C4", "Q8"])
def test_enumeration_is_deterministic_and_admissible(spaces, descriptor):
    for p in prime_divisors(spaces(descriptor).group.order):
        X = spaces(descriptor, p)
        a = enumerate_admissible_local(X, p)
        b = enumerate_admissible_local(build_spectrum(X.group, local=p), p)
        assert [A.tokens() for A in a] == [B.tokens() for B in b]
        assert len({A.members for A in a}) == len(a)
        assert all(is_admissible(X, A.members) for A in a)
        assert all(is_specialization_closed(X, A.members) for A in a)


def test_enumeration_from_full_space_uses_slice(spaces):
    X = spaces("S3")
    sets = enumerate_admissible_local(X, 3)
    assert all(A.space.local == 3 for A in sets)
    assert len(sets) == count_admissible_local(spaces("S3", 3), 3)


def test_enumeration_limit(spaces):
    X = spaces("D8", 2)
    n = count_admissible_local(X, 2)
    with pytest.warns(UserWarning):
        with pytest.raises(EnumerationLimitExceeded) as exc:
            enumerate_admissible_local(X, 2, limit=n - 1)
    assert exc.value.count == n
    assert len(enumerate_admissible_local(X, 2, limit=n)) == n
    assert sum(1 for _ in iter_admissible_local(X, 2)) == n


def test_large_slice_counts_without_listing(spaces):
    X = spaces("C2 x C2 x C2 x C2", 2)
    n = count_admissible_local(X, 2)
    assert n > 2**20
    with pytest.warns(UserWarning), pytest.raises(EnumerationLimitExceeded):
        enumerate_admissible_local(X, 2)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_closure_operator_properties(spaces, data):
    descriptor = data.draw(st.sampled_from(["S3", "D8", "A4", "S4", "C2 x C6"]))
    X = spaces(descriptor)
    n = len(X)
    pick = st.sets(st.integers(0, n - 1), max_size=n)
    S = {X.points[i] for i in data.draw(pick)}
    T = S | {X.points[i] for i in data.draw(pick)}
    cS = admissible_closure(X, S)
    assert S <= cS.members
    assert cS <= admissible_closure(X, T)
    assert admissible_closure(X, cS.members) == cS
    assert is_admissible(X, cS.members) and is_specialization_closed(X, cS.members)
    union = set().union(*(closure(X, P) for P in S)) if S else set()
    assert cS.members == union
    if S:
        assert cS.members == closure(X, S)
    assert cS.tokens() == [str(P) for P in X.points if P in cS]


@pytest.mark.parametrize("descriptor", ["S3", "D8", "A4"])
def test_generator_supports_are_admissible(spaces, descriptor):
    X = spaces(descriptor)
    for c in X.classes:
        S = generator_support(X, c)
        assert is_admissible(X, S)
        assert np.array_equal(X.mask(admissible_closure(X, S).members), X.mask(S))
