import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mullat import (
    FiniteSpace,
    V,
    chain_order,
    condition_profile,
    frame_from_distributive_lattice,
    has_enough_primes,
    is_prime,
    is_semiprime,
    primes,
    primes_between_check,
    radical,
    radical_frame,
    sample_mul_lattices,
    sp,
    spec,
    subset_order,
    topology_report,
)
from mullat.spectra import (
    is_locally_prime,
    prime_witness,
    radical_table,
    sp_iterated,
    sp_table,
    spec_dot,
    spectral_consistency_report,
    v_identity_witness,
)

from conftest import ideal_of, small_corpus, zero_mult
from oracles import brute_primes, brute_radical, brute_sober, leq_lists, mult_lists, subsets

random_lattices = st.builds(
    lambda seed, n: next(iter(sample_mul_lattices(1, seed, sizes=(n,)))),
    st.integers(0, 2**32 - 1),
    st.sampled_from([4, 5, 6, 7]),
)


def test_primes_L3(L3):
    assert is_prime(L3, 1)
    assert not is_prime(L3, 0)
    assert prime_witness(L3, 0) == (1, 1)
    assert not is_prime(L3, 2)


def test_primes_z12(Z12):
    L = Z12.lattice
    two, three, six = (ideal_of(Z12, d, 12) for d in (2, 3, 6))
    assert is_prime(L, two) and is_prime(L, three)
    assert not is_prime(L, six)
    x, y = prime_witness(L, six)
    le = L.order.le
    assert le[L.mul[x][y]][six] and not le[x][six] and not le[y][six]


def test_top_never_prime():
    for L in small_corpus()[::7]:
        assert not is_prime(L, L.top)


def test_primes_match_brute_force():
    for L in small_corpus()[::5]:
        assert list(primes(L)) == brute_primes(leq_lists(L), mult_lists(L))


@settings(max_examples=40, deadline=None)
@given(random_lattices)
def test_primes_and_radical_match_brute_force_random(L):
    leq, M = leq_lists(L), mult_lists(L)
    assert list(primes(L)) == brute_primes(leq, M)
    assert radical_table(L) == [brute_radical(leq, M, x) for x in range(L.n)]


def test_spec_L3(L3):
    S = spec(L3)
    assert S.points == (1,)
    assert S.closed_sets == {frozenset(), frozenset({1})}


def test_spec_zero_mult_empty():
    for n in range(2, 5):
        L = zero_mult(chain_order(n))
        assert spec(L).points == ()
        assert not has_enough_primes(L)


def test_spec_z12_discrete(Z12):
    L = Z12.lattice
    S = spec(L)
    two, three, four, zero = (ideal_of(Z12, d, 12) for d in (2, 3, 4, 0))
    assert set(S.points) == {two, three}
    assert S.closed_sets == {frozenset(c) for c in subsets([two, three])}
    assert S.V(four) == {two}
    assert S.V(zero) == {two, three}


def test_radical_examples(L3, Z12):
    assert radical(L3, 0) == 1
    assert radical(L3, 2) == 2
    L = Z12.lattice
    assert radical(L, ideal_of(Z12, 0, 12)) == ideal_of(Z12, 6, 12)
    for M in small_corpus()[::11]:
        assert radical(M, M.top) == M.top


def test_radical_closure_laws():
    for L in small_corpus()[::3]:
        le, r = L.order.le, radical_table(L)
        for x in range(L.n):
            assert le[x][r[x]] and r[r[x]] == r[x]
            for y in range(L.n):
                if le[x][y]:
                    assert le[r[x]][r[y]]


def test_prop_v_of_radical_and_order_reversal():
    for L in small_corpus()[::3]:
        S, r, le = spec(L), radical_table(L), L.order.le
        for x in range(L.n):
            assert S.V(r[x]) == S.V(x)
            for y in range(L.n):
                assert le[r[x]][r[y]] == (S.V(y) <= S.V(x))
        for p in S.points:
            assert S.V(p) == S.closure({p})


def test_radical_frame_L3(L3):
    rf = radical_frame(L3)
    assert rf.carrier == (1, 2)
    S = spec(L3)
    assert {frozenset(S.points) - S.V(r) for r in rf.carrier} == S.open_sets


def test_radical_frame_boolean_square():
    F = frame_from_distributive_lattice(subset_order([set(), {0}, {1}, {0, 1}]))
    assert set(primes(F)) == {1, 2}
    assert radical_frame(F).carrier == (0, 1, 2, 3)


def test_radical_frame_without_primes():
    L = zero_mult(chain_order(3))
    rf = radical_frame(L)
    assert rf.carrier == (2,)
    assert spec(L).open_sets == {frozenset()}


def test_radical_frame_primes_coincide():
    for L in small_corpus()[::4]:
        rf = radical_frame(L)
        F = rf.as_mul_lattice
        assert condition_profile(F).is_frame
        assert {rf.carrier[p] for p in primes(F)} == set(primes(L))
        lifted = {frozenset(rf.carrier[p] for p in c) for c in spec(F).closed_sets}
        assert lifted == spec(L).closed_sets
        for x in rf.carrier:
            for y in rf.carrier:
                assert L.order.meet_t[x][y] in rf.carrier


def test_topology_examples(L3, Z12):
    r = topology_report(spec(L3))
    assert r.t0 and r.sober and r.spectral
    r = topology_report(spec(Z12.lattice))
    assert r.t0 and r.sober and r.spectral and r.compact


def test_indiscrete_space_not_t0():
    S = FiniteSpace((0, 1), frozenset({frozenset(), frozenset({0, 1})}))
    r = topology_report(S)
    assert not r.t0 and not r.sober


def test_sierpinski_and_nonsober_space():
    S = FiniteSpace((0, 1), frozenset({frozenset(), frozenset({0}), frozenset({0, 1})}))
    assert topology_report(S).sober
    # {0, 1, 2} is irreducible here and 2 is its only generic point
    fam = frozenset({frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1}), frozenset({0, 1, 2})})
    assert topology_report(FiniteSpace((0, 1, 2), fam)).sober == brute_sober((0, 1, 2), fam)


def test_finite_space_rejects_non_topology():
    with pytest.raises(ValueError):
        FiniteSpace((0, 1), frozenset({frozenset({0}), frozenset({0, 1})}))


def _all_topologies(points):
    pts = frozenset(points)
    cands = [frozenset(s) for s in subsets(points) if 0 < len(s) < len(points)]
    for extra in subsets(cands):
        fam = {frozenset(), pts, *extra}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            yield frozenset(fam)


def test_sober_matches_brute_force_on_all_three_point_topologies():
    tops = list(_all_topologies((0, 1, 2)))
    assert len(tops) == 29  # topologies on a 3-element set
    for fam in tops:
        assert topology_report(FiniteSpace((0, 1, 2), fam)).sober == brute_sober((0, 1, 2), fam)


def test_compact_opens_definitional():
    # finite spaces: every open set is compact
    for fam in _all_topologies((0, 1, 2)):
        S = FiniteSpace((0, 1, 2), fam)
        assert set(topology_report(S).compact_opens) == set(S.open_sets)


def test_enough_primes_examples(L3):
    from mullat.instances import group_normal_lattice, symmetric_group

    assert has_enough_primes(L3)
    assert not has_enough_primes(group_normal_lattice(symmetric_group(3)).lattice)


def test_semiprime_examples(L3):
    assert not is_semiprime(L3, 0)
    assert sp(L3, 0) == 1
    for L in small_corpus()[::9]:
        assert is_semiprime(L, L.top)
        for p in primes(L):
            assert is_semiprime(L, p)


def test_sp_two_ways_and_below_radical():
    for L in small_corpus()[::2]:
        s, r, le = sp_table(L), radical_table(L), L.order.le
        for x in range(L.n):
            assert sp_iterated(L, x) == s[x]
            assert le[s[x]][r[x]]


def test_sp_equals_radical_when_distributive():
    for L in small_corpus():
        if condition_profile(L).distributive:
            assert sp_table(L) == radical_table(L)


def test_primes_between(L3, Z12):
    assert primes_between_check(L3).passed
    assert primes_between_check(Z12.lattice).passed
    for L in small_corpus():
        r = primes_between_check(L)
        assert r.passed, (L, r)


def test_v_identities_small_corpus():
    for L in small_corpus():
        assert v_identity_witness(L) is None


@settings(max_examples=60, deadline=None)
@given(random_lattices)
def test_v_identities_random(L):
    assert v_identity_witness(L) is None
    assert topology_report(spec(L)).sober


def test_spec_sober_matches_brute_force():
    for L in small_corpus()[::13]:
        S = spec(L)
        assert brute_sober(S.points, S.closed_sets)


def test_local_primality_under_monotonicity():
    for L in small_corpus():
        if condition_profile(L).monotone:
            assert all(is_prime(L, p) == is_locally_prime(L, p) for p in range(L.n))


def test_enough_primes_iff_unit_idempotent():
    checked = 0
    for L in small_corpus():
        p = condition_profile(L)
        if p.compact_lattice and p.distributive:
            checked += 1
            assert has_enough_primes(L) == (L.mul[L.top][L.top] == L.top)
    assert checked > 100


def test_spectral_consistency():
    for L in small_corpus()[::3]:
        assert spectral_consistency_report(L).passed


def test_spec_dot(L3, Z12):
    assert '"1" [label="x"]' in spec_dot(spec(L3))
    dot = spec_dot(spec(Z12.lattice))
    assert dot.startswith("digraph") and "->" not in dot


def test_V_function(L3):
    assert V(L3, 0) == {1} and V(L3, 2) == frozenset()
