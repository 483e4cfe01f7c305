import pytest

from mullat import TheoremBatterySpec, chain_order, condition_profile, new_mul_lattice, run_battery, subset_order
from mullat.battery import ALIASES, CHECKS, BatteryConfigError, run_check
from mullat.instances import ring_ideal_lattice, upper_triangular_f2
from mullat.lattice import _unchecked
from mullat.morphisms import commutativize

from conftest import small_corpus, zero_mult


def test_L3_default_battery_passes(L3):
    reports = run_battery(L3)
    assert [r.theorem for r in reports] == list(CHECKS)
    assert all(r.status == "pass" for r in reports)


def test_zero_mult_three_chain():
    L = zero_mult(chain_order(3))
    by = {r.theorem: r for r in run_battery(L)}
    assert by["spec_sober"].status == "pass"
    # compact and distributive, 1^2 = 0 and no primes: both sides false
    assert by["enough_primes"].status == "pass"


def test_unknown_check_rejected():
    with pytest.raises(BatteryConfigError):
        TheoremBatterySpec(("spec_sober", "no_such_check"))
    with pytest.raises(BatteryConfigError):
        TheoremBatterySpec.parse("all", mode="lenient")


def test_aliases_resolve_to_every_check():
    assert set(ALIASES.values()) == set(CHECKS)
    spec = TheoremBatterySpec.parse(",".join(ALIASES))
    assert spec.checks == tuple(CHECKS)


def test_strict_skips_and_forced_informs():
    # boolean square, every product 0 except 1·1 = 1: 1^2 = 1 but no element is
    # prime; not distributive since 1·(a ∨ b) = 1 while 1·a ∨ 1·b = 0
    sq = subset_order([set(), {0}, {1}, {0, 1}])
    L = new_mul_lattice(sq, [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 3]])
    assert not condition_profile(L).distributive
    strict = run_check(L, "enough_primes", "strict")
    assert strict.status == "skipped" and "distributive" in strict.detail
    forced = run_check(L, "enough_primes", "forced")
    assert forced.status == "info" and not forced.passed and not forced.failed


def test_deterministic_output():
    for L in small_corpus()[::500]:
        a = [r.to_json() for r in run_battery(L, TheoremBatterySpec(mode="forced"))]
        b = [r.to_json() for r in run_battery(L, TheoremBatterySpec(mode="forced"))]
        assert a == b


def test_ring_primes_with_one_sided_table():
    inst = ring_ideal_lattice(upper_triangular_f2())
    r = run_check(inst.lattice, "ring_primes", one_sided=inst.one_sided)
    assert r.status == "pass"


def test_no_strict_failures_on_small_corpus():
    spec = TheoremBatterySpec()
    for L in small_corpus()[::3]:
        for r in run_battery(L, spec):
            assert not r.failed, (L, r)


def test_report_schema(L3):
    d = run_battery(L3)[0].to_dict()
    assert {"theorem", "pass", "witness"} <= set(d)
    assert d["witness"] is None and d["pass"] is True
