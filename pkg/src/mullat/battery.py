"""Named structural checks and the battery that runs them.

Every check has a list of hypotheses (profile flags or derived predicates).
In ``strict`` mode a check whose hypotheses fail is reported as skipped; in
``forced`` mode it runs anyway and a failure is reported as ``info``, which
never counts as a failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import LatticeError
from .lattice import MulLattice, _unchecked, condition_profile
from .morphisms import commutativize, radical_adjunction, spec_map
from .order import compact_elements, directed_subsets
from .reports import TheoremReport, check, skipped
from .solvability import (
    _step_table,
    closure_comparison,
    closure_table,
    derived_series,
    is_locally_solvable,
    is_solvable,
    solv_closure,
    step_preserves_directed_joins,
)
from .spectra import (
    has_enough_primes,
    is_locally_prime,
    is_prime,
    is_semiprime,
    primes,
    primes_between_check,
    radical_frame,
    radical_table,
    sp_iterated,
    sp_table,
    spec,
    spectral_consistency_report,
)
from .topology import topology_report


class BatteryConfigError(LatticeError):
    """Unknown check name or mode."""


MODES = ("strict", "forced")


# ---------------------------------------------------------------------------
# derived hypotheses


def has_algebraic_radicals(L: MulLattice) -> bool:
    """The radical preserves directed joins."""
    rad, order = radical_table(L), L.order
    return all(rad[order.join_all(D)] == order.join_all(rad[d] for d in D) for D in directed_subsets(order))


def compact_radical_products(L: MulLattice) -> bool:
    """For compact ``x, y`` some compact ``c`` has ``√c = √(xy)``."""
    comp = compact_elements(L.order)
    rad, mul = radical_table(L), L.mul
    rads = {rad[c] for c in comp}
    return all(rad[mul[x][y]] in rads for x in comp for y in comp)


def _flag(name):
    return name, lambda L: getattr(condition_profile(L), name)


_DERIVED = {
    "algebraic_radicals": has_algebraic_radicals,
    "compact_radical_products": compact_radical_products,
}


def _hyp(name):
    if name in _DERIVED:
        return name, _DERIVED[name]
    return _flag(name)


# ---------------------------------------------------------------------------
# verifiers: each returns a witness tuple (fail) or None (pass), optionally with detail


def _v_sober(L, ctx):
    rep = topology_report(spec(L))
    if rep.sober:
        return None
    if not rep.t0:
        return (), "spectrum is not T0"
    bad = [sorted(c) for c, ps in rep.generic_points.items() if len(ps) != 1]
    return tuple(bad[0]), "irreducible closed set without unique generic point"


def _v_radical_frame(L, ctx):
    rf = radical_frame(L)
    F = rf.as_mul_lattice
    # primes of the frame are exactly the primes of L, with the same closed sets
    fp = {rf.carrier[p] for p in primes(F)}
    if fp != set(primes(L)):
        return tuple(sorted(fp ^ set(primes(L)))), "prime sets of L and its radical frame differ"
    SF, SL = spec(F), spec(L)
    lifted = {frozenset(rf.carrier[p] for p in c) for c in SF.closed_sets}
    if lifted != set(SL.closed_sets):
        return (), "closed families differ"
    adj = radical_adjunction(L)
    if not adj.strictly_compatible:
        return (), "radical adjunction not strictly compatible"
    sm = spec_map(adj)
    if any(rf.carrier[p] != q for p, q in sm.mapping.items()):
        return tuple(p for p, q in sm.mapping.items() if rf.carrier[p] != q), "spec map of the radical adjunction is not the inclusion"
    return None


def _v_spectral_consistency(L, ctx):
    r = spectral_consistency_report(L)
    return r.witness if r.failed else None


def _v_enough_primes(L, ctx):
    lhs = has_enough_primes(L)
    rhs = L.mul[L.top][L.top] == L.top
    return None if lhs == rhs else ((int(lhs), int(rhs)), "enough primes vs 1^2 = 1")


def _v_local_primality(L, ctx):
    for p in range(L.n):
        if is_prime(L, p) != is_locally_prime(L, p):
            return (p,), "prime and locally prime disagree"
    return None


def _v_solv_vs_loc_solv(L, ctx):
    n = L.n
    for x in range(n):
        for y in range(n):
            if is_solvable(L, x, y) and not is_locally_solvable(L, x, y):
                return (x, y), "solvable but not locally solvable"
    comp = compact_elements(L.order)
    for x in comp:
        for y in range(n):
            if is_locally_solvable(L, x, y) and not is_solvable(L, x, y):
                return (x, y), "compact, locally solvable, not solvable"
    t = closure_table(L)
    for y in range(n):
        if t["loc_solv"][y] != t["solv"][y]:
            return (y,), "loc_solv != solv"
    return None


def _v_radical_is_loc_solv(L, ctx):
    t = closure_table(L)
    for y in range(L.n):
        if t["radical"][y] != t["loc_solv"][y]:
            return (y,), "radical != loc_solv"
    return None


def _v_tower(L, ctx):
    step = _step_table(L)
    le, sq = L.order.le, L.squares
    comp = compact_elements(L.order)
    for x in range(L.n):
        # single step is the join of compacts whose square lies below
        if step[x] != L.order.join_all(c for c in comp if le[sq[c]][x]):
            return (x,), "stage map differs from the join over compacts"
        tower = solv_closure(L, x)
        if len(tower.stages) > L.n or step[tower.limit] != tower.limit:
            return (x,), "tower did not settle within n stages"
    return None


def _v_closure_chain(L, ctx):
    # part (a) in its stagewise form: x^(k) <= y implies x <= y_(k)
    step, le = _step_table(L), L.order.le
    for x in range(L.n):
        terms = derived_series(L, x).terms
        for y in range(L.n):
            stage = y
            for k, t in enumerate(terms):
                if k:
                    stage = step[stage]
                if le[t][y] and not le[x][stage]:
                    return (x, y, k), "derived term below y but x not below stage"
    r = closure_comparison(L)
    return (r.witness, r.detail) if r.failed else None


def _v_stage_map_directed(L, ctx):
    D = step_preserves_directed_joins(L)
    return None if D is None else (tuple(D), "stage map does not preserve a directed join")


def _v_spectral(L, ctx):
    return None if topology_report(spec(L)).spectral else ((), "spectrum not spectral")


def _v_semiprime(L, ctx):
    t = closure_table(L)
    le = L.order.le
    for p in primes(L):
        if not is_semiprime(L, p):
            return (p,), "prime not semiprime"
    for x in range(L.n):
        if sp_iterated(L, x) != t["sp"][x]:
            return (x,), "meet of semiprimes != iterated closure"
        if not le[t["sp"][x]][t["radical"][x]]:
            return (x,), "sp not below radical"
        if not le[t["upper_solv"][x]][t["sp"][x]]:
            return (x,), "Solv not below sp"
    if condition_profile(L).distributive:
        for x in range(L.n):
            if t["sp"][x] != t["radical"][x]:
                return (x,), "sp != radical on a distributive lattice"
    return None


def _v_primes_between(L, ctx):
    r = primes_between_check(L)
    return r.witness if r.failed else None


def _v_ring_primes(L, ctx):
    """With a one-sided product table (ring instances) compare the two prime
    predicates directly; otherwise compare L with its commutativization."""
    one_sided = ctx.get("one_sided")
    if one_sided is not None:
        O = _unchecked(L.order, np.asarray(one_sided))
        com = commutativize(O).lattice
        if not np.array_equal(com.mult, L.mult):
            return (), "lattice product is not x.y + y.x of the one-sided table"
        a, b = set(primes(O)), set(primes(L))
    else:
        a, b = set(primes(L)), set(primes(commutativize(L).lattice))
    return None if a == b else (tuple(sorted(a ^ b)), "prime sets differ")


@dataclass(frozen=True)
class CheckDef:
    name: str
    alias: str
    hypotheses: tuple[str, ...]
    verify: Callable


CHECKS: dict[str, CheckDef] = {
    c.name: c
    for c in [
        CheckDef("spec_sober", "sober_2_6", (), _v_sober),
        CheckDef("radical_frame", "radical_frame_3_5", (), _v_radical_frame),
        CheckDef("spectral_consistency", "thm_3_6_consistency", (), _v_spectral_consistency),
        CheckDef(
            "sufficient_spectral", "thm_4_4",
            ("compact_lattice", "algebraic_lattice", "algebraic_radicals", "compact_radical_products"),
            _v_spectral,
        ),
        CheckDef("enough_primes", "thm_5_7", ("compact_lattice", "distributive"), _v_enough_primes),
        CheckDef("local_primality", "lemma_6_16", ("monotone",), _v_local_primality),
        CheckDef(
            "solv_vs_loc_solv", "thm_6_13", ("algebraic_lattice", "weakly_monotone", "weak_kaplansky"),
            _v_solv_vs_loc_solv,
        ),
        CheckDef("radical_is_loc_solv", "thm_6_17", ("distributive", "algebraic_lattice"), _v_radical_is_loc_solv),
        CheckDef(
            "tower_omega", "thm_7_3", ("algebraic_lattice", "weakly_monotone", "weak_kaplansky"), _v_tower,
        ),
        CheckDef("closure_chain", "thm_7_4", (), _v_closure_chain),
        CheckDef(
            "stage_map_directed", "thm_7_5", ("algebraic_lattice", "weakly_monotone", "weak_kaplansky"),
            _v_stage_map_directed,
        ),
        CheckDef(
            "kaplansky_spectral", "cor_7_9_spectral",
            ("compact_lattice", "algebraic_lattice", "distributive", "kaplansky"),
            _v_spectral,
        ),
        CheckDef("semiprime_closure", "sp_12_4", (), _v_semiprime),
        CheckDef("primes_between", "between_12_5", (), _v_primes_between),
        CheckDef("ring_primes", "ring_prime_12_7", ("monotone",), _v_ring_primes),
    ]
}

ALIASES = {c.alias: c.name for c in CHECKS.values()}


def resolve_check(name: str) -> str:
    name = name.strip()
    if name in CHECKS:
        return name
    if name in ALIASES:
        return ALIASES[name]
    raise BatteryConfigError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")


@dataclass(frozen=True)
class TheoremBatterySpec:
    checks: tuple[str, ...] = tuple(CHECKS)
    mode: str = "strict"

    def __post_init__(self):
        if self.mode not in MODES:
            raise BatteryConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        object.__setattr__(self, "checks", tuple(resolve_check(c) for c in self.checks))

    @classmethod
    def parse(cls, battery: str = "all", mode: str = "strict") -> "TheoremBatterySpec":
        if battery.strip() == "all":
            return cls(mode=mode)
        return cls(tuple(c for c in battery.split(",") if c.strip()), mode)


def run_check(L: MulLattice, name: str, mode: str = "strict", **ctx) -> TheoremReport:
    c = CHECKS[resolve_check(name)]
    missing = [h for h in c.hypotheses if not _hyp(h)[1](L)]
    if missing and mode == "strict":
        return skipped(c.name, ", ".join(missing))
    out = c.verify(L, ctx)
    if out is None:
        return TheoremReport(c.name, True, status="info" if missing else "pass",
                             detail=f"hypothesis not met: {', '.join(missing)}" if missing else "")
    witness, detail = out if isinstance(out, tuple) and len(out) == 2 and isinstance(out[1], str) else (out, "")
    witness = tuple(_flatten(witness)) if witness is not None else ()
    if missing:
        return TheoremReport(c.name, False, witness, status="info",
                             detail=f"hypothesis not met: {', '.join(missing)}; {detail}".rstrip("; "))
    return TheoremReport(c.name, False, witness, detail=detail)


def _flatten(w):
    for v in w:
        if isinstance(v, (tuple, list, frozenset, set)):
            yield from _flatten(sorted(v) if isinstance(v, (set, frozenset)) else v)
        else:
            yield v


def run_battery(L: MulLattice, spec: TheoremBatterySpec | None = None, **ctx) -> list[TheoremReport]:
    """Run every check of ``spec`` on ``L`` in the order given; deterministic.

    Extra keyword context is passed to verifiers (``one_sided`` for ring
    instances).
    """
    spec = spec or TheoremBatterySpec()
    return [run_check(L, name, spec.mode, **ctx) for name in spec.checks]
