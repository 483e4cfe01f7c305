"""Solvable, locally solvable and tower-solvable elements.

Three closure-like operators are compared here against the radical:

* ``solv(y)``: join of the ``x`` whose derived series ``x, x^2, (x^2)^2, ...``
  eventually drops below ``y``;
* ``loc_solv(y)``: join of the ``x`` such that every chain of compacts
  ``c0 <= x``, ``c_{k+1} <= c_k^2`` eventually drops below ``y``;
* ``upper_solv(x)``: limit of the tower ``x, x_1, x_2, ...`` with
  ``x_{k+1} = join{y : y^2 <= x_k}``.

Local solvability quantifies over infinite sequences. On a finite carrier an
infinite chain avoiding ``y`` exists iff some element avoiding ``y`` can
continue such a chain forever, i.e. iff the chain can start inside the
greatest set ``B`` of compacts ``c`` not below ``y`` where each member has a
successor ``c' <= c^2`` in ``B``. Any chain of length ``|B| + 1`` inside that
set repeats an element, so it extends periodically; conversely an infinite
chain lies entirely in ``B``. :func:`bad_set` computes ``B`` by deleting
members without a successor until nothing changes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NonStabilizing
from .lattice import MulLattice, condition_profile
from .order import compact_elements, directed_subsets
from .reports import TheoremReport, check
from .spectra import radical_table, sp_table


@dataclass(frozen=True)
class DerivedSeries:
    base: int
    terms: tuple[int, ...]

    @property
    def stable(self) -> int:
        return self.terms[-1]


def derived_series(L: MulLattice, x: int, horizon: int | None = None) -> DerivedSeries:
    """Iterate squaring from ``x`` until a term repeats its predecessor.

    Raises :class:`NonStabilizing` on a cycle or when ``horizon`` (default
    ``2n``) steps pass without stabilizing.
    """
    horizon = 2 * L.n if horizon is None else horizon
    sq = L.squares
    terms = [x]
    while True:
        nxt = sq[terms[-1]]
        if nxt == terms[-1]:
            return DerivedSeries(x, tuple(terms))
        if nxt in terms:
            raise NonStabilizing(f"derived series of {x} cycles: {terms + [nxt]}")
        if len(terms) > horizon:
            raise NonStabilizing(f"derived series of {x} did not stabilize in {horizon} steps")
        terms.append(nxt)


def _stable_terms(L: MulLattice) -> list[int]:
    return L.memo("stable_terms", lambda: [derived_series(L, x).stable for x in range(L.n)])


def is_solvable(L: MulLattice, x: int, y: int) -> bool:
    """``x`` is ``y``-solvable: some term of its derived series lies below ``y``."""
    le = L.order.le
    return any(le[t][y] for t in derived_series(L, x).terms)


def solv_table(L: MulLattice) -> list[int]:
    def compute():
        le, stable = L.order.le, _stable_terms(L)
        # squaring only goes down, so the stable term is the smallest one
        return [L.order.join_all(x for x in range(L.n) if le[stable[x]][y]) for y in range(L.n)]

    return L.memo("solv", compute)


def solv(L: MulLattice, y: int) -> int:
    return solv_table(L)[y]


def bad_set(L: MulLattice, y: int) -> frozenset[int]:
    """Greatest set of compacts ``c`` not below ``y`` in which each member has a
    successor ``c' <= c^2``."""
    le, sq = L.order.le, L.squares
    alive = {c for c in compact_elements(L.order) if not le[c][y]}
    changed = True
    while changed:
        changed = False
        for c in list(alive):
            if not any(le[d][sq[c]] for d in alive):
                alive.discard(c)
                changed = True
    return frozenset(alive)


def _bad_sets(L: MulLattice) -> list[frozenset[int]]:
    return L.memo("bad_sets", lambda: [bad_set(L, y) for y in range(L.n)])


def is_locally_solvable(L: MulLattice, x: int, y: int) -> bool:
    le = L.order.le
    return not any(le[c][x] for c in _bad_sets(L)[y])


def loc_solv_table(L: MulLattice) -> list[int]:
    def compute():
        le = L.order.le
        out = []
        for y, bad in enumerate(_bad_sets(L)):
            good = (x for x in range(L.n) if not any(le[c][x] for c in bad))
            out.append(L.order.join_all(good))
        return out

    return L.memo("loc_solv", compute)


def loc_solv(L: MulLattice, y: int) -> int:
    return loc_solv_table(L)[y]


def locally_solvable_by_search(L: MulLattice, x: int, y: int, depth: int | None = None) -> bool:
    """Reference decision by bounded chain search.

    ``x`` fails to be locally ``y``-solvable iff there is a chain of compacts
    ``c0 <= x``, ``c_{k+1} <= c_k^2`` of ``depth + 1`` terms none of which is
    below ``y`` (default ``depth = 2n``).
    """
    depth = 2 * L.n if depth is None else depth
    le, sq = L.order.le, L.squares
    comp = sorted(compact_elements(L.order))

    @lru_cache(maxsize=None)
    def avoids(c: int, remaining: int) -> bool:
        if le[c][y]:
            return False
        if remaining == 0:
            return True
        return any(avoids(d, remaining - 1) for d in comp if le[d][sq[c]])

    return not any(avoids(c, depth) for c in comp if le[c][x])


@dataclass(frozen=True)
class SolvTower:
    base: int
    stages: tuple[int, ...]

    @property
    def limit(self) -> int:
        return self.stages[-1]


def tower_step(L: MulLattice, x: int) -> int:
    """``join{y : y^2 <= x}``."""
    le, sq = L.order.le, L.squares
    return L.order.join_all(y for y in range(L.n) if le[sq[y]][x])


def _step_table(L: MulLattice) -> list[int]:
    return L.memo("tower_step", lambda: [tower_step(L, x) for x in range(L.n)])


def solv_closure(L: MulLattice, x: int) -> SolvTower:
    """Iterate the tower step from ``x`` until it repeats.

    The stages increase (``x^2 <= x`` puts ``x`` among the ``y`` of the next
    step), so on a finite lattice the last stage is a fixpoint.
    """
    step = _step_table(L)
    stages = [x]
    while step[stages[-1]] != stages[-1]:
        stages.append(step[stages[-1]])
    return SolvTower(x, tuple(stages))


def upper_solv_table(L: MulLattice) -> list[int]:
    return L.memo("upper_solv", lambda: [solv_closure(L, x).limit for x in range(L.n)])


def upper_solv(L: MulLattice, x: int) -> int:
    return upper_solv_table(L)[x]


def closure_table(L: MulLattice) -> dict[str, list[int]]:
    return {
        "radical": radical_table(L),
        "sp": sp_table(L),
        "solv": solv_table(L),
        "loc_solv": loc_solv_table(L),
        "upper_solv": upper_solv_table(L),
    }


def closure_comparison(L: MulLattice) -> TheoremReport:
    """Compare the five closures elementwise.

    Always asserted: ``solv <= upper_solv``, ``upper_solv <= radical``,
    ``upper_solv <= sp`` and ``loc_solv <= radical`` (the last needs an
    algebraic lattice, which every finite lattice is). Equalities are asserted
    only where the lattice meets their hypotheses:

    * algebraic, weakly monotone, weak Kaplansky: ``loc_solv == solv``;
    * distributive, algebraic: ``radical == loc_solv`` and ``sp == radical``;
    * distributive, algebraic, weak Kaplansky: ``upper_solv == solv == loc_solv == radical``.

    The witness is the offending element; ``detail`` names the relation.
    """
    prof = condition_profile(L)
    t = closure_table(L)
    le = L.order.le
    rules = [
        ("solv<=upper_solv", True, lambda y: le[t["solv"][y]][t["upper_solv"][y]]),
        ("upper_solv<=radical", True, lambda y: le[t["upper_solv"][y]][t["radical"][y]]),
        ("upper_solv<=sp", True, lambda y: le[t["upper_solv"][y]][t["sp"][y]]),
        ("loc_solv<=radical", prof.algebraic_lattice, lambda y: le[t["loc_solv"][y]][t["radical"][y]]),
        (
            "loc_solv==solv",
            prof.algebraic_lattice and prof.weakly_monotone and prof.weak_kaplansky,
            lambda y: t["loc_solv"][y] == t["solv"][y],
        ),
        (
            "radical==loc_solv",
            prof.distributive and prof.algebraic_lattice,
            lambda y: t["radical"][y] == t["loc_solv"][y],
        ),
        ("sp==radical", prof.distributive and prof.algebraic_lattice, lambda y: t["sp"][y] == t["radical"][y]),
        (
            "upper_solv==solv==loc_solv==radical",
            prof.distributive and prof.algebraic_lattice and prof.weak_kaplansky,
            lambda y: t["upper_solv"][y] == t["solv"][y] == t["loc_solv"][y] == t["radical"][y],
        ),
    ]
    applied = []
    for name, applies, holds in rules:
        if not applies:
            continue
        applied.append(name)
        for y in range(L.n):
            if not holds(y):
                return check("closure_comparison", (y,), detail=name)
    return check("closure_comparison", detail=", ".join(applied))


def step_preserves_directed_joins(L: MulLattice):
    """Witness subset where the tower step fails to commute with a directed join, or None."""
    step = _step_table(L)
    order = L.order
    for D in directed_subsets(order):
        if step[order.join_all(D)] != order.join_all(step[d] for d in D):
            return D
    return None
