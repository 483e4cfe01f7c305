"""Finite topological spaces presented by their closed sets."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .order import compact_elements, subset_order


@dataclass(frozen=True, eq=False)
class FiniteSpace:
    """A finite space given by its points and the family of all closed sets.

    The family must contain the empty set and the whole space and be closed
    under binary unions and intersections.
    """

    points: tuple
    closed_sets: frozenset

    def __post_init__(self):
        pts = frozenset(self.points)
        fam = frozenset(frozenset(c) for c in self.closed_sets)
        object.__setattr__(self, "closed_sets", fam)
        if frozenset() not in fam or pts not in fam:
            raise ValueError("closed sets must include the empty set and the whole space")
        for a, b in combinations(fam, 2):
            if a | b not in fam or a & b not in fam:
                raise ValueError(f"closed sets not closed under union/intersection: {set(a)}, {set(b)}")
        if any(not c <= pts for c in fam):
            raise ValueError("closed set mentions a point outside the space")

    @cached_property
    def open_sets(self) -> frozenset:
        pts = frozenset(self.points)
        return frozenset(pts - c for c in self.closed_sets)

    def closure(self, subset) -> frozenset:
        subset = frozenset(subset)
        out = frozenset(self.points)
        for c in self.closed_sets:
            if subset <= c:
                out &= c
        return out

    def is_irreducible(self, closed) -> bool:
        """Nonempty and not the union of two proper closed subsets."""
        closed = frozenset(closed)
        if not closed:
            return False
        proper = [c for c in self.closed_sets if c < closed]
        return not any(a | b == closed for a in proper for b in proper)


@dataclass(frozen=True)
class TopologyReport:
    t0: bool
    sober: bool
    compact: bool
    spectral: bool
    irreducible_closed: list
    generic_points: dict
    compact_opens: list

    def to_dict(self) -> dict:
        return {
            "t0": self.t0,
            "sober": self.sober,
            "compact": self.compact,
            "spectral": self.spectral,
            "irreducible_closed": [sorted(c) for c in self.irreducible_closed],
            "generic_points": [[sorted(c), sorted(ps)] for c, ps in self.generic_points.items()],
            "compact_opens": [sorted(u) for u in self.compact_opens],
        }


def _ordered(family):
    return sorted(family, key=lambda s: (len(s), sorted(s)))


def topology_report(space: FiniteSpace) -> TopologyReport:
    """Decide T0, sobriety, compactness and spectrality of a finite space.

    Compact opens come from the directed-cover definition applied to the lattice
    of open sets, not from finiteness, and spectrality uses the topological
    definition: compact, sober, compact opens forming a basis closed under
    binary intersection.
    """
    pts = list(space.points)
    closure_of = {p: space.closure({p}) for p in pts}
    t0 = all(closure_of[p] != closure_of[q] for p, q in combinations(pts, 2))

    irreducible = [c for c in _ordered(space.closed_sets) if space.is_irreducible(c)]
    generic = {c: frozenset(p for p in pts if closure_of[p] == c) for c in irreducible}
    sober = t0 and all(len(ps) == 1 for ps in generic.values())

    opens = _ordered(space.open_sets)
    order = subset_order(opens)
    comp_idx = compact_elements(order)
    compact_opens = [opens[i] for i in sorted(comp_idx)]
    whole = frozenset(pts)
    compact = whole in compact_opens
    comp_set = set(compact_opens)
    basis = all(frozenset().union(*[k for k in compact_opens if k <= u]) == u for u in opens)
    meets = all(a & b in comp_set for a, b in combinations(compact_opens, 2))
    spectral = compact and sober and basis and meets
    return TopologyReport(t0, sober, compact, spectral, irreducible, generic, compact_opens)
