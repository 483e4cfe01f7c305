"""Prime elements, the Zariski spectrum, radicals and semiprime closure."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import NotAFrame
from .lattice import MulLattice, _unchecked
from .order import LatticeOrder, compact_elements, is_algebraic_lattice, is_compact_lattice, validate_order
from .reports import TheoremReport, check
from .topology import FiniteSpace, topology_report


def _prime_flags(L: MulLattice) -> list[bool]:
    def compute():
        leq, M = L.order.leq, L.mult
        below = leq[M]  # [x, y, p]: xy <= p
        either = leq[:, None, :] | leq[None, :, :]  # x <= p or y <= p
        ok = ~(below & ~either).any(axis=(0, 1))
        ok[L.top] = False
        return ok.tolist()

    return L.memo("prime_flags", compute)


def is_prime(L: MulLattice, p: int) -> bool:
    """``p != 1`` and ``xy <= p`` forces ``x <= p`` or ``y <= p``."""
    return _prime_flags(L)[p]


def prime_witness(L: MulLattice, p: int):
    """A pair ``(x, y)`` with ``xy <= p`` but neither factor below ``p``, or None."""
    le, mul = L.order.le, L.mul
    for x in range(L.n):
        for y in range(L.n):
            if le[mul[x][y]][p] and not le[x][p] and not le[y][p]:
                return (x, y)
    return None


def primes(L: MulLattice) -> tuple[int, ...]:
    return tuple(p for p, ok in enumerate(_prime_flags(L)) if ok)


def is_locally_prime(L: MulLattice, p: int) -> bool:
    """The primality test restricted to compact factors."""
    if p == L.top:
        return False
    le, mul = L.order.le, L.mul
    comp = compact_elements(L.order)
    return all(not le[mul[a][b]][p] or le[a][p] or le[b][p] for a in comp for b in comp)


def V(L: MulLattice, x: int) -> frozenset[int]:
    le = L.order.le
    return frozenset(p for p in primes(L) if le[x][p])


@dataclass(frozen=True, eq=False)
class SpecSpace(FiniteSpace):
    """The prime spectrum: points are prime elements of ``lattice`` and the
    closed sets are the ``V(x)``. The specialization order is the order of L."""

    lattice: MulLattice = None
    v_map: tuple = ()

    def V(self, x: int) -> frozenset[int]:
        return self.v_map[x]


def spec(L: MulLattice) -> SpecSpace:
    def compute():
        pts = primes(L)
        vmap = tuple(V(L, x) for x in range(L.n))
        return SpecSpace(pts, frozenset(vmap), lattice=L, v_map=vmap)

    return L.memo("spec", compute)


def radical_table(L: MulLattice) -> list[int]:
    def compute():
        le, order = L.order.le, L.order
        ps = primes(L)
        return [order.meet_all(p for p in ps if le[x][p]) for x in range(L.n)]

    return L.memo("radical", compute)


def radical(L: MulLattice, x: int) -> int:
    """Meet of the primes above ``x``; the empty meet is the top."""
    return radical_table(L)[x]


def radical_elements(L: MulLattice) -> tuple[int, ...]:
    return tuple(sorted(set(radical_table(L))))


def has_enough_primes(L: MulLattice) -> bool:
    le = L.order.le
    ps = primes(L)
    return all(any(le[x][p] for p in ps) for x in range(L.n) if x != L.top)


@dataclass(frozen=True, eq=False)
class RadicalFrame:
    """The radical elements of L as a lattice in their own right.

    ``carrier[i]`` is the element of L at index ``i`` of ``order``; the same
    indexing is used by ``as_mul_lattice``, whose multiplication is the meet.
    """

    lattice: MulLattice
    carrier: tuple[int, ...]
    order: LatticeOrder
    as_mul_lattice: MulLattice

    def index(self, x: int) -> int:
        return self.carrier.index(x)

    def is_compact(self) -> bool:
        return is_compact_lattice(self.order)

    def is_algebraic(self) -> bool:
        return is_algebraic_lattice(self.order)

    def compacts_closed_under_meet(self) -> bool:
        comp = compact_elements(self.order)
        m = self.order.meet_t
        return all(m[a][b] in comp for a in comp for b in comp)


def radical_frame(L: MulLattice) -> RadicalFrame:
    """Package the radical elements as a frame and certify it.

    Checks that binary meets distribute over binary joins and that
    ``r -> complement of V(r)`` is an order isomorphism onto the open sets of
    the spectrum. A failure raises :class:`NotAFrame`; it would mean a bug.
    """

    def compute():
        carrier = radical_elements(L)
        le = L.order.le
        order = validate_order([[le[a][b] for b in carrier] for a in carrier])
        frame = _unchecked(order, order.meet, tuple(L.label(c) for c in carrier))
        k = order.n
        m, j = order.meet_t, order.join_t
        for a in range(k):
            for b in range(k):
                for c in range(k):
                    if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                        raise NotAFrame((carrier[a], carrier[b], carrier[c]))
        S = spec(L)
        pts = frozenset(S.points)
        opens = [pts - S.V(r) for r in carrier]
        if set(opens) != set(S.open_sets) or len(set(opens)) != k:
            raise NotAFrame(carrier)
        for a in range(k):
            for b in range(k):
                if order.le[a][b] != (opens[a] <= opens[b]):
                    raise NotAFrame((carrier[a], carrier[b]))
        return RadicalFrame(L, carrier, order, frame)

    return L.memo("radical_frame", compute)


def _semiprime_flags(L: MulLattice) -> list[bool]:
    def compute():
        leq = L.order.leq
        sq = np.diagonal(L.mult)
        # s semiprime: x^2 <= s implies x <= s, for all x
        return (~(leq[sq, :] & ~leq)).all(axis=0).tolist()

    return L.memo("semiprime_flags", compute)


def is_semiprime(L: MulLattice, s: int) -> bool:
    return _semiprime_flags(L)[s]


def sp_table(L: MulLattice) -> list[int]:
    def compute():
        le, order = L.order.le, L.order
        semis = [s for s, ok in enumerate(_semiprime_flags(L)) if ok]
        return [order.meet_all(s for s in semis if le[x][s]) for x in range(L.n)]

    return L.memo("sp", compute)


def sp(L: MulLattice, x: int) -> int:
    """Smallest semiprime element above ``x`` (meet of all semiprimes above it)."""
    return sp_table(L)[x]


def sp_iterated(L: MulLattice, x: int) -> int:
    """The same closure reached from below: keep adjoining every ``y`` with
    ``y^2 <= s`` until nothing changes."""
    le, sq, join = L.order.le, L.squares, L.order.join_t
    s = x
    while True:
        nxt = s
        for y in range(L.n):
            if le[sq[y]][s]:
                nxt = join[nxt][y]
        if nxt == s:
            return s
        s = nxt


def primes_between_check(L: MulLattice) -> TheoremReport:
    """For every prime ``p`` and all ``x, y`` the four conditions

    (a) ``xy <= p <= x ∧ y``; (b) (``x <= p`` or ``y <= p``), ``p <= x`` and ``p <= y``;
    (c) ``x = p <= y`` or ``y = p <= x``; (d) ``p = x ∧ y``

    are either all true or all false. The witness is ``(p, x, y)``.
    """
    le, mul, meet = L.order.le, L.mul, L.order.meet_t
    for p in primes(L):
        for x in range(L.n):
            for y in range(L.n):
                a = le[mul[x][y]][p] and le[p][meet[x][y]]
                b = (le[x][p] or le[y][p]) and le[p][x] and le[p][y]
                c = (x == p and le[p][y]) or (y == p and le[p][x])
                d = p == meet[x][y]
                if len({a, b, c, d}) != 1:
                    return check("primes_between", (p, x, y))
    return check("primes_between")


def spec_dot(S: SpecSpace) -> str:
    """Graphviz source for the specialization order of the spectrum (covering edges)."""
    L = S.lattice
    le = L.order.le
    pts = list(S.points)
    lines = ["digraph spec {", "  rankdir=BT;"]
    for p in pts:
        lines.append(f'  "{p}" [label="{L.label(p)}"];')
    for p, q in ((p, q) for p in pts for q in pts if p != q and le[p][q]):
        if not any(r not in (p, q) and le[p][r] and le[r][q] for r in pts):
            lines.append(f'  "{p}" -> "{q}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def spectral_consistency_report(L: MulLattice) -> TheoremReport:
    """Spectrality of Spec(L) agrees with the three conditions on the radical frame:
    compact, algebraic, compact elements closed under meets."""
    rf = radical_frame(L)
    lhs = topology_report(spec(L)).spectral
    rhs = rf.is_compact() and rf.is_algebraic() and rf.compacts_closed_under_meet()
    return check("spectral_consistency", None if lhs == rhs else (int(lhs), int(rhs)))


# join identity is checked over every subset only up to this size, pairs beyond
JOIN_SUBSET_LIMIT = 12


def v_identity_witness(L: MulLattice):
    """First violation of ``V(1)=∅``, ``V(xy)=V(x)∪V(y)``, ``V(join S)=⋂V(s)`` or
    ``√x ∧ √y = √(xy)``, as ``(identity, elements)``; None if all hold."""
    S = spec(L)
    if S.V(L.top):
        return ("V(1)", (L.top,))
    mul, meet = L.mul, L.order.meet_t
    rad = radical_table(L)
    n = L.n
    for x in range(n):
        for y in range(n):
            if S.V(mul[x][y]) != S.V(x) | S.V(y):
                return ("V(xy)", (x, y))
            if meet[rad[x]][rad[y]] != rad[mul[x][y]]:
                return ("rad(xy)", (x, y))
    pts = frozenset(S.points)
    sizes = range(n + 1) if n <= JOIN_SUBSET_LIMIT else range(3)
    for r in sizes:
        for sub in combinations(range(n), r):
            inter = pts.intersection(*(S.V(s) for s in sub))
            if S.V(L.order.join_all(sub)) != inter:
                return ("V(join)", sub)
    return None
