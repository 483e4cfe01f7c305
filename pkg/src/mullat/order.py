"""Finite lattice orders.

Elements are the integers ``0 .. n-1``. A :class:`LatticeOrder` carries the
order relation together with fully tabulated binary meets and joins; finite
size plus binary bounds plus a bottom and a top is all that completeness needs,
so arbitrary meets and joins are folds over the tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator

import numpy as np

from .errors import NotALattice, NotAPartialOrder

# Above this size directed subsets are no longer enumerated; see compact_elements.
DIRECTED_SUBSET_LIMIT = 12


def _frozen(a, dtype):
    a = np.array(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class LatticeOrder:
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return self.leq.shape[0]

    def __eq__(self, other):
        if not isinstance(other, LatticeOrder):
            return NotImplemented
        return np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash(self.key)

    @cached_property
    def key(self) -> bytes:
        return np.packbits(self.leq).tobytes() + bytes([self.n % 256])

    @cached_property
    def le(self) -> list[list[bool]]:
        """Plain nested-list copy of ``leq`` for fast scalar lookups."""
        return self.leq.tolist()

    @cached_property
    def meet_t(self) -> list[list[int]]:
        return self.meet.tolist()

    @cached_property
    def join_t(self) -> list[list[int]]:
        return self.join.tolist()

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << j for j in range(self.n) if self.le[i][j]) for i in range(self.n))

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << j for j in range(self.n) if self.le[j][i]) for i in range(self.n))

    def down_set(self, x: int) -> list[int]:
        return [z for z in range(self.n) if self.le[z][x]]

    def up_set(self, x: int) -> list[int]:
        return [z for z in range(self.n) if self.le[x][z]]

    def meet_all(self, xs: Iterable[int]) -> int:
        """Meet of an arbitrary family; the empty meet is the top."""
        m = self.meet_t
        return reduce(lambda a, b: m[a][b], xs, self.top)

    def join_all(self, xs: Iterable[int]) -> int:
        """Join of an arbitrary family; the empty join is the bottom."""
        j = self.join_t
        return reduce(lambda a, b: j[a][b], xs, self.bottom)

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        le, n = self.le, self.n
        out = []
        for x in range(n):
            for y in range(n):
                if x == y or not le[x][y]:
                    continue
                if not any(z != x and z != y and le[x][z] and le[z][y] for z in range(n)):
                    out.append((x, y))
        return out

    def is_distributive(self) -> tuple[int, int, int] | None:
        """Return a witness triple if the lattice is not distributive, else None."""
        n, m, j = self.n, self.meet, self.join
        lhs = m[np.arange(n)[:, None, None], j[None, :, :]]
        rhs = j[m[:, :, None], m[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        return tuple(int(v) for v in bad[0]) if len(bad) else None


def validate_order(leq) -> LatticeOrder:
    """Check that ``leq`` is a lattice order and tabulate meets and joins.

    Raises :class:`NotAPartialOrder` or :class:`NotALattice` with a witness.
    """
    R = np.asarray(leq, dtype=bool)
    if R.ndim != 2 or R.shape[0] != R.shape[1] or R.shape[0] < 1:
        raise NotAPartialOrder("a square relation with n >= 1", (R.shape,))
    n = R.shape[0]
    for x in range(n):
        if not R[x, x]:
            raise NotAPartialOrder("reflexive", (x, x))
    sym = np.argwhere(R & R.T & ~np.eye(n, dtype=bool))
    if len(sym):
        raise NotAPartialOrder("antisymmetric", tuple(int(v) for v in sym[0]))
    # (R @ R)[x, z] counts y with x<=y<=z
    trans = np.argwhere((R.astype(np.int64) @ R.astype(np.int64) > 0) & ~R)
    if len(trans):
        x, z = (int(v) for v in trans[0])
        y = next(y for y in range(n) if R[x, y] and R[y, z])
        raise NotAPartialOrder("transitive", (x, y, z))

    meet = _bound_table(R, "meet")
    join = _bound_table(R.T, "join")
    bottom = top = 0
    for x in range(1, n):
        bottom = int(meet[bottom, x])
        top = int(join[top, x])
    return LatticeOrder(_frozen(R, bool), _frozen(meet, np.int64), _frozen(join, np.int64), bottom, top)


def _bound_table(R: np.ndarray, kind: str) -> np.ndarray:
    # R[h, x]: h below x. Lower bounds of (x, y) are h with R[h, x] & R[h, y];
    # the greatest one is a lower bound g with every lower bound h <= g.
    n = R.shape[0]
    lower = R.T[:, None, :] & R.T[None, :, :]  # [x, y, h]
    not_le = (~R).astype(np.int64)
    exceeds = (lower.reshape(n * n, n).astype(np.int64) @ not_le).reshape(n, n, n) > 0
    greatest = lower & ~exceeds
    counts = greatest.sum(axis=2)
    bad = np.argwhere(counts != 1)
    if len(bad):
        raise NotALattice(kind, tuple(int(v) for v in bad[0]))
    return greatest.argmax(axis=2)


def _directed_masks(order: LatticeOrder) -> Iterator[int]:
    """Bitmasks of the nonempty directed subsets of a small lattice."""
    up = order.up_masks
    n = order.n
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if all(up[a] & up[b] & mask for k, a in enumerate(members) for b in members[k + 1:]):
            yield mask


def _mask_join(order: LatticeOrder, mask: int) -> int:
    return order.join_all(i for i in range(order.n) if mask >> i & 1)


def directed_subsets(order: LatticeOrder) -> tuple[tuple[int, ...], ...]:
    cached = order.__dict__.get("_directed")
    if cached is None:
        cached = tuple(tuple(i for i in range(order.n) if m >> i & 1) for m in _directed_masks(order))
        order.__dict__["_directed"] = cached
    return cached


def compact_elements(order: LatticeOrder) -> frozenset[int]:
    """Elements ``x`` such that ``x <= join(D)`` forces ``x <= d`` for some ``d`` in
    every directed ``D``.

    Small lattices are checked subset by subset. Past ``DIRECTED_SUBSET_LIMIT``
    elements the enumeration is replaced by the fact that a finite directed set
    contains its own join, which makes every element compact.
    """
    cached = order.__dict__.get("_compact")
    if cached is not None:
        return cached
    n = order.n
    if n > DIRECTED_SUBSET_LIMIT:
        result = frozenset(range(n))
    else:
        le = order.le
        up = order.up_masks
        compact = set(range(n))
        for mask in _directed_masks(order):
            top = _mask_join(order, mask)
            for x in list(compact):
                if le[x][top] and not (up[x] & mask):
                    compact.discard(x)
        result = frozenset(compact)
    order.__dict__["_compact"] = result
    return result


def maximal_elements(order: LatticeOrder) -> frozenset[int]:
    """Elements ``m != 1`` such that ``m < x`` implies ``x = 1``."""
    le, top = order.le, order.top
    return frozenset(
        m for m in range(order.n)
        if m != top and all(x == top or x == m or not le[m][x] for x in range(order.n))
    )


def join_inaccessible_elements(order: LatticeOrder) -> frozenset[int]:
    """Elements ``m`` equal to the join of a directed set only if they belong to it."""
    n = order.n
    if n > DIRECTED_SUBSET_LIMIT:
        return frozenset(range(n))
    bad = set()
    for mask in _directed_masks(order):
        j = _mask_join(order, mask)
        if not mask >> j & 1:
            bad.add(j)
    return frozenset(m for m in range(n) if m not in bad)


def is_compact_lattice(order: LatticeOrder) -> bool:
    return order.top in compact_elements(order)


def is_algebraic_lattice(order: LatticeOrder) -> bool:
    """Every element is the join of the compact elements below it."""
    comp = compact_elements(order)
    le = order.le
    return all(order.join_all(c for c in comp if le[c][x]) == x for x in range(order.n))


def chain_order(n: int) -> LatticeOrder:
    """The chain ``0 < 1 < ... < n-1``."""
    return validate_order([[i <= j for j in range(n)] for i in range(n)])


def subset_order(sets) -> LatticeOrder:
    """Inclusion order on a family of sets (which must form a lattice)."""
    sets = [frozenset(s) for s in sets]
    return validate_order([[a <= b for b in sets] for a in sets])
