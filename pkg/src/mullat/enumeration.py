"""Exhaustive and random generation of small multiplicative lattices.

Lattice orders are listed once per isomorphism class; multiplication tables are
not reduced modulo automorphisms, so symmetric lattices produce duplicate
structures. That only costs time in the verification sweeps.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

import numpy as np

from .errors import CapExceeded, NotALattice
from .lattice import MulLattice, _unchecked, condition_profile
from .order import LatticeOrder, validate_order

EXHAUSTIVE_CAP = 5
ORDER_CAP = 7


def _canonical_form(R: np.ndarray) -> tuple[bytes, tuple[int, ...]]:
    # smallest packed image over naturally labelled relabellings; bottom 0 and
    # top n-1 stay put, so only the middle elements are permuted
    n = R.shape[0]
    best = None
    for mid in permutations(range(1, n - 1)):
        perm = (0, *mid, n - 1)
        P = R[np.ix_(perm, perm)]
        if np.triu(P).sum() != P.sum():
            continue
        key = np.packbits(P).tobytes()
        if best is None or key < best[0]:
            best = (key, perm)
    return best


@lru_cache(maxsize=None)
def lattice_orders(n: int) -> tuple[LatticeOrder, ...]:
    """All lattice orders on ``n`` elements up to isomorphism, naturally labelled
    (``x <= y`` implies ``x <= y`` as integers, so 0 is the bottom and ``n-1`` the top).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > ORDER_CAP:
        raise CapExceeded(f"lattice orders are only enumerated up to n={ORDER_CAP}")
    if n == 1:
        return (validate_order([[True]]),)
    mid = list(range(1, n - 1))
    pairs = list(combinations(mid, 2))
    seen = {}
    for bits in product((False, True), repeat=len(pairs)):
        R = np.eye(n, dtype=bool)
        R[0, :] = True
        R[:, n - 1] = True
        for (a, b), on in zip(pairs, bits):
            R[a, b] = on
        # transitive closure check: the candidate must already be closed
        Ri = R.astype(np.int64)
        if ((Ri @ Ri > 0) & ~R).any():
            continue
        try:
            validate_order(R)
        except NotALattice:
            continue
        key, perm = _canonical_form(R)
        if key not in seen:
            seen[key] = R[np.ix_(perm, perm)]
    return tuple(validate_order(R) for _, R in sorted(seen.items()))


def mult_table_count(order: LatticeOrder) -> int:
    """Number of tables with ``xy <= x ∧ y``: the product of down-set sizes of the meets."""
    sizes = order.leq.sum(axis=0)
    return int(np.prod(sizes[order.meet].astype(object)))


def mult_tables(order: LatticeOrder) -> Iterator[np.ndarray]:
    n = order.n
    choices = [order.down_set(order.meet_t[x][y]) for x in range(n) for y in range(n)]
    for values in product(*choices):
        yield np.array(values, dtype=np.int64).reshape(n, n)


def enumerate_mul_lattices(
    max_n: int,
    where: dict[str, bool] | None = None,
    *,
    cap: int = EXHAUSTIVE_CAP,
) -> Iterator[MulLattice]:
    """Yield every multiplicative lattice with at most ``max_n`` elements.

    Orders come from :func:`lattice_orders` (sizes ascending, canonical order
    within a size) and tables in lexicographic order. ``where`` keeps only the
    lattices whose :class:`ConditionProfile` has the given flag values.
    """
    if max_n > cap:
        raise CapExceeded(f"exhaustive enumeration is capped at n={cap}")
    for n in range(1, max_n + 1):
        for order in lattice_orders(n):
            for M in mult_tables(order):
                L = _unchecked(order, M)
                if where and not condition_profile(L).satisfies(where):
                    continue
                yield L


def random_lattice_order(n: int, rng: np.random.Generator, *, max_tries: int = 10_000) -> LatticeOrder:
    """Sample an ``n``-element lattice as a family of sets closed under intersection.

    Random subsets of an ``n``-point ground set are added one at a time and the
    family is closed under intersections; subsets that would overshoot ``n``
    members are discarded. Every finite lattice arises this way (as the closed
    sets of a closure system), though not uniformly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ground = frozenset(range(n))
    for _ in range(max_tries):
        family = {ground}
        stalls = 0
        while len(family) < n and stalls < 50:
            cand = frozenset(np.flatnonzero(rng.random(n) < 0.5).tolist())
            closed = set(family)
            frontier = [cand]
            while frontier:
                s = frontier.pop()
                if s in closed:
                    continue
                closed.add(s)
                frontier.extend(s & t for t in list(closed))
            if len(closed) > n:
                stalls += 1
                continue
            family = closed
        if len(family) == n:
            sets = sorted(family, key=lambda s: (len(s), sorted(s)))
            return validate_order([[a <= b for b in sets] for a in sets])
    raise RuntimeError(f"could not sample a lattice of size {n}")


def random_mult(order: LatticeOrder, rng: np.random.Generator) -> np.ndarray:
    """Each product drawn uniformly from the down-set of the corresponding meet."""
    n = order.n
    M = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            down = order.down_set(order.meet_t[x][y])
            M[x, y] = down[rng.integers(len(down))]
    return M


def sample_mul_lattices(
    count: int,
    seed: int,
    sizes: Sequence[int] = (6, 7),
    where: dict[str, bool] | None = None,
) -> Iterator[MulLattice]:
    """Yield ``count`` random multiplicative lattices, cycling through ``sizes``.

    The stream is a pure function of ``(count, seed, sizes, where)``.
    """
    rng = np.random.default_rng(seed)
    produced = 0
    i = 0
    while produced < count:
        n = sizes[i % len(sizes)]
        i += 1
        order = random_lattice_order(n, rng)
        L = _unchecked(order, random_mult(order, rng))
        if where and not condition_profile(L).satisfies(where):
            continue
        produced += 1
        yield L
