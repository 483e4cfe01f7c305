"""Complete multiplicative lattices and their side conditions."""
from __future__ import annotations

from dataclasses import dataclass, field, fields
from functools import cached_property

import numpy as np

from .errors import AxiomViolation, LatticeError
from .order import (
    LatticeOrder,
    _frozen,
    compact_elements,
    is_algebraic_lattice,
    is_compact_lattice,
)


@dataclass(frozen=True, eq=False)
class MulLattice:
    """A finite lattice with a multiplication table satisfying ``xy <= x ∧ y``.

    Build through :func:`new_mul_lattice`, which validates the axiom.
    ``labels`` is optional display metadata and takes no part in equality.
    """

    order: LatticeOrder
    mult: np.ndarray
    labels: tuple[str, ...] | None = None
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.order.n

    @property
    def top(self) -> int:
        return self.order.top

    @property
    def bottom(self) -> int:
        return self.order.bottom

    @cached_property
    def mul(self) -> list[list[int]]:
        return self.mult.tolist()

    @cached_property
    def squares(self) -> list[int]:
        return [self.mul[x][x] for x in range(self.n)]

    def le(self, x: int, y: int) -> bool:
        return self.order.le[x][y]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def memo(self, key, compute):
        """Compute-once cache for derived tables (the lattice itself never changes)."""
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = compute()
            return value

    def __eq__(self, other):
        if not isinstance(other, MulLattice):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.mult, other.mult)

    def __hash__(self):
        return hash((self.order.key, self.mult.tobytes()))

    def __repr__(self):
        return f"MulLattice(n={self.n}, mult={self.mul})"


def new_mul_lattice(order: LatticeOrder, mult, labels=None) -> MulLattice:
    """Attach a multiplication table to ``order`` after checking ``xy <= x ∧ y``."""
    M = np.asarray(mult, dtype=np.int64)
    n = order.n
    if M.shape != (n, n):
        raise LatticeError(f"multiplication table has shape {M.shape}, expected {(n, n)}")
    if ((M < 0) | (M >= n)).any():
        x, y = (int(v) for v in np.argwhere((M < 0) | (M >= n))[0])
        raise AxiomViolation(x, y)
    ok = order.leq[M, order.meet]
    if not ok.all():
        x, y = (int(v) for v in np.argwhere(~ok)[0])
        raise AxiomViolation(x, y)
    return MulLattice(order, _frozen(M, np.int64), tuple(labels) if labels else None)


def _unchecked(order: LatticeOrder, mult, labels=None) -> MulLattice:
    # for builders whose tables satisfy the axiom by construction
    return MulLattice(order, _frozen(mult, np.int64), labels)


@dataclass(frozen=True)
class ConditionProfile:
    commutative: bool
    monotone: bool
    weakly_monotone: bool
    distributive: bool
    unit_idempotent: bool
    unit_neutral: bool
    is_frame: bool
    kaplansky: bool
    weak_kaplansky: bool
    compact_lattice: bool
    algebraic_lattice: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def satisfies(self, where: dict[str, bool] | None) -> bool:
        return not where or all(getattr(self, k) == v for k, v in where.items())


PROFILE_FLAGS = tuple(f.name for f in fields(ConditionProfile))


def is_monotone(L: MulLattice) -> bool:
    """``x <= y`` and ``x' <= y'`` imply ``xx' <= yy'``.

    Equivalent to monotonicity in each argument separately, which is what is tested.
    """
    leq, M = L.order.leq, L.mult
    # [x, y, z]: x<=y must give xz <= yz and zx <= zy
    left = leq[M[:, None, :], M[None, :, :]]
    right = leq[M.T[:, None, :], M.T[None, :, :]]
    hyp = leq[:, :, None]
    return bool((~hyp | (left & right)).all())


def is_weakly_monotone(L: MulLattice) -> bool:
    leq = L.order.leq
    sq = np.diagonal(L.mult)
    return bool((~leq | leq[sq[:, None], sq[None, :]]).all())


def is_distributive(L: MulLattice) -> bool:
    """Multiplication distributes over binary joins on both sides."""
    return distributivity_witness(L) is None


def distributivity_witness(L: MulLattice):
    J, M = L.order.join, L.mult
    n = L.n
    x = np.arange(n)[:, None, None]
    lhs_l = M[x, J[None, :, :]]                    # x(y∨z)
    rhs_l = J[M[:, :, None], M[:, None, :]]         # xy ∨ xz
    lhs_r = M[J[:, :, None], np.arange(n)[None, None, :]]  # (x∨y)z
    rhs_r = J[M[:, None, :], M[None, :, :]]         # xz ∨ yz
    for lhs, rhs in ((lhs_l, rhs_l), (lhs_r, rhs_r)):
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return tuple(int(v) for v in bad[0])
    return None


def condition_profile(L: MulLattice) -> ConditionProfile:
    def compute():
        order, M = L.order, L.mult
        top = L.top
        comp = compact_elements(order)
        mul = L.mul
        return ConditionProfile(
            commutative=bool((M == M.T).all()),
            monotone=is_monotone(L),
            weakly_monotone=is_weakly_monotone(L),
            distributive=is_distributive(L),
            unit_idempotent=mul[top][top] == top,
            unit_neutral=all(mul[top][x] == x == mul[x][top] for x in range(L.n)),
            is_frame=bool((M == order.meet).all()),
            kaplansky=all(mul[a][b] in comp for a in comp for b in comp),
            weak_kaplansky=all(mul[a][a] in comp for a in comp),
            compact_lattice=is_compact_lattice(order),
            algebraic_lattice=is_algebraic_lattice(order),
        )

    return L.memo("profile", compute)
