"""Adjunctions between multiplicative lattices and the Spec functor on them.

An adjunction ``(f, u): X -> Y`` is stored by its left adjoint ``f`` alone; the
right adjoint ``u(y) = join{x : f(x) <= y}`` is always derived.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NotCompatible, NotJoinPreserving
from .lattice import MulLattice, _unchecked, condition_profile
from .order import LatticeOrder
from .spectra import primes, radical_frame, radical_table, spec


@dataclass(frozen=True, eq=False)
class Adjunction:
    source: MulLattice
    target: MulLattice
    f: tuple[int, ...]
    u: tuple[int, ...]

    @cached_property
    def compatible(self) -> bool:
        """``f(1) = 1`` and ``f(x)f(x') <= f(xx')``."""
        X, Y, f = self.source, self.target, self.f
        if f[X.top] != Y.top:
            return False
        le, xm, ym = Y.order.le, X.mul, Y.mul
        return all(le[ym[f[a]][f[b]]][f[xm[a][b]]] for a in range(X.n) for b in range(X.n))

    @cached_property
    def strictly_compatible(self) -> bool:
        X, Y, f = self.source, self.target, self.f
        if f[X.top] != Y.top:
            return False
        xm, ym = X.mul, Y.mul
        return all(ym[f[a]][f[b]] == f[xm[a][b]] for a in range(X.n) for b in range(X.n))

    @cached_property
    def op_compatible(self) -> bool:
        """``f(xx') <= f(x)f(x')``."""
        X, Y, f = self.source, self.target, self.f
        le, xm, ym = Y.order.le, X.mul, Y.mul
        return all(le[f[xm[a][b]]][ym[f[a]][f[b]]] for a in range(X.n) for b in range(X.n))

    def right_op_compatible(self) -> bool:
        """``u(y)u(y') <= u(yy')``, the right-adjoint form of op-compatibility."""
        X, Y, u = self.source, self.target, self.u
        le, xm, ym = X.order.le, X.mul, Y.mul
        return all(le[xm[u[a]][u[b]]][u[ym[a][b]]] for a in range(Y.n) for b in range(Y.n))

    def flags(self) -> dict[str, bool]:
        return {
            "compatible": self.compatible,
            "strictly_compatible": self.strictly_compatible,
            "op_compatible": self.op_compatible,
        }

    def then(self, other: "Adjunction") -> "Adjunction":
        """Composite ``self`` followed by ``other``; flags are recomputed, not inherited."""
        if other.source != self.target:
            raise ValueError("adjunctions are not composable")
        return mk_adjunction(self.source, other.target, [other.f[y] for y in self.f])


def join_preservation_witness(X: LatticeOrder, Y: LatticeOrder, f) -> tuple | None:
    """A subset of X whose join ``f`` fails to preserve: ``()`` for the empty join,
    a pair otherwise. Binary joins plus the empty join cover every finite join."""
    if f[X.bottom] != Y.bottom:
        return ()
    xj, yj = X.join_t, Y.join_t
    for a in range(X.n):
        for b in range(a + 1, X.n):
            if f[xj[a][b]] != yj[f[a]][f[b]]:
                return (a, b)
    return None


def mk_adjunction(X: MulLattice, Y: MulLattice, f) -> Adjunction:
    """Build the adjunction with left adjoint ``f``.

    Raises :class:`NotJoinPreserving` with the offending subset.
    """
    f = tuple(int(v) for v in f)
    if len(f) != X.n or any(not 0 <= v < Y.n for v in f):
        raise ValueError("f must map every element of the source into the target")
    w = join_preservation_witness(X.order, Y.order, f)
    if w is not None:
        raise NotJoinPreserving(w)
    xle, yle = X.order.le, Y.order.le
    u = tuple(X.order.join_all(x for x in range(X.n) if yle[f[x]][y]) for y in range(Y.n))
    for x in range(X.n):
        for y in range(Y.n):
            if yle[f[x]][y] != xle[x][u[y]]:
                raise NotJoinPreserving((x,))
    return Adjunction(X, Y, f, u)


def identity_adjunction(L: MulLattice) -> Adjunction:
    return mk_adjunction(L, L, range(L.n))


@dataclass(frozen=True)
class SpecMap:
    """``p -> u(p)`` from Spec(target) to Spec(source), with its certificates."""

    mapping: dict
    primes_preserved: bool
    preimage_identity: bool


def spec_map(adj: Adjunction) -> SpecMap:
    """Certify that ``u`` carries primes of the target to primes of the source and
    that the preimage of ``V(x)`` is ``V(f(x))`` for every ``x``."""
    if not adj.compatible:
        raise NotCompatible("Spec is only functorial on compatible adjunctions")
    X, Y = adj.source, adj.target
    SX, SY = spec(X), spec(Y)
    src_primes = set(SX.points)
    mapping = {p: adj.u[p] for p in SY.points}
    preserved = all(q in src_primes and q != X.top for q in mapping.values())
    preimage = all(
        frozenset(p for p in SY.points if mapping[p] in SX.V(x)) == SY.V(adj.f[x])
        for x in range(X.n)
    )
    return SpecMap(mapping, preserved, preimage)


def radical_adjunction(L: MulLattice) -> Adjunction:
    """``(rho, iota)``: L onto its radical frame, ``rho(x) = sqrt(x)``."""
    rf = radical_frame(L)
    rad = radical_table(L)
    return mk_adjunction(L, rf.as_mul_lattice, [rf.index(rad[x]) for x in range(L.n)])


@dataclass(frozen=True)
class Commutativization:
    lattice: MulLattice
    to_original: Adjunction  # Com(L) -> L, compatible
    from_original: Adjunction  # L -> Com(L), op-compatible
    same_primes: bool | None  # checked only when L is monotone


def commutativize(L: MulLattice) -> Commutativization:
    """Same lattice with ``x * y = xy ∨ yx``, plus the two identity adjunctions."""
    M, J = L.mult, L.order.join
    C = _unchecked(L.order, J[M, M.T], L.labels)
    ident = range(L.n)
    down = mk_adjunction(C, L, ident)
    up = mk_adjunction(L, C, ident)
    same = set(primes(L)) == set(primes(C)) if condition_profile(L).monotone else None
    return Commutativization(C, down, up, same)


def random_join_preserving(X: LatticeOrder, Y: LatticeOrder, rng: np.random.Generator,
                           *, unital: bool = True, tries: int = 2000):
    """Random join-preserving ``f: X -> Y`` (with ``f(1) = 1`` when ``unital``), or None.

    Values are drawn on the join-irreducible elements of X (monotonically) and
    extended by joins; candidates that fail to preserve binary joins are
    rejected.
    """
    le = X.le
    lower_covers = {x: [a for a, b in X.covers if b == x] for x in range(X.n)}
    irreducible = [x for x in range(X.n) if len(lower_covers[x]) == 1]
    irreducible.sort(key=lambda x: sum(le[z][x] for z in range(X.n)))
    for _ in range(tries):
        val = {}
        for x in irreducible:
            floor = Y.join_all(v for z, v in val.items() if le[z][x])
            choices = Y.up_set(floor)
            val[x] = choices[rng.integers(len(choices))]
        f = [Y.join_all(v for z, v in val.items() if le[z][x]) for x in range(X.n)]
        if unital and f[X.top] != Y.top:
            continue
        if join_preservation_witness(X, Y, f) is None:
            return f
    return None


def random_compatible_adjunction(X: MulLattice, target_order: LatticeOrder,
                                 rng: np.random.Generator) -> Adjunction | None:
    """A random compatible adjunction out of ``X`` into a lattice on ``target_order``.

    After drawing a unital join-preserving ``f``, the target multiplication is
    drawn at random below the largest value compatibility allows: for ``y, y'``
    in the image, ``yy'`` must sit below ``f(xx')`` for every ``x, x'`` with
    ``f(x) = y`` and ``f(x') = y'``; elsewhere only ``yy' <= y ∧ y'`` applies.
    """
    f = random_join_preserving(X.order, target_order, rng)
    if f is None:
        return None
    Y = target_order
    bound = [row[:] for row in Y.meet_t]
    xm = X.mul
    for a in range(X.n):
        for b in range(X.n):
            ya, yb = f[a], f[b]
            bound[ya][yb] = Y.meet_t[bound[ya][yb]][f[xm[a][b]]]
    M = np.empty((Y.n, Y.n), dtype=np.int64)
    for y in range(Y.n):
        for z in range(Y.n):
            down = Y.down_set(bound[y][z])
            M[y, z] = down[rng.integers(len(down))]
    adj = mk_adjunction(X, _unchecked(Y, M), f)
    assert adj.compatible
    return adj
