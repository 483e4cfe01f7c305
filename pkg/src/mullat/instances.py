"""Multiplicative lattices built from finite algebras.

* rings: two-sided ideals, product ``x·y + y·x``;
* groups: normal subgroups, product = commutator subgroup ``[X, Y]``;
* commutative semirings and semigroups: ideals in the sense of a commutative
  multiplication acting on a variety (commutative monoids, resp. plain sets),
  product = substructure generated by the pointwise products.

Ideals are enumerated as the principal ideals closed under pairwise joins,
which reaches every ideal since each is the join of the principal ideals of
its elements.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd
from typing import Callable

import numpy as np

from .errors import AxiomFailure, CapExceeded, NotCommutative, NotDistributive
from .lattice import MulLattice, condition_profile, new_mul_lattice
from .order import LatticeOrder, chain_order, subset_order

GROUP_CAP = 128

KINDS = ("group", "ring", "semiring", "semigroup")


@dataclass(frozen=True, eq=False)
class AlgebraTable:
    """Operation tables of a finite algebra on ``0 .. n-1``.

    Groups use ``mul`` (identity ``one`` detected when omitted). Rings and
    semirings use ``add`` and ``mul`` with additive identity ``zero`` (detected
    when omitted). Semigroups use ``mul`` only.
    """

    kind: str
    n: int
    mul: tuple
    add: tuple | None = None
    zero: int | None = None
    one: int | None = None
    commutative: bool = False
    inverse: tuple | None = field(default=None, repr=False)


def _table(t, n, name):
    arr = np.asarray(t, dtype=np.int64)
    if arr.shape != (n, n) or ((arr < 0) | (arr >= n)).any():
        raise AxiomFailure(f"{name} table must be {n}x{n} with entries in 0..{n-1}")
    return tuple(tuple(r) for r in arr.tolist())


def _associative(t, n, name):
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise AxiomFailure(f"{name} is not associative at {(a, b, c)}")


def _identity(t, n, name, given):
    cands = [e for e in range(n) if all(t[e][a] == a == t[a][e] for a in range(n))]
    if given is not None:
        if given not in cands:
            raise AxiomFailure(f"{given} is not an identity for {name}")
        return given
    if not cands:
        raise AxiomFailure(f"{name} has no identity element")
    return cands[0]


def _is_comm(t, n):
    return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))


def make_algebra(kind: str, n: int, mul, add=None, zero=None, one=None) -> AlgebraTable:
    """Validate operation tables exhaustively and return an :class:`AlgebraTable`.

    Raises :class:`AxiomFailure` (or :class:`NotCommutative` where commutativity
    is required) naming the first violated law.
    """
    if kind not in KINDS:
        raise AxiomFailure(f"unknown algebra kind {kind!r}")
    if n < 1:
        raise AxiomFailure("carrier must be nonempty")
    M = _table(mul, n, "mul")
    _associative(M, n, "mul")
    comm = _is_comm(M, n)
    if kind == "group":
        e = _identity(M, n, "mul", one)
        inv = []
        for a in range(n):
            b = [b for b in range(n) if M[a][b] == e]
            if not b:
                raise AxiomFailure(f"{a} has no inverse")
            inv.append(b[0])
        return AlgebraTable(kind, n, M, one=e, commutative=comm, inverse=tuple(inv))
    if kind == "semigroup":
        if not comm:
            raise NotCommutative("semigroup multiplication must be commutative")
        return AlgebraTable(kind, n, M, commutative=True)
    if add is None:
        raise AxiomFailure(f"{kind} needs an addition table")
    A = _table(add, n, "add")
    _associative(A, n, "add")
    if not _is_comm(A, n):
        raise AxiomFailure("addition must be commutative")
    z = _identity(A, n, "add", zero)
    for a, b, c in product(range(n), repeat=3):
        if M[a][A[b][c]] != A[M[a][b]][M[a][c]] or M[A[a][b]][c] != A[M[a][c]][M[b][c]]:
            raise AxiomFailure(f"multiplication does not distribute over addition at {(a, b, c)}")
    if kind == "ring":
        inv = []
        for a in range(n):
            b = [b for b in range(n) if A[a][b] == z]
            if not b:
                raise AxiomFailure(f"{a} has no additive inverse")
            inv.append(b[0])
        if one is not None:
            _identity(M, n, "mul", one)
        return AlgebraTable(kind, n, M, A, z, one, comm, tuple(inv))
    if not comm:
        raise NotCommutative("semiring multiplication must be commutative")
    # multiplication by a must be a monoid map of (A, +, 0), which forces a·0 = 0
    if any(M[a][z] != z for a in range(n)):
        raise AxiomFailure("semiring zero must be absorbing: a·0 = 0")
    if one is not None:
        _identity(M, n, "mul", one)
    return AlgebraTable(kind, n, M, A, z, one, True)


# ---------------------------------------------------------------------------
# generic ideal machinery


def _closure(seed, steps: Callable[[frozenset], set]) -> frozenset:
    cur = set(seed)
    frontier = list(cur)
    while frontier:
        new = steps(frozenset(cur)) - cur
        if not new:
            break
        cur |= new
        frontier = list(new)
    return frozenset(cur)


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """A built instance: the lattice plus the concrete subsets behind each element."""

    lattice: MulLattice
    subsets: tuple[frozenset, ...]
    algebra: AlgebraTable
    one_sided: np.ndarray | None = None  # ring instances: plain product x·y

    def element(self, subset) -> int:
        return self.subsets.index(frozenset(subset))


def _lattice_from_subsets(subs, product_of, algebra, labels=None, one_sided=None) -> IdealLattice:
    subs = sorted(set(subs), key=lambda s: (len(s), sorted(s)))
    order = subset_order(subs)
    index = {s: i for i, s in enumerate(subs)}
    k = len(subs)
    M = [[index[product_of(subs[a], subs[b])] for b in range(k)] for a in range(k)]
    labels = labels or [_subset_label(s) for s in subs]
    L = new_mul_lattice(order, M, labels)
    os_table = None
    if one_sided is not None:
        os_table = np.array([[index[one_sided(subs[a], subs[b])] for b in range(k)] for a in range(k)])
    return IdealLattice(L, tuple(subs), algebra, os_table)


def _subset_label(s) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


def _join_close(principal, join):
    ideals = set(principal)
    frontier = list(ideals)
    while frontier:
        a = frontier.pop()
        for b in list(ideals):
            c = join(a, b)
            if c not in ideals:
                ideals.add(c)
                frontier.append(c)
    return ideals


# ---------------------------------------------------------------------------
# rings


def _ring_ops(R: AlgebraTable):
    A, M = R.add, R.mul

    def additive(seed):
        return _closure(seed | {R.zero}, lambda S: {A[a][b] for a in S for b in S})

    def ideal(seed):
        # additive closure alone is a subgroup in a finite group
        def step(S):
            return {A[a][b] for a in S for b in S} | {M[r][s] for r in range(R.n) for s in S} | {
                M[s][r] for r in range(R.n) for s in S}
        return _closure(set(seed) | {R.zero}, step)

    def one_sided(x, y):
        return additive({M[a][b] for a in x for b in y})

    def commutator_product(x, y):
        return ideal({M[a][b] for a in x for b in y} | {M[b][a] for a in x for b in y})

    return ideal, one_sided, commutator_product


def ring_ideal_lattice(R: AlgebraTable) -> IdealLattice:
    """Two-sided ideals of a finite ring with ``xy = x·y + y·x``.

    ``one_sided`` on the result tabulates the plain product ``x·y`` (the
    additive subgroup generated by the elementwise products), which is itself
    an ideal.
    """
    if R.kind != "ring":
        raise AxiomFailure("ring_ideal_lattice needs a ring")
    ideal, one_sided, prod = _ring_ops(R)
    principal = [ideal({a}) for a in range(R.n)]
    ideals = _join_close(principal, lambda a, b: ideal(a | b))
    out = _lattice_from_subsets(ideals, prod, R, one_sided=one_sided)
    if R.commutative and not np.array_equal(out.one_sided, out.lattice.mult):
        raise AxiomFailure("commutative ring: x·y + y·x differs from x·y")
    return out


def ring_primes_one_sided(inst: IdealLattice) -> tuple[int, ...]:
    """Primes for the classical test ``x·y <= p`` implies ``x <= p`` or ``y <= p``."""
    L = inst.lattice
    le, T = L.order.le, inst.one_sided
    return tuple(
        p for p in range(L.n) if p != L.top and all(
            not le[T[x, y]][p] or le[x][p] or le[y][p] for x in range(L.n) for y in range(L.n))
    )


def zn_ring(n: int) -> AlgebraTable:
    """Integers modulo ``n``."""
    return make_algebra(
        "ring", n,
        [[a * b % n for b in range(n)] for a in range(n)],
        [[(a + b) % n for b in range(n)] for a in range(n)],
        zero=0, one=1 % n if n > 1 else 0,
    )


def upper_triangular_f2() -> AlgebraTable:
    """2x2 upper-triangular matrices over GF(2); element ``4a + 2b + c`` is ``[[a, b], [0, c]]``."""
    els = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    idx = {e: i for i, e in enumerate(els)}

    def mul(p, q):
        a, b, c = p
        d, e, f = q
        return (a * d % 2, (a * e + b * f) % 2, c * f % 2)

    def add(p, q):
        return tuple((s + t) % 2 for s, t in zip(p, q))

    return make_algebra(
        "ring", 8,
        [[idx[mul(p, q)] for q in els] for p in els],
        [[idx[add(p, q)] for q in els] for p in els],
        zero=0, one=idx[(1, 0, 1)],
    )


# ---------------------------------------------------------------------------
# groups


def group_normal_lattice(G: AlgebraTable, cap: int = GROUP_CAP) -> IdealLattice:
    """Normal subgroups of a finite group with the commutator product.

    Normal subgroups are the joins of normal closures of single elements; the
    commutator ``[X, Y]`` is the subgroup generated by ``a⁻¹b⁻¹ab``.
    """
    if G.kind != "group":
        raise AxiomFailure("group_normal_lattice needs a group")
    if G.n > cap:
        raise CapExceeded(f"group order {G.n} exceeds cap {cap}")
    M, inv, e = G.mul, G.inverse, G.one

    def subgroup(seed):
        return _closure(set(seed) | {e}, lambda S: {M[a][b] for a in S for b in S})

    def normal_closure(seed):
        conj = {M[M[inv[g]][s]][g] for g in range(G.n) for s in seed}
        return subgroup(conj | set(seed))

    def is_normal(H):
        return all(M[M[inv[g]][h]][g] in H for g in range(G.n) for h in H)

    def commutator(x, y):
        return subgroup({M[M[inv[a]][inv[b]]][M[a][b]] for a in x for b in y})

    principal = [normal_closure({a}) for a in range(G.n)]
    normals = _join_close(principal, lambda a, b: subgroup(a | b))
    for H in normals:
        if not is_normal(H):
            raise AxiomFailure(f"join of normal subgroups not normal: {sorted(H)}")
    out = _lattice_from_subsets(normals, commutator, G)
    for C in set(out.subsets[v] for row in out.lattice.mul for v in row):
        if not is_normal(C):
            raise AxiomFailure("commutator subgroup is not normal")
    return out


def permutation_group(generators) -> AlgebraTable:
    """Cayley table of the permutation group generated by ``generators``
    (each a tuple giving the image of ``0 .. k-1``); identity is element 0."""
    k = len(generators[0])
    ident = tuple(range(k))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        g = frontier.pop()
        for h in generators:
            gh = tuple(g[h[i]] for i in range(k))
            if gh not in seen:
                seen.add(gh)
                elems.append(gh)
                frontier.append(gh)
    idx = {g: i for i, g in enumerate(elems)}
    table = [[idx[tuple(g[h[i]] for i in range(k))] for h in elems] for g in elems]
    return make_algebra("group", len(elems), table, one=0)


def symmetric_group(k: int) -> AlgebraTable:
    if k < 2:
        return permutation_group([tuple(range(max(k, 1)))])
    return permutation_group([tuple([1, 0] + list(range(2, k))), tuple(list(range(1, k)) + [0])])


def alternating_group(k: int) -> AlgebraTable:
    gens = [tuple(_three_cycle(k, i)) for i in range(k - 2)]
    return permutation_group(gens or [tuple(range(k))])


def _three_cycle(k, i):
    p = list(range(k))
    p[i], p[i + 1], p[i + 2] = p[i + 1], p[i + 2], p[i]
    return p


def cyclic_group(n: int) -> AlgebraTable:
    return make_algebra("group", n, [[(a + b) % n for b in range(n)] for a in range(n)], one=0)


def is_perfect(G: AlgebraTable) -> bool:
    """``[G, G] = G``."""
    inst = group_normal_lattice(G)
    L = inst.lattice
    return L.mul[L.top][L.top] == L.top


# ---------------------------------------------------------------------------
# commutative semirings and semigroups


def semiring_ideal_lattice(S: AlgebraTable) -> IdealLattice:
    """Ideals of a finite commutative semiring: submonoids of ``(S, +, 0)``
    closed under multiplication by every element; ``xy`` is the submonoid
    generated by the products ``s·t``."""
    if S.kind != "semiring":
        raise AxiomFailure("semiring_ideal_lattice needs a semiring")
    A, M, z = S.add, S.mul, S.zero

    def submonoid(seed):
        return _closure(set(seed) | {z}, lambda T: {A[a][b] for a in T for b in T})

    def ideal(seed):
        seed = set(seed)
        return submonoid(seed | {M[a][s] for a in range(S.n) for s in seed})

    def prod(x, y):
        return submonoid({M[a][b] for a in x for b in y})

    principal = [ideal({a}) for a in range(S.n)]
    ideals = _join_close(principal, lambda a, b: submonoid(a | b))
    out = _lattice_from_subsets(ideals, prod, S)
    _check_commutative_world(out)
    return out


def semigroup_ideal_lattice(S: AlgebraTable) -> IdealLattice:
    """Ideals of a finite commutative semigroup: subsets closed under
    multiplication by every element, the empty set included (it is the bottom);
    ``xy`` is the set of products ``s·t``."""
    if S.kind != "semigroup":
        raise AxiomFailure("semigroup_ideal_lattice needs a semigroup")
    M = S.mul

    def ideal(seed):
        seed = frozenset(seed)
        return seed | {M[a][s] for a in range(S.n) for s in seed}

    principal = [ideal({a}) for a in range(S.n)] + [frozenset()]
    ideals = _join_close(principal, lambda a, b: a | b)
    out = _lattice_from_subsets(ideals, lambda x, y: frozenset(M[a][b] for a in x for b in y), S)
    _check_commutative_world(out)
    return out


def _check_commutative_world(inst: IdealLattice) -> None:
    prof = condition_profile(inst.lattice)
    if not (prof.distributive and prof.monotone and prof.commutative):
        raise AxiomFailure("ideal lattice of a commutative algebra must be distributive and monotone")


def boolean_semiring() -> AlgebraTable:
    return make_algebra("semiring", 2, [[0, 0], [0, 1]], [[0, 1], [1, 1]], zero=0, one=1)


def zn_semiring(n: int) -> AlgebraTable:
    return make_algebra(
        "semiring", n,
        [[a * b % n for b in range(n)] for a in range(n)],
        [[(a + b) % n for b in range(n)] for a in range(n)],
        zero=0,
    )


# ---------------------------------------------------------------------------
# hand-made lattices


def three_element_monoid() -> MulLattice:
    """The monoid ``{1, x, x²}`` with ``x³ = x²`` ordered as a chain ``x² < x < 1``.

    Element indices: 0 is ``x²``, 1 is ``x``, 2 is ``1``.
    """
    mult = [[0, 0, 0], [0, 0, 1], [0, 1, 2]]
    return new_mul_lattice(chain_order(3), mult, ("x^2", "x", "1"))


def frame_from_distributive_lattice(D: LatticeOrder, labels=None) -> MulLattice:
    """Multiplication = meet on a distributive lattice."""
    w = D.is_distributive()
    if w is not None:
        raise NotDistributive(w)
    return new_mul_lattice(D, D.meet, labels)


def free_distributive_lattice_2() -> LatticeOrder:
    """Free bounded distributive lattice on two generators, as down-sets of the
    two-element antichain closed under the new bounds: 0 < a∧b < a, b < a∨b < 1."""
    sets = [set(), {0}, {0, 1}, {0, 2}, {0, 1, 2}, {0, 1, 2, 3}]
    return subset_order(sets)


def divisor_order(n: int) -> tuple[LatticeOrder, list[int]]:
    """Divisors of ``n`` ordered by reverse divisibility (``d <= e`` iff ``e | d``),
    i.e. the ideals ``(d)`` of Z/n under inclusion. Returns the order and the divisors."""
    divs = [d for d in range(1, n + 1) if n % d == 0]
    from .order import validate_order
    return validate_order([[d % e == 0 for e in divs] for d in divs]), divs


def zn_divisor_lattice(n: int) -> tuple[MulLattice, list[int]]:
    """Ideals of Z/n indexed by divisors, product ``(d)(e) = (gcd(de, n))``."""
    order, divs = divisor_order(n)
    idx = {d: i for i, d in enumerate(divs)}
    mult = [[idx[gcd(d * e, n)] for e in divs] for d in divs]
    return new_mul_lattice(order, mult, [f"({d % n})" for d in divs]), divs


def algebra_from_dict(data: dict) -> AlgebraTable:
    return make_algebra(
        data["kind"], int(data["n"]), data["mul"], data.get("add"), data.get("zero"), data.get("one")
    )


def algebra_to_dict(A: AlgebraTable) -> dict:
    d = {"kind": A.kind, "n": A.n}
    if A.add is not None:
        d["add"] = [list(r) for r in A.add]
    d["mul"] = [list(r) for r in A.mul]
    if A.zero is not None:
        d["zero"] = A.zero
    if A.one is not None:
        d["one"] = A.one
    return d


def build_instance(A: AlgebraTable) -> IdealLattice:
    return {
        "ring": ring_ideal_lattice,
        "group": group_normal_lattice,
        "semiring": semiring_ideal_lattice,
        "semigroup": semigroup_ideal_lattice,
    }[A.kind](A)
