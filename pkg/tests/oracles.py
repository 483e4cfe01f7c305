"""Brute-force reference implementations, written directly from the
definitions on plain Python lists. They share no code with the package."""
from itertools import chain, combinations


def leq_lists(L):
    return [[bool(v) for v in row] for row in L.order.leq.tolist()]


def mult_lists(L):
    return L.mult.tolist()


def glb(leq, x, y):
    lower = [z for z in range(len(leq)) if leq[z][x] and leq[z][y]]
    best = [z for z in lower if all(leq[w][z] for w in lower)]
    assert len(best) == 1
    return best[0]


def lub(leq, x, y):
    upper = [z for z in range(len(leq)) if leq[x][z] and leq[y][z]]
    best = [z for z in upper if all(leq[z][w] for w in upper)]
    assert len(best) == 1
    return best[0]


def top_of(leq):
    return next(t for t in range(len(leq)) if all(leq[x][t] for x in range(len(leq))))


def bottom_of(leq):
    return next(b for b in range(len(leq)) if all(leq[b][x] for x in range(len(leq))))


def brute_primes(leq, mult):
    n, top = len(leq), top_of(leq)
    out = []
    for p in range(n):
        if p == top:
            continue
        if all(not leq[mult[x][y]][p] or leq[x][p] or leq[y][p] for x in range(n) for y in range(n)):
            out.append(p)
    return out


def brute_radical(leq, mult, x):
    ps = [p for p in brute_primes(leq, mult) if leq[x][p]]
    r = top_of(leq)
    for p in ps:
        r = glb(leq, r, p)
    return r


def subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def closure(closed_family, points, A):
    out = set(points)
    for C in closed_family:
        if set(A) <= C:
            out &= C
    return frozenset(out)


def brute_sober(points, closed_family):
    """Every irreducible closed set is the closure of exactly one point (and T0)."""
    fam = [frozenset(c) for c in closed_family]
    cl = {p: closure(fam, points, {p}) for p in points}
    if len(set(cl.values())) != len(points):
        return False
    for C in fam:
        if not C:
            continue
        # irreducible: not the union of two proper closed subsets
        proper = [D for D in fam if D < C]
        if any(D | E == C for D in proper for E in proper):
            continue
        if sum(1 for p in C if cl[p] == C) != 1:
            return False
    return True


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_divisors(n):
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
