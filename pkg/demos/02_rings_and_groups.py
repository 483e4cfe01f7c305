# Ideal lattices of rings and normal-subgroup lattices of groups, with the
# commutator-style products, checked against elementary arithmetic.
from mullat import group_normal_lattice, has_enough_primes, primes, ring_ideal_lattice, spec
from mullat.instances import (
    alternating_group,
    cyclic_group,
    is_perfect,
    ring_primes_one_sided,
    symmetric_group,
    upper_triangular_f2,
    zn_ring,
)

# Z/n: prime ideals are (p) for the primes p dividing n
for n in (4, 8, 12, 30, 36):
    inst = ring_ideal_lattice(zn_ring(n))
    gens = sorted(min(a for a in inst.subsets[p] if a) for p in primes(inst.lattice))
    print(f"Z/{n}: {inst.lattice.n} ideals, primes generated by {gens}")

# noncommutative ring: x·y + y·x and x·y give the same primes
inst = ring_ideal_lattice(upper_triangular_f2())
print("upper triangular F2:", inst.lattice.n, "ideals;",
      "primes agree:", ring_primes_one_sided(inst) == primes(inst.lattice))

# groups: enough primes exactly for perfect groups
for name, G in [("Z4", cyclic_group(4)), ("S3", symmetric_group(3)), ("S4", symmetric_group(4)),
                ("A5", alternating_group(5))]:
    inst = group_normal_lattice(G)
    L = inst.lattice
    pts = [sorted(inst.subsets[p]) if len(inst.subsets[p]) < 4 else f"<{len(inst.subsets[p])} elements>"
           for p in spec(L).points]
    print(f"{name}: |G| = {G.n}, {L.n} normal subgroups, perfect = {is_perfect(G)},",
          f"enough primes = {has_enough_primes(L)}, Spec = {pts}")
