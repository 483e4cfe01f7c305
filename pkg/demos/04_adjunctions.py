# Adjunctions between multiplicative lattices and what they do to spectra.
import numpy as np

from mullat import commutativize, mk_adjunction, primes, radical_adjunction, ring_ideal_lattice, spec_map
from mullat.enumeration import random_lattice_order, sample_mul_lattices
from mullat.instances import three_element_monoid, upper_triangular_f2, zn_ring
from mullat.lattice import _unchecked
from mullat.morphisms import random_compatible_adjunction

# L -> its radical frame is strictly compatible
L3 = three_element_monoid()
a = radical_adjunction(L3)
print("radical adjunction flags:", a.flags(), "spec map:", spec_map(a).mapping)

# Z/12 -> Z/6: image of an ideal; Spec goes the other way, by contraction
I12, I6 = ring_ideal_lattice(zn_ring(12)), ring_ideal_lattice(zn_ring(6))
f = [I6.element({v % 6 for v in I12.subsets[x]}) for x in range(I12.lattice.n)]
q = mk_adjunction(I12.lattice, I6.lattice, f)
sm = spec_map(q)
for p, c in sm.mapping.items():
    print(f"prime {sorted(I6.subsets[p])} of Z/6 contracts to {sorted(I12.subsets[c])} of Z/12")
print("certificates:", sm.primes_preserved, sm.preimage_identity)

# commutativizing the one-sided ideal product of a noncommutative ring
R = ring_ideal_lattice(upper_triangular_f2())
one_sided = _unchecked(R.lattice.order, R.one_sided)
c = commutativize(one_sided)
print("Com equals x·y + y·x:", (c.lattice.mult == R.lattice.mult).all(),
      "same primes:", c.same_primes, primes(one_sided))

# random compatible adjunctions compose, and Spec respects composition
rng = np.random.default_rng(0)
ok = 0
for X in sample_mul_lattices(200, 11, sizes=(4, 5)):
    a = random_compatible_adjunction(X, random_lattice_order(4, rng), rng)
    if a is None:
        continue
    b = random_compatible_adjunction(a.target, random_lattice_order(5, rng), rng)
    if b is None:
        continue
    ma, mb, mc = spec_map(a).mapping, spec_map(b).mapping, spec_map(a.then(b)).mapping
    ok += mc == {p: ma[v] for p, v in mb.items()}
print("functorial on", ok, "random composable pairs")
