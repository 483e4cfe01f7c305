# The smallest interesting case: the monoid {1, x, x^2} with x^3 = x^2,
# ordered as a chain x^2 < x < 1 and multiplied as in the monoid.
from mullat import closure_comparison, condition_profile, primes, radical, spec, topology_report
from mullat.instances import three_element_monoid
from mullat.io import hasse_dot, lattice_to_json
from mullat.solvability import closure_table, derived_series, solv_closure
from mullat.spectra import radical_elements

L = three_element_monoid()
print(lattice_to_json(L))
print(hasse_dot(L))

# x^2 is not prime: x·x = x^2 but x is not below x^2
print("primes:", [L.label(p) for p in primes(L)])
print("radical elements:", [L.label(r) for r in radical_elements(L)])
print("sqrt(x^2) =", L.label(radical(L, 0)))

S = spec(L)
rep = topology_report(S)
print("Spec points:", [L.label(p) for p in S.points], "sober:", rep.sober, "spectral:", rep.spectral)

prof = condition_profile(L)
print({k: v for k, v in prof.as_dict().items()})

# derived series of x and the tower from x^2
print("x, x^2, ... :", [L.label(t) for t in derived_series(L, 1).terms])
print("tower from x^2:", [L.label(t) for t in solv_closure(L, 0).stages])

# every closure agrees here (distributive, finite)
for name, table in closure_table(L).items():
    print(f"{name:>10}", [L.label(v) for v in table])
print(closure_comparison(L).to_json())
