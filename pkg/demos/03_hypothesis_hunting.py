# Every structural check has hypotheses. In forced mode the battery runs each
# check anyway, so a sweep of the small lattices finds the cases where a
# conclusion fails once its hypothesis is dropped.
from collections import Counter

from mullat import TheoremBatterySpec, enumerate_mul_lattices, run_battery
from mullat.io import lattice_to_dict

forced = TheoremBatterySpec(mode="forced")
tally, first = Counter(), {}
total = 0
for L in enumerate_mul_lattices(4):
    total += 1
    for r in run_battery(L, forced):
        if r.failed:
            raise SystemExit(f"genuine failure: {r.to_json()}")
        if not r.passed:
            tally[r.theorem] += 1
            first.setdefault(r.theorem, (L, r))

print(f"{total} lattices swept")
for name, count in tally.most_common():
    L, r = first[name]
    print(f"\n{name}: {count} lattices outside the hypotheses fail it")
    print("  ", r.detail)
    print("   e.g.", lattice_to_dict(L), "witness", r.witness)
