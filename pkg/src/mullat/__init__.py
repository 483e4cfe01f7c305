"""Finite multiplicative lattices: prime spectra, radicals, solvability closures,
adjunctions and instances built from finite algebras."""
from .errors import (
    AxiomFailure,
    AxiomViolation,
    CapExceeded,
    LatticeError,
    NonStabilizing,
    NotALattice,
    NotAFrame,
    NotAPartialOrder,
    NotCommutative,
    NotCompatible,
    NotDistributive,
    NotJoinPreserving,
)
from .order import (
    LatticeOrder,
    chain_order,
    compact_elements,
    join_inaccessible_elements,
    maximal_elements,
    subset_order,
    validate_order,
)
from .lattice import ConditionProfile, MulLattice, condition_profile, new_mul_lattice
from .enumeration import enumerate_mul_lattices, lattice_orders, mult_table_count, sample_mul_lattices
from .topology import FiniteSpace, TopologyReport, topology_report
from .reports import TheoremReport
from .spectra import (
    RadicalFrame,
    SpecSpace,
    V,
    has_enough_primes,
    is_prime,
    is_semiprime,
    primes,
    primes_between_check,
    radical,
    radical_frame,
    sp,
    spec,
)
from .solvability import (
    DerivedSeries,
    SolvTower,
    closure_comparison,
    derived_series,
    is_locally_solvable,
    is_solvable,
    loc_solv,
    solv,
    solv_closure,
    upper_solv,
)
from .morphisms import Adjunction, commutativize, mk_adjunction, radical_adjunction, spec_map
from .instances import (
    AlgebraTable,
    frame_from_distributive_lattice,
    group_normal_lattice,
    make_algebra,
    ring_ideal_lattice,
    semigroup_ideal_lattice,
    semiring_ideal_lattice,
    three_element_monoid,
)
from .battery import TheoremBatterySpec, run_battery

__version__ = "0.1.0"
