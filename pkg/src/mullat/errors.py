"""Exception hierarchy.

Every error raised by the package derives from :class:`LatticeError`, which is
itself a :class:`ValueError` so callers treating malformed input generically
keep working.
"""


class LatticeError(ValueError):
    """Base class for all structural errors."""


class NotAPartialOrder(LatticeError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"relation is not {axiom}: witness {self.witness}")


class NotALattice(LatticeError):
    def __init__(self, kind, pair):
        self.kind = kind
        self.pair = tuple(pair)
        super().__init__(f"no unique {kind} for pair {self.pair}")


class AxiomViolation(LatticeError):
    """A product exceeds the meet of its factors."""

    def __init__(self, x, y):
        self.x, self.y = x, y
        super().__init__(f"mult[{x}][{y}] is not below meet[{x}][{y}]")


class CapExceeded(LatticeError):
    pass


class NotAFrame(LatticeError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"meet does not distribute over join at {self.witness}")


class NotDistributive(LatticeError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"lattice is not distributive at {self.witness}")


class NotJoinPreserving(LatticeError):
    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"map does not preserve the join of {self.witness}")


class NotCompatible(LatticeError):
    pass


class NonStabilizing(LatticeError):
    pass


class AxiomFailure(LatticeError):
    """An algebra table violates one of its declared axioms."""


class NotCommutative(AxiomFailure):
    pass
