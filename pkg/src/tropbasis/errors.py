"""Exception hierarchy.

``InvalidInput`` covers anything wrong with what the caller handed in
(it maps to exit code 2 on the command line); ``ResourceCapExceeded``
is raised when an exhaustive scan would be too large (exit code 3).
"""

from ._bits import fmt


class TropBasisError(Exception):
    pass


class InvalidInput(TropBasisError, ValueError):
    pass


class ParseError(InvalidInput):
    pass


class CircuitAxiomError(InvalidInput):
    pass


class EmptyCircuit(CircuitAxiomError):
    def __init__(self):
        super().__init__("circuit family contains the empty set")


class ComparablePair(CircuitAxiomError):
    def __init__(self, c1: int, c2: int):
        self.c1, self.c2 = c1, c2
        super().__init__(f"comparable circuits {fmt(c1)} and {fmt(c2)}")


class EliminationFailure(CircuitAxiomError):
    def __init__(self, c1: int, c2: int, e: int):
        self.c1, self.c2, self.e = c1, c2, e
        super().__init__(
            f"elimination fails for {fmt(c1)}, {fmt(c2)} at element {e}: "
            f"no circuit inside {fmt((c1 | c2) & ~(1 << (e - 1)))}")


class NotSimple(InvalidInput):
    def __init__(self, circuit: int):
        self.circuit = circuit
        super().__init__(f"matroid is not simple: circuit {fmt(circuit)}")


class NonPrimeModulus(InvalidInput):
    pass


class UnknownName(InvalidInput):
    pass


class InvalidParams(InvalidInput):
    pass


class NotADoubleCircuit(InvalidInput):
    pass


class NotACircuit(InvalidInput):
    pass


class CircuitNotInBasis(InvalidInput):
    pass


class CircuitIsClosed(InvalidInput):
    pass


class ResourceCapExceeded(TropBasisError):
    pass
