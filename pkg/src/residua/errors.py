"""Exception hierarchy for residua."""


class ResiduaError(Exception):
    """Base class for all residua errors."""


class AxiomViolation(ResiduaError):
    """A declared operation table violates a ring/algebra axiom.

    Carries the name of the first failed axiom and a witnessing element
    triple (unused slots are -1).
    """

    def __init__(self, law: str, witness: tuple[int, int, int]):
        self.law = law
        self.witness = witness
        super().__init__(f"axiom {law!r} fails at witness {witness}")


class InvalidIdeal(ResiduaError):
    """A member set is not an ideal of the given ring."""


class InvalidInput(ResiduaError):
    """An argument does not satisfy the operation's contract."""


class ZeroRing(ResiduaError):
    """The predicate is undefined on the zero ring (1 = 0)."""


class CapExceeded(ResiduaError):
    """The requested object is larger than the configured cap."""


class NotPrimePower(ResiduaError):
    """The given order is not a prime power."""


class ModulusMismatch(ResiduaError):
    """Polynomial operands live over different prime moduli."""


class DivisionByZeroPoly(ResiduaError):
    """Division or gcd by the zero polynomial."""


class DegreeZero(ResiduaError):
    """Irreducibility is undefined for constant polynomials."""


class PreconditionUnmet(ResiduaError):
    """A checker's stated precondition does not hold for the input."""


class InvalidTriple(ResiduaError):
    """(R, I, s) is not a valid split triple."""


class ParseError(ResiduaError):
    """Syntax error in the ring-expression DSL.

    ``offset`` is the byte offset of the failure, ``expected`` the nonempty
    set of token descriptions that would have been accepted there.
    """

    def __init__(self, offset: int, expected: set[str], found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        exp = ", ".join(sorted(expected))
        super().__init__(f"at offset {offset}: expected {exp}, found {found}")


class SemanticError(ResiduaError):
    """A syntactically valid expression denotes no legal ring."""

    def __init__(self, message: str, span: tuple[int, int] | None = None):
        self.span = span
        super().__init__(message if span is None else f"{message} (at {span[0]}..{span[1]})")


class UnknownSuite(ResiduaError):
    """The requested verification suite or search target does not exist."""


class IoError(ResiduaError):
    """Report emission failed at the OS level."""
