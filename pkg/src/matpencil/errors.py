"""Exception types shared across the package."""


class StructuralError(ValueError):
    """Shapes or basis data of an input are inconsistent."""


class ContractError(ValueError):
    """An input violates a documented precondition (degree, grade, node count)."""


class SpectrumError(RuntimeError):
    """Evaluation requested too close to the spectrum of a pencil."""


class DegenerateInputError(RuntimeError):
    """Sampling could not find enough admissible points; the input is degenerate."""


class ResourceLimitError(RuntimeError):
    """A size cap was exceeded."""


class VerificationError(RuntimeError):
    """A construction failed its own oracle check and refuses to return silently."""
