"""Exception types shared across the workbench."""


class GuardError(ValueError):
    """A size, nesting or budget guard was exceeded."""


class EvenModulusError(ValueError):
    """Raised when an entry point that needs 2-torsion freeness (odd modulus)
    is invoked over an even modulus."""


class PreconditionError(ValueError):
    """A decomposition was invoked on a map that fails its hypothesis.

    Carries the failing check report in ``report`` when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InternalVerificationError(RuntimeError):
    """An internally verified postcondition of a constructive decomposition
    failed.  This never fires on valid inputs over odd moduli; if it does, the
    payload is a concrete numerical counterexample to the underlying result
    and should be reported, not swallowed.
    """

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload
