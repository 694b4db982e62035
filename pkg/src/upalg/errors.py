"""Exception hierarchy shared by every module."""


class UpError(Exception):
    """Base class for all workbench errors."""


class MalformedTable(UpError, ValueError):
    pass


class AxiomViolation(UpError):
    """Raised when a candidate table fails one or more UP axioms.

    ``violations`` lists every failed axiom, each with its
    lexicographically first witness.
    """

    def __init__(self, violations, names=None):
        self.violations = list(violations)
        self.names = names
        parts = [v.describe(names) for v in self.violations]
        super().__init__("; ".join(parts) or "axiom violation")


class CapExceeded(UpError, ValueError):
    pass


class EmptySet(UpError, ValueError):
    pass


class NotSubset(UpError, ValueError):
    pass


class NotAnIdeal(UpError, ValueError):
    pass


class NotASubalgebra(UpError, ValueError):
    pass


class NotACongruence(UpError, ValueError):
    pass


class WellDefinednessViolation(UpError):
    pass


class HomViolation(UpError):
    def __init__(self, violation, message=None):
        self.violation = violation
        super().__init__(message or violation.describe())


class NotComposable(UpError, ValueError):
    pass


class NotBijective(UpError, ValueError):
    pass


class NotSurjective(UpError, ValueError):
    pass


class PreconditionViolation(UpError, ValueError):
    pass


class OrderOutOfRange(UpError, ValueError):
    pass


class UnknownName(UpError, KeyError):
    pass


class ParseError(UpError, ValueError):
    def __init__(self, message, path="<string>", line=None):
        self.path = path
        self.line = line
        where = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{where}: {message}")


class CertificateFailure(UpError):
    """A theorem instance did not verify; carries the partial certificate."""

    def __init__(self, certificate, failed):
        self.certificate = certificate
        self.failed = list(failed)
        lines = [f"{c.claim_id}: {c.details}" for c in self.failed]
        super().__init__(f"{certificate.theorem} failed: " + "; ".join(lines))
