"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class GegenbauerError(Exception):
    """Base class; ``name`` is what the CLI prints on stderr."""

    @property
    def name(self):
        return type(self).__name__


class TrivialParameter(GegenbauerError, ValueError):
    """C_n^(lambda) vanishes identically at this lambda."""

    def __init__(self, lam, n=None):
        self.lam = lam
        self.n = n
        super().__init__(f"C_{n}^({lam}) is identically zero (trivial parameter)")


class SingularHypergeometricParameter(GegenbauerError, ValueError):
    pass


class DomainError(GegenbauerError, ValueError):
    pass


class DegenerateParameters(GegenbauerError, ValueError):
    pass


class PreconditionViolated(GegenbauerError, ValueError):
    pass


class BracketFailure(GegenbauerError, RuntimeError):
    pass


class LengthMismatch(GegenbauerError, ValueError):
    pass
