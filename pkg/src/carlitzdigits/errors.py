"""Error types shared across the package.

The split matters for the command line tool: parse problems, violated
mathematical hypotheses and resource refusals map to distinct exit codes,
while ExactnessError signals an internal consistency failure that should
never be reachable from valid inputs.
"""


class ParseError(ValueError):
    """Malformed textual input (polynomials, field literals, CLI values)."""


class HypothesisError(ValueError):
    """A mathematical hypothesis required by the requested computation fails.

    The message states the violated hypothesis in terms of the inputs,
    e.g. "requires deg G >= deg P" or "q must be odd".
    """


class PrimitivityError(HypothesisError):
    """The base is not a primitive root modulo P.

    ``witness`` is a prime divisor ell of the unit group order N such that
    G^(N/ell) = 1 mod P.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitError(RuntimeError):
    """The request exceeds a documented size bound and is refused."""


class ExactnessError(RuntimeError):
    """An exactness or cross-route consistency check failed internally."""
