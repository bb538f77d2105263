"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`CdeLabError`.
The CLI maps the three families below onto exit codes.
"""


class CdeLabError(Exception):
    """Base class for library errors."""


# -- input problems (exit code 2) ------------------------------------------


class InputError(CdeLabError):
    """Malformed input: bad scalar text, bad JSON, inconsistent shapes."""


class ParseError(InputError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class SchemaError(InputError):
    def __init__(self, message, pointer=""):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")


class DivisionByZeroError(InputError, ZeroDivisionError):
    pass


class NonIntegralError(InputError):
    """An element of K was used where an element of R (regular at t=0) is required."""


class AssociativityError(InputError):
    def __init__(self, i, j, k, l):
        self.indices = (i, j, k, l)
        super().__init__(f"structure constants are not associative at (i,j,k,l)=({i},{j},{k},{l})")


class UnitLawError(InputError):
    pass


class RepresentationError(InputError):
    """Action matrices do not satisfy the algebra relations."""


class NotIdempotentError(InputError):
    pass


class SeedsDoNotSpanError(InputError):
    pass


class WindowError(InputError):
    """Weight window violates the congruence condition."""


class WeightOutsideWindowError(InputError):
    pass


class IncompleteSimplesError(InputError):
    pass


# -- mathematical audit failures (exit code 3) --------------------------------


class AuditError(CdeLabError):
    def __init__(self, name, lhs, rhs, detail=""):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        msg = f"audit {name!r} failed: {lhs!r} != {rhs!r}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NonIntegralSolutionError(AuditError):
    def __init__(self, weight, value):
        super().__init__("verma-multiplicity", value, "nonnegative integer", f"at weight {weight}")


class DualityMismatchError(AuditError):
    def __init__(self, pairs):
        self.pairs = pairs
        super().__init__("duality", [p["lhs"] for p in pairs], [p["rhs"] for p in pairs],
                         "disagreeing pairs: " + ", ".join(f"({p['lambda']},{p['mu']})" for p in pairs))


# -- outside the supported fragment (exit code 4) -----------------------------


class UnsupportedError(CdeLabError):
    pass


class NonSplitError(UnsupportedError):
    """A simple factor has endomorphism ring larger than the base field."""


class DegenerateParameterError(UnsupportedError):
    pass
