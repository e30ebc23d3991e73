"""
Error Types
Every invalid-input condition raised by the library derives from PatternAvoidanceError
"""


class PatternAvoidanceError(ValueError):
    """Base class; the CLI maps it to exit code 2"""


class PatternSyntaxError(PatternAvoidanceError):
    """Malformed dash notation or a word that is not a permutation"""


class FamilyParameterError(PatternAvoidanceError):
    """Family parameters (k, a, l, m) violate their constraints"""


class CeilingExceededError(PatternAvoidanceError):
    """Requested n is above the enumeration ceiling"""


class PrefixError(PatternAvoidanceError):
    """Refined-count prefix with repeated or out-of-range letters"""


class BinomialDomainError(PatternAvoidanceError):
    """Binomial coefficient evaluated with a negative upper argument"""


class SeriesDomainError(PatternAvoidanceError):
    """Power-series operation outside its domain (e.g. sqrt with c0 != 1)"""


class IdentityError(PatternAvoidanceError):
    """A generating function produced a non-integer or negative count"""
