class RamseyError(Exception):
    """Base exception for pyordramsey."""


class InputError(RamseyError, ValueError):
    """Invalid parameters, out-of-range pairs or violated preconditions."""


class FormatError(RamseyError):
    """Text or certificate encoding/decoding errors."""


class ParadoxError(RamseyError):
    """A branch proved unreachable was executed."""


class GreedyColorOverflow(ParadoxError):
    """Greedy interval coloring needed a third color."""


class ExhaustedWithoutClique(ParadoxError):
    """Transversal search over K_{t,t}-free sets found no red clique."""


class EnumerationBudgetExceeded(RamseyError):
    """Copy enumeration hit its configured cap."""


class SearchCapExceeded(RamseyError):
    """Brute-force search refused an instance above the vertex cap."""
