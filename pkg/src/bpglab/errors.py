class BpgLabError(Exception):
    pass


class GraphFormatError(BpgLabError, ValueError):
    """Malformed graph text or JSON input."""


class NotBPGError(BpgLabError, ValueError):
    """The graph is not a bipartite permutation graph."""


class UnsupportedInstance(BpgLabError):
    """A solver precondition is unmet or a size cap would be exceeded."""


class CapExceeded(UnsupportedInstance, ValueError):
    pass
