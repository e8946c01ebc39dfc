"""Exception types shared across the package."""


class CCCError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimeError(CCCError):
    def __init__(self, p):
        super().__init__(f"p = {p} is not prime")
        self.p = p


class ParameterRangeError(CCCError):
    pass


class OrderCapExceededError(CCCError):
    def __init__(self, order, cap):
        super().__init__(f"group order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class NotCliqueUnionError(CCCError):
    """A connected component is not a complete subgraph."""

    def __init__(self, component_index):
        super().__init__(f"component {component_index} is not a clique")
        self.component_index = component_index


class WrongSpectrumKindError(CCCError):
    def __init__(self, expected, got):
        super().__init__(f"expected a {expected} spectrum, got {got}")
        self.expected = expected
        self.got = got


class EmptyGraphError(CCCError):
    pass


class NotMonicError(CCCError):
    pass


class DimensionCapExceededError(CCCError):
    def __init__(self, dimension, cap):
        super().__init__(f"matrix dimension {dimension} exceeds cap {cap}")
        self.dimension = dimension
        self.cap = cap
