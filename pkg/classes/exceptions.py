class OrderTypeError(Exception):
    """
    Base class for every error raised by the order-type calculator
    """


class InvalidOrdinal(OrderTypeError):
    """
    Term list does not form a Cantor normal form
    """
    def __init__(self, terms, reason):
        self.terms = terms
        self.reason = reason

        message = (
            "Invalid Cantor normal form\n"
            f"Reason: {reason}\n"
        )
        super().__init__(message)


class ExpressionSyntaxError(OrderTypeError):
    """
    Expression text does not follow the published grammar
    """
    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected

        message = (
            f"Syntax error at position {position}: expected {expected}\n"
            f"{text}\n"
            f"{' ' * position}^\n"
        )
        super().__init__(message)


class UnknownBlockName(OrderTypeError):
    """
    Identifier in an expression names neither a block nor a declared atom
    """
    def __init__(self, name, position):
        self.name = name
        self.position = position

        message = (
            f"Unknown block name '{name}' at position {position}\n"
        )
        super().__init__(message)


class InvalidSchema(OrderTypeError):
    """
    Eventually-affine schema violates positivity or monotonicity
    """
    def __init__(self, schema, reason):
        self.schema = schema
        self.reason = reason

        message = (
            "Invalid schema\n"
            f"Schema: {schema}\n"
            f"Reason: {reason}\n"
        )
        super().__init__(message)


class InvalidCutIndex(OrderTypeError):
    """
    Ladder start does not designate a boundary cut
    """
    def __init__(self, index):
        self.index = index
        super().__init__(f"Boundary cut index must be non-negative, got {index}\n")


class ZeroSymbol(OrderTypeError):
    """
    Zero is reserved and never appears in a sequence
    """
    def __init__(self, where):
        self.where = where
        super().__init__(f"Symbol 0 is not allowed in a sequence ({where})\n")


class NotLFamilyError(OrderTypeError):
    """
    Block sum contains a block that is not isomorphic to any L_i
    """
    def __init__(self, block, reason):
        self.block = block

        message = (
            "Block is not a member of the L-family\n"
            f"Block: {block}\n"
            f"Reason: {reason}\n"
        )
        super().__init__(message)


class ConfigurationError(OrderTypeError):
    """
    Verification configuration rejected before execution
    """
    def __init__(self, field_name, value, reason):
        self.field_name = field_name
        self.value = value

        message = (
            f"Invalid configuration value {field_name}={value!r}\n"
            f"Reason: {reason}\n"
        )
        super().__init__(message)


class InvalidSequence(OrderTypeError):
    """
    Eventually periodic sequence has an empty period
    """
    def __init__(self, preperiod, period, reason):
        self.preperiod = preperiod
        self.period = period

        message = (
            f"Invalid sequence pre={list(preperiod)}, per={list(period)}\n"
            f"Reason: {reason}\n"
        )
        super().__init__(message)


class InvalidTerm(OrderTypeError):
    """
    Order-term node built with arguments outside its domain
    """
    def __init__(self, node, reason):
        self.node = node

        message = (
            f"Invalid {node} node\n"
            f"Reason: {reason}\n"
        )
        super().__init__(message)
