class KrasnerError(Exception):
    """Base class for all errors raised by this package."""


class TableError(KrasnerError):
    """A hyperring table is malformed (missing tuple, bad arity, unknown label)."""


class ArityError(KrasnerError):
    pass


class AxiomError(KrasnerError):
    """An operation needed a validated ring but validation failed."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"ring failed validation: {report.summary()}")


class MissingIdentityError(KrasnerError):
    """The operation needs a scalar identity and the ring has none."""


class NotAHyperidealError(KrasnerError):
    pass


class NotProperError(KrasnerError):
    pass


class CapExceededError(KrasnerError):
    pass


class StructuralError(KrasnerError):
    """A construction produced something its contract rules out."""


class ExpansionError(KrasnerError):
    pass


class InstanceFormatError(KrasnerError):
    """Parse error in an instance file; ``where`` names the offending field."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
