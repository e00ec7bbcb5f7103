class WreathPowError(Exception):
    pass


class InvalidGroupFile(WreathPowError):
    pass


class InvalidGroup(WreathPowError):
    pass


class CatalogRangeError(WreathPowError):
    pass


class InvalidGroupSpec(WreathPowError):
    pass


class NotPrimeError(WreathPowError):
    pass


class HypothesisError(WreathPowError):
    pass


class PreconditionError(WreathPowError):
    pass


class SeriesDomainError(WreathPowError):
    pass


class GuardExceeded(WreathPowError):
    pass


class ConsistencyError(WreathPowError):
    pass
