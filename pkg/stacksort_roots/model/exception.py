class InvalidWordError(ValueError):
    pass


class InvalidPermutationError(InvalidWordError):
    pass


class EnumerationLimitError(Exception):
    def __init__(self, n: int, limit: int):
        super().__init__(f"Refusing to enumerate S_{n}: the configured maximum is n = {limit}")
        self.n = n
        self.limit = limit


class OutOfRangeError(ValueError):
    def __init__(self, n: int, k: int):
        super().__init__(f"k = {k} is out of range for n = {n} (expected 0 <= k <= n-1)")
        self.n = n
        self.k = k


class UnsupportedClosedFormError(Exception):
    def __init__(self, n: int, t: int):
        super().__init__(f"No closed form is available for n = {n}, t = {t}. "
                         f"Closed forms exist for t in (1, 2) and t >= n-1 only.")
        self.n = n
        self.t = t


class NonIntegralValueError(ArithmeticError):
    def __init__(self, value):
        super().__init__(f"Expected an integral value, got {value}")
        self.value = value


class ZeroPolynomialError(ValueError):
    pass


class DegreeError(ValueError):
    pass


class NotSquarefreeError(ValueError):
    pass


class NotRealRootedError(ValueError):
    pass


class ParameterError(ValueError):
    pass


class PipelineStageError(Exception):
    def __init__(self, stage: str, message: str, report=None):
        super().__init__(f"Stage '{stage}' failed: {message}")
        self.stage = stage
        self.report = report


class UsageError(Exception):
    pass
