import logging
from enum import Enum
from typing import Union, Type, TypeVar

_LOGGER = logging.getLogger(__name__)

E = TypeVar('E', bound=Enum)


class CountingMethod(Enum):
    BRUTE_FORCE = 'brute_force'
    CLOSED_FORM = 'closed_form'
    # Brute force row where no closed form is known but every permutation sorts (t >= n-1, t not in (1, 2)).
    CLOSED_FORM_UNAVAILABLE = 'closed_form_unavailable'


class ReportStatus(Enum):
    OK = 'ok'
    VIOLATION = 'violation'
    USAGE_ERROR = 'usage_error'

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]


_EXIT_CODES = {
    ReportStatus.OK: 0,
    ReportStatus.VIOLATION: 1,
    ReportStatus.USAGE_ERROR: 2
}


class OutputFormat(Enum):
    JSON = 'json'
    CSV = 'csv'
    TEXT = 'text'


class TableMethod(Enum):
    BRUTE = 'brute'
    CLOSED = 'closed'
    BOTH = 'both'


class CertifyTarget(Enum):
    NARAYANA = 'narayana'
    W2 = 'w2'
    PIPELINE = 'pipeline'
    INTERLACING_NARAYANA = 'interlacing-narayana'
    POST_LEMMA_SEQUENCE = 'post-lemma-sequence'
    LEMMA2_ZEROS = 'lemma2-zeros'


class IdentityName(Enum):
    LEMMA2 = 'lemma2'
    POST_LEMMA = 'post-lemma'
    JACOBI_EQ2 = 'jacobi-eq2'
    NARAYANA_JACOBI = 'narayana-jacobi'
    NARAYANA_HYPERGEOMETRIC = 'narayana-hypergeometric'
    W2_FORMS = 'w2-forms'


def get_or_parse(enum_type: Type[E], value: Union[E, str]) -> E:
    if isinstance(value, enum_type):
        return value
    elif isinstance(value, str):
        try:
            return enum_type(value)
        except ValueError:
            _LOGGER.error(f"{enum_type.__name__} {value} is not currently handled/recognized.")
            raise
    else:
        raise ValueError(f"Unknown invalid {enum_type.__name__} type. Only str/{enum_type.__name__} "
                         f"types are allowed here.")
