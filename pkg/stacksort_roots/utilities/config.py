import logging
import os
from typing import Optional

from stacksort_roots.model.constants import DEFAULT_MAX_N, MAX_N_ENV_VAR
from stacksort_roots.model.exception import UsageError

_LOGGER = logging.getLogger(__name__)


def resolve_max_n(explicit: Optional[int] = None) -> int:
    """
    Returns the enumeration cap in effect: the explicit value when given, otherwise the
    STACKSORT_MAX_N environment variable, otherwise the library default.

    :param explicit: value coming from an argument or a command line flag, if any

    :return: the maximum n that may be enumerated
    """
    if explicit is not None:
        if explicit < 1:
            raise UsageError(f"The enumeration cap must be positive, got {explicit}")
        return explicit

    env_value = os.environ.get(MAX_N_ENV_VAR)
    if env_value is None or env_value.strip() == '':
        return DEFAULT_MAX_N

    try:
        value = int(env_value)
    except ValueError:
        _LOGGER.error(f"Environment variable {MAX_N_ENV_VAR}={env_value!r} is not an integer.")
        raise UsageError(f"{MAX_N_ENV_VAR} must be an integer, got {env_value!r}")
    if value < 1:
        raise UsageError(f"{MAX_N_ENV_VAR} must be positive, got {value}")
    _LOGGER.debug(f"Enumeration cap overridden by {MAX_N_ENV_VAR}: {value}")
    return value
