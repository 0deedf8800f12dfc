import logging
from logging import StreamHandler
from sys import stderr

ROOT_LOGGER = logging.getLogger("stacksort_roots")
ENUMERATION_LOGGER = ROOT_LOGGER.getChild("combinatorics")
CERTIFICATION_LOGGER = ROOT_LOGGER.getChild("algebra")
IDENTITY_LOGGER = CERTIFICATION_LOGGER.getChild("special")
MANAGER_LOGGER = ROOT_LOGGER.getChild("manager")
CLI_LOGGER = ROOT_LOGGER.getChild("cli")

# Modules log through logging.getLogger(__name__), so each of them sits below one of the loggers above.


# Reports go to STDOUT, so the log stream is bound to STDERR.
h = StreamHandler(stream=stderr)
ROOT_LOGGER.addHandler(h)
formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
h.setFormatter(formatter)


# Call this module to adjust the verbosity of the stream output. By default, only WARNING is written to STDERR.
def set_log_level(root=logging.WARNING, enumeration=logging.INFO, certification=logging.INFO):
    ROOT_LOGGER.setLevel(root)
    ENUMERATION_LOGGER.setLevel(enumeration)
    CERTIFICATION_LOGGER.setLevel(certification)


def verbosity_to_level(verbosity: int) -> int:
    """
    Maps the number of -v flags given on the command line to a logging level.
    """
    if verbosity <= 0:
        return logging.WARNING
    elif verbosity == 1:
        return logging.INFO
    return logging.DEBUG
