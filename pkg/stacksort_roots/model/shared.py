import logging
import re

_LOGGER = logging.getLogger(__name__)


camel_pat = re.compile(r'([A-Z])')


def _camel_to_underscore(key):
    return camel_pat.sub(lambda x: '_' + x.group(1).lower(), key)


class BaseDictPayload(object):
    """
    Base class for every object that ends up in a machine readable report. Subclasses list the
    serialized attributes in `_payload_fields`; values are expected to be already JSON friendly
    (exact rationals are turned into "p/q" strings before they get here).
    """
    _payload_fields = ()

    def __init__(self, *args, **kwargs):
        pass

    @classmethod
    def from_dict(cls, json_dict: dict):
        # Accept both the snake case notation we emit and camel case keys written by hand
        new_dict = {_camel_to_underscore(key): value for (key, value) in json_dict.items()}
        obj = cls(**new_dict)
        return obj

    def to_dict(self) -> dict:
        return {k: serialize_payload(getattr(self, k)) for k in self._payload_fields}


def serialize_payload(value):
    # Nested payloads, polynomials and lists of them are serialized recursively
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, (list, tuple)):
        return [serialize_payload(v) for v in value]
    if isinstance(value, dict):
        return {k: serialize_payload(v) for k, v in value.items()}
    return value
