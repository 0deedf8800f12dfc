import csv
import io
import json
import logging
from typing import Any, Dict, List, Optional, Union

from stacksort_roots.model.enums import OutputFormat, ReportStatus, get_or_parse
from stacksort_roots.model.shared import BaseDictPayload, serialize_payload

_LOGGER = logging.getLogger(__name__)


def _flatten(value: Any, prefix: str = '') -> Dict[str, Any]:
    # Nested keys are joined with '.', lists of scalars become space separated strings
    if isinstance(value, dict):
        res = {}
        for k, v in value.items():
            res.update(_flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return res
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return {prefix: " ".join(_scalar(v) for v in value)}
        res = {}
        for i, v in enumerate(value):
            res.update(_flatten(v, f"{prefix}.{i}" if prefix else str(i)))
        return res
    return {prefix: _scalar(value)}


def _scalar(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


class RunReport(BaseDictPayload):
    """
    Outcome of one command line invocation. The status is `violation` as soon as one checked
    property fails; results are kept in the order they were added.
    """
    _payload_fields = ('command', 'parameters', 'results', 'status')

    def __init__(self,
                 command: str,
                 parameters: Optional[Dict[str, Any]] = None,
                 results: Optional[List[Any]] = None,
                 status: Union[str, ReportStatus] = ReportStatus.OK,
                 *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.command = command
        self.parameters = dict(parameters or {})
        self.results = list(results or [])
        self._status = get_or_parse(ReportStatus, status)

    @property
    def status(self) -> str:
        return self._status.value

    @property
    def report_status(self) -> ReportStatus:
        return self._status

    @property
    def exit_code(self) -> int:
        return self._status.exit_code

    def add_result(self, entry: Any, passed: bool = True) -> None:
        self.results.append(entry)
        if not passed:
            self.mark_violation()

    def mark_violation(self) -> None:
        if self._status == ReportStatus.OK:
            self._status = ReportStatus.VIOLATION

    def mark_usage_error(self, message: str) -> None:
        self._status = ReportStatus.USAGE_ERROR
        self.results.append({"error": message})

    # Output formats

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def loads(cls, text: str) -> 'RunReport':
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buffer = io.StringIO()
        for k, v in _flatten(serialize_payload(self.parameters)).items():
            buffer.write(f"# {k}={v}\n")
        buffer.write(f"# status={self.status}\n")
        rows = [_flatten(serialize_payload(r)) for r in self.results]
        fieldnames = []
        for row in rows:
            for k in row:
                if k not in fieldnames:
                    fieldnames.append(k)
        writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator='\n')
        if fieldnames:
            writer.writeheader()
            writer.writerows(rows)
        return buffer.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status}"]
        for r in self.results:
            flat = _flatten(serialize_payload(r))
            lines.append(", ".join(f"{k}={v}" for k, v in flat.items()))
        return "\n".join(lines) + "\n"

    def render(self, fmt: Union[str, OutputFormat]) -> str:
        fmt = get_or_parse(OutputFormat, fmt)
        if fmt == OutputFormat.JSON:
            return self.dumps() + "\n"
        elif fmt == OutputFormat.CSV:
            return self.to_csv()
        return self.to_text()
