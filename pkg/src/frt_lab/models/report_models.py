"""
Verification report models
Records, verdicts and the suite report assembled by the services layer
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from src.frt_lab.algebra.scalar_field import format_scalar
from src.frt_lab.core.config import ARTIFACT_VERSION, REPORT_SCHEMA_VERSION
from src.frt_lab.core.errors import BadEntry, SchemaMismatch


class Verdict(Enum):
    """Outcome of one check"""
    PASS = "PASS"
    FAIL = "FAIL"
    INFO = "INFO"


class Irreducibility(Enum):
    """Two-certificate irreducibility outcome"""
    IRREDUCIBLE = "IRREDUCIBLE"     # algebra span is the full matrix algebra
    REDUCIBLE = "REDUCIBLE"         # explicit proper invariant subspace found
    INCONCLUSIVE = "INCONCLUSIVE"   # neither certificate


def to_jsonable(value: Any) -> Any:
    """Convert scalars, matrices, enums and containers into JSON-ready values"""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, DomainMatrix):
        return [[format_scalar(x) for x in row] for row in value.to_list()]
    if QQ.of_type(value) or QQ_I.of_type(value):
        return format_scalar(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise BadEntry(f"value of type {type(value).__name__} is not serializable")


@dataclass
class CheckRecord:
    """One verified statement"""
    id: str
    anchor: str
    verdict: Verdict
    inputs: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Any] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict is Verdict.FAIL and self.witness is None:
            raise BadEntry(f"FAIL record '{self.id}' carries no witness")

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "verdict": self.verdict.value,
            "inputs": to_jsonable(self.inputs),
            "witness": to_jsonable(self.witness),
            "details": to_jsonable(self.details),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckRecord":
        try:
            return cls(
                id=data["id"],
                anchor=data["anchor"],
                verdict=Verdict(data["verdict"]),
                inputs=data.get("inputs", {}),
                witness=data.get("witness"),
                details=data.get("details", {}),
            )
        except (KeyError, ValueError, BadEntry) as e:
            raise SchemaMismatch(f"malformed check record: {e}") from e


@dataclass
class Report:
    """Records of one suite run plus summary, config echo and versions"""
    suite: str
    records: List[CheckRecord] = field(default_factory=list)
    config: Dict[str, Any] = field(default_factory=dict)
    artifact_version: str = ARTIFACT_VERSION
    schema_version: int = REPORT_SCHEMA_VERSION

    def add(self, record: CheckRecord):
        self.records.append(record)

    def extend(self, records: List[CheckRecord]):
        self.records.extend(records)

    @property
    def summary(self) -> Dict[str, int]:
        counts = {verdict.value: 0 for verdict in Verdict}
        for record in self.records:
            counts[record.verdict.value] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    def sorted_records(self) -> List[CheckRecord]:
        return sorted(self.records, key=lambda r: r.id)

    def failures(self) -> List[CheckRecord]:
        return [r for r in self.records if r.verdict is Verdict.FAIL]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "artifact_version": self.artifact_version,
            "suite": self.suite,
            "config": to_jsonable(self.config),
            "summary": self.summary,
            "records": [r.to_dict() for r in self.sorted_records()],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        if not isinstance(data, dict) or "suite" not in data or "records" not in data:
            raise SchemaMismatch("report must be an object with 'suite' and 'records'")
        schema = data.get("schema_version")
        if schema != REPORT_SCHEMA_VERSION:
            raise SchemaMismatch(f"unsupported report schema version {schema}")
        return cls(
            suite=data["suite"],
            records=[CheckRecord.from_dict(r) for r in data["records"]],
            config=data.get("config", {}),
            artifact_version=data.get("artifact_version", ARTIFACT_VERSION),
            schema_version=schema,
        )
