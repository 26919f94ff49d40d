from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

CaseStatus = Literal["pass", "fail", "info"]


class CaseResult(BaseModel):
    id: str
    status: CaseStatus
    witness: Optional[str] = None
    note: Optional[str] = None


class ReportSummary(BaseModel):
    passed: int = 0
    failed: int = 0
    info: int = 0
    total: int = 0


class VerificationReport(BaseModel):
    """
    Outcome of one verification suite.

    `info` cases are report-only: they are counted but never make the report fail.
    """

    suite: str
    cases: List[CaseResult] = []
    summary: ReportSummary = Field(default_factory=ReportSummary)

    @model_validator(mode="after")
    def _recount(self) -> "VerificationReport":
        self.summary = ReportSummary(
            passed=sum(1 for case in self.cases if case.status == "pass"),
            failed=sum(1 for case in self.cases if case.status == "fail"),
            info=sum(1 for case in self.cases if case.status == "info"),
            total=len(self.cases),
        )
        return self

    def add(self, case_id: str, status: CaseStatus, witness: Optional[str] = None, note: Optional[str] = None) -> CaseResult:
        case = CaseResult(id=case_id, status=status, witness=witness, note=note)
        self.add_case(case)
        return case

    def add_case(self, case: CaseResult) -> None:
        self.cases.append(case)
        self.summary.total += 1
        if case.status == "pass":
            self.summary.passed += 1
        elif case.status == "fail":
            self.summary.failed += 1
        else:
            self.summary.info += 1

    def check(self, case_id: str, holds: bool, witness: Optional[str] = None, note: Optional[str] = None) -> CaseResult:
        """Record a pass, or a fail carrying the witness."""
        return self.add(case_id, "pass" if holds else "fail", None if holds else witness, note)

    def merge(self, other: "VerificationReport", prefix: Optional[str] = None) -> "VerificationReport":
        for case in other.cases:
            case_id = f"{prefix}/{case.id}" if prefix else case.id
            self.add_case(case.model_copy(update={"id": case_id}))
        return self

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0

    @property
    def notes(self) -> List[str]:
        return [case.note for case in self.cases if case.note]

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    @classmethod
    def from_json(cls, payload: str) -> "VerificationReport":
        return cls.model_validate_json(payload)


class PartitionStatistics(BaseModel):
    parts: tuple[int, ...]
    size: int
    length: int
    z: int
    kappa: int
    n: int
    aut_order: int
    conjugate: tuple[int, ...]
    hooks: tuple[int, ...]
    hook_product: int


class HurwitzQuery(BaseModel):
    """Base genus, degree and the ramification profiles of an almost-simple cover count."""

    h: int = Field(ge=0)
    d: int = Field(ge=1)
    profiles: List[tuple[int, ...]] = []

    @field_validator("profiles", mode="after")
    @classmethod
    def _sort_profiles(cls, profiles: List[tuple[int, ...]]) -> List[tuple[int, ...]]:
        for profile in profiles:
            if any(part <= 0 for part in profile):
                raise ValueError(f"Profile {profile} has non-positive parts")
        return [tuple(sorted(profile, reverse=True)) for profile in profiles]

    @model_validator(mode="after")
    def _profiles_partition_d(self) -> "HurwitzQuery":
        for profile in self.profiles:
            if sum(profile) != self.d:
                raise ValueError(f"Profile {profile} does not partition d={self.d}")
        return self


class SuiteBounds(BaseModel):
    """Bounds handed to a verification suite; None means the suite's own default."""

    max_d: Optional[int] = Field(default=None, ge=1)
    D: Optional[int] = Field(default=None, ge=1)
    N: Optional[int] = Field(default=None, ge=1)
    quick: bool = False
