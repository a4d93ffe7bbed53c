"""Identity reports: per-identity, per-degree verdicts with witnesses."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from paracyclic.linalg import Matrix


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class IdentityCheck:
    """Verdict for one identity at one degree.

    ``witness`` is lhs - rhs of the first failing instance, named in
    ``detail``.  Advisory entries are recorded but do not affect
    :attr:`IdentityReport.passed`.
    """

    identity: str
    degree: int
    status: CheckStatus
    witness: Matrix | None = None
    detail: str = ""
    advisory: bool = False
    flag: str = ""

    @property
    def counts(self) -> bool:
        return not self.advisory and self.status is not CheckStatus.SKIPPED


@dataclass(frozen=True)
class IdentityReport:
    entries: tuple[IdentityCheck, ...]

    @classmethod
    def of(cls, entries: Iterable[IdentityCheck]) -> IdentityReport:
        return cls(tuple(sorted(entries, key=lambda e: (e.identity, e.degree))))

    def merged(self, other: IdentityReport) -> IdentityReport:
        return IdentityReport.of(self.entries + other.entries)

    @property
    def passed(self) -> bool:
        return not any(e.status is CheckStatus.FAIL for e in self.entries if not e.advisory)

    def failures(self, include_advisory: bool = False) -> list[IdentityCheck]:
        return [
            e for e in self.entries
            if e.status is CheckStatus.FAIL and (include_advisory or not e.advisory)
        ]

    def skipped(self) -> list[IdentityCheck]:
        return [e for e in self.entries if e.status is CheckStatus.SKIPPED]

    def names(self) -> list[str]:
        return sorted({e.identity for e in self.entries})

    def get(self, identity: str, degree: int) -> IdentityCheck:
        for e in self.entries:
            if e.identity == identity and e.degree == degree:
                return e
        raise KeyError((identity, degree))

    def status_counts(self) -> dict[str, int]:
        """Entries per status; failing advisory entries count as ``advisory``, not ``fail``."""
        counts = Counter(
            "advisory" if e.advisory and e.status is CheckStatus.FAIL else e.status.value
            for e in self.entries
        )
        return {key: counts.get(key, 0) for key in (*(s.value for s in CheckStatus), "advisory")}

    def __len__(self) -> int:
        return len(self.entries)
