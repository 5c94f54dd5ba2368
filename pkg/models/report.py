import uuid
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    """Outcome of a single check inside a verification suite."""

    name: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'passed': self.passed,
            'detail': self.detail,
            'elapsed': round(self.elapsed, 4)
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CheckResult':
        return cls(
            name=data.get('name', ''),
            passed=bool(data.get('passed', False)),
            detail=data.get('detail', ''),
            elapsed=float(data.get('elapsed', 0.0))
        )


@dataclass
class VerificationRun:
    """All checks of one suite run."""

    suite: str
    id: str = field(default_factory=lambda: str(uuid.uuid4()))
    started_at: Optional[datetime] = None
    checks: List[CheckResult] = field(default_factory=list)

    def __post_init__(self):
        if self.started_at is None:
            self.started_at = datetime.now()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def pass_count(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def fail_count(self) -> int:
        return len(self.checks) - self.pass_count

    def add_check(self, check: CheckResult):
        self.checks.append(check)

    def to_dict(self) -> dict:
        return {
            'id': self.id,
            'suite': self.suite,
            'started_at': self.started_at.isoformat() if self.started_at else None,
            'passed': self.passed,
            'pass_count': self.pass_count,
            'fail_count': self.fail_count,
            'checks': [c.to_dict() for c in self.checks]
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'VerificationRun':
        run = cls(
            suite=data.get('suite', ''),
            id=data.get('id') or str(uuid.uuid4()),
            started_at=datetime.fromisoformat(data['started_at']) if data.get('started_at') else None
        )
        for check in data.get('checks', []):
            run.add_check(CheckResult.from_dict(check))
        return run


@dataclass
class Report:
    """Machine-readable result document printed by the CLI."""

    command: str
    input_digest: str = ""
    results: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            'command': self.command,
            'input_digest': self.input_digest,
            'results': self.results,
            'timing': {'elapsed_seconds': round(self.elapsed, 4)}
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'Report':
        return cls(
            command=data.get('command', ''),
            input_digest=data.get('input_digest', ''),
            results=data.get('results', {}),
            elapsed=float(data.get('timing', {}).get('elapsed_seconds', 0.0))
        )
