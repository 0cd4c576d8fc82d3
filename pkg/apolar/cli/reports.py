"""apolar/cli/reports.py"""
from __future__ import annotations
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from ..detection.models import DetectionRun
from ..shared.scalars import Scalar, ScalarMode


@dataclass
class RunReport:
    """What one CLI invocation prints: the result line plus engine bookkeeping."""
    result: str
    engine: str = ""
    basis_dim: int = 0
    gates: int = 0
    micros: int = 0
    mode: str = "exact"
    notes: List[str] = field(default_factory=list)

    @staticmethod
    def of_run(run: DetectionRun, micros: int) -> "RunReport":
        notes = [f"{k}={v}" for k, v in sorted(run.details.items())]
        return RunReport("yes" if run.decision else "no", run.engine, run.basis_dim, run.gates,
                         micros, run.mode.label, notes)

    @staticmethod
    def of_value(value: Scalar, mode: ScalarMode, micros: int, engine: str = "",
                 basis_dim: int = 0, gates: int = 0, notes: Optional[List[str]] = None) -> "RunReport":
        return RunReport(mode.format(value), engine, basis_dim, gates, micros, mode.label, list(notes or []))

    @property
    def is_no(self) -> bool:
        return self.result == "no"

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out.pop("notes")
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"engine:    {self.engine or '-'}",
                 f"basis dim: {self.basis_dim}",
                 f"gates:     {self.gates}",
                 f"mode:      {self.mode}",
                 f"time:      {self.micros} us"]
        lines.extend(f"  {n}" for n in self.notes)
        return "\n".join(lines)

    def render(self, style: Optional[str]) -> str:
        """Result line first; the report (if asked for) below it."""
        if style == "json":
            return f"{self.result}\n{self.to_json()}"
        if style == "text":
            return f"{self.result}\n{self.to_text()}"
        return self.result
