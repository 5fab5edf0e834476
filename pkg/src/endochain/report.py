"""Structured outcome of a verification run."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Result of checking one claim over a range of chain sizes.

    ``failures`` holds witness records for genuine violations;
    ``errata`` holds witnesses where only the known-bad printed variant
    of a formula disagrees while the verified variant passes.
    """

    claim: str
    n_range: tuple[int, int]
    instances: int
    failures: list[dict] = field(default_factory=list)
    errata: list[dict] = field(default_factory=list)
    note: str = ""

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if self.errata:
            return "pass-with-erratum"
        return "pass"

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {
            "claim": self.claim,
            "n_range": list(self.n_range),
            "instances": self.instances,
            "status": self.status,
            "failures": self.failures,
            "errata": self.errata,
            "note": self.note,
        }

    def render_text(self, max_witnesses: int = 5) -> str:
        lo, hi = self.n_range
        span = f"n={lo}" if lo == hi else f"n={lo}..{hi}"
        lines = [
            f"{self.claim:<12} {self.status:<18} {span:<9} "
            f"instances={self.instances} failures={len(self.failures)}"
            + (f" errata={len(self.errata)}" if self.errata else "")
        ]
        if self.note:
            lines.append(f"  note: {self.note}")
        for w in self.failures[:max_witnesses]:
            lines.append(f"  FAIL {w}")
        if len(self.failures) > max_witnesses:
            lines.append(f"  ... {len(self.failures) - max_witnesses} more failures")
        for w in self.errata[:max_witnesses]:
            lines.append(f"  erratum {w}")
        if len(self.errata) > max_witnesses:
            lines.append(f"  ... {len(self.errata) - max_witnesses} more errata")
        return "\n".join(lines)
