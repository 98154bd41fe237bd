from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Named pass/fail entries collected by a verification harness."""

    name: str
    entries: list[tuple[str, bool, str]] = field(default_factory=list)

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        self.entries.append((label, bool(ok), detail))
        return bool(ok)

    def extend(self, other: "Report") -> None:
        self.entries.extend((f"{other.name}: {label}", ok, detail)
                            for label, ok, detail in other.entries)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.entries)

    @property
    def failures(self) -> list[tuple[str, bool, str]]:
        return [e for e in self.entries if not e[1]]

    def first_failure(self) -> str | None:
        for label, ok, detail in self.entries:
            if not ok:
                return f"{label}: {detail}" if detail else label
        return None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checks": len(self.entries),
            "failures": [{"check": l, "detail": d} for l, _, d in self.failures],
        }
