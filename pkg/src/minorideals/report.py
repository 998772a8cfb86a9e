"""Line-oriented verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field


def format_bidegree(b) -> str:
    rows, cols = b
    return "({};{})".format(",".join(map(str, rows)), ",".join(map(str, cols)))


@dataclass
class Report:
    title: str
    records: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    checked: int = 0
    failures: int = 0
    unit: str = "DEGREES"

    def record(self, label: str, ok: bool, **detail) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
        self.records.append({"label": label, "status": "PASS" if ok else "FAIL", **detail})

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def failing(self) -> list[dict]:
        return [r for r in self.records if r["status"] == "FAIL"]

    def summary(self) -> str:
        return f"CHECKED {self.checked} {self.unit}, {self.failures} FAILURES"

    def render(self, machine: bool = False) -> str:
        out = []
        if machine:
            out.append(f"report={self.title.replace(' ', '_')}")
            for rec in self.records:
                out.append(" ".join(f"{k}={v}".replace(" ", "") for k, v in rec.items()))
            for note in self.notes:
                out.append("note=" + note.replace(" ", "_"))
            out.append(f"checked={self.checked} failures={self.failures}")
            return "\n".join(out)
        out.append(f"# {self.title}")
        for rec in self.records:
            extra = " ".join(f"{k}={v}" for k, v in rec.items() if k not in ("label", "status"))
            out.append(f"{rec['label']} {rec['status']}" + (" " + extra if extra else ""))
        out.extend(f"# {note}" for note in self.notes)
        out.append(self.summary())
        return "\n".join(out)
