"""Pass/fail reports produced by the verification suites.

A :class:`Report` is a named list of :class:`Check` results.  The CLI turns
reports into text tables or JSON; ``write_csv`` / ``write_figure`` render a
report to a delimited file and a matplotlib summary grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> Check:
        check = Check(name, bool(passed), detail)
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def counts(self) -> tuple[int, int]:
        passed = sum(1 for c in self.checks if c.passed)
        return passed, len(self.checks) - passed

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name}"
            if c.detail:
                line += f"  [{c.detail}]"
            out.append(line)
        return out

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }

    def __str__(self) -> str:
        passed, failed = self.counts()
        head = f"{self.title}: {passed} passed, {failed} failed"
        return "\n".join([head] + ["  " + line for line in self.lines()])


def write_csv(rows: list[dict], path) -> None:
    """Write table rows (dicts sharing keys) as a CSV file."""
    import csv

    rows = list(rows)
    if not rows:
        return
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)


def write_figure(rows: list[dict], path, title: str = "verification summary") -> None:
    """Render rows with ``name``/``passed`` (and optional ``seconds``) keys as
    a pass/fail bar figure saved to ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = list(rows)
    names = [str(r["name"]) for r in rows]
    passed = [bool(r["passed"]) for r in rows]
    seconds = [float(r.get("seconds", 0.0)) for r in rows]

    fig, ax = plt.subplots(figsize=(8, max(2.0, 0.4 * len(rows) + 1.2)))
    ypos = range(len(rows))[::-1]
    colors = ["#2e7d32" if ok else "#c62828" for ok in passed]
    ax.barh(list(ypos), [max(s, 1e-3) for s in seconds], color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xlabel("seconds")
    ax.set_title(title)
    for y, ok, s in zip(ypos, passed, seconds):
        ax.text(max(s, 1e-3), y, " pass" if ok else " FAIL", va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
