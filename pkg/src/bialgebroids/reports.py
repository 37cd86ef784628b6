"""Deterministic pass/fail reports for axiom suites and theorem verifiers."""

from __future__ import annotations


class Check:
    __slots__ = ("name", "ok", "witnesses")

    def __init__(self, name, ok, witnesses=None):
        self.name = name
        self.ok = bool(ok)
        self.witnesses = sorted(witnesses or [])

    def as_dict(self):
        d = {"name": self.name, "ok": self.ok}
        if self.witnesses:
            d["witnesses"] = self.witnesses
        return d

    def __repr__(self):
        flag = "ok" if self.ok else "FAIL"
        return f"<{self.name}: {flag}>"


class Report:
    """An ordered list of named checks; witnesses are concrete basis indices."""

    def __init__(self, title, checks=None):
        self.title = title
        self.checks = list(checks or [])

    def add(self, name, ok, witnesses=None):
        self.checks.append(Check(name, ok, witnesses))
        return self.checks[-1]

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witnesses))

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def failure_names(self):
        return [c.name for c in self.failures()]

    def as_dict(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def lines(self):
        out = [f"[{'PASS' if self.passed else 'FAIL'}] {self.title}"]
        for c in self.checks:
            out.append(f"  {'ok  ' if c.ok else 'FAIL'} {c.name}")
            for w in c.witnesses[:8]:
                out.append(f"       witness: {w}")
            if len(c.witnesses) > 8:
                out.append(f"       ... {len(c.witnesses) - 8} more witnesses")
        return out

    def __repr__(self):
        return "\n".join(self.lines())
