"""Structured pass/fail reports returned by the verifiers."""

from __future__ import annotations

__all__ = ["Report"]


class Report:
    """An ordered list of named checks, each pass/fail with optional witness."""

    def __init__(self, subject=""):
        self.subject = subject
        self.checks = []

    def add(self, name, ok, witness=None):
        self.checks.append({"check": name, "ok": bool(ok), "witness": witness})
        return ok

    def require(self, name, ok, witness=None):
        """Like add but only records the first failure witness per name."""
        return self.add(name, ok, witness if not ok else None)

    def merge(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(
                {
                    "check": prefix + c["check"],
                    "ok": c["ok"],
                    "witness": c["witness"],
                }
            )
        return self

    @property
    def ok(self):
        return all(c["ok"] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c["ok"]]

    def to_json(self):
        out = {"subject": self.subject, "ok": self.ok, "checks": []}
        for c in self.checks:
            item = {"check": c["check"], "ok": c["ok"]}
            if c["witness"] is not None:
                item["witness"] = c["witness"]
            out["checks"].append(item)
        return out

    def __repr__(self):
        status = "pass" if self.ok else "FAIL"
        return f"Report({self.subject!r}, {status}, {len(self.checks)} checks)"
