from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Entry:
    check: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.check, "pass": self.passed, "details": self.details}


@dataclass
class Certificate:
    """Ordered record of named checks; overall verdict is the conjunction."""

    entries: list = field(default_factory=list)

    def record(self, check: str, passed: bool, **details) -> bool:
        self.entries.append(Entry(check, bool(passed), details))
        return bool(passed)

    def extend(self, other: "Certificate", prefix: str = "") -> None:
        for e in other.entries:
            self.entries.append(Entry(prefix + e.check, e.passed, e.details))

    @property
    def overall(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if not e.passed]

    def __getitem__(self, name: str) -> Entry:
        for e in self.entries:
            if e.check == name:
                return e
        raise KeyError(name)

    def names(self) -> list:
        return [e.check for e in self.entries]

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]

    @classmethod
    def from_json(cls, items: list) -> "Certificate":
        return cls([Entry(d["check"], bool(d["pass"]), dict(d.get("details", {}))) for d in items])
