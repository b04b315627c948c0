from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import ShapeError
from .tensor import Mor


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    lhs: Mor | None = None
    rhs: Mor | None = None
    note: str = ""


@dataclass
class CheckReport:
    """Per-condition verdicts.  Failed equations keep both sides for diffing."""

    title: str
    entries: list[CheckEntry] = field(default_factory=list)
    header: list[str] = field(default_factory=list)

    def equation(self, name: str, lhs: Mor, rhs: Mor, note: str = "") -> bool:
        if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
            raise ShapeError(f"{name}: sides have different types "
                             f"{lhs.dom!r}->{lhs.cod!r} vs {rhs.dom!r}->{rhs.cod!r}")
        ok = lhs == rhs
        self.entries.append(CheckEntry(name, ok, None if ok else lhs, None if ok else rhs, note))
        return ok

    def flag(self, name: str, passed: bool, note: str = "") -> bool:
        self.entries.append(CheckEntry(name, bool(passed), note=note))
        return bool(passed)

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for e in other.entries:
            self.entries.append(CheckEntry(prefix + e.name, e.passed, e.lhs, e.rhs, e.note))
        self.header.extend(other.header)
        return self

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def __bool__(self):
        return self.ok

    def __iter__(self) -> Iterator[CheckEntry]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, name: str) -> bool:
        return any(e.name == name for e in self.entries)

    def __getitem__(self, name: str) -> CheckEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def passed(self, name: str) -> bool:
        return self[name].passed

    def verdicts(self) -> dict[str, bool]:
        return {e.name: e.passed for e in self.entries}

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def first_failure(self) -> str | None:
        bad = self.failures()
        return bad[0].name if bad else None

    def summary(self) -> str:
        lines = [f"# {self.title}"] + [f"# {h}" for h in self.header]
        lines += [f"{e.name}: {'PASS' if e.passed else 'FAIL'}" + (f"  ({e.note})" if e.note else "")
                  for e in self.entries]
        return "\n".join(lines)

    def __str__(self):
        return self.summary()
