"""Truncated spectra as exact tables.

A SpectrumTable is a finite list of (eigenvalue, multiplicity) pairs, sorted
by eigenvalue, together with the cutoff it was computed at and a
completeness flag.  Eigenvalues are exact rationals relative to a declared
unit:

* ``"raw"``            -- the eigenvalue itself is the stored rational;
* ``"four-pi-squared"``-- the stored rational q means eigenvalue 4*pi^2*q,
  which keeps flat-torus spectra inside exact arithmetic.

Tables compare by exact equality of entries, so two tables computed at the
same cutoff are isospectral-at-cutoff iff their entries are equal.
"""

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .rational import fmt, rat

UNITS = ("raw", "four-pi-squared")


@dataclass(frozen=True)
class SpectrumTable:
    unit: str
    cutoff: Fraction
    entries: tuple  # ((eigenvalue: Fraction, multiplicity: int), ...)
    complete: bool

    def __post_init__(self):
        if self.unit not in UNITS:
            raise DomainError(f"unknown unit {self.unit!r}")
        prev = None
        for eig, mult in self.entries:
            if eig < 0:
                raise DomainError("negative eigenvalue in spectrum table")
            if eig > self.cutoff:
                raise DomainError("entry above cutoff")
            if not (isinstance(mult, int) and mult >= 1):
                raise DomainError("multiplicities must be positive integers")
            if prev is not None and eig <= prev:
                raise DomainError("entries must be strictly increasing")
            prev = eig

    def multiplicity(self, eig) -> int:
        eig = Fraction(eig)
        for e, m in self.entries:
            if e == eig:
                return m
        return 0

    def contains(self, eig) -> bool:
        return self.multiplicity(eig) > 0

    def lambda1(self):
        """Smallest positive entry, or None if the table has none."""
        for e, _ in self.entries:
            if e > 0:
                return e
        return None

    def restrict(self, cutoff) -> "SpectrumTable":
        """The same table truncated at a smaller cutoff."""
        cutoff = Fraction(cutoff)
        if cutoff > self.cutoff:
            raise DomainError("cannot extend a table beyond its cutoff")
        return SpectrumTable(
            unit=self.unit,
            cutoff=cutoff,
            entries=tuple((e, m) for e, m in self.entries if e <= cutoff),
            complete=self.complete,
        )

    def to_json_dict(self) -> dict:
        return {
            "unit": self.unit,
            "cutoff": fmt(self.cutoff),
            "entries": [[fmt(e), str(m)] for e, m in self.entries],
            "complete": self.complete,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_json_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["eigenvalue", "multiplicity"])
        for e, m in self.entries:
            writer.writerow([fmt(e), str(m)])
        return buf.getvalue()

    def to_pretty(self) -> str:
        header = f"unit={self.unit} cutoff={fmt(self.cutoff)} complete={self.complete}"
        width = max([len(fmt(e)) for e, _ in self.entries], default=10)
        lines = [header, "-" * len(header)]
        for e, m in self.entries:
            lines.append(f"{fmt(e):>{width}}  x{m}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_json_dict(obj: dict) -> "SpectrumTable":
        return SpectrumTable(
            unit=obj["unit"],
            cutoff=rat(obj["cutoff"]),
            entries=tuple((rat(e), int(m)) for e, m in obj["entries"]),
            complete=bool(obj["complete"]),
        )


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, no whitespace drift, one newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def table_from_pairs(pairs, unit, cutoff, complete) -> SpectrumTable:
    """Aggregate an iterable of (eigenvalue, multiplicity) contributions."""
    acc = {}
    for eig, mult in pairs:
        acc[eig] = acc.get(eig, 0) + mult
    entries = tuple(sorted((e, m) for e, m in acc.items() if m))
    return SpectrumTable(
        unit=unit, cutoff=Fraction(cutoff), entries=entries, complete=complete
    )


def table_distance(a: SpectrumTable, b: SpectrumTable) -> int:
    """Multiset symmetric-difference count: sum of |mult_a - mult_b| over
    all eigenvalues appearing in either table (absent = 0)."""
    eigs = {e for e, _ in a.entries} | {e for e, _ in b.entries}
    return sum(abs(a.multiplicity(e) - b.multiplicity(e)) for e in eigs)
