"""Curated homotopy group tables for spheres and compact Lie groups.

Every value is a citation, not a computation: the table is loaded from a
line-oriented data file (``key | degree | group | source``) and lookups
never extrapolate beyond it.  A missing entry raises UnknownValueError.

Family-parameterized records such as ``Sp(n):n>=2 | 4 | Z_2 | ...``
carry an explicit validity range on the rank parameter.  The classical
coincidences SU(2) = Sp(1), Spin(5) = Sp(2) and Spin(6) = SU(4) resolve
to a single canonical key each, so the data is maintained once.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd
from pathlib import Path

from .abelian import AbGroup, make_group, parse_group, vp
from .errors import UnknownValueError

__all__ = [
    "LieGroupId",
    "PiTable",
    "TableRecord",
    "default_table",
    "pi_sphere",
    "pi_lie",
    "pi6",
    "pi6_moore",
    "pi6_moore_source",
]

ENV_TABLE_PATH = "BUNDLEGAUGE_TABLES"

_FAMILIES = ("SU", "Sp", "Spin", "G2", "F4", "E6", "E7", "E8")
_MIN_RANK = {"SU": 2, "Sp": 1, "Spin": 5}


@dataclass(frozen=True)
class LieGroupId:
    """A simply connected simple compact Lie group: family plus rank.

    The exceptional families carry no rank parameter.  SU(2) and Sp(1)
    are distinct identifiers that report as isomorphic.
    """

    family: str
    n: int | None = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in _MIN_RANK:
            if self.n is None:
                raise ValueError(f"{self.family} requires a rank parameter")
            if self.n < _MIN_RANK[self.family]:
                raise ValueError(
                    f"{self.family}({self.n}) out of range: need n >= "
                    f"{_MIN_RANK[self.family]}"
                )
        elif self.n is not None:
            raise ValueError(f"{self.family} takes no rank parameter")

    @classmethod
    def parse(cls, token: str) -> "LieGroupId":
        """Accepts compact tokens (SU4, Sp2, Spin8, E7) and SU(4) forms."""
        token = token.strip()
        m = re.match(r"^(SU|Sp|Spin)\(?(\d+)\)?$", token)
        if m:
            return cls(m.group(1), int(m.group(2)))
        if token in ("G2", "F4", "E6", "E7", "E8"):
            return cls(token)
        raise ValueError(f"cannot parse Lie group token {token!r}")

    def canonical(self) -> "LieGroupId":
        """Alias resolution: Sp(1)->SU(2), Spin(5)->Sp(2), Spin(6)->SU(4)."""
        if self.family == "Sp" and self.n == 1:
            return LieGroupId("SU", 2)
        if self.family == "Spin" and self.n == 5:
            return LieGroupId("Sp", 2)
        if self.family == "Spin" and self.n == 6:
            return LieGroupId("SU", 4)
        return self

    def token(self) -> str:
        if self.n is None:
            return self.family
        return f"{self.family}{self.n}"

    def __str__(self) -> str:
        if self.n is None:
            return self.family
        return f"{self.family}({self.n})"


@dataclass(frozen=True)
class TableRecord:
    """One data-file line: a space key, a degree, a group and its source."""

    family: str | None  # None for exact keys
    min_n: int | None  # validity bound for family records
    key: str  # exact key text, e.g. "S3" or "SU4"
    degree: int
    group: AbGroup
    source: str

    def line(self) -> str:
        return f"{self.key} | {self.degree} | {self.group.render()} | {self.source}"


_FAMILY_KEY = re.compile(r"^(SU|Sp|Spin)\(n\):n>=(\d+)$")
_EXACT_KEY = re.compile(r"^(S\d+|SU\d+|Sp\d+|Spin\d+|G2|F4|E6|E7|E8)$")


def _parse_record(line: str) -> TableRecord:
    fields = [f.strip() for f in line.split("|")]
    if len(fields) != 4:
        raise ValueError(f"malformed table line: {line!r}")
    key, degree_s, group_s, source = fields
    degree = int(degree_s)
    if degree < 0:
        raise ValueError(f"negative degree in table line: {line!r}")
    group = parse_group(group_s)
    if not group.is_integral:
        raise ValueError(f"table entries must be integral: {line!r}")
    fam = _FAMILY_KEY.match(key)
    if fam:
        return TableRecord(fam.group(1), int(fam.group(2)), key, degree, group, source)
    if _EXACT_KEY.match(key):
        return TableRecord(None, None, key, degree, group, source)
    raise ValueError(f"unrecognized table key {key!r}")


class PiTable:
    """Immutable lookup table keyed by (space, degree).

    Exact records win over family records; among family records the one
    with the largest validity bound not exceeding the rank applies.
    """

    def __init__(self, records: list[TableRecord]):
        self._records = tuple(records)
        self._exact: dict[tuple[str, int], TableRecord] = {}
        self._family: dict[tuple[str, int], list[TableRecord]] = {}
        for rec in records:
            if rec.family is None:
                slot = (rec.key, rec.degree)
                if slot in self._exact:
                    raise ValueError(f"duplicate table entry for {slot}")
                self._exact[slot] = rec
            else:
                self._family.setdefault((rec.family, rec.degree), []).append(rec)
        for recs in self._family.values():
            bounds = [r.min_n for r in recs]
            if len(bounds) != len(set(bounds)):
                raise ValueError("duplicate family bound in table")
            recs.sort(key=lambda r: -(r.min_n or 0))

    @property
    def records(self) -> tuple[TableRecord, ...]:
        return self._records

    def dump_lines(self) -> list[str]:
        return [rec.line() for rec in self._records]

    @classmethod
    def load(cls, path: str | Path) -> "PiTable":
        text = Path(path).read_text(encoding="utf-8")
        return cls.from_text(text)

    @classmethod
    def from_text(cls, text: str) -> "PiTable":
        records = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            records.append(_parse_record(line))
        return cls(records)

    def sphere_record(self, n: int, i: int) -> TableRecord:
        if n < 1 or i < 0:
            raise ValueError("sphere lookup needs n >= 1, i >= 0")
        rec = self._exact.get((f"S{n}", i))
        if rec is None:
            raise UnknownValueError(f"no table entry for pi_{i}(S^{n})")
        return rec

    def lie_record(self, g: LieGroupId, i: int) -> TableRecord:
        if i < 0:
            raise ValueError("degree must be nonnegative")
        c = g.canonical()
        rec = self._exact.get((c.token(), i))
        if rec is not None:
            return rec
        if c.n is not None:
            for fam_rec in self._family.get((c.family, i), []):
                if fam_rec.min_n is not None and c.n >= fam_rec.min_n:
                    return fam_rec
        raise UnknownValueError(f"no table entry for pi_{i}({g})")

    def sphere(self, n: int, i: int) -> AbGroup:
        return self.sphere_record(n, i).group

    def lie(self, g: LieGroupId, i: int) -> AbGroup:
        return self.lie_record(g, i).group

    def pi6(self, g: LieGroupId) -> AbGroup:
        return self.lie(g, 6)

    def pi6_is_zero(self, g: LieGroupId) -> bool:
        return self.pi6(g).is_trivial


def _data_path() -> Path:
    override = os.environ.get(ENV_TABLE_PATH)
    if override:
        return Path(override)
    return Path(str(resources.files(__package__) / "data" / "homotopy_groups.txt"))


@lru_cache(maxsize=None)
def _cached_table(path: str) -> PiTable:
    return PiTable.load(path)


def default_table() -> PiTable:
    """The table shipped with the package, or the env-var override."""
    return _cached_table(str(_data_path()))


def pi_sphere(n: int, i: int, table: PiTable | None = None) -> AbGroup:
    """pi_i(S^n) from the table.  Unknown entries raise, never guess."""
    return (table or default_table()).sphere(n, i)


def pi_lie(g: LieGroupId, i: int, table: PiTable | None = None) -> AbGroup:
    """pi_i(G) from the table, with aliases resolved first."""
    return (table or default_table()).lie(g, i)


def pi6(g: LieGroupId, table: PiTable | None = None) -> AbGroup:
    """pi_6 of a simply connected simple compact Lie group.

    Nonzero only for SU(2) = Sp(1) (Z_12), SU(3) (Z_6) and G2 (Z_3);
    this predicate gates every bundle classification below.
    """
    return (table or default_table()).pi6(g)


def pi6_moore(m: int) -> AbGroup:
    """pi_6 of the Moore space P^4(m), by Sasao's closed formula.

    The case split is on the 2-adic valuation of m; unit factors are
    dropped during canonicalization.

    >>> print(pi6_moore(5))
    Z_5
    >>> print(pi6_moore(2))
    Z_2 + Z_4
    >>> print(pi6_moore(8))
    Z_2 + Z_4 + Z_8
    """
    if m < 2:
        raise ValueError("Moore space parameter must be >= 2")
    g12 = gcd(m, 12)
    v2 = vp(m, 2)
    if v2 == 0:
        orders = [g12, m]
    elif v2 <= 2:
        orders = [g12 // 2, 2 * m, 2]
    else:
        orders = [g12, m, 2]
    return make_group(0, [d for d in orders if d > 1])


def pi6_moore_source() -> str:
    return "Sasao (1965)"
