"""Murnaghan-Nakayama expansions and symmetric-group character tables."""
from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .partition import Partition, addable_rim_hooks, format_partition, partition, partitions_of, z
from .symexpr import SymExpr, linear_combination

CACHE_ENV = "HOOKZETA_CACHE_DIR"
DEFAULT_CACHE_DIR = ".hookzeta-cache"


@lru_cache(maxsize=None)
def _mn_single(r: int, lam: Partition) -> SymExpr:
    return SymExpr._raw(
        "s",
        {mu: Fraction((-1) ** (ht + 1)) for mu, ht in addable_rim_hooks(lam, r)},
    )


def mn_multiply(r: int, a: SymExpr) -> SymExpr:
    """``p_r * a`` for a Schur-basis expression ``a``."""
    if r < 1:
        raise ValueError("power-sum degree must be positive")
    if a.basis != "s":
        raise ValueError("mn_multiply expects a Schur-basis expression")
    return linear_combination("s", ((c, _mn_single(r, lam)) for lam, c in a.items()))


@lru_cache(maxsize=None)
def power_to_schur(mu: Partition) -> SymExpr:
    """Schur expansion of ``p_mu``, applying parts largest first."""
    mu = partition(mu)
    acc = SymExpr.one("s")
    for part in mu:
        acc = mn_multiply(part, acc)
    return acc


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value chi^lam at cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    value = power_to_schur(tuple(mu)).coeff(lam)
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    row_order: tuple[Partition, ...]
    col_order: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        lam, mu = key
        return self.entries[self.row_order.index(tuple(lam))][self.col_order.index(tuple(mu))]

    def inner_product(self, lam: Partition, other: Partition) -> Fraction:
        """``sum_mu chi^lam(mu) chi^other(mu) / z_mu``."""
        a = self.entries[self.row_order.index(tuple(lam))]
        b = self.entries[self.row_order.index(tuple(other))]
        return sum((Fraction(x * y, z(mu)) for x, y, mu in zip(a, b, self.col_order)), Fraction(0))

    def is_orthonormal(self) -> bool:
        for lam in self.row_order:
            for other in self.row_order:
                if self.inner_product(lam, other) != (1 if lam == other else 0):
                    return False
        return True

    def dimensions(self) -> dict[Partition, int]:
        ones = self.col_order.index((1,) * self.n)
        return {lam: row[ones] for lam, row in zip(self.row_order, self.entries)}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "row_order": [list(x) for x in self.row_order],
            "col_order": [list(x) for x in self.col_order],
            "entries": [list(row) for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, data) -> "CharacterTable":
        return cls(
            n=int(data["n"]),
            row_order=tuple(partition(x) for x in data["row_order"]),
            col_order=tuple(partition(x) for x in data["col_order"]),
            entries=tuple(tuple(int(v) for v in row) for row in data["entries"]),
        )

    def to_text(self) -> str:
        rows = [format_partition(x) for x in self.row_order]
        cols = [format_partition(x) for x in self.col_order]
        width = max(len(x) for x in rows)
        colw = max(max(len(c) for c in cols), max(len(str(v)) for row in self.entries for v in row))
        lines = [" " * width + " | " + " ".join(c.rjust(colw) for c in cols)]
        for label, row in zip(rows, self.entries):
            lines.append(label.ljust(width) + " | " + " ".join(str(v).rjust(colw) for v in row))
        return "\n".join(lines)


def char_table(n: int) -> CharacterTable:
    """Character table of S_n, rows and columns in reverse lex order."""
    if n < 1:
        raise ValueError("n must be positive")
    parts = partitions_of(n)
    columns = [power_to_schur(mu) for mu in parts]
    entries = tuple(tuple(int(col.coeff(lam)) for col in columns) for lam in parts)
    return CharacterTable(n=n, row_order=parts, col_order=parts, entries=entries)


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE_DIR))


def cached_char_table(n: int, directory: str | os.PathLike | None = None) -> CharacterTable:
    """Load the table for ``n`` from the disk cache, computing it on a miss.

    Files are written once via an atomic rename; an existing file is never
    rewritten.
    """
    root = Path(directory) if directory is not None else cache_dir()
    path = root / f"char_table_{n}.json"
    if path.exists():
        return CharacterTable.from_dict(json.loads(path.read_text()))
    table = char_table(n)
    root.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=root, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(table.to_json())
    if path.exists():
        os.unlink(tmp)
    else:
        os.replace(tmp, path)
    return table
