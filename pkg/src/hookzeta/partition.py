"""Integer partitions, skew shapes and rim-hook geometry.

Partitions are plain tuples of positive integers in weakly decreasing
order; ``()`` is the empty partition.  Cells are addressed as 1-indexed
``(row, column)`` pairs, rows counted from the top.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]
Cell = tuple[int, int]


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a partition tuple.

    Trailing zeros are dropped; anything else out of order raises.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p!r}")
    if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p!r}")
    return p


def is_partition(parts) -> bool:
    try:
        return partition(parts) == tuple(parts)
    except (TypeError, ValueError):
        return False


def hook(arm: int, leg: int) -> Partition:
    """The hook ``(arm, 1^leg)``."""
    if arm < 1 or leg < 0:
        raise ValueError(f"invalid hook ({arm}, 1^{leg})")
    return (arm,) + (1,) * leg


def is_hook(lam: Partition) -> bool:
    return len(lam) <= 1 or lam[1] == 1


def hook_parts(lam: Partition) -> tuple[int, int]:
    """Return ``(arm, leg)`` for a nonempty hook partition."""
    if not lam or not is_hook(lam):
        raise ValueError(f"{lam!r} is not a hook")
    return lam[0], len(lam) - 1


def sort_parts(parts: Iterable[int]) -> Partition:
    """Multiset union helper: sort positive parts into a partition."""
    return tuple(sorted((x for x in parts if x > 0), reverse=True))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions_bounded(n, n))


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - k, k):
            yield (k,) + rest


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > c) for c in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True if the diagram of ``inner`` sits inside that of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(inner[k] <= outer[k] for k in range(len(inner)))


def diagram(lam: Partition) -> frozenset[Cell]:
    return frozenset((r + 1, c + 1) for r, part in enumerate(lam) for c in range(part))


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    def validate(self) -> "SkewShape":
        partition(self.outer)
        partition(self.inner)
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner!r} does not fit inside {self.outer!r}")
        return self

    def cells(self) -> frozenset[Cell]:
        return diagram(self.outer) - diagram(self.inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


def _edge_connected(cells: frozenset[Cell]) -> bool:
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def is_rim_hook(shape: SkewShape) -> tuple[bool, int]:
    """Test whether a skew shape is a rim hook (border strip).

    Returns ``(True, height)`` where height is the number of occupied rows,
    or ``(False, 0)``.  The empty skew shape is not a rim hook.

    >>> is_rim_hook(SkewShape((4, 3, 1), (2,)))
    (True, 3)
    """
    shape.validate()
    cells = shape.cells()
    if not cells:
        return False, 0
    for r, c in cells:
        if (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells:
            return False, 0
    if not _edge_connected(cells):
        return False, 0
    return True, len({r for r, _ in cells})


@lru_cache(maxsize=None)
def addable_rim_hooks(lam: Partition, r: int) -> tuple[tuple[Partition, int], ...]:
    """All ``(mu, ht)`` with ``mu/lam`` a rim hook of size ``r``.

    Works on beta-numbers: adding an r-rim hook moves one bead r positions
    up into a free slot; the height is one more than the number of beads
    jumped over.  Results are sorted by ``mu`` in reverse lex order.
    """
    if r < 1:
        raise ValueError("rim hook size must be positive")
    length = len(lam) + r
    padded = lam + (0,) * r
    beta = [padded[k] + length - 1 - k for k in range(length)]
    occupied = set(beta)
    found = []
    for k, b in enumerate(beta):
        target = b + r
        if target in occupied:
            continue
        jumped = sum(1 for x in beta if b < x < target)
        moved = sorted((occupied - {b}) | {target}, reverse=True)
        mu = sort_parts(x - (length - 1 - idx) for idx, x in enumerate(moved))
        found.append((mu, jumped + 1))
    found.sort(reverse=True)
    return tuple(found)


def z(lam: Partition) -> int:
    """Centralizer order ``prod_k k^{m_k} m_k!`` of a permutation of cycle type ``lam``."""
    out = 1
    for k, m in Counter(lam).items():
        out *= k**m * factorial(m)
    return out


def format_partition(lam: Partition) -> str:
    """Serialize as ``[3,1,1]``; the empty partition is ``[]``."""
    return "[" + ",".join(str(x) for x in lam) + "]"


def parse_partition(text: str) -> Partition:
    """Inverse of :func:`format_partition`; also accepts ``()`` and bare ``3,1``."""
    body = text.strip()
    if body[:1] in "[(" and body[-1:] in "])":
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    return partition(int(tok) for tok in body.split(","))


def render(cells_by_mark: dict[Cell, str], blank: str = " ") -> list[str]:
    """Draw a cell-keyed mapping as text rows (used for trace output)."""
    if not cells_by_mark:
        return []
    rows = max(r for r, _ in cells_by_mark)
    lines = []
    for r in range(1, rows + 1):
        width = max((c for rr, c in cells_by_mark if rr == r), default=0)
        lines.append("".join(cells_by_mark.get((r, c), blank) for c in range(1, width + 1)))
    return lines
