"""A sign-reversing involution on decorated rim hooks.

Fix ``n >= 1``.  The signed set ``S_n`` consists of triples ``(i, j, mu)``
with ``1 <= i <= n``, ``0 <= j <= i - 1`` and ``mu / (i - j, 1^j)`` a rim hook
of size ``2n + 1 - i``; the sign is ``(-1)^(j + ht + 1)``.  Expanding
``sum_{i=1}^n p_i p_{2n+1-i}`` by the Murnaghan-Nakayama rule twice gives
``sum_{x in S_n} sign(x) s_{outer(x)}``.

The map :func:`phi` pairs off every element whose outer shape is not a hook
with an element of opposite sign and the same outer shape, so the sum
collapses onto hook shapes.

Cells of the inner hook are *blank*, cells of the rim hook are *colored*.
The four rules, tried in order:

1. the lowest-leftmost colored cell sits in column 2 next to a blank cell:
   color that blank cell and every blank cell below it;
2. the highest-rightmost colored cell sits in row 2 under a blank cell:
   color that blank cell and every blank cell right of it;
3. otherwise blank out the colored cells of column 1 or of row 1, whichever
   has fewer (when only one of them has colored cells, that one);
4. hook-shaped outers are fixed.

Rules 1 and 3 (column) undo each other, as do rules 2 and 3 (row).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .checks import CheckResult
from .partition import (
    Cell,
    Partition,
    SkewShape,
    addable_rim_hooks,
    diagram,
    format_partition,
    hook,
    is_hook,
    is_rim_hook,
    render,
)
from .symexpr import SymExpr


class NotInSet(ValueError):
    """The element is not a member of S_n."""


class TieError(RuntimeError):
    """Rule 3 found equally many colored cells in row 1 and column 1."""


@dataclass(frozen=True, order=True)
class DecoratedRimHook:
    i: int
    j: int
    outer: Partition

    @property
    def arm(self) -> int:
        return self.i - self.j

    @property
    def inner(self) -> Partition:
        return hook(self.arm, self.j)

    @cached_property
    def blank(self) -> frozenset[Cell]:
        return diagram(self.inner)

    @cached_property
    def colored(self) -> frozenset[Cell]:
        return diagram(self.outer) - self.blank

    @cached_property
    def ht(self) -> int:
        ok, height = is_rim_hook(SkewShape(self.outer, self.inner))
        if not ok:
            raise NotInSet(f"{format_partition(self.outer)}/{format_partition(self.inner)} is not a rim hook")
        return height

    @property
    def sign(self) -> int:
        return -1 if (self.j + self.ht + 1) % 2 else 1

    @property
    def coloring(self) -> dict[Cell, str]:
        marks = {c: "blank" for c in self.blank}
        marks.update({c: "colored" for c in self.colored})
        return marks

    def diagram_lines(self) -> list[str]:
        return render({c: "." if m == "blank" else "#" for c, m in self.coloring.items()})

    def label(self) -> str:
        sign = "+" if self.sign > 0 else "-"
        return f"{sign} {format_partition(self.outer)}/{format_partition(self.inner)}"

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "outer": list(self.outer),
            "inner": list(self.inner),
            "ht": self.ht,
            "sign": self.sign,
        }


def in_S(x: DecoratedRimHook, n: int) -> bool:
    if not (1 <= x.i <= n and 0 <= x.j <= x.i - 1):
        return False
    if sum(x.outer) != 2 * n + 1:
        return False
    ok, _ = is_rim_hook(SkewShape(x.outer, x.inner)) if _fits(x) else (False, 0)
    return ok


def _fits(x: DecoratedRimHook) -> bool:
    inner = x.inner
    return len(inner) <= len(x.outer) and all(a <= b for a, b in zip(inner, x.outer))


@lru_cache(maxsize=None)
def build_S(n: int) -> tuple[DecoratedRimHook, ...]:
    """Every element of S_n, sorted by ``(i, j, outer)``."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for i in range(1, n + 1):
        for j in range(i):
            for mu, _ in addable_rim_hooks(hook(i - j, j), 2 * n + 1 - i):
                out.append(DecoratedRimHook(i, j, mu))
    return tuple(sorted(out))


def _lowest_left(cells) -> Cell:
    return max(cells, key=lambda rc: (rc[0], -rc[1]))


def _highest_right(cells) -> Cell:
    return min(cells, key=lambda rc: (rc[0], -rc[1]))


def classify(x: DecoratedRimHook) -> str:
    """Which rule applies: ``"fixed"``, ``"1"``, ``"2"``, ``"3-row"`` or ``"3-col"``."""
    if is_hook(x.outer):
        return "fixed"
    r, c = _lowest_left(x.colored)
    if c == 2 and (r, 1) in x.blank:
        return "1"
    r, c = _highest_right(x.colored)
    if r == 2 and (1, c) in x.blank:
        return "2"
    in_row, in_col = colored_in_first_row_col(x)
    if in_row and in_col:
        if in_row == in_col:
            raise TieError(f"tie in rule 3 at {x.label()}")
        return "3-row" if in_row < in_col else "3-col"
    if in_row:
        return "3-row"
    if in_col:
        return "3-col"
    raise RuntimeError(f"no rule applies to {x.label()}")


def colored_in_first_row_col(x: DecoratedRimHook) -> tuple[int, int]:
    return x.outer[0] - x.arm, len(x.outer) - (x.j + 1)


def rule1_applies(x: DecoratedRimHook) -> bool:
    r, c = _lowest_left(x.colored)
    return c == 2 and (r, 1) in x.blank


def rule2_applies(x: DecoratedRimHook) -> bool:
    r, c = _highest_right(x.colored)
    return r == 2 and (1, c) in x.blank


def phi(x: DecoratedRimHook, n: int) -> DecoratedRimHook:
    """Image of ``x`` under the involution on S_n."""
    if not in_S(x, n):
        raise NotInSet(f"{x} is not in S_{n}")
    rule = classify(x)
    if rule == "fixed":
        return x
    if rule == "1":
        r, _ = _lowest_left(x.colored)
        # leg shrinks to the rows above r
        return DecoratedRimHook(x.arm + r - 2, r - 2, x.outer)
    if rule == "2":
        _, c = _highest_right(x.colored)
        return DecoratedRimHook(c - 1 + x.j, x.j, x.outer)
    if rule == "3-row":
        return DecoratedRimHook(x.outer[0] + x.j, x.j, x.outer)
    leg = len(x.outer) - 1
    return DecoratedRimHook(x.arm + leg, leg, x.outer)


def orbits(n: int) -> list[tuple[DecoratedRimHook, DecoratedRimHook]]:
    """Orbits of phi as ``(x, phi(x))`` with ``x <= phi(x)``; fixed points appear as ``(x, x)``."""
    seen = set()
    out = []
    for x in build_S(n):
        if x in seen:
            continue
        y = phi(x, n)
        seen.update((x, y))
        out.append((min(x, y), max(x, y)))
    return out


def reduce_to_schur_sum(n: int) -> SymExpr:
    """``sum sign(x) s_{outer(x)}`` over the fixed points of phi."""
    acc: Counter = Counter()
    for x in build_S(n):
        if phi(x, n) == x:
            acc[x.outer] += x.sign
    return SymExpr("s", dict(acc))


def schur_hook_moment(n: int) -> SymExpr:
    """``sum_{i=0}^{2n} (-1)^i (n - i) s_{(2n+1-i, 1^i)}``."""
    return SymExpr("s", {hook(2 * n + 1 - i, i): (-1) ** i * (n - i) for i in range(2 * n + 1)})


def full_signed_sum(n: int) -> SymExpr:
    """``sum_{x in S_n} sign(x) s_{outer(x)}`` before any cancellation."""
    acc: Counter = Counter()
    for x in build_S(n):
        acc[x.outer] += x.sign
    return SymExpr("s", dict(acc))


def verify_involution(n: int) -> CheckResult:
    """Check every structural claim about phi on S_n.

    Failures are collected in the result note rather than raised.  The
    compared sides are the signed fixed-point census and the expected hook
    coefficients ``(-1)^i (n - i)``.
    """
    problems: list[str] = []
    elements = build_S(n)
    members = set(elements)
    census: Counter = Counter()
    fixed = 0
    for x in elements:
        try:
            y = phi(x, n)
        except (TieError, RuntimeError, NotInSet) as exc:
            problems.append(str(exc))
            continue
        if y not in members:
            problems.append(f"{x.label()} maps outside S_{n}")
            continue
        if phi(y, n) != x:
            problems.append(f"phi(phi({x.label()})) != itself")
        if y == x:
            fixed += 1
            census[x.outer] += x.sign
            if not is_hook(x.outer):
                problems.append(f"non-hook fixed point {x.label()}")
        else:
            if y.sign != -x.sign:
                problems.append(f"{x.label()} -> {y.label()} keeps its sign")
            if is_hook(x.outer):
                problems.append(f"hook-shaped {x.label()} is not fixed")
        if rule1_applies(x) and rule2_applies(x):
            problems.append(f"rules 1 and 2 both apply to {x.label()}")
    if (len(elements) - fixed) % 2:
        problems.append("odd number of non-fixed elements")
    found = {lam: c for lam, c in sorted(census.items(), reverse=True) if c}
    expected = {hook(2 * n + 1 - i, i): (-1) ** i * (n - i) for i in range(2 * n + 1) if i != n}
    if found != expected:
        problems.append("fixed-point census differs from (-1)^i (n-i)")
    note = f"|S_{n}| = {len(elements)}, fixed points = {fixed}"
    if problems:
        note += "; " + "; ".join(problems[:20])
    return CheckResult("involution", {"n": n}, found, expected, not problems, note)


def trace(n: int) -> str:
    """Text rendering of every orbit: labels plus side-by-side diagrams."""
    blocks = []
    for x, y in orbits(n):
        if x == y:
            head = f"{x.label()}  (fixed)"
            left, right = x.diagram_lines(), []
        else:
            head = f"{x.label()} -> {y.label()}"
            left, right = x.diagram_lines(), y.diagram_lines()
        width = max(len(line) for line in left) + 4
        rows = max(len(left), len(right))
        lines = [head]
        for k in range(rows):
            a = left[k] if k < len(left) else ""
            b = right[k] if k < len(right) else ""
            lines.append(("  " + a.ljust(width) + b).rstrip())
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def trace_json(n: int) -> list[dict]:
    return [{"left": x.to_dict(), "right": y.to_dict(), "fixed": x == y} for x, y in orbits(n)]


# Reference pairings for n = 3: (sign, outer, inner) on each side.
EXAMPLE_N3_PAIRINGS = (
    ((-1, (5, 2), (1,)), (+1, (5, 2), (1, 1))),
    ((+1, (4, 2, 1), (1,)), (-1, (4, 2, 1), (1, 1, 1))),
    ((-1, (3, 2, 1, 1), (1,)), (+1, (3, 2, 1, 1), (3,))),
    ((+1, (2, 2, 1, 1, 1), (1,)), (-1, (2, 2, 1, 1, 1), (2,))),
    ((-1, (4, 3), (2,)), (+1, (4, 3), (2, 1))),
    ((+1, (3, 3, 1), (2,)), (-1, (3, 3, 1), (3,))),
    ((-1, (3, 2, 2), (1, 1)), (+1, (3, 2, 2), (1, 1, 1))),
    ((+1, (2, 2, 2, 1), (1, 1)), (-1, (2, 2, 2, 1), (2, 1))),
)


def from_shapes(outer: Partition, inner: Partition) -> DecoratedRimHook:
    """Build an element from its outer shape and inner hook."""
    if not inner or not is_hook(inner):
        raise ValueError(f"inner shape {inner!r} must be a nonempty hook")
    j = len(inner) - 1
    return DecoratedRimHook(inner[0] + j, j, tuple(outer))


def check_example_pairings(n: int = 3, pairings=EXAMPLE_N3_PAIRINGS) -> list[str]:
    """Return a list of mismatches between phi and reference pairings (empty when all agree)."""
    problems = []
    for (s1, o1, i1), (s2, o2, i2) in pairings:
        x, y = from_shapes(o1, i1), from_shapes(o2, i2)
        if not (in_S(x, n) and in_S(y, n)):
            problems.append(f"{x} or {y} not in S_{n}")
            continue
        for elt, sign in ((x, s1), (y, s2)):
            if elt.sign != sign:
                problems.append(f"{elt.label()} has sign {elt.sign}, reference says {sign}")
        if phi(x, n) != y or phi(y, n) != x:
            problems.append(f"phi does not pair {x.label()} with {y.label()}")
    return problems
