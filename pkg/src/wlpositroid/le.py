"""Le diagrams built from Grassmann necklaces.

Cells are addressed by boundary labels ``(row_label, column_label)``.
Row labels are the elements of I_1 (top to bottom, increasing); column
labels are the rest, shown left to right in decreasing order.  The cell
``(a, b)`` exists exactly when ``b > a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .diagram import WilsonLoopDiagram
from .necklace import GrassmannNecklace, grassmann_necklace, is_grassmann_necklace

PLUS, ZERO = "+", "0"


def labels_for_rows(row_labels: Iterable[int], n: int):
    """(row labels ascending, column labels descending, row lengths)."""
    rows = sorted(row_labels)
    rs = set(rows)
    cols = sorted((v for v in range(1, n + 1) if v not in rs), reverse=True)
    shape = [sum(1 for c in cols if c > r) for r in rows]
    return rows, cols, shape


def labels_for_shape(shape: Sequence[int], width: int = None):
    """Read labels off the boundary path of a Young shape.

    Walk from the top-right corner: a horizontal step labels a column, a
    vertical step labels a row.
    """
    shape = list(shape)
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError("row lengths must be weakly decreasing")
    width = max(shape, default=0) if width is None else width
    rows, cols = [], []
    x, label = width, 1
    for length in shape + [0]:
        while x > length:
            cols.append(label)
            label += 1
            x -= 1
        if len(rows) < len(shape):
            rows.append(label)
            label += 1
    return rows, sorted(cols, reverse=True), label - 1


@dataclass(frozen=True)
class LeDiagram:
    k: int
    n: int
    row_labels: tuple
    column_labels: tuple
    shape: tuple
    plus_cells: frozenset = field(default_factory=frozenset)

    def cells(self):
        for r, length in zip(self.row_labels, self.shape):
            for c in self.column_labels[:length]:
                yield (r, c)

    def has_cell(self, r: int, c: int) -> bool:
        return r in self.row_labels and c in self.column_labels and c > r

    def cell(self, r: int, c: int) -> str:
        if not self.has_cell(r, c):
            raise KeyError((r, c))
        return PLUS if (r, c) in self.plus_cells else ZERO

    @classmethod
    def from_rows(cls, rows: Sequence[str], width: int = None) -> "LeDiagram":
        """Build from strings of '+'/'0', one per row, top row first."""
        shape = [len(r) for r in rows]
        rl, cl, n = labels_for_shape(shape, width)
        plus = set()
        for r, text in zip(rl, rows):
            for c, ch in zip(cl, text):
                if ch == PLUS:
                    plus.add((r, c))
                elif ch != ZERO:
                    raise ValueError(f"bad cell symbol {ch!r}")
        return cls(len(rl), n, tuple(rl), tuple(cl), tuple(shape), frozenset(plus))

    def grid(self) -> list:
        return [
            "".join(self.cell(r, c) for c in self.column_labels[:length])
            for r, length in zip(self.row_labels, self.shape)
        ]

    def render(self) -> str:
        w = max([len(str(self.n))] + [1])
        head = " " * (w + 1) + " ".join(str(c).rjust(w) for c in self.column_labels)
        lines = [head.rstrip()]
        for r, row in zip(self.row_labels, self.grid()):
            lines.append(str(r).rjust(w) + " " + " ".join(ch.rjust(w) for ch in row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "row_labels": list(self.row_labels),
            "column_labels": list(self.column_labels),
            "shape": list(self.shape),
            "plus_cells": sorted([list(rc) for rc in self.plus_cells]),
        }


def le_pairings(neck: GrassmannNecklace) -> list:
    """For i = 2..n, the pairs (a_m, b_m) that receive a plus."""
    first = neck.term(1)
    out = []
    for i in range(2, neck.n + 1):
        cur = neck.term(i)
        a = sorted(first - cur, reverse=True)
        b = sorted(cur - first)
        out.append(list(zip(a, b)))
    return out


def le_from_necklace(neck: GrassmannNecklace) -> LeDiagram:
    if not is_grassmann_necklace(neck.terms):
        raise ValueError("not a Grassmann necklace")
    rows, cols, shape = labels_for_rows(neck.term(1), neck.n)
    d = LeDiagram(neck.k, neck.n, tuple(rows), tuple(cols), tuple(shape))
    plus = set()
    for pairs in le_pairings(neck):
        for a, b in pairs:
            if not d.has_cell(a, b):
                raise ValueError(f"cell ({a},{b}) lies outside the shape")
            plus.add((a, b))
    return LeDiagram(d.k, d.n, d.row_labels, d.column_labels, d.shape, frozenset(plus))


def validate_le(d: LeDiagram) -> bool:
    """Each 0 needs only 0s to its left, or only 0s above it."""
    for r, c in d.cells():
        if (r, c) in d.plus_cells:
            continue
        left = [(r, x) for x in d.column_labels if x > c]
        above = [(y, c) for y in d.row_labels if y < r]
        if any(x in d.plus_cells for x in left) and any(y in d.plus_cells for y in above):
            return False
    return True


def plus_count(d: LeDiagram) -> int:
    return len(d.plus_cells)


def le_diagram(W: WilsonLoopDiagram, strict: bool = True) -> LeDiagram:
    return le_from_necklace(grassmann_necklace(W, strict=strict))


def dimension(W: WilsonLoopDiagram) -> int:
    return plus_count(le_diagram(W))
