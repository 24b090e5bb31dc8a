"""Ferrers diagrams: the shape type, diagonals, transposes, lattice paths.

Conventions.  A diagram lives in an n x m board with rows indexed 1..n
top to bottom and columns 1..m left to right, so (1,1) is the top-left
corner.  The diagram is top-aligned and right-aligned and is encoded by
its column heights [c_1, ..., c_m], weakly increasing with c_m = n.
Diagonal r (for r = 1..m+n-1) is the set of board cells with
j - i = m - r; diagonal 1 is the top-right corner cell and indices grow
toward the bottom-left.  All m+n-1 diagonals are tracked, including the
n-1 below the main one, because several results depend on the counts
beyond index m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True, slots=True)
class FerrersDiagram:
    cols: tuple[int, ...]

    def __post_init__(self):
        if not self.cols:
            raise ValueError("a Ferrers diagram has at least one column")
        if any(not isinstance(c, int) or c < 1 for c in self.cols):
            raise ValueError("column heights must be positive integers")
        if any(a > b for a, b in zip(self.cols, self.cols[1:])):
            raise ValueError(
                f"column heights must be weakly increasing, got {list(self.cols)}"
            )

    @property
    def n(self) -> int:
        """Row count; the rightmost column always has full height."""
        return self.cols[-1]

    @property
    def m(self) -> int:
        return len(self.cols)

    @property
    def size(self) -> int:
        return sum(self.cols)

    def col_height(self, j: int) -> int:
        return self.cols[j - 1]

    def __contains__(self, cell: tuple[int, int]) -> bool:
        i, j = cell
        return 1 <= j <= self.m and 1 <= i <= self.cols[j - 1]

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells in column-major order: column 1 top-down, then column 2, ..."""
        for j, c in enumerate(self.cols, start=1):
            for i in range(1, c + 1):
                yield (i, j)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.cols) + "]"


@dataclass(frozen=True, slots=True)
class DiagonalProfile:
    """Cardinalities |D_r ∩ F| for r = 1..m+n-1, stored 0-indexed."""

    counts: tuple[int, ...]

    def count(self, r: int) -> int:
        return self.counts[r - 1]

    def __len__(self):
        return len(self.counts)

    def surplus(self, r: int) -> int:
        """Sum over all diagonals of max(0, |D_i ∩ F| - r)."""
        return sum(c - r for c in self.counts if c > r)

    def surplus_first(self, limit: int, r: int) -> int:
        """Same sum restricted to diagonals 1..limit."""
        return sum(c - r for c in self.counts[:limit] if c > r)

    def clipped_sum(self, r: int) -> int:
        """Sum over all diagonals of min(r, |D_i ∩ F|)."""
        return sum(min(r, c) for c in self.counts)

    def vanishes_beyond(self, index: int) -> bool:
        """True when |D_i ∩ F| = 0 for every i > index."""
        return not any(self.counts[index:])


def parse_diagram(text: str) -> FerrersDiagram:
    """Parse "[1,3,3,4,5]" (brackets optional) into a diagram."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    if not s.strip():
        raise ValueError("empty diagram")
    try:
        cols = tuple(int(tok.strip()) for tok in s.split(","))
    except ValueError:
        raise ValueError(f"could not parse diagram from {text!r}") from None
    return FerrersDiagram(cols)


def diagonal_profile(diagram: FerrersDiagram) -> DiagonalProfile:
    m = diagram.m
    counts = [0] * (m + diagram.n - 1)
    for j, c in enumerate(diagram.cols, start=1):
        # cells (i, j) for i = 1..c lie on diagonals m - j + 1 .. m - j + c
        for r in range(m - j + 1, m - j + c + 1):
            counts[r - 1] += 1
    return DiagonalProfile(tuple(counts))


def transpose(diagram: FerrersDiagram) -> FerrersDiagram:
    """Reflect across the main anti-diagonal: (i,j) -> (m+1-j, n+1-i).

    Sends an n x m diagram to an m x n one and is an involution.  Each
    diagonal is carried onto the diagonal with the same index, so the
    diagonal profile is preserved verbatim.
    """
    n, m = diagram.n, diagram.m
    cols = tuple(
        sum(1 for c in diagram.cols if c >= n + 1 - jp) for jp in range(1, n + 1)
    )
    return FerrersDiagram(cols)


def enumerate_diagrams(n: int, m: int) -> Iterator[FerrersDiagram]:
    """All n x m diagrams, i.e. weakly increasing height vectors ending
    in n, in lexicographic order of the height vector."""
    if n < 1 or m < 1:
        raise ValueError("board dimensions must be positive")

    def rec(prefix: list[int], j: int) -> Iterator[FerrersDiagram]:
        if j == m:
            yield FerrersDiagram(tuple(prefix) + (n,))
            return
        lo = prefix[-1] if prefix else 1
        for c in range(lo, n + 1):
            prefix.append(c)
            yield from rec(prefix, j + 1)
            prefix.pop()

    yield from rec([], 1)


@dataclass(frozen=True, slots=True)
class LatticePath:
    """Down-and-right walk on the (n-1) x (m-1) grid between opposite
    corners, written as a string over {R, D}."""

    steps: str

    def __post_init__(self):
        if any(s not in "RD" for s in self.steps):
            raise ValueError(f"path steps must be R or D, got {self.steps!r}")

    def __str__(self):
        return self.steps


def to_path(diagram: FerrersDiagram) -> LatticePath:
    """Boundary walk of the diagram, from the top-left grid corner.

    The walk separates the dots (above/right of it) from the empty part
    of the board: the number of R steps before the (i-1)-th D step is
    the number of columns missing from row i.
    """
    n, m = diagram.n, diagram.m
    row_len = [sum(1 for c in diagram.cols if c >= i) for i in range(1, n + 1)]
    steps = []
    done_r = 0
    for i in range(2, n + 1):
        need = m - row_len[i - 1]
        steps.append("R" * (need - done_r))
        steps.append("D")
        done_r = need
    steps.append("R" * (m - 1 - done_r))
    return LatticePath("".join(steps))


def from_path(path: LatticePath | str, n: int, m: int) -> FerrersDiagram:
    """Inverse of to_path for an n x m board."""
    steps = path.steps if isinstance(path, LatticePath) else str(path)
    if steps.count("R") != m - 1 or steps.count("D") != n - 1:
        raise ValueError(
            f"path needs exactly {m - 1} R and {n - 1} D steps for an "
            f"{n}x{m} board, got {steps!r}"
        )
    if len(steps) != m + n - 2:
        raise ValueError("path contains stray characters")
    row_len = [m]
    r_seen = 0
    for s in steps:
        if s == "R":
            r_seen += 1
        else:
            row_len.append(m - r_seen)
    cols = tuple(
        sum(1 for length in row_len if length >= m - j + 1) for j in range(1, m + 1)
    )
    return FerrersDiagram(cols)


def is_generalized_dyck(path: LatticePath | str) -> bool:
    """True when every prefix has at least as many R as D steps."""
    steps = (path if isinstance(path, LatticePath) else LatticePath(str(path))).steps
    height = 0
    for s in steps:
        height += 1 if s == "R" else -1
        if height < 0:
            return False
    return True
