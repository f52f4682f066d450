"""Sparsity patterns of structured linear systems and their graph views.

A pattern records which entries of a matrix are free parameters; every
analysis in this package works from that zero/nonzero information alone.
Indices are 1-based throughout, including the on-disk file format.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class PreconditionError(ValueError):
    """An analysis was invoked outside its stated precondition."""


Entry = tuple[int, int]
Vertex = tuple[str, int]  # ("x" | "u" | "y", 1-based index)


@dataclass(frozen=True)
class Pattern:
    """Zero/nonzero structure of a matrix.

    ``nonzeros`` holds 1-based ``(row, col)`` positions of free parameters.
    Zero-row and zero-column patterns are legal; so is the all-zero pattern.
    """

    rows: int
    cols: int
    nonzeros: frozenset[Entry] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "nonzeros", frozenset(self.nonzeros))
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"pattern dimensions must be non-negative, got {self.rows}x{self.cols}")
        for i, j in self.nonzeros:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise ValueError(f"nonzero ({i},{j}) outside a {self.rows}x{self.cols} pattern")

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def sorted_nonzeros(self) -> list[Entry]:
        return sorted(self.nonzeros)

    def transpose(self) -> "Pattern":
        return Pattern(self.cols, self.rows, frozenset((j, i) for i, j in self.nonzeros))

    def column_support(self) -> frozenset[int]:
        """Indices of columns holding at least one free entry."""
        return frozenset(j for _, j in self.nonzeros)

    def induced(self, states: Iterable[int]) -> "Pattern":
        """Square subpattern on the given row/column indices, reindexed to 1..k."""
        if not self.is_square:
            raise ValueError("induced subpattern requires a square pattern")
        keep = sorted(set(states))
        pos = {s: k + 1 for k, s in enumerate(keep)}
        sub = frozenset(
            (pos[i], pos[j]) for i, j in self.nonzeros if i in pos and j in pos
        )
        return Pattern(len(keep), len(keep), sub)

    def zeroed(self, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> "Pattern":
        """Copy with all entries in the given rows and columns removed."""
        rkill, ckill = set(rows), set(cols)
        return Pattern(
            self.rows,
            self.cols,
            frozenset((i, j) for i, j in self.nonzeros if i not in rkill and j not in ckill),
        )


def stack(top: Pattern, bottom: Pattern) -> Pattern:
    """Vertical composite: ``bottom`` appended below ``top``."""
    if top.cols != bottom.cols:
        raise ValueError(f"cannot stack {top.cols}-column over {bottom.cols}-column pattern")
    shifted = frozenset((i + top.rows, j) for i, j in bottom.nonzeros)
    return Pattern(top.rows + bottom.rows, top.cols, top.nonzeros | shifted)


def hstack(left: Pattern, right: Pattern) -> Pattern:
    """Horizontal composite: ``right`` appended after ``left``."""
    if left.rows != right.rows:
        raise ValueError(f"cannot place {right.rows}-row beside {left.rows}-row pattern")
    shifted = frozenset((i, j + left.cols) for i, j in right.nonzeros)
    return Pattern(left.rows, left.cols + right.cols, left.nonzeros | shifted)


def unit_row(n: int, i: int) -> Pattern:
    """1 x n pattern with a single free entry in column ``i``."""
    if not 1 <= i <= n:
        raise ValueError(f"unit row index {i} out of range 1..{n}")
    return Pattern(1, n, frozenset({(1, i)}))


def identity_pattern(n: int) -> Pattern:
    return Pattern(n, n, frozenset((i, i) for i in range(1, n + 1)))


def dedicated_rows(n: int, states: Iterable[int]) -> Pattern:
    """One dedicated row per state in ``states`` (ascending), each with one entry."""
    ordered = sorted(set(states))
    for s in ordered:
        if not 1 <= s <= n:
            raise ValueError(f"state index {s} out of range 1..{n}")
    return Pattern(len(ordered), n, frozenset((k + 1, s) for k, s in enumerate(ordered)))


@dataclass(frozen=True)
class SystemPattern:
    """Bundle of the state, input, output and functional patterns of one system."""

    A: Pattern
    B: Pattern | None = None
    C: Pattern | None = None
    F: Pattern | None = None

    def __post_init__(self) -> None:
        if not self.A.is_square:
            raise ValueError(f"A must be square, got {self.A.rows}x{self.A.cols}")
        if self.A.rows < 1:
            raise ValueError("state dimension must be at least 1")
        n = self.A.rows
        if self.B is not None and self.B.rows != n:
            raise ValueError(f"B must have {n} rows, got {self.B.rows}")
        if self.C is not None and self.C.cols != n:
            raise ValueError(f"C must have {n} columns, got {self.C.cols}")
        if self.F is not None and self.F.cols != n:
            raise ValueError(f"F must have {n} columns, got {self.F.cols}")

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def m(self) -> int:
        return self.B.cols if self.B is not None else 0

    @property
    def p(self) -> int:
        return self.C.rows if self.C is not None else 0

    @property
    def r(self) -> int:
        return self.F.rows if self.F is not None else 0


@dataclass(frozen=True)
class Digraph:
    """Directed graph over tagged state/input/output vertices."""

    vertices: tuple[Vertex, ...]
    edges: frozenset[tuple[Vertex, Vertex]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))
        vset = set(self.vertices)
        for tail, head in self.edges:
            if tail not in vset or head not in vset:
                raise ValueError(f"edge {tail}->{head} references a missing vertex")
            if head[0] == "u":
                raise ValueError(f"input vertex {head} cannot have incoming edges")
            if tail[0] == "y":
                raise ValueError(f"output vertex {tail} cannot have outgoing edges")


def system_digraph(sys: SystemPattern) -> Digraph:
    """Directed graph of a system: state, input and output vertices with the
    edges induced by the nonzero entries of A, B and C."""
    n, m, p = sys.n, sys.m, sys.p
    vertices: list[Vertex] = [("x", i) for i in range(1, n + 1)]
    vertices += [("u", i) for i in range(1, m + 1)]
    vertices += [("y", i) for i in range(1, p + 1)]
    edges: set[tuple[Vertex, Vertex]] = set()
    for j, i in sys.A.nonzeros:  # A[j,i] != 0  <=>  x_i -> x_j
        edges.add((("x", i), ("x", j)))
    if sys.B is not None:
        for j, i in sys.B.nonzeros:  # B[j,i] != 0  <=>  u_i -> x_j
            edges.add((("u", i), ("x", j)))
    if sys.C is not None:
        for j, i in sys.C.nonzeros:  # C[j,i] != 0  <=>  x_i -> y_j
            edges.add((("x", i), ("y", j)))
    return Digraph(tuple(vertices), frozenset(edges))


def state_digraph(A: Pattern) -> Digraph:
    """Directed graph on the state vertices alone."""
    return system_digraph(SystemPattern(A=A))


@dataclass(frozen=True)
class Bigraph:
    """Bipartite graph with non-negative integer edge costs.

    Edges are oriented right part to left part and stored canonically sorted,
    one edge at most per (right, left) slot.
    """

    left: int
    right: int
    edges: tuple[tuple[int, int, int], ...]  # (right, left, cost)

    def __post_init__(self) -> None:
        canon = tuple(sorted(self.edges))
        object.__setattr__(self, "edges", canon)
        seen: set[Entry] = set()
        for r, l, c in canon:
            if not (1 <= r <= self.right and 1 <= l <= self.left):
                raise ValueError(f"edge ({r},{l}) outside parts of sizes {self.right}/{self.left}")
            if c < 0:
                raise ValueError(f"edge ({r},{l}) has negative cost {c}")
            if (r, l) in seen:
                raise ValueError(f"duplicate edge ({r},{l})")
            seen.add((r, l))
        object.__setattr__(self, "_cost", {(r, l): c for r, l, c in canon})

    def cost(self, r: int, l: int) -> int:
        return self._cost[(r, l)]  # type: ignore[attr-defined]

    def weight(self, matching: "Matching") -> int:
        return sum(self.cost(r, l) for r, l in matching.edges)


@dataclass(frozen=True)
class Matching:
    """Set of bipartite edges, no two sharing an endpoint on either side."""

    edges: frozenset[Entry]  # (right, left) pairs

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))
        rights = [r for r, _ in self.edges]
        lefts = [l for _, l in self.edges]
        if len(set(rights)) != len(rights) or len(set(lefts)) != len(lefts):
            raise ValueError("matching edges share an endpoint")

    @property
    def size(self) -> int:
        return len(self.edges)

    def right_matched(self) -> frozenset[int]:
        return frozenset(r for r, _ in self.edges)

    def left_matched(self) -> frozenset[int]:
        return frozenset(l for _, l in self.edges)


def pattern_bigraph(M: Pattern) -> Bigraph:
    """Bipartite view of a pattern: rows on the left, columns on the right,
    a zero-cost edge (j, i) for every nonzero M[i, j]."""
    return Bigraph(M.rows, M.cols, tuple((j, i, 0) for i, j in M.sorted_nonzeros()))


def bigraph_pattern(g: Bigraph) -> Pattern:
    """Inverse of :func:`pattern_bigraph`, dropping costs."""
    return Pattern(g.left, g.right, frozenset((l, r) for r, l, _ in g.edges))
