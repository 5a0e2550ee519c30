"""Edge-list ingestion and exact adjacency ground truth.

Graphs are simple (no self-loops, no duplicate edges) with dense internal
ids 0..n-1. External ids from edge-list files may be arbitrary non-negative
64-bit integers; they are remapped densely in sorted order, so the parsed
graph does not depend on the order of lines in the input.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import IO, Iterable

import numpy as np

log = logging.getLogger(__name__)

_MAX_ID = 2**64 - 1

# token split: runs of spaces/tabs, or a single comma (optionally padded)
_SPLIT = re.compile(r"\s*,\s*|[ \t]+")


class GraphParseError(ValueError):
    """Raised when an edge-list input cannot be parsed."""


@dataclass(eq=False)
class Graph:
    """Adjacency-set graph over dense internal ids.

    ``adjacency[u]`` holds u's neighbor set (out-neighbors when directed).
    ``external_ids[u]`` is the original id of internal node u; sorted
    ascending, so the mapping is canonical. Treat instances as immutable
    after construction; they are then safe for concurrent readers.
    """

    n: int
    directed: bool
    adjacency: list[frozenset[int]]
    external_ids: np.ndarray  # (n,) uint64, internal id -> external id
    _ext2int: dict[int, int] = field(repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self._ext2int:
            self._ext2int = {int(e): i for i, e in enumerate(self.external_ids)}

    @property
    def num_edges(self) -> int:
        total = sum(len(s) for s in self.adjacency)
        return total if self.directed else total // 2

    def neighbors(self, u: int) -> frozenset[int]:
        self._check_id(u)
        return self.adjacency[u]

    def internal_id(self, external: int) -> int:
        try:
            return self._ext2int[int(external)]
        except KeyError:
            raise ValueError(f"unknown external node id {external}") from None

    def external_id(self, internal: int) -> int:
        self._check_id(internal)
        return int(self.external_ids[internal])

    def _check_id(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise ValueError(f"node id {u} out of range [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.directed == other.directed
            and self.adjacency == other.adjacency
            and np.array_equal(self.external_ids, other.external_ids)
        )


def adjacent(g: Graph, u: int, v: int) -> bool:
    """Exact adjacency: true iff edge (u, v) exists (arc u->v when directed).

    Internal ids; self queries are rejected.
    """
    g._check_id(u)
    g._check_id(v)
    if u == v:
        raise ValueError("self query")
    return v in g.adjacency[u]


def graph_from_edges(pairs: Iterable[tuple[int, int]], directed: bool = False) -> Graph:
    """Build a Graph from (external_u, external_v) pairs.

    Deduplicates edges and drops self-loops; nodes are the union of
    endpoint ids, remapped densely in sorted order.
    """
    pairs = list(pairs)
    self_loops = sum(1 for u, v in pairs if u == v)
    if self_loops:
        log.warning("skipped %d self-loop edge(s)", self_loops)
    pairs = [(u, v) for u, v in pairs if u != v]
    if not pairs:
        raise GraphParseError("empty graph")
    ids = sorted({e for pair in pairs for e in pair})
    ext2int = {e: i for i, e in enumerate(ids)}
    n = len(ids)
    adj: list[set[int]] = [set() for _ in range(n)]
    for eu, ev in pairs:
        u, v = ext2int[eu], ext2int[ev]
        adj[u].add(v)
        if not directed:
            adj[v].add(u)
    return Graph(
        n=n,
        directed=directed,
        adjacency=[frozenset(s) for s in adj],
        external_ids=np.array(ids, dtype=np.uint64),
    )


def parse_edge_list(text: str | bytes | IO, directed: bool = False) -> Graph:
    """Parse edge-list text into a Graph.

    One edge per line, two non-negative integer tokens split on runs of
    spaces/tabs or a single comma. Blank lines and lines starting with '#'
    or '%' are ignored. Self-loop lines are skipped (with a logged warning
    count); duplicate edges collapse.
    """
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphParseError(f"input is not UTF-8: {exc}") from None

    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "%")):
            continue
        if line.count(",") > 1:
            raise GraphParseError(f"line {lineno}: more than one comma: {raw!r}")
        tokens = [t for t in _SPLIT.split(line) if t]
        if len(tokens) != 2:
            raise GraphParseError(
                f"line {lineno}: expected two integer tokens, got {len(tokens)}: {raw!r}"
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer token in {raw!r}") from None
        if u < 0 or v < 0 or u > _MAX_ID or v > _MAX_ID:
            raise GraphParseError(f"line {lineno}: node id out of 64-bit range: {raw!r}")
        pairs.append((u, v))

    return graph_from_edges(pairs, directed=directed)


def load_edge_list(path: str, directed: bool = False) -> Graph:
    """Parse an edge-list file from disk."""
    with open(path, "rb") as f:
        return parse_edge_list(f, directed=directed)


def canonical_edge_list(g: Graph) -> str:
    """Emit the canonical edge list (external ids, sorted, one edge per line).

    Re-parsing the result with the same directed flag reproduces the Graph
    exactly.
    """
    lines = []
    for u in range(g.n):  # internal order == ascending external order
        for v in sorted(g.adjacency[u]):
            if g.directed or u < v:
                lines.append(f"{g.external_id(u)} {g.external_id(v)}")
    return "\n".join(lines) + "\n"
