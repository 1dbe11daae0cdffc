"""Vertex sets of hypercube subgraphs and queries on them.

Vertices are stored as ints with u_1 in the most significant bit, so the
numeric order of a vertex list is the lexicographic order of the words.
Edges are never stored; adjacency is a single bit flip plus a membership
test.
"""
from __future__ import annotations

import enum
from collections import deque
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple, Union

from . import words
from .errors import ResourceLimit, Unreachable, VertexNotInGraph

MAX_N_RUN = 30
MAX_N_SCAN = 24

Vertex = Union[str, int]


class Family(enum.Enum):
    HYPERCUBE = "q"
    FIBONACCI = "gamma"
    LUCAS = "lambda"
    FIBONACCI_RUN = "r"
    LUCAS_RUN = "rl"

    @classmethod
    def parse(cls, name: Union[str, "Family"]) -> "Family":
        if isinstance(name, Family):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown family {name!r}; expected one of "
                             f"{[f.value for f in cls]}") from None


def word_to_int(s: str) -> int:
    return int(s, 2) if s else 0


def int_to_word(v: int, n: int) -> str:
    return format(v, f"0{n}b") if n else ""


class FamilyGraph:
    """Induced subgraph of Q_n; immutable once built."""

    __slots__ = ("family", "n", "vertex_ints", "_members")

    def __init__(self, family: Family, n: int, vertex_ints):
        self.family = family
        self.n = n
        self.vertex_ints = tuple(sorted(vertex_ints))
        self._members = frozenset(self.vertex_ints)

    def __repr__(self) -> str:
        return f"FamilyGraph({self.family.value}, n={self.n}, |V|={len(self)})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, FamilyGraph) and self.family == other.family
                and self.n == other.n)

    def __hash__(self) -> int:
        return hash((self.family, self.n))

    def __len__(self) -> int:
        return len(self.vertex_ints)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    @property
    def vertices(self) -> List[str]:
        return [int_to_word(v, self.n) for v in self.vertex_ints]

    def _int(self, v: Vertex) -> int:
        if isinstance(v, str):
            if len(v) != self.n:
                raise VertexNotInGraph(v)
            v = word_to_int(v)
        return v

    def __contains__(self, v: Vertex) -> bool:
        try:
            return self._int(v) in self._members
        except (ValueError, VertexNotInGraph):
            return False

    def _require(self, v: Vertex) -> int:
        iv = self._int(v)
        if iv not in self._members:
            raise VertexNotInGraph(v)
        return iv

    def down_bits(self, v: int) -> List[int]:
        """Masks of the 1-bits of ``v`` whose flip stays in the graph."""
        out = []
        b = v
        while b:
            low = b & -b
            if v ^ low in self._members:
                out.append(low)
            b ^= low
        return out

    def up_bits(self, v: int) -> List[int]:
        return [1 << i for i in range(self.n)
                if not v >> i & 1 and v | (1 << i) in self._members]

    def degrees(self, v: Vertex) -> Tuple[int, int]:
        """(down-degree, up-degree) of ``v``."""
        iv = self._require(v)
        return len(self.down_bits(iv)), len(self.up_bits(iv))

    def neighbors(self, v: Vertex) -> List[str]:
        iv = self._require(v)
        return sorted(int_to_word(iv ^ (1 << i), self.n) for i in range(self.n)
                      if iv ^ (1 << i) in self._members)

    def _bfs(self, source: int) -> Dict[int, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for i in range(self.n):
                w = u ^ (1 << i)
                if w in self._members and w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def distances_from(self, source: Vertex) -> Dict[str, int]:
        dist = self._bfs(self._require(source))
        return {int_to_word(v, self.n): d for v, d in dist.items()}

    def bfs_distance(self, u: Vertex, v: Vertex) -> int:
        iu, iv = self._require(u), self._require(v)
        dist = self._bfs(iu)
        if iv not in dist:
            raise Unreachable(f"no path from {u!r} to {v!r}")
        return dist[iv]


def fibonacci_ints(n: int) -> List[int]:
    """Words without two adjacent 1s, by appending one bit at a time."""
    layer = [0]
    for _ in range(n):
        nxt = []
        for v in layer:
            nxt.append(v << 1)
            if not v & 1:
                nxt.append(v << 1 | 1)
        layer = nxt
    return layer


def run_ints(n: int) -> List[int]:
    """V(R_n): run-constrained words of length n + 2 with the tail 00 removed."""
    return [word_to_int(w[:-2]) for w in words.monoid_words(words.Alphabet.R, n + 2)]


def _lucas_ok(v: int, n: int) -> bool:
    return n == 0 or not (v & 1 and v >> (n - 1) & 1)


@lru_cache(maxsize=256)
def build(family: Union[Family, str], n: int) -> FamilyGraph:
    family = Family.parse(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    if family is Family.HYPERCUBE:
        if n > MAX_N_SCAN:
            raise ResourceLimit(f"Q_n scan capped at n <= {MAX_N_SCAN}")
        return FamilyGraph(family, n, range(1 << n))
    if n > MAX_N_RUN:
        raise ResourceLimit(f"{family.value} graphs capped at n <= {MAX_N_RUN}")
    if family is Family.FIBONACCI:
        return FamilyGraph(family, n, fibonacci_ints(n))
    if family is Family.LUCAS:
        parent = build(Family.FIBONACCI, n)
        return FamilyGraph(family, n, [v for v in parent.vertex_ints if _lucas_ok(v, n)])
    if family is Family.FIBONACCI_RUN:
        return FamilyGraph(family, n, run_ints(n))
    parent = build(Family.FIBONACCI_RUN, n)
    return FamilyGraph(family, n, [
        v for v in parent.vertex_ints
        if words.is_circular_run_constrained(int_to_word(v, n) + "0")])
