"""Induced subcubes of hypercube subgraphs and their enumerator polynomials.

A subcube is identified by its bottom and top vertices. Two independent
enumerations are provided:

* ``enumerate_oracle`` works for any induced subgraph of Q_n: a pair
  b <= t (bitwise) spans a subcube iff every word between them is a vertex;
* ``enumerate_topvertex`` takes each vertex as a top and every subset of its
  down-flippable 1s as the free directions. It is only claimed for the
  Fibonacci/Lucas cubes and the run graphs, and the test suite checks it
  against the oracle.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .errors import ResourceLimit, UnsupportedFamily
from .graphs import Family, FamilyGraph, int_to_word
from .polyring import MPoly

ORACLE_MAX_N = 14
# above this n the default census method switches to top-vertex counting
ORACLE_DEFAULT_MAX_N = 10

METHODS = ("oracle", "topvertex")


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True, order=True)
class Subcube:
    bottom: str
    top: str

    @property
    def k(self) -> int:
        return sum(a != b for a, b in zip(self.bottom, self.top))

    @property
    def distance(self) -> int:
        return self.bottom.count("1")


class Census:
    """Set of induced subcubes stored as (bottom, top) int pairs."""

    def __init__(self, n: int, pairs: Iterable[Tuple[int, int]]):
        self.n = n
        self.pairs: FrozenSet[Tuple[int, int]] = frozenset(pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Census) and (self.n, self.pairs) == (other.n, other.pairs)

    def __hash__(self) -> int:
        return hash((self.n, self.pairs))

    def __repr__(self) -> str:
        return f"Census(n={self.n}, {len(self)} subcubes)"

    def sorted_pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.pairs, key=lambda bt: (bt[0].bit_count(), bt[0], bt[1]))

    def __iter__(self) -> Iterator[Subcube]:
        for b, t in self.sorted_pairs():
            yield Subcube(int_to_word(b, self.n), int_to_word(t, self.n))

    def counts(self) -> Counter:
        """Counter of (distance, dimension) pairs."""
        return Counter(((b.bit_count(), (b ^ t).bit_count()) for b, t in self.pairs))

    def distance_cube_polynomial(self) -> MPoly:
        return MPoly({(d, k): c for (d, k), c in self.counts().items()}, ("q", "x"))


def enumerate_oracle(g: FamilyGraph, max_n: int = ORACLE_MAX_N) -> Census:
    if g.n > max_n:
        raise ResourceLimit(f"oracle census capped at n <= {max_n}")
    members = set(g.vertex_ints)
    pairs = []
    for t in g.vertex_ints:
        for b in _submasks(t):
            if b in members and all(b | s in members for s in _submasks(t ^ b)):
                pairs.append((b, t))
    return Census(g.n, pairs)


def enumerate_topvertex(g: FamilyGraph) -> Census:
    if g.family is Family.HYPERCUBE:
        raise UnsupportedFamily("top-vertex census is only defined for gamma, lambda, r and rl")
    pairs = []
    for t in g.vertex_ints:
        free = 0
        for bit in g.down_bits(t):
            free |= bit
        pairs.extend((t ^ s, t) for s in _submasks(free))
    return Census(g.n, pairs)


def default_method(g: FamilyGraph) -> str:
    if g.family is Family.HYPERCUBE or g.n <= ORACLE_DEFAULT_MAX_N:
        return "oracle"
    return "topvertex"


@lru_cache(maxsize=512)
def census(g: FamilyGraph, method: Optional[str] = None) -> Census:
    method = method or default_method(g)
    if method == "oracle":
        return enumerate_oracle(g)
    if method == "topvertex":
        return enumerate_topvertex(g)
    raise ValueError(f"unknown census method {method!r}; expected one of {METHODS}")


def distance_cube_polynomial(g: FamilyGraph, method: Optional[str] = None) -> MPoly:
    """D_G(x, q): sum over subcubes of x^dimension q^weight(bottom)."""
    return census(g, method).distance_cube_polynomial()


def cube_polynomial(g: FamilyGraph, method: Optional[str] = None) -> MPoly:
    """C_G(x) = D_G(x, 1)."""
    return distance_cube_polynomial(g, method).substitute({"q": 1}).with_vars(("x",))


def dcw_polynomial(g: FamilyGraph) -> MPoly:
    """Sum over vertices of d^down(v) z^(weight(v) - down(v))."""
    counts = Counter()
    for v in g.vertex_ints:
        r = len(g.down_bits(v))
        counts[(r, v.bit_count() - r)] += 1
    return MPoly(counts, ("d", "z"))


def weight_polynomial(g: FamilyGraph, var: str = "d") -> MPoly:
    counts = Counter((v.bit_count(),) for v in g.vertex_ints)
    return MPoly(counts, (var,))


def updeg_polynomial(g: FamilyGraph) -> MPoly:
    counts = Counter((len(g.up_bits(v)),) for v in g.vertex_ints)
    return MPoly(counts, ("u",))


def naive_distance_polynomial(g: FamilyGraph) -> MPoly:
    """Sum over vertices of (q + x)^down(v).

    Ignores vertex weight, so it is wrong as a distance polynomial for R_n,
    but it agrees with D_G at q = 1.
    """
    return dcw_polynomial(g).substitute({"d": MPoly.var("q") + MPoly.var("x"), "z": 1}).with_vars(("q", "x"))
