import itertools
import re

import pytest

from fibrun import graphs, words
from fibrun.errors import ResourceLimit, Unreachable, VertexNotInGraph
from fibrun.graphs import Family, build


def all_words(n):
    return ["".join(p) for p in itertools.product("01", repeat=n)]


def run_ok(s):
    return all(len(m.group(2)) > len(m.group(1)) for m in re.finditer(r"(1+)(0*)", s))


def circ_ok(s):
    if "1" not in s:
        return True
    starts = [i for i in range(len(s)) if s[i] == "1" and s[i - 1] == "0"]
    return bool(starts) and all(run_ok(s[i:] + s[:i]) for i in starts)


BRUTE = {
    Family.HYPERCUBE: lambda s: True,
    Family.FIBONACCI: lambda s: "11" not in s,
    Family.LUCAS: lambda s: "11" not in s + s[:1],
    Family.FIBONACCI_RUN: lambda s: run_ok(s + "00"),
    Family.LUCAS_RUN: lambda s: run_ok(s + "00") and circ_ok(s + "0"),
}


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("n", range(0, 13))
def test_vertex_sets_match_brute_force(family, n):
    assert build(family, n).vertices == [s for s in all_words(n) if BRUTE[family](s)]


def test_build_examples():
    assert build("r", 1).vertices == ["0", "1"]
    assert build("rl", 1).vertices == ["0"]
    assert build("gamma", 2).vertices == ["00", "01", "10"]
    assert len(build("r", 5)) == 13
    assert build("lambda", 1).vertices == ["0"]
    assert build("r", 0).vertices == [""]


def test_fig1_r5_labels():
    fig1 = {"10001", "01001", "00001", "10000", "10010", "11000", "01000", "00010",
            "00000", "11100", "00100", "01100", "00110"}
    assert set(build("r", 5).vertices) == fig1


def test_fig2_rl5_labels():
    fig2 = {"01001", "00001", "10000", "10010", "11000", "01000", "00010", "00000",
            "00100", "01100", "00110"}
    assert set(build("rl", 5).vertices) == fig2
    assert set(build("rl", 4).vertices) == {"0010", "0110", "0001", "0000", "0100", "1000", "1100"}


def test_counts():
    for n in range(26):
        assert len(build("r", n)) == fib(n + 2)
    for n in range(21):
        assert len(build("rl", n)) == len(build("lambda", n))
        assert set(build("rl", n).vertex_ints) <= set(build("r", n).vertex_ints)


@pytest.mark.parametrize("n", range(0, 15))
def test_phi_maps_families(n):
    gamma = {words.phi(s + "00") for s in build("gamma", n).vertices}
    assert gamma == {s + "00" for s in build("r", n).vertices}
    lam = {words.phi(s + "00") for s in build("lambda", n).vertices}
    assert lam == {s + "00" for s in build("rl", n).vertices}


def test_degrees():
    g = build("r", 5)
    assert g.degrees("11100") == (2, 0)
    assert build("r", 1).degrees("0") == (0, 1)
    for fam in ("gamma", "lambda", "r", "rl"):
        g = build(fam, 6)
        singles = sum(1 for v in g.vertices if v.count("1") == 1)
        assert g.degrees("000000") == (0, singles)


def test_degrees_sum_to_neighbors():
    g = build("rl", 9)
    for v in g.vertices:
        down, up = g.degrees(v)
        assert down + up == len(g.neighbors(v))


def test_degrees_rejects_non_vertex():
    with pytest.raises(VertexNotInGraph):
        build("r", 5).degrees("10100")
    with pytest.raises(VertexNotInGraph):
        build("r", 5).degrees("0")


def test_bfs_distance():
    g = build("r", 5)
    assert g.bfs_distance("00000", "11100") == 3
    assert g.bfs_distance("01100", "01100") == 0


def test_distance_from_zero_is_weight():
    for n in range(13):
        g = build("r", n)
        dist = g.distances_from("0" * n)
        assert all(dist[v] == v.count("1") for v in g.vertices)


def _witness(n):
    g = build("r", n)
    for u in g.vertices:
        dist = g.distances_from(u)
        for v in g.vertices:
            if dist[v] > sum(a != b for a, b in zip(u, v)):
                return u, v
    return None


def test_r7_not_isometric():
    assert _witness(7) is not None
    for n in range(7):
        assert _witness(n) is None


def test_unreachable():
    g = graphs.FamilyGraph(Family.HYPERCUBE, 2, [0b00, 0b11])
    with pytest.raises(Unreachable):
        g.bfs_distance("00", "11")


def test_resource_guard():
    with pytest.raises(ResourceLimit):
        build("q", graphs.MAX_N_SCAN + 1)
    with pytest.raises(ResourceLimit):
        build("r", graphs.MAX_N_RUN + 1)


def test_membership():
    g = build("gamma", 3)
    assert "101" in g and "110" not in g and "10" not in g and "abc" not in g
