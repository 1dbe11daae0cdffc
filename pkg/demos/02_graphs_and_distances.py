"""
Fibonacci-run and Lucas-run graphs
==================================

Build the five families, look at degrees, and check that graph distance
from the zero word is the Hamming weight even where R_n is not isometric.
"""

# %%
from fibrun.graphs import build

for family in ("q", "gamma", "lambda", "r", "rl"):
    print(family, [len(build(family, n)) for n in range(10)])

# %%
g = build("r", 5)
for v in g.vertices:
    print(v, "down/up =", g.degrees(v))

# %%
zero = "0" * 10
g = build("r", 10)
dist = g.distances_from(zero)
print(all(dist[v] == v.count("1") for v in g.vertices))

# %%
# A pair at Hamming distance 2 that is 4 apart in R_7.
g = build("r", 7)
print(g.bfs_distance("1001000", "1111000"))
