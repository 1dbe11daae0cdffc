"""
Counting induced subcubes
=========================

Two enumerations of the induced hypercubes of a graph: the generic
bottom/top check, and one subcube per subset of a vertex's removable 1s.
"""

# %%
from fibrun import census
from fibrun.graphs import build

g = build("r", 5)
oracle = census.enumerate_oracle(g)
top = census.enumerate_topvertex(g)
print(oracle, oracle == top)
for sub in list(oracle)[:8]:
    print(sub.bottom, sub.top, "k =", sub.k, "distance =", sub.distance)

# %%
print("D(R_5) =", census.distance_cube_polynomial(g))
print("C(R_5) =", census.cube_polynomial(g))
print("DCW(R_5) =", census.dcw_polynomial(g))

# %%
# Dropping the weight of the top vertex gives a different polynomial,
# which only agrees once q = 1.
naive = census.naive_distance_polynomial(g)
print(naive, "|", naive.substitute({"q": 1}))

# %%
for n in range(2, 9):
    d = census.distance_cube_polynomial
    lhs = d(build("rl", n))
    rhs = 2 * d(build("r", n - 1)) - d(build("r", n - 2))
    print(n, lhs == rhs, lhs)
