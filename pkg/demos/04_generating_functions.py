"""
Generating functions
====================

Expand the catalog rational functions and rebuild one of them from the
letters of R alone.
"""

# %%
from fibrun import genfunc
from fibrun.words import Alphabet

for gf_id in genfunc.CATALOG:
    print(gf_id, genfunc.series_text(genfunc.catalog_expand(gf_id, 5)))

# %%
letters = genfunc.letter_series(Alphabet.R, "dcw", 11)
print(genfunc.series_text(letters))
built = genfunc.tail_adjust(genfunc.monoid_gf(letters, 11))
print(built == genfunc.catalog_expand("dcw_r", 9))

# %%
# Lucas-run series from the Fibonacci-run one.
print(genfunc.lucas_run_from_fibonacci_run(8) == genfunc.catalog_expand("d_rl", 8))
