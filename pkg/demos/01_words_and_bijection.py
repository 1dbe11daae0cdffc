"""
Run-constrained words and the F -> R bijection
==============================================

Words are plain strings. Both alphabets have one letter of each odd
length, which is what makes the letterwise map length preserving.
"""

# %%
from fibrun import words
from fibrun.words import Alphabet

print([letter for _, letter in Alphabet.F.letters(7)])
print([letter for _, letter in Alphabet.R.letters(7)])

# %%
# Parsing is greedy; a run of p ones must be closed by exactly p+1 zeros.
s = "01001110000"
print(s, "->", words.factorize(s, Alphabet.R))
try:
    words.factorize("0110", Alphabet.R)
except words.NotInLanguage as exc:
    print(exc)

# %%
# phi sends the extended Fibonacci strings of each length onto the
# run-constrained strings of that length.
for s in words.monoid_words(Alphabet.F, 7):
    print(s, words.phi(s))

# %%
# Circular membership decides the Lucas-run vertices: s is one when s00 is
# run-constrained and s0 is circularly so.
for s in ["10010", "11000", "10001"]:
    print(s, words.classify(s + "0", words.CIRCULAR_RUN_CONSTRAINED))
