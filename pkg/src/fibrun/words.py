"""Binary words and the run-length languages built on them.

Words are plain ``str`` objects over ``"0"``/``"1"``; the leftmost
character is u_1. The empty string is the empty word.

Two infinite alphabets generate the monoids used throughout:

* ``Alphabet.F`` = {0, 100, 10100, ...}, letter i = (10)^i 0, generating the
  extended Fibonacci strings;
* ``Alphabet.R`` = {0, 100, 11000, ...}, letter i = 1^i 0^(i+1), generating
  the run-constrained strings.

Letter i has length 2i + 1 in both, so ``phi`` (letterwise F -> R) is a
length-preserving bijection.
"""
from __future__ import annotations

import enum
from itertools import groupby
from typing import Iterator, List, Tuple

from .errors import NotInLanguage

FIBONACCI = "fibonacci"
RUN_CONSTRAINED = "run_constrained"
CIRCULAR_RUN_CONSTRAINED = "circular_run_constrained"
KINDS = (FIBONACCI, RUN_CONSTRAINED, CIRCULAR_RUN_CONSTRAINED)


class Alphabet(enum.Enum):
    F = "F"
    R = "R"

    def letter(self, i: int) -> str:
        if i < 0:
            raise ValueError("letter index must be non-negative")
        if self is Alphabet.F:
            return "10" * i + "0"
        return "1" * i + "0" * (i + 1)

    def letters(self, max_length: int) -> Iterator[Tuple[int, str]]:
        """(index, letter) for every letter of length <= max_length."""
        i = 0
        while 2 * i + 1 <= max_length:
            yield i, self.letter(i)
            i += 1


def _check(s: str) -> str:
    if not isinstance(s, str) or s.strip("01"):
        raise ValueError(f"not a binary word: {s!r}")
    return s


def weight(s: str) -> int:
    return _check(s).count("1")


def runs(s: str) -> List[Tuple[str, int]]:
    """Maximal runs as (bit, length) pairs, left to right."""
    return [(b, len(list(g))) for b, g in groupby(_check(s))]


def is_fibonacci(s: str) -> bool:
    return "11" not in _check(s)


def is_run_constrained(s: str) -> bool:
    rs = runs(s)
    for i, (bit, length) in enumerate(rs):
        if bit == "1" and (i + 1 == len(rs) or rs[i + 1][1] <= length):
            return False
    return True


def is_circular_run_constrained(s: str) -> bool:
    _check(s)
    if "1" not in s:
        return True
    if "0" not in s:
        return False
    # rotate so the word opens with a run of 1s preceded (cyclically) by a 0
    j = s.find("01")
    start = j + 1 if j >= 0 else 0
    return is_run_constrained(s[start:] + s[:start])


def classify(s: str, kind: str) -> bool:
    """Membership of ``s`` in one of the languages named in ``KINDS``."""
    if kind == FIBONACCI:
        return is_fibonacci(s)
    if kind == RUN_CONSTRAINED:
        return is_run_constrained(s)
    if kind == CIRCULAR_RUN_CONSTRAINED:
        return is_circular_run_constrained(s)
    raise ValueError(f"unknown language kind {kind!r}; expected one of {KINDS}")


def factorize(s: str, alphabet: Alphabet) -> List[int]:
    """Letter indices of the unique factorization of ``s`` over ``alphabet``.

    Parsing is greedy left to right; every letter is fixed by its opening
    run, so no backtracking is needed. Raises NotInLanguage with the index
    of the first position where no letter matches.
    """
    _check(s)
    out = []
    i, n = 0, len(s)
    while i < n:
        if s[i] == "0":
            out.append(0)
            i += 1
            continue
        if alphabet is Alphabet.R:
            p = 0
            while i + p < n and s[i + p] == "1":
                p += 1
            if s[i + p: i + 2 * p + 1] != "0" * (p + 1):
                raise NotInLanguage(s, i)
            out.append(p)
            i += 2 * p + 1
        else:
            k, j = 0, i
            while s[j: j + 2] == "10":
                k += 1
                j += 2
            if k == 0 or j >= n or s[j] != "0":
                raise NotInLanguage(s, i)
            out.append(k)
            i = j + 1
    return out


def concat(indices: List[int], alphabet: Alphabet) -> str:
    return "".join(alphabet.letter(i) for i in indices)


def in_monoid(s: str, alphabet: Alphabet) -> bool:
    try:
        factorize(s, alphabet)
    except NotInLanguage:
        return False
    return True


def phi(s: str) -> str:
    """Map an extended Fibonacci string to a run-constrained string."""
    return concat(factorize(s, Alphabet.F), Alphabet.R)


def phi_inverse(s: str) -> str:
    return concat(factorize(s, Alphabet.R), Alphabet.F)


def monoid_words(alphabet: Alphabet, length: int) -> List[str]:
    """All words of the given length in the monoid generated by ``alphabet``,
    sorted lexicographically. Built by concatenating letters, never by
    scanning all 2^length strings."""
    if length < 0:
        raise ValueError("length must be non-negative")
    table: List[List[str]] = [[""]]
    for m in range(1, length + 1):
        table.append([w + letter for _, letter in alphabet.letters(m)
                      for w in table[m - len(letter)]])
    return sorted(table[length])
