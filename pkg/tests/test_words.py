import itertools
import re

import pytest
from hypothesis import given, strategies as st

from fibrun import words
from fibrun.errors import NotInLanguage
from fibrun.words import Alphabet


def all_words(n):
    return ["".join(p) for p in itertools.product("01", repeat=n)]


# Independent oracles: regex scan instead of run lists, and every
# admissible rotation instead of one.
def oracle_run_constrained(s):
    return all(len(m.group(2)) > len(m.group(1)) for m in re.finditer(r"(1+)(0*)", s))


def oracle_circular(s):
    if "1" not in s:
        return True
    starts = [i for i in range(len(s)) if s[i] == "1" and s[i - 1] == "0"]
    return bool(starts) and all(oracle_run_constrained(s[i:] + s[:i]) for i in starts)


@pytest.mark.parametrize("s, kind, expected", [
    ("01001110000", words.RUN_CONSTRAINED, True),
    ("", words.FIBONACCI, True),
    ("", words.RUN_CONSTRAINED, True),
    ("", words.CIRCULAR_RUN_CONSTRAINED, True),
    ("110", words.CIRCULAR_RUN_CONSTRAINED, False),
    ("100100", words.CIRCULAR_RUN_CONSTRAINED, True),
    ("111", words.CIRCULAR_RUN_CONSTRAINED, False),
    ("000", words.CIRCULAR_RUN_CONSTRAINED, True),
    ("0110", words.FIBONACCI, False),
    ("1", words.RUN_CONSTRAINED, False),
])
def test_classify_examples(s, kind, expected):
    assert words.classify(s, kind) is expected


def test_classify_rejects_bad_input():
    with pytest.raises(ValueError):
        words.classify("012", words.FIBONACCI)
    with pytest.raises(ValueError):
        words.classify("01", "palindrome")


@pytest.mark.parametrize("n", range(0, 13))
def test_classify_matches_oracles(n):
    for s in all_words(n):
        assert words.is_run_constrained(s) == oracle_run_constrained(s), s
        assert words.is_circular_run_constrained(s) == oracle_circular(s), s
        assert words.is_fibonacci(s) == all(s[i:i + 2] != "11" for i in range(len(s)))


def test_circular_example_is_fig2_vertex():
    # 10010 is a vertex of R^l_5; its membership word is 10010 + 0
    assert oracle_circular("100100")


@pytest.mark.parametrize("s, alphabet, expected", [
    ("01001110000", Alphabet.R, [0, 1, 3]),
    ("", Alphabet.R, []),
    ("1010100", Alphabet.F, [3]),
    ("0100", Alphabet.F, [0, 1]),
    ("11000100", Alphabet.R, [2, 1]),
])
def test_factorize_examples(s, alphabet, expected):
    assert words.factorize(s, alphabet) == expected


@pytest.mark.parametrize("s, alphabet, position", [
    ("110", Alphabet.R, 0),
    ("0010", Alphabet.R, 2),
    ("01100", Alphabet.R, 1),
    ("10", Alphabet.F, 0),
    ("0011", Alphabet.F, 2),
    ("01010", Alphabet.F, 1),
])
def test_factorize_failure_position(s, alphabet, position):
    with pytest.raises(NotInLanguage) as info:
        words.factorize(s, alphabet)
    assert info.value.position == position


def test_alphabet_letters():
    assert [l for _, l in Alphabet.F.letters(7)] == ["0", "100", "10100", "1010100"]
    assert [l for _, l in Alphabet.R.letters(7)] == ["0", "100", "11000", "1110000"]


@pytest.mark.parametrize("alphabet", list(Alphabet))
@given(st.lists(st.integers(0, 6), max_size=8))
def test_factorize_concat_roundtrip(alphabet, indices):
    assert words.factorize(words.concat(indices, alphabet), alphabet) == indices


@pytest.mark.parametrize("n", range(0, 15))
def test_monoid_words_exhaustive(n):
    run = [s for s in all_words(n) if oracle_run_constrained(s)]
    assert words.monoid_words(Alphabet.R, n) == run
    fib = words.monoid_words(Alphabet.F, n)
    # extended Fibonacci strings: lambda, 0, and Fibonacci strings followed by 00
    assert fib == [s for s in all_words(n)
                   if s in ("", "0") or ("11" not in s and s.endswith("00"))]
    for s in run:
        assert words.concat(words.factorize(s, Alphabet.R), Alphabet.R) == s
    for s in fib:
        assert "11" not in s
        assert words.concat(words.factorize(s, Alphabet.F), Alphabet.F) == s


@pytest.mark.parametrize("s, expected", [("10100", "11000"), ("0", "0"), ("0100", "0100"),
                                         ("", ""), ("1010100", "1110000")])
def test_phi_examples(s, expected):
    assert words.phi(s) == expected
    assert words.phi_inverse(expected) == s


@pytest.mark.parametrize("n", range(0, 15))
def test_phi_bijection(n):
    fib = words.monoid_words(Alphabet.F, n)
    run = words.monoid_words(Alphabet.R, n)
    assert sorted(words.phi(s) for s in fib) == run
    assert all(words.phi_inverse(words.phi(s)) == s for s in fib)
    assert all(words.phi(words.phi_inverse(s)) == s for s in run)


def test_phi_requires_language():
    with pytest.raises(NotInLanguage):
        words.phi("11")


def test_run_constrained_words_end_in_00():
    for n in range(2, 15):
        assert all(s.endswith("00") for s in words.monoid_words(Alphabet.R, n))


def test_language_sizes_agree():
    for n in range(21):
        assert len(words.monoid_words(Alphabet.R, n)) == len(words.monoid_words(Alphabet.F, n))
