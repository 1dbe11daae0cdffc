"""Closed-form generating functions and the free-monoid series builder.

The catalog holds rational functions in t exactly as written for the
Fibonacci-run and Lucas-run families; nothing is simplified. The monoid
builder derives series independently from the letters of an alphabet:
if a statistic is multiplicative under concatenation, summing it over the
free monoid gives 1 / (1 - sum over letters).
"""
from __future__ import annotations

from typing import Dict, List

from . import words
from .errors import UnknownId
from .polyring import MPoly, RationalGF, Series, expand, series_inverse, series_mul

_DENOM_DIST = "1-t-qt^2-xt^3-x(q+x)t^5"

CATALOG_TEXT: Dict[str, tuple] = {
    "dcw_r": ("1+dt+(d-z)t^2+d(d-z)t^3+d(d-z)t^4",
              "1-t-zt^2-(d-z)t^3-d(d-z)t^5"),
    "d_r": ("1+(q+x)t+xt^2+x(q+x)t^3+x(q+x)t^4", _DENOM_DIST),
    "d_rl": ("1+(q+2x)t^2+2x(q+x)t^4", _DENOM_DIST),
    "updeg_r": ("t(1+u-(u-2)t-2ut^2+(u-2)t^3-(u-1)t^5-(u-1)t^6)",
                "1-ut-2t^2+(2u-1)t^3+t^4-(u-1)t^5+(u-1)t^7"),
}

# variables of each catalog series, for printing zero-padded coefficients
CATALOG_VARS = {"dcw_r": ("d", "z"), "d_r": ("q", "x"), "d_rl": ("q", "x"), "updeg_r": ("u",)}

CATALOG: Dict[str, RationalGF] = {
    key: RationalGF.from_text(num, den) for key, (num, den) in CATALOG_TEXT.items()
}


def normalize_id(gf_id: str) -> str:
    key = gf_id.replace("-", "_").lower()
    if key not in CATALOG:
        raise UnknownId(f"unknown generating function {gf_id!r}; "
                        f"expected one of {sorted(CATALOG)}")
    return key


def catalog_expand(gf_id: str, order: int) -> Series:
    key = normalize_id(gf_id)
    return [c.with_vars(CATALOG_VARS[key] + tuple(v for v in c.used_vars()
                                                  if v not in CATALOG_VARS[key]))
            for c in expand(CATALOG[key], order)]


def letter_monomial(letter: str, alphabet: words.Alphabet, stat: str) -> MPoly:
    """Monomial of one letter, without the t factor.

    ``dcw``: d^r z^(w - r), r = number of 1s that can be cleared one at a
    time without leaving the monoid. ``weight``: d^w.
    """
    w = letter.count("1")
    if stat == "weight":
        return MPoly.monomial({"d": w})
    if stat != "dcw":
        raise ValueError(f"unknown statistic {stat!r}")
    r = sum(1 for i, b in enumerate(letter)
            if b == "1" and words.in_monoid(letter[:i] + "0" + letter[i + 1:], alphabet))
    return MPoly.monomial({"d": r, "z": w - r})


def letter_series(alphabet: words.Alphabet, stat: str, order: int) -> Series:
    """Sum over letters of length <= order of monomial * t^length."""
    out: Series = [MPoly() for _ in range(order + 1)]
    for _, letter in alphabet.letters(order):
        out[len(letter)] = out[len(letter)] + letter_monomial(letter, alphabet, stat)
    return out


def monoid_gf(letters: Series, order: int) -> Series:
    """Series of the statistic over the whole free monoid: 1/(1 - letters)."""
    return series_inverse(letters, order)


def tail_adjust(series: Series) -> Series:
    """Drop the empty word and the word "0", then shorten lengths by 2.

    Every longer monoid word ends in 00 and corresponds to a vertex of the
    length-2 graph, so (S - 1 - t) / t^2 indexes the series by dimension.
    """
    if len(series) < 2 or series[0] != 1 or series[1] != 1:
        raise ValueError("series must start 1 + t (empty word and the letter 0)")
    return list(series[2:])


def monoid_dcw_series(order: int) -> Series:
    """DCW_{R_n}(d, z) for n = 0..order, from the letters of R."""
    return tail_adjust(monoid_gf(letter_series(words.Alphabet.R, "dcw", order + 2), order + 2))


def fibonacci_weight_series(order: int) -> Series:
    """W_{Gamma_n}(d) for n = 0..order, from the letters of F."""
    return tail_adjust(monoid_gf(letter_series(words.Alphabet.F, "weight", order + 2), order + 2))


def dcw_to_distance(p: MPoly) -> MPoly:
    """DCW(d, z) -> DCW(q + x, q)."""
    q, x = MPoly.var("q"), MPoly.var("x")
    return p.substitute({"d": q + x, "z": q}).with_vars(("q", "x"))


def lucas_run_from_fibonacci_run(order: int) -> Series:
    """(1 - t) + (2t - t^2) * sum_n D_{R_n} t^n, truncated at t^order."""
    d_r = catalog_expand("d_r", order)
    return [c.with_vars(("q", "x")) for c in
            _series_add([1, -1], series_mul([0, 2, -1], d_r, order), order)]


def _series_add(a, b, order: int) -> Series:
    a = [MPoly.promote(c) for c in a] + [MPoly()] * (order + 1)
    b = [MPoly.promote(c) for c in b] + [MPoly()] * (order + 1)
    return [a[i] + b[i] for i in range(order + 1)]


def series_text(series: List[MPoly]) -> List[str]:
    return [p.to_text() for p in series]
