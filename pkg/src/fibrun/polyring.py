"""Exact sparse multivariate polynomials over the integers, and truncated
power series in a formal variable ``t`` whose coefficients are such
polynomials.

Coefficients are Python ints, so arithmetic never overflows.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .errors import ConstantTermNonzero

# Fixed variable order; names outside it sort after, alphabetically.
VAR_ORDER = ("q", "x", "d", "z", "u", "t")

Exp = Tuple[int, ...]
Scalar = int


def _rank(name: str) -> Tuple[int, str]:
    try:
        return (VAR_ORDER.index(name), "")
    except ValueError:
        return (len(VAR_ORDER), name)


def canonical_vars(names: Iterable[str]) -> Tuple[str, ...]:
    return tuple(sorted(set(names), key=_rank))


class MPoly:
    """Immutable sparse polynomial with integer coefficients.

    ``terms`` maps exponent vectors (aligned with ``vars``) to nonzero ints.
    Two polynomials compare equal when they have the same nonzero terms,
    whatever variables each one declares.
    """

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None, vars: Sequence[str] = ()):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variable names in {vars!r}")
        if tuple(canonical_vars(vars)) != vars:
            # re-key into canonical order
            order = canonical_vars(vars)
            perm = [vars.index(v) for v in order]
            terms = {tuple(e[i] for i in perm): c for e, c in (terms or {}).items()}
            vars = order
        clean: Dict[Exp, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != len(vars):
                raise ValueError(f"exponent {e} does not match variables {vars}")
            if any(a < 0 for a in e):
                raise ValueError(f"negative exponent in {e}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.vars = vars
        self._terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c: int, vars: Sequence[str] = ()) -> "MPoly":
        vars = canonical_vars(vars)
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars: Sequence[str] = ()) -> "MPoly":
        vars = canonical_vars(tuple(vars) + (name,))
        e = tuple(1 if v == name else 0 for v in vars)
        return cls({e: 1}, vars)

    @classmethod
    def monomial(cls, powers: Mapping[str, int], coeff: int = 1, vars: Sequence[str] = ()) -> "MPoly":
        vars = canonical_vars(tuple(vars) + tuple(powers))
        e = tuple(powers.get(v, 0) for v in vars)
        return cls({e: coeff}, vars)

    @classmethod
    def promote(cls, other: Union["MPoly", int]) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        raise TypeError(f"cannot convert {type(other).__name__} to MPoly")

    # -- access ---------------------------------------------------------
    @property
    def terms(self) -> Dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0,) * len(self.vars), 0)

    def used_vars(self) -> Tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self._terms))

    def degree(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max((e[i] for e in self._terms), default=0)

    def coefficient(self, powers: Mapping[str, int]) -> int:
        """Coefficient of the monomial given as ``{var: exponent}``."""
        for name, k in powers.items():
            if k and name not in self.vars:
                return 0
        return self._terms.get(tuple(powers.get(v, 0) for v in self.vars), 0)

    def with_vars(self, vars: Sequence[str]) -> "MPoly":
        """Re-declare over ``vars`` (must contain every used variable)."""
        vars = canonical_vars(vars)
        missing = set(self.used_vars()) - set(vars)
        if missing:
            raise ValueError(f"variables {sorted(missing)} are in use")
        idx = [self.vars.index(v) if v in self.vars else None for v in vars]
        return MPoly({tuple(e[i] if i is not None else 0 for i in idx): c
                      for e, c in self._terms.items()}, vars)

    def _aligned(self, other: "MPoly") -> Tuple[Tuple[str, ...], Dict[Exp, int], Dict[Exp, int]]:
        if self.vars == other.vars:
            return self.vars, self._terms, other._terms
        vars = canonical_vars(self.vars + other.vars)
        return vars, self.with_vars(vars)._terms, other.with_vars(vars)._terms

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        try:
            other = MPoly.promote(other)
        except TypeError:
            return NotImplemented
        vars, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return MPoly(out, vars)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({e: -c for e, c in self._terms.items()}, self.vars)

    def __sub__(self, other):
        try:
            other = MPoly.promote(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MPoly({e: c * other for e, c in self._terms.items()}, self.vars)
        if not isinstance(other, MPoly):
            return NotImplemented
        vars, a, b = self._aligned(other)
        out: Dict[Exp, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(out, vars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = MPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._key() == other._key()

    def _key(self) -> frozenset:
        return frozenset(
            (tuple((v, k) for v, k in zip(self.vars, e) if k), c)
            for e, c in self._terms.items()
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    # -- composition ----------------------------------------------------
    def substitute(self, bindings: Mapping[str, Union["MPoly", int]]) -> "MPoly":
        """Replace variables by polynomials (or ints); unbound variables stay."""
        bound = {v: MPoly.promote(p) for v, p in bindings.items() if v in self.vars}
        keep = [v for v in self.vars if v not in bound]
        out_vars = canonical_vars(keep + [w for p in bound.values() for w in p.vars])
        powers: Dict[Tuple[str, int], MPoly] = {}

        def power(v: str, k: int) -> MPoly:
            if (v, k) not in powers:
                powers[(v, k)] = bound[v] ** k
            return powers[(v, k)]

        result = MPoly({}, out_vars)
        for e, c in self._terms.items():
            fixed = {v: k for v, k in zip(self.vars, e) if v not in bound}
            term = MPoly.monomial(fixed, c, out_vars)
            for v, k in zip(self.vars, e):
                if v in bound and k:
                    term = term * power(v, k)
            result = result + term
        return result.with_vars(out_vars)

    def evaluate(self, **values: int) -> "MPoly":
        return self.substitute(values)

    # -- canonical order and text/JSON forms ---------------------------
    def sorted_terms(self) -> List[Tuple[Exp, int]]:
        """Terms in canonical order: by the exponent of the last variable,
        then the one before it, and so on."""
        return sorted(self._terms.items(), key=lambda ec: ec[0][::-1])

    def to_text(self) -> str:
        return _format(self)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()!r}, vars={self.vars!r})"

    def to_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "MPoly":
        return cls({tuple(t["exp"]): int(t["coeff"]) for t in data["terms"]}, data["vars"])

    @classmethod
    def from_json(cls, text: str) -> "MPoly":
        return cls.from_dict(json.loads(text))

    def csv_rows(self) -> List[List[str]]:
        rows = [list(self.vars) + ["coeff"]]
        rows += [[str(a) for a in e] + [str(c)] for e, c in self.sorted_terms()]
        return rows


def _power_text(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def _format(p: MPoly) -> str:
    # Nested form: a polynomial in the last variable whose coefficients are
    # polynomials in the earlier ones, e.g. 1+3q+q^2+(3+2q)x+x^2.
    if p.is_zero():
        return "0"
    if not p.vars:
        return str(p.constant_term())
    last, rest = p.vars[-1], p.vars[:-1]
    groups: Dict[int, Dict[Exp, int]] = {}
    for e, c in p.items():
        groups.setdefault(e[-1], {})[e[:-1]] = c
    pieces = []
    for k in sorted(groups):
        coeff = MPoly(groups[k], rest)
        if k == 0:
            pieces.append(_format(coeff))
            continue
        mono = _power_text(last, k)
        if coeff.is_constant():
            c = coeff.constant_term()
            pieces.append(mono if c == 1 else "-" + mono if c == -1 else f"{c}{mono}")
        elif len(coeff) == 1:
            pieces.append(_format(coeff) + mono)
        else:
            pieces.append(f"({_format(coeff)}){mono}")
    out = pieces[0]
    for s in pieces[1:]:
        out += s if s.startswith("-") else "+" + s
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(.))")


def parse(text: str, vars: Sequence[str] = ()) -> MPoly:
    """Parse the human text form, e.g. ``"1+5q+6q^2+(5+12q)x+d(d-z)t^3"``.

    Variables are single letters; juxtaposition and ``*`` both multiply.
    """
    tokens = []
    for num, name, op in _TOKEN.findall(text.strip()):
        if num:
            tokens.append(("int", int(num)))
        elif name:
            tokens.append(("var", name))
        elif op:
            if op not in "+-*^()":
                raise ValueError(f"unexpected character {op!r} in {text!r}")
            tokens.append(("op", op))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr() -> MPoly:
        total = MPoly()
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        total = total + term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            sign = 1 if take()[1] == "+" else -1
            total = total + term() * sign
        return total

    def starts_factor(tok) -> bool:
        return tok[0] in ("int", "var") or tok == ("op", "(")

    def term() -> MPoly:
        prod = factor()
        while True:
            tok = peek()
            if tok == ("op", "*"):
                take()
                prod = prod * factor()
            elif starts_factor(tok):
                prod = prod * factor()
            else:
                return prod

    def factor() -> MPoly:
        kind, val = take()
        if kind == "int":
            base = MPoly.const(val)
        elif kind == "var":
            base = MPoly.var(val)
        elif (kind, val) == ("op", "("):
            base = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
        else:
            raise ValueError(f"unexpected token {val!r} in {text!r}")
        if peek() == ("op", "^"):
            take()
            kind, k = take()
            if kind != "int":
                raise ValueError(f"exponent must be an integer in {text!r}")
            base = base ** k
        return base

    if not tokens:
        raise ValueError("empty polynomial text")
    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result.with_vars(canonical_vars(tuple(vars) + result.used_vars()))


# ---------------------------------------------------------------------------
# Truncated series in t with MPoly coefficients
# ---------------------------------------------------------------------------
Series = List[MPoly]


def _pad(s: Sequence[Union[MPoly, int]], order: int) -> Series:
    out = [MPoly.promote(c) for c in list(s)[: order + 1]]
    return out + [MPoly()] * (order + 1 - len(out))


def series_mul(a: Sequence[MPoly], b: Sequence[MPoly], order: int) -> Series:
    a, b = _pad(a, order), _pad(b, order)
    out = []
    for n in range(order + 1):
        acc = MPoly()
        for k in range(n + 1):
            if a[k] and b[n - k]:
                acc = acc + a[k] * b[n - k]
        out.append(acc)
    return out


def series_inverse(f: Sequence[Union[MPoly, int]], order: int) -> Series:
    """Truncated expansion of 1/(1 - f); f must have zero constant term."""
    f = _pad(f, order)
    if f[0]:
        raise ConstantTermNonzero(f[0].to_text())
    out = [MPoly.const(1)]
    for n in range(1, order + 1):
        acc = MPoly()
        for k in range(1, n + 1):
            if f[k] and out[n - k]:
                acc = acc + f[k] * out[n - k]
        out.append(acc)
    return out


def t_coefficients(p: MPoly, var: str = "t") -> Series:
    """Split a polynomial into its coefficients of var^0, var^1, ..."""
    if var not in p.vars:
        return [p]
    i = p.vars.index(var)
    rest = p.vars[:i] + p.vars[i + 1:]
    out: List[Dict[Exp, int]] = [dict() for _ in range(p.degree(var) + 1)]
    for e, c in p.items():
        out[e[i]][e[:i] + e[i + 1:]] = c
    return [MPoly(terms, rest) for terms in out]


@dataclass(frozen=True)
class RationalGF:
    """numerator(t) / denominator(t), each a list of MPoly coefficients."""

    numerator: Tuple[MPoly, ...]
    denominator: Tuple[MPoly, ...]

    def __post_init__(self):
        if not self.denominator or self.denominator[0] != 1:
            raise ValueError("denominator must have constant term 1")

    @classmethod
    def from_text(cls, numerator: str, denominator: str) -> "RationalGF":
        return cls(tuple(t_coefficients(parse(numerator))), tuple(t_coefficients(parse(denominator))))

    def expand(self, order: int) -> Series:
        return expand(self, order)


def expand(gf: RationalGF, order: int) -> Series:
    """Coefficients c_0..c_order of numerator/denominator, from
    c_n = a_n - sum_{k=1..n} b_k c_{n-k}."""
    if order < 0:
        raise ValueError("order must be non-negative")
    num = _pad(gf.numerator, order)
    den = _pad(gf.denominator, order)
    out: Series = []
    for n in range(order + 1):
        acc = num[n]
        for k in range(1, n + 1):
            if den[k] and out[n - k]:
                acc = acc - den[k] * out[n - k]
        out.append(acc)
    return out
