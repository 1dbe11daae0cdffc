"""Machine checks of the identities relating the graph families, their
census polynomials and the catalog generating functions.

Each identity is checked independently for every n in range; a report
records pass/fail per n and, on failure, both sides in canonical text.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from . import census, genfunc, graphs, words
from .errors import UnknownId
from .graphs import Family
from .polyring import MPoly

THREADS_ENV = "FIBRUN_THREADS"

Q, X = MPoly.var("q"), MPoly.var("x")
CUBE_FAMILIES = (Family.FIBONACCI, Family.LUCAS, Family.FIBONACCI_RUN, Family.LUCAS_RUN)

Check = Tuple[bool, str, str]


@dataclass
class CheckResult:
    n: int
    passed: bool
    lhs: str
    rhs: str


@dataclass
class Report:
    identity: str
    description: str
    n_min: int
    n_max: int
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((r for r in self.results if not r.passed), None)

    def to_dict(self) -> dict:
        fail = self.first_failure
        return {
            "identity": self.identity,
            "description": self.description,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "passed": self.passed,
            "first_failure": asdict(fail) if fail else None,
            "results": [{"n": r.n, "passed": r.passed} for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.identity}: {self.description}"]
        for r in self.results:
            lines.append(f"  n={r.n:<3d} {'pass' if r.passed else 'FAIL'}")
        fail = self.first_failure
        if fail:
            lines.append(f"  first failure at n={fail.n}")
            lines.append(f"    lhs: {fail.lhs}")
            lines.append(f"    rhs: {fail.rhs}")
        lines.append(f"  {'PASS' if self.passed else 'FAIL'} ({self.n_min} <= n <= {self.n_max})")
        return "\n".join(lines)


def _poly_check(lhs: MPoly, rhs: MPoly) -> Check:
    return lhs == rhs, lhs.to_text(), rhs.to_text()


def _all(checks: List[Tuple[str, Check]]) -> Check:
    ok = all(c[0] for _, c in checks)
    bad = [(name, c) for name, c in checks if not c[0]] or checks
    return (ok, "; ".join(f"{name}: {c[1]}" for name, c in bad),
            "; ".join(f"{name}: {c[2]}" for name, c in bad))


def D(family, n: int) -> MPoly:
    return census.distance_cube_polynomial(graphs.build(family, n))


def _recurrence(cyclic: Family, linear: Family) -> Callable[[int], Check]:
    def check(n: int) -> Check:
        return _poly_check(D(cyclic, n), 2 * D(linear, n - 1) - D(linear, n - 2))
    return check


def _daisy(n: int) -> Check:
    checks = []
    for fam in (Family.FIBONACCI, Family.LUCAS):
        g = graphs.build(fam, n)
        d = census.distance_cube_polynomial(g)
        w = census.weight_polynomial(g, "d")
        c = census.cube_polynomial(g)
        dcw = census.dcw_polynomial(g)
        checks.append((f"{fam.value} D=W(x+q)", _poly_check(d, w.substitute({"d": X + Q}))))
        checks.append((f"{fam.value} D=C(x+q-1)", _poly_check(d, c.substitute({"x": X + Q - 1}))))
        checks.append((f"{fam.value} DCW=W", _poly_check(dcw, w)))
    return _all(checks)


def _dcw_substitution(n: int) -> Check:
    checks = []
    for fam in CUBE_FAMILIES:
        g = graphs.build(fam, n)
        checks.append((fam.value, _poly_check(census.distance_cube_polynomial(g),
                                              genfunc.dcw_to_distance(census.dcw_polynomial(g)))))
    return _all(checks)


def _euler(n: int) -> Check:
    checks = []
    for fam in CUBE_FAMILIES:
        c = census.cube_polynomial(graphs.build(fam, n))
        checks.append((fam.value, _poly_check(c.substitute({"x": -1}), MPoly.const(1))))
    return _all(checks)


def _self_annihilating(n: int) -> Check:
    checks = []
    for fam in CUBE_FAMILIES:
        d = D(fam, n)
        checks.append((fam.value, _poly_check(d.substitute({"q": -X}), MPoly.const(1))))
    return _all(checks)


def _dist_weight(n: int) -> Check:
    g = graphs.build(Family.FIBONACCI_RUN, n)
    dist = g.distances_from("0" * n)
    bad = [v for v in g.vertices if dist.get(v) != v.count("1")]
    if not bad:
        return True, f"d(0^n, v) = w(v) for all {len(g)} vertices", "ok"
    v = bad[0]
    return False, f"d(0^n, {v}) = {dist.get(v)}", f"w({v}) = {v.count('1')}"


def set_identity_sides(m: int) -> Tuple[set, set]:
    """Length-m words of V(R^l)00 and of (0M - {0}) | ((M0 - {0}) - 0M0)."""
    lhs = set()
    if m >= 2:
        lhs = {v + "00" for v in graphs.build(Family.LUCAS_RUN, m - 2).vertices}
    if m == 0:
        return lhs, set()
    shorter = words.monoid_words(words.Alphabet.R, m - 1)
    zero_m = {"0" + s for s in shorter} - {"0"}
    m_zero = {s + "0" for s in shorter} - {"0"}
    zero_m_zero = set()
    if m >= 2:
        zero_m_zero = {"0" + s + "0" for s in words.monoid_words(words.Alphabet.R, m - 2)}
    return lhs, zero_m | (m_zero - zero_m_zero)


def _set_identity(m: int) -> Check:
    lhs, rhs = set_identity_sides(m)
    return lhs == rhs, ",".join(sorted(lhs)), ",".join(sorted(rhs))


def _gf_vs_census(gf_id: str) -> Callable[[int], Check]:
    def check(n: int) -> Check:
        g_fam = Family.LUCAS_RUN if gf_id == "d_rl" else Family.FIBONACCI_RUN
        g = graphs.build(g_fam, n)
        if gf_id == "dcw_r":
            side = census.dcw_polynomial(g)
        elif gf_id == "updeg_r":
            side = census.updeg_polynomial(g)
        else:
            side = census.distance_cube_polynomial(g)
        return _poly_check(genfunc.catalog_expand(gf_id, n)[n], side)
    return check


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _counts(n: int) -> Check:
    r, gam = len(graphs.build(Family.FIBONACCI_RUN, n)), len(graphs.build(Family.FIBONACCI, n))
    rl, lam = len(graphs.build(Family.LUCAS_RUN, n)), len(graphs.build(Family.LUCAS, n))
    f = fibonacci(n + 2)
    return (r == gam == f and rl == lam,
            f"|V(R_n)|={r} |V(Gamma_n)|={gam} |V(R^l_n)|={rl}",
            f"F_(n+2)={f} |V(Lambda_n)|={lam}")


def _rl_gf_derivation(n: int) -> Check:
    return _poly_check(genfunc.lucas_run_from_fibonacci_run(n)[n],
                       genfunc.catalog_expand("d_rl", n)[n])


def _monoid_dcw(n: int) -> Check:
    return _poly_check(genfunc.monoid_dcw_series(n)[n], genfunc.catalog_expand("dcw_r", n)[n])


def _dcw_to_d_r(n: int) -> Check:
    return _poly_check(genfunc.dcw_to_distance(genfunc.catalog_expand("dcw_r", n)[n]),
                       genfunc.catalog_expand("d_r", n)[n])


def _fibonacci_monoid(n: int) -> Check:
    w = genfunc.fibonacci_weight_series(n)[n]
    return _poly_check(w.substitute({"d": X + Q}).with_vars(("q", "x")), D(Family.FIBONACCI, n))


def _naive_cube(n: int) -> Check:
    g = graphs.build(Family.FIBONACCI_RUN, n)
    naive = census.naive_distance_polynomial(g).substitute({"q": 1}).with_vars(("x",))
    return _poly_check(naive, census.cube_polynomial(g))


# name -> (description, check(n), smallest n, default n_max)
IDENTITIES: Dict[str, Tuple[str, Callable[[int], Check], int, int]] = {
    "lucas_run_recurrence": ("D(R^l_n) = 2 D(R_{n-1}) - D(R_{n-2})",
                             _recurrence(Family.LUCAS_RUN, Family.FIBONACCI_RUN), 2, 16),
    "lucas_fib_recurrence": ("D(Lambda_n) = 2 D(Gamma_{n-1}) - D(Gamma_{n-2})",
                             _recurrence(Family.LUCAS, Family.FIBONACCI), 2, 16),
    "daisy": ("Gamma, Lambda: D(x,q) = C(x+q-1) = W(x+q), DCW = W", _daisy, 0, 14),
    "dcw_substitution": ("D(x,q) = DCW(q+x, q) on gamma, lambda, r, rl", _dcw_substitution, 0, 12),
    "euler": ("C(-1) = 1 on gamma, lambda, r, rl", _euler, 0, 14),
    "self_annihilating": ("D(x,-x) = 1 on gamma, lambda, r, rl", _self_annihilating, 0, 14),
    "dist_weight": ("BFS distance from 0^n = Hamming weight on R_n", _dist_weight, 0, 12),
    "set_identity": ("V(R^l)00 = (0M - {0}) | ((M0 - {0}) - 0M0), lengthwise",
                     _set_identity, 0, 16),
    "gf_vs_census_dcw_r": ("dcw_r expansion = census DCW(R_n)", _gf_vs_census("dcw_r"), 0, 16),
    "gf_vs_census_d_r": ("d_r expansion = census D(R_n)", _gf_vs_census("d_r"), 0, 16),
    "gf_vs_census_d_rl": ("d_rl expansion = census D(R^l_n)", _gf_vs_census("d_rl"), 0, 16),
    "gf_vs_census_updeg_r": ("updeg_r expansion = census sum u^up(v) on R_n",
                             _gf_vs_census("updeg_r"), 1, 14),
    "counts": ("|V(R_n)| = |V(Gamma_n)| = F_{n+2}, |V(R^l_n)| = |V(Lambda_n)|", _counts, 0, 20),
    "rl_gf_derivation": ("d_rl = 1 - t + (2t - t^2) d_r, coefficientwise", _rl_gf_derivation, 0, 24),
    "monoid_dcw": ("letters of R through 1/(1 - sum) reproduce dcw_r", _monoid_dcw, 0, 22),
    "dcw_to_d_r": ("dcw_r with d -> q+x, z -> q gives d_r", _dcw_to_d_r, 0, 24),
    "fibonacci_monoid": ("letters of F give W(Gamma_n); W(x+q) = census D(Gamma_n)",
                         _fibonacci_monoid, 0, 14),
    "naive_cube": ("sum (q+x)^down(v) at q=1 = C(R_n)", _naive_cube, 0, 14),
}


def normalize_identity(identity_id: str) -> str:
    key = identity_id.replace("-", "_").lower()
    if key not in IDENTITIES:
        raise UnknownId(f"unknown identity {identity_id!r}; expected one of {sorted(IDENTITIES)}")
    return key


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def verify(identity_id: str, n_max: Optional[int] = None, threads: Optional[int] = None) -> Report:
    key = normalize_identity(identity_id)
    description, check, n_min, default_max = IDENTITIES[key]
    n_max = default_max if n_max is None else n_max
    ns = list(range(n_min, n_max + 1))
    threads = threads or thread_count()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            outcomes = list(pool.map(check, ns))
    else:
        outcomes = [check(n) for n in ns]
    results = [CheckResult(n, ok, lhs, rhs) for n, (ok, lhs, rhs) in zip(ns, outcomes)]
    return Report(key, description, n_min, n_max, results)


def non_isometric_witness(n: int) -> Optional[Tuple[str, str, int]]:
    """First pair (u, v) of R_n, in lexicographic order, whose graph
    distance exceeds their Hamming distance, with that graph distance."""
    g = graphs.build(Family.FIBONACCI_RUN, n)
    for u in g.vertices:
        dist = g.distances_from(u)
        for v in g.vertices:
            hamming = sum(a != b for a, b in zip(u, v))
            if v in dist and dist[v] > hamming:
                return u, v, dist[v]
    return None
