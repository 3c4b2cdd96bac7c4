"""Eigenvalue lattice combinatorics for the rank-3 simple type ideal.

The eigenvalue set E_{g,d} consists of tuples
(sqrt3 z^k a, sqrt(-3) z^{2k} b, 3 z^{2k}, 0) with z = exp(2 pi i / 3),
k in {0, 1, 2} and (a, b) in the diamond |a| + |b| <= 2g - 2, a = b mod 2.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from .field import ONE, SQRT3, SQRTM3, ZERO, ZETA3, CycNum, X
from .groebner import buchberger, standard_monomials
from .mumford import ideal_generators
from .poly import Poly, TruncSeries, series2


@dataclass(frozen=True)
class EigenTuple:
    values: Tuple[CycNum, ...]

    def __getitem__(self, i: int) -> CycNum:
        return self.values[i]

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]


def c_lattice(g: int) -> Set[Tuple[int, int]]:
    """{(a, b) : |a| + |b| <= 2g - 2, a = b mod 2}."""
    if g < 1:
        raise ValueError("g must be at least 1")
    r = 2 * g - 2
    return {(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1) if abs(a) + abs(b) <= r and (a - b) % 2 == 0}


def eigen_tuple(k: int, a: int, b: int) -> EigenTuple:
    z = ZETA3 ** (k % 3)
    z2 = ZETA3 ** (2 * k % 3)
    return EigenTuple((SQRT3 * z * a, SQRTM3 * z2 * b, z2 * 3, ZERO))


def eigenvalue_set(g: int, d: int) -> Set[EigenTuple]:
    if d % 3 == 0:
        raise ValueError("d must be coprime to 3")
    lattice = sorted(c_lattice(g))
    out = {eigen_tuple(k, a, b) for k in range(3) for a, b in lattice}
    if len(out) != 3 * len(lattice):
        raise RuntimeError("duplicate eigenvalue tuples")
    return out


def root_of_unity(order: int, index: int) -> CycNum:
    """exp(2 pi i index / order) for order dividing 12."""
    if order <= 0 or 12 % order:
        raise ValueError(f"no primitive {order}-th root of unity in Q(zeta_12)")
    return X ** ((12 // order) * index % 12)


def evaction(lam: EigenTuple, N: int, root_index: int) -> EigenTuple:
    """Scale a_r by w^{r-1} and b_r by w^r, w a 2N-th root of unity."""
    if len(lam.values) != 2 * N - 2:
        raise ValueError("tuple length does not match rank")
    w = root_of_unity(2 * N, root_index)
    scales = [w ** (r - 1) for r in range(2, N + 1)] + [w**r for r in range(2, N + 1)]
    return EigenTuple(tuple(s * v for s, v in zip(scales, lam.values)))


def bivariate_const(c, order: int) -> TruncSeries:
    return series2(lambda i, j: c if i == j == 0 else ZERO, order, order, ZERO)


def bivariate_linear(c0, c2, c3, order: int) -> TruncSeries:
    """c0 + c2 t2 + c3 t3."""
    vals = {(0, 0): c0, (1, 0): c2, (0, 1): c3}
    return series2(lambda i, j: vals.get((i, j), ZERO), order, order, ZERO)


@dataclass(frozen=True)
class DeformedModule:
    """R_{k,a,b}: a2, a3, b2, b3 act by the substitutions below."""

    k: int
    a: int
    b: int

    def __post_init__(self):
        if self.k not in (0, 1, 2):
            raise ValueError("k must be 0, 1 or 2")

    def substitutions(self, order: int) -> Dict[str, TruncSeries]:
        z = ZETA3**self.k
        z2 = ZETA3 ** (2 * self.k % 3)
        return {
            "a2": bivariate_linear(SQRT3 * z * self.a, z2, ZERO, order),
            "a3": bivariate_linear(SQRTM3 * z2 * self.b, ZERO, z * -2, order),
            "b2": bivariate_const(z2 * 3, order),
            "b3": bivariate_const(ZERO, order),
        }

    def evaluate(self, p: Poly, order: int = 4) -> TruncSeries:
        one = bivariate_const(ONE, order)
        subs = self.substitutions(order)
        return p.evaluate({n: subs[n] for n in p.ring.names}, one)

    def limit(self) -> EigenTuple:
        return eigen_tuple(self.k, self.a, self.b)

    def epsilon_exponent(self, d: int) -> int:
        return (self.b + d * self.k) % 3

    def epsilon(self, d: int) -> CycNum:
        """Eigenvalue of the bundle-shift operator, z^{b + dk}."""
        return ZETA3 ** self.epsilon_exponent(d)


def deformed_module(k: int, a: int, b: int) -> DeformedModule:
    return DeformedModule(k, a, b)


def _nested_zero(levels: List[Tuple[str, int]]):
    zero = ZERO
    for var, order in reversed(levels[1:]):
        zero = TruncSeries([], order, var, zero)
    return zero


def _nested(f, levels: List[Tuple[str, int]], prefix: Tuple[int, ...] = ()):
    """Nested series whose coefficient at the exponent tuple is f(exps)."""
    var, order = levels[0]
    if len(levels) == 1:
        return TruncSeries([f(prefix + (i,)) for i in range(order)], order, var, ZERO)
    return TruncSeries(
        [_nested(f, levels[1:], prefix + (i,)) for i in range(order)], order, var, _nested_zero(levels)
    )


def annihilation_check(a: int, b: int, order: int = 6) -> bool:
    """(d/ds2 - (sqrt3 a + t2))(d/ds3 - (sqrt-3 b - 2 t3)) kills
    exp(sqrt3 a s2 + s2 t2 + sqrt-3 b s3 - 2 s3 t3), to the given order."""
    levels = [("s2", order), ("s3", order), ("t2", order), ("t3", order)]
    lin = {
        (1, 0, 0, 0): SQRT3 * a,
        (1, 0, 1, 0): ONE,
        (0, 1, 0, 0): SQRTM3 * b,
        (0, 1, 0, 1): CycNum.rational(-2),
    }
    E = _nested(lambda e: lin.get(e, ZERO), levels).exp()
    A = _nested(lambda e: {(0, 0, 0, 0): SQRT3 * a, (0, 0, 1, 0): ONE}.get(e, ZERO), levels)
    B = _nested(lambda e: {(0, 0, 0, 0): SQRTM3 * b, (0, 0, 0, 1): CycNum.rational(-2)}.get(e, ZERO), levels)
    inner = E.derivative("s3") - B * E
    outer = inner.derivative("s2") - A * inner
    return not outer


@dataclass
class CensusReport:
    g: int
    window_used: int
    standard_monomial_count: Optional[int]
    expected: int
    eigen_count: int
    match: bool
    tight: bool
    message: str
    windows_tried: List[int]
    counts: List[Optional[int]]
    elapsed_ms: int


def census_count(g: int, window: int) -> Optional[int]:
    c = standard_monomials(buchberger(ideal_generators(g, window)))
    return c.count if c.finite else None


def simple_type_census(g: int, window: int = 4, d: int = 1, max_window: int = 12) -> CensusReport:
    """Escalate the generator window until the census repeats, then compare
    3 * census with |E_{g,d}|."""
    t0 = time.perf_counter()
    expected = (2 * g - 1) ** 2
    eigen = len(eigenvalue_set(g, d))
    windows, counts = [window], [census_count(g, window)]
    while windows[-1] < max_window:
        w = windows[-1] + 1
        windows.append(w)
        counts.append(census_count(g, w))
        if counts[-1] is not None and counts[-1] == counts[-2]:
            break
    stable = len(counts) >= 2 and counts[-1] is not None and counts[-1] == counts[-2]
    # report the smallest window that already attains the final count
    final = counts[-1]
    used = next(w for w, c in zip(windows, counts) if c == final)
    if final is None:
        msg = "bound not yet tight; increase window (quotient infinite)"
    elif final < expected:
        msg = "internal error: census below the eigenvalue lower bound"
    elif final > expected or not stable:
        msg = "bound not yet tight; increase window"
    else:
        msg = "ok"
    tight = final == expected and stable
    return CensusReport(
        g=g,
        window_used=used,
        standard_monomial_count=final,
        expected=expected,
        eigen_count=eigen,
        match=tight and 3 * final == eigen,
        tight=tight,
        message=msg,
        windows_tried=windows,
        counts=counts,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )
