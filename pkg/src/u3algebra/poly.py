"""Sparse multivariate polynomials, the weighted graded-revlex order, and
truncated power series with exp/log/fractional powers.

A monomial is an exponent tuple over the variable sequence of its Ring.  In
the rank-N ring the sequence is (a2, ..., aN, b2, ..., bN) with weights
2r-2 for a_r and 2r for b_r.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .field import CycNum, ONE as CYC_ONE, rat_to_str

log = logging.getLogger(__name__)

Exps = Tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    names: Tuple[str, ...]
    weights: Tuple[int, ...]
    _keys: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"variable {name!r} not in ring {self.names}")

    def degree(self, e: Exps) -> int:
        return sum(w * x for w, x in zip(self.weights, e))

    def key(self, e: Exps) -> tuple:
        """Sort key: larger key means larger monomial."""
        k = self._keys.get(e)
        if k is None:
            k = (self.degree(e),) + tuple(-x for x in reversed(e))
            self._keys[e] = k
        return k

    def one(self) -> Exps:
        return (0,) * len(self.names)

    def var(self, name: str) -> "Poly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): Fraction(1)})

    def gens(self) -> List["Poly"]:
        return [self.var(n) for n in self.names]

    def const(self, c) -> "Poly":
        return Poly(self, {self.one(): c})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def monomial(self, **exps: int) -> Exps:
        e = [0] * self.nvars
        for n, v in exps.items():
            e[self.index(n)] = v
        return tuple(e)


def rank_ring(N: int) -> Ring:
    """Ring of alpha_2..alpha_N, beta_2..beta_N for rank N."""
    if N < 2:
        raise ValueError("rank must be at least 2")
    names = tuple(f"a{r}" for r in range(2, N + 1)) + tuple(f"b{r}" for r in range(2, N + 1))
    weights = tuple(2 * r - 2 for r in range(2, N + 1)) + tuple(2 * r for r in range(2, N + 1))
    return Ring(names, weights)


RING_A = Ring(("a2", "a3"), (2, 4))
RING_AB = Ring(("a2", "a3", "b2"), (2, 4, 4))


def monomial_compare(a: Exps, b: Exps, ring: Ring) -> int:
    """Return 1, 0 or -1 as a >, =, < b in weighted graded revlex."""
    if len(a) != ring.nvars or len(b) != ring.nvars:
        raise ValueError("monomial does not match the ring's variable set")
    da, db = ring.degree(a), ring.degree(b)
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def mono_mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Exps, a: Exps) -> Exps:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_text(e: Exps, ring: Ring) -> str:
    parts = []
    for n, x in zip(ring.names, e):
        if x == 1:
            parts.append(n)
        elif x > 1:
            parts.append(f"{n}^{x}")
    return "*".join(parts)


def _coeff_text(c) -> str:
    if isinstance(c, CycNum):
        return "(" + str(c) + ")"
    return rat_to_str(c)


class Poly:
    """Polynomial with exact coefficients (Fraction or CycNum)."""

    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring: Ring, terms: Optional[Dict[Exps, object]] = None):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self._lt = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._lt = None
        return p

    def _check(self, other: "Poly"):
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, CycNum)):
            return Poly(self.ring, {self.ring.one(): other})
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for e, c in o.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Poly._raw(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def scale(self, c) -> "Poly":
        if not c:
            return Poly._raw(self.ring, {})
        return Poly._raw(self.ring, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Poly(self.ring, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction, CycNum)):
            return self.scale(1 / Fraction(c) if not isinstance(c, CycNum) else c.inverse())
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.const(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, e: Exps, c) -> "Poly":
        return Poly._raw(
            self.ring,
            {tuple(x + y for x, y in zip(e, m)): v * c for m, v in self.terms.items()},
        )

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, Poly) else other
        if o is NotImplemented:
            return NotImplemented
        return self.ring == o.ring and self.terms == o.terms

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    # ordering -------------------------------------------------------------
    def sorted_terms(self) -> List[Tuple[Exps, object]]:
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Exps, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if self._lt is None:
            e = max(self.terms, key=self.ring.key)
            self._lt = (e, self.terms[e])
        return self._lt

    def lm(self) -> Exps:
        return self.leading_term()[0]

    def lc(self):
        return self.leading_term()[1]

    def monic(self) -> "Poly":
        c = self.lc()
        return self.scale(1 / c if not isinstance(c, CycNum) else c.inverse())

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.degree(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.degree(e) for e in self.terms}) <= 1

    def constant_term(self):
        return self.terms.get(self.ring.one(), Fraction(0))

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    # calculus and substitution -------------------------------------------
    def derivative(self, name: str) -> "Poly":
        i = self.ring.index(name)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                t[tuple(f)] = c * e[i]
        return Poly._raw(self.ring, t)

    def scale_vars(self, factors: Dict[str, object]) -> "Poly":
        """Substitute v -> factors[v] * v for each named variable."""
        idx = [(self.ring.index(n), f) for n, f in factors.items()]
        t = {}
        for e, c in self.terms.items():
            v = c
            for i, f in idx:
                if e[i]:
                    v = v * f ** e[i]
            t[e] = v
        return Poly(self.ring, t)

    def to_ring(self, target: Ring) -> "Poly":
        """Map into `target` by name; variables absent from `target` go to 0."""
        pos = []
        for n in self.ring.names:
            pos.append(target.names.index(n) if n in target.names else None)
        t: dict = {}
        for e, c in self.terms.items():
            if any(x and p is None for x, p in zip(e, pos)):
                continue
            f = [0] * target.nvars
            for x, p in zip(e, pos):
                if p is not None:
                    f[p] = x
            f = tuple(f)
            t[f] = t.get(f, 0) + c
        return Poly(target, t)

    def evaluate(self, values: Dict[str, object], one):
        """Substitute every variable by a value from some commutative ring."""
        powers: dict = {}
        names = self.ring.names
        total = None
        for e, c in self.terms.items():
            term = None
            for n, x in zip(names, e):
                if x:
                    key = (n, x)
                    if key not in powers:
                        powers[key] = _power(values[n], x, one)
                    term = powers[key] if term is None else term * powers[key]
            term = one * c if term is None else term * c
            total = term if total is None else total + term
        return one * 0 if total is None else total

    # serialization --------------------------------------------------------
    def text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            m = mono_text(e, self.ring)
            neg = not isinstance(c, CycNum) and c < 0
            a = -c if neg else c
            if not m:
                body = _coeff_text(a)
            elif a == 1:
                body = m
            else:
                body = _coeff_text(a) + "*" + m
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def to_json(self) -> list:
        rows = []
        for e, c in self.sorted_terms():
            coeff = c.to_json() if isinstance(c, CycNum) else rat_to_str(c)
            rows.append({"exponents": dict(zip(self.ring.names, e)), "coefficient": coeff})
        return rows

    @classmethod
    def from_json(cls, ring: Ring, rows: list) -> "Poly":
        t = {}
        for r in rows:
            e = tuple(r["exponents"].get(n, 0) for n in ring.names)
            c = r["coefficient"]
            t[e] = CycNum.from_json(c) if isinstance(c, list) else Fraction(c)
        return cls(ring, t)

    def __repr__(self):
        return f"Poly({self.text()})"

    __str__ = text


def _power(v, n: int, one):
    result = one
    for _ in range(n):
        result = result * v
    return result


def poly_arithmetic(a: Poly, b, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


def one_like(zero):
    """Multiplicative identity in the ring of `zero`."""
    if isinstance(zero, Poly):
        return zero.ring.const(Fraction(1))
    if isinstance(zero, CycNum):
        return CYC_ONE
    if isinstance(zero, TruncSeries):
        return TruncSeries.const(one_like(zero.zero), zero.order, zero.var, zero.zero)
    return Fraction(1)


def _invert(c):
    if isinstance(c, TruncSeries):
        return c.reciprocal()
    if isinstance(c, Poly):
        if not c.is_constant() or not c:
            raise ValueError(f"constant term {c.text()} is not a unit")
        k = c.constant_term()
        return c.ring.const(1 / k if not isinstance(k, CycNum) else k.inverse())
    if isinstance(c, CycNum):
        if not c:
            raise ValueError("constant term 0 is not a unit")
        return c.inverse()
    if not c:
        raise ValueError("constant term 0 is not a unit")
    return 1 / Fraction(c)


def _describe(c) -> str:
    if isinstance(c, Poly):
        return c.text()
    return str(c)


class TruncSeries:
    """sum_{n < order} coeffs[n] * var^n.

    Coefficients live in any commutative ring supporting +, -, * and scaling
    by Fractions: Fraction, CycNum, Poly, or another TruncSeries in a
    different variable (nested multivariate series).
    """

    __slots__ = ("coeffs", "order", "var", "zero")

    def __init__(self, coeffs: Sequence, order: int, var: str = "t", zero=Fraction(0)):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        c = list(coeffs[:order])
        c.extend([zero] * (order - len(c)))
        self.coeffs = c
        self.order = order
        self.var = var
        self.zero = zero

    @classmethod
    def const(cls, c, order: int, var: str = "t", zero=Fraction(0)) -> "TruncSeries":
        return cls([c] if order else [], order, var, zero)

    @classmethod
    def variable(cls, order: int, var: str = "t", zero=Fraction(0)) -> "TruncSeries":
        return cls([zero, one_like(zero)], order, var, zero)

    def _same(self, c, order: int) -> "TruncSeries":
        return TruncSeries(c, order, self.var, self.zero)

    def _orders(self, other: "TruncSeries") -> int:
        if other.order != self.order:
            log.debug("mixing truncation orders %d and %d in %s", self.order, other.order, self.var)
        return min(self.order, other.order)

    def _is_series(self, other) -> bool:
        return isinstance(other, TruncSeries) and other.var == self.var

    def __add__(self, other):
        if self._is_series(other):
            n = self._orders(other)
            return self._same([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)
        if not self.order:
            return self
        c = list(self.coeffs)
        c[0] = c[0] + other
        return self._same(c, self.order)

    __radd__ = __add__

    def __neg__(self):
        return self._same([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self._is_series(other):
            n = self._orders(other)
            a, b = self.coeffs, other.coeffs
            nz_a = [i for i in range(n) if a[i]]
            nz_b = [j for j in range(n) if b[j]]
            out = [self.zero] * n
            for i in nz_a:
                ai = a[i]
                for j in nz_b:
                    if i + j >= n:
                        break
                    out[i + j] = out[i + j] + ai * b[j]
            return self._same(out, n)
        if isinstance(other, TruncSeries) or isinstance(other, (int, Fraction, CycNum, Poly)):
            return self._same([a * other if a else a for a in self.coeffs], self.order)
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if self._is_series(other):
            return self * other.reciprocal()
        return self * (1 / Fraction(other)) if isinstance(other, (int, Fraction)) else self * _invert(other)

    def __pow__(self, n: int) -> "TruncSeries":
        return self.pow_rational(Fraction(n))

    def __bool__(self):
        return any(bool(a) for a in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.var == other.var and self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, CycNum, Poly)):
            return self == TruncSeries.const(self.zero + other, self.order, self.var, self.zero)
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.order, len(self.coeffs)))

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def truncate(self, n: int) -> "TruncSeries":
        return self._same(self.coeffs[: min(n, self.order)], min(n, self.order))

    def map_coeffs(self, f: Callable) -> "TruncSeries":
        return self._same([f(a) for a in self.coeffs], self.order)

    # analytic operations --------------------------------------------------
    def reciprocal(self) -> "TruncSeries":
        n = self.order
        if not n:
            return self
        inv0 = _invert(self.coeffs[0])
        a = self.coeffs
        b = [inv0]
        for m in range(1, n):
            acc = self.zero
            for k in range(1, m + 1):
                if a[k]:
                    acc = acc + a[k] * b[m - k]
            b.append(-(acc * inv0))
        return self._same(b, n)

    def exp(self) -> "TruncSeries":
        n = self.order
        if not n:
            return self
        c0 = self.coeffs[0]
        if c0:
            if isinstance(c0, TruncSeries):
                rest = self - c0
                return rest.exp() * c0.exp()
            raise ValueError(f"exp needs zero constant term, got {_describe(c0)}")
        a = self.coeffs
        e = [one_like(self.zero)]
        for m in range(1, n):
            acc = self.zero
            for k in range(1, m + 1):
                if a[k]:
                    acc = acc + a[k] * e[m - k] * k
            e.append(acc * Fraction(1, m))
        return self._same(e, n)

    def log(self) -> "TruncSeries":
        n = self.order
        if not n:
            return self
        c0 = self.coeffs[0]
        one = one_like(self.zero)
        if not (c0 == one):
            if isinstance(c0, TruncSeries):
                return (self * c0.reciprocal()).log() + c0.log()
            raise ValueError(f"log needs constant term 1, got {_describe(c0)}")
        a = self.coeffs
        lg = [self.zero]
        for m in range(1, n):
            acc = self.zero
            for k in range(1, m):
                if a[m - k] and lg[k]:
                    acc = acc + lg[k] * a[m - k] * k
            lg.append(a[m] - acc * Fraction(1, m))
        return self._same(lg, n)

    def pow_rational(self, e) -> "TruncSeries":
        e = Fraction(e)
        if e.denominator == 1:
            k = int(e)
            base = self if k >= 0 else self.reciprocal()
            result = self._same([one_like(self.zero)], self.order)
            for _ in range(abs(k)):
                result = result * base
            return result
        return (self.log() * e).exp()

    def derivative(self, var: Optional[str] = None) -> "TruncSeries":
        if var is None or var == self.var:
            n = max(self.order - 1, 0)
            return self._same([self.coeffs[k + 1] * (k + 1) for k in range(n)], n)
        return self._same([a.derivative(var) for a in self.coeffs], self.order)

    def integrate(self) -> "TruncSeries":
        """Antiderivative with zero constant term (order grows by one)."""
        c = [self.zero] + [a * Fraction(1, k + 1) for k, a in enumerate(self.coeffs)]
        return self._same(c, self.order + 1)

    def __repr__(self):
        return f"TruncSeries({self.var}, order={self.order}, {self.coeffs!r})"


def series_compose(s: TruncSeries, op: str, arg=None) -> TruncSeries:
    if op == "reciprocal":
        return s.reciprocal()
    if op == "exp":
        return s.exp()
    if op == "log":
        return s.log()
    if op == "pow_rational":
        return s.pow_rational(arg)
    if op == "derivative":
        return s.derivative(arg)
    if op == "mul":
        return s * arg
    raise ValueError(f"unknown op {op!r}")


def series2(f: Callable[[int, int], object], order2: int, order3: int, zero,
            outer: str = "t2", inner: str = "t3") -> TruncSeries:
    """Nested bivariate series with coefficient f(i, j) of outer^i inner^j."""
    rows = [TruncSeries([f(i, j) for j in range(order3)], order3, inner, zero) for i in range(order2)]
    return TruncSeries(rows, order2, outer, TruncSeries([], order3, inner, zero))


def coeff2(s: TruncSeries, i: int, j: int):
    return s.coeffs[i].coeffs[j]


def beta_poly_series(ring: Ring, N: int, order: int, weight=None) -> TruncSeries:
    """sum_i w(i) beta_i t^i with beta_0 = 1, beta_1 = 0."""
    w = weight or (lambda i: Fraction(1))
    c = [ring.const(w(0))] + [ring.zero() for _ in range(order)]
    for i in range(2, N + 1):
        if i < order:
            c[i] = ring.var(f"b{i}") * w(i)
    return TruncSeries(c, order, "t", ring.zero())


def power_sum_series(N: int, order: int) -> TruncSeries:
    """sum_{n>=1} (-t)^{n-1} p_n = (sum i beta_i t^{i-1}) / (sum beta_i t^i)."""
    if order < 1:
        raise ValueError("order must be at least 1")
    ring = rank_ring(N)
    B = beta_poly_series(ring, N, order + 1)
    return (B.derivative() * B.reciprocal()).truncate(order)


def power_sums(N: int, n_max: int) -> List[Poly]:
    """Newton power sums p_0..p_{n_max} in beta_2..beta_N (e_1 = 0)."""
    ring = rank_ring(N)
    out = [ring.const(Fraction(N))]
    if n_max >= 1:
        s = power_sum_series(N, n_max)
        out += [s.coeffs[n - 1] * (-1) ** (n - 1) for n in range(1, n_max + 1)]
    return out
