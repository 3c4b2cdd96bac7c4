"""Exact arithmetic in Q and in the cyclotomic field Q(zeta_12).

Elements of Q(zeta_12) are stored as c0 + c1 x + c2 x^2 + c3 x^3 with
x = exp(i pi / 6), reduced by x^4 = x^2 - 1.  This single quartic extension
contains sqrt(3), i, sqrt(-3) and the cube roots of unity.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
Scalar = Union[int, Fraction]


def rat_to_str(q: Scalar) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(q))


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


def _mul_raw(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple:
    prod = [Fraction(0)] * 7
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    # x^6 = -1, x^5 = x^3 - x, x^4 = x^2 - 1
    c6, c5, c4 = prod[6], prod[5], prod[4]
    return (
        prod[0] - c4 - c6,
        prod[1] - c5,
        prod[2] + c4,
        prod[3] + c5,
    )


class CycNum:
    """Element of Q[x]/(x^4 - x^2 + 1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = (0, 0, 0, 0)):
        c = tuple(Fraction(v) for v in coeffs)
        if len(c) != 4:
            raise ValueError("CycNum needs exactly 4 coefficients")
        self.coeffs = c

    @classmethod
    def rational(cls, q: Scalar) -> "CycNum":
        return cls((q, 0, 0, 0))

    @staticmethod
    def _coerce(other) -> "CycNum":
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum((other, 0, 0, 0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycNum(a + b for a, b in zip(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycNum(a - b for a, b in zip(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return CycNum(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(a * other for a in self.coeffs)
        if not isinstance(other, CycNum):
            return NotImplemented
        return CycNum(_mul_raw(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self:
            raise ZeroDivisionError("CycNum division by zero")
        # Solve M y = e0 where column j of M is self * x^j.
        cols = []
        basis = CycNum((1, 0, 0, 0))
        xx = CycNum((0, 1, 0, 0))
        for _ in range(4):
            cols.append((self * basis).coeffs)
            basis = basis * xx
        mat = [[cols[j][i] for j in range(4)] + [Fraction(int(i == 0))] for i in range(4)]
        return CycNum(solve_augmented(mat))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("CycNum division by zero")
            return CycNum(a / other for a in self.coeffs)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int) -> "CycNum":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "CycNum":
        """Complex conjugation, induced by x -> x^{-1} = x - x^3."""
        c0, c1, c2, c3 = self.coeffs
        return CycNum((c0 + c2, c1, -c2, -c1 - c3))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def to_json(self) -> list:
        return [rat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "CycNum":
        return cls(Fraction(s) for s in data)

    def to_complex(self) -> complex:
        """Floating-point value, for display only."""
        x = cmath.exp(1j * cmath.pi / 6)
        return sum(float(c) * x**k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return "CycNum(" + ", ".join(rat_to_str(c) for c in self.coeffs) + ")"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(rat_to_str(c) + ("" if k == 0 else "*x" if k == 1 else f"*x^{k}"))
        return " + ".join(parts) if parts else "0"


def solve_augmented(mat: list) -> list:
    """Gauss-Jordan on a square augmented matrix [A | b] with exact entries."""
    n = len(mat)
    m = [row[:] for row in mat]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular linear system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


ZERO = CycNum()
ONE = CycNum((1, 0, 0, 0))
X = CycNum((0, 1, 0, 0))

_CONSTANTS = {
    "sqrt3": CycNum((0, 2, 0, -1)),
    "i": CycNum((0, 0, 0, 1)),
    "sqrtm3": CycNum((-1, 0, 2, 0)),
    "zeta3": CycNum((-1, 0, 1, 0)),
    "zeta6": CycNum((0, 0, 1, 0)),
}


def cyc_constant(name: str) -> CycNum:
    try:
        return _CONSTANTS[name]
    except KeyError:
        raise ValueError(f"unknown constant {name!r}; expected one of {sorted(_CONSTANTS)}")


def cyc_arithmetic(a: CycNum, b: CycNum, op: str) -> CycNum:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def cyc_conjugate(a: CycNum) -> CycNum:
    return a.conjugate()


SQRT3 = _CONSTANTS["sqrt3"]
I = _CONSTANTS["i"]
SQRTM3 = _CONSTANTS["sqrtm3"]
ZETA3 = _CONSTANTS["zeta3"]
ZETA6 = _CONSTANTS["zeta6"]
