"""Exact arithmetic in the real cyclotomic fields Q(2cos(pi/m)).

Character values and reflection matrices of the non-crystallographic
Coxeter groups (H3, H4, I2(m)) live in Z[c] with c = 2cos(pi/m).  An
element is stored as its coefficient vector in the power basis
1, c, ..., c^(d-1), reduced modulo the minimal polynomial of c.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = ["RealCyclotomicField", "FieldElement", "real_cyclotomic_minpoly", "as_rational", "is_rational"]


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    dq = len(num) - len(den)
    if dq < 0:
        return [0], num
    quo = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = num[i + len(den) - 1]
        quo[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    rem = num[: len(den) - 1] or [0]
    return quo, rem


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(_cyclotomic_coeffs(d)))
            assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def real_cyclotomic_minpoly(m: int) -> tuple[int, ...]:
    """Minimal polynomial of 2cos(pi/m), coefficients lowest degree first."""
    if m < 2:
        raise ValueError("m must be at least 2")
    phi = _cyclotomic_coeffs(2 * m)
    d = (len(phi) - 1) // 2
    # z^-d Phi_2m(z) = a_d + sum_k a_{d+k} (z^k + z^-k), and z^k + z^-k = P_k(z + 1/z)
    result = [0] * (d + 1)
    result[0] = phi[d]
    p_prev, p_cur = [2], [0, 1]
    for k in range(1, d + 1):
        for i, c in enumerate(p_cur):
            result[i] += phi[d + k] * c
        nxt = [0] + p_cur
        for i, c in enumerate(p_prev):
            nxt[i] -= c
        p_prev, p_cur = p_cur, nxt
    assert result[-1] == 1
    return tuple(result)


class RealCyclotomicField:
    """The field Q(c), c = 2cos(pi/m)."""

    _instances: dict[int, "RealCyclotomicField"] = {}

    def __new__(cls, m: int):
        if m in cls._instances:
            return cls._instances[m]
        self = super().__new__(cls)
        self.m = m
        self.minpoly = real_cyclotomic_minpoly(m)
        self.degree = len(self.minpoly) - 1
        # reduced images of c^k for k < 2d - 1
        d = self.degree
        powers = []
        for k in range(max(2 * d - 1, 1)):
            vec = [0] * (k + 1)
            vec[k] = 1
            _, rem = _poly_divmod_int(vec, list(self.minpoly))
            rem = (rem + [0] * d)[:d]
            powers.append(tuple(rem))
        self._powers = powers
        cls._instances[m] = self
        return self

    def __reduce__(self):
        return (RealCyclotomicField, (self.m,))

    def __repr__(self):
        return f"RealCyclotomicField({self.m})"

    @property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return FieldElement(self, (Fraction(-self.minpoly[0]),))
        return FieldElement(self, (0, 1) + (0,) * (self.degree - 2))

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is self:
                return value
            if value.is_rational():
                return self(value.rational())
            raise TypeError(f"cannot coerce element of {value.field} into {self}")
        if isinstance(value, (list, tuple)):
            coeffs = tuple(Fraction(x) for x in value) + (Fraction(0),) * (self.degree - len(value))
            if len(coeffs) > self.degree:
                return self._reduce(list(coeffs))
            return FieldElement(self, coeffs)
        return FieldElement(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))

    def _reduce(self, coeffs) -> "FieldElement":
        d = self.degree
        out = [Fraction(0)] * d
        for k, a in enumerate(coeffs):
            if not a:
                continue
            if k < d:
                out[k] += a
            else:
                for i, b in enumerate(self._power(k)):
                    if b:
                        out[i] += a * b
        return FieldElement(self, tuple(out))

    def _power(self, k: int) -> tuple:
        if k < len(self._powers):
            return self._powers[k]
        # rarely needed: repeated multiplication by c
        vec = list(self._powers[-1])
        for _ in range(k - len(self._powers) + 1):
            shifted = [0] + vec
            top = shifted.pop()
            for i, b in enumerate(self.minpoly[:-1]):
                shifted[i] -= top * b
            vec = shifted
        return tuple(vec)

    def embeddings(self) -> list[int]:
        """The integers l with c -> 2cos(l*pi/m) a real embedding (l = 1 first)."""
        m = self.m
        return [l for l in range(1, m) if math.gcd(l, 2 * m) == 1] or [1]

    def chebyshev(self, n: int) -> "FieldElement":
        """2cos(n*pi/m) as an element of this field."""
        c = self.gen
        p_prev, p_cur = self(2), c
        if n == 0:
            return p_prev
        n = abs(n)
        for _ in range(n - 1):
            p_prev, p_cur = p_cur, c * p_cur - p_prev
        return p_cur

    def describe(self) -> dict:
        return {
            "generator": f"c = 2cos(pi/{self.m})",
            "minpoly": _format_int_poly(self.minpoly, "c"),
        }


def _format_int_poly(coeffs, var: str) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        a = coeffs[k]
        if not a:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        terms.append((a, mono))
    return _join_terms(terms)


def _join_terms(terms) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (a, mono) in enumerate(terms):
        neg = a < 0
        mag = -a if neg else a
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}" if isinstance(mag, int) or Fraction(mag).denominator == 1 else f"({mag})*{mono}"
        else:
            body = str(mag)
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: RealCyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = tuple(Fraction(x) for x in coeffs)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return other
            if other.is_rational():
                return self.field(other.rational())
            if self.is_rational():
                # let the irrational operand drive the coercion
                return NotImplemented
            raise TypeError(f"mixed fields {self.field} and {other.field}")
        if isinstance(other, (int, Rational)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, FieldElement):
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return self.field._reduce(prod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational():
            return self.field(1 / self.coeffs[0])
        d = self.field.degree
        # column j of the multiplication matrix is self * c^j
        cols = []
        basis_elem = self
        c = self.field.gen
        for _ in range(d):
            cols.append(basis_elem.coeffs)
            basis_elem = basis_elem * c
        mat = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        sol = _solve(mat, d)
        return FieldElement(self.field, tuple(sol))

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, FieldElement):
            return FieldElement(self.field, tuple(a / other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.rational() == other.rational()
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.m, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.coeffs[0]

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    def galois(self, l: int) -> "FieldElement":
        """Image under the automorphism c -> 2cos(l*pi/m)."""
        img = self.field.chebyshev(l)
        result = self.field(0)
        power = self.field(1)
        for a in self.coeffs:
            if a:
                result = result + power * a
            power = power * img
        return result

    def to_float(self, l: int = 1) -> float:
        x = 2 * math.cos(l * math.pi / self.field.m)
        return float(sum(float(a) * x**k for k, a in enumerate(self.coeffs)))

    def sort_key(self):
        return (self.to_float(), self.coeffs)

    def __repr__(self):
        return f"FieldElement({self.field.m}, {str(self)!r})"

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if not a:
                continue
            a = int(a) if a.denominator == 1 else a
            mono = "" if k == 0 else ("c" if k == 1 else f"c^{k}")
            terms.append((a, mono))
        return _join_terms(terms)


def _solve(aug: list[list[Fraction]], n: int) -> list[Fraction]:
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def is_rational(x) -> bool:
    if isinstance(x, FieldElement):
        return x.is_rational()
    return isinstance(x, (int, Rational))


def as_rational(x):
    """Collapse a rational value to int (if integral) or Fraction; leave irrationals alone."""
    if isinstance(x, FieldElement):
        if not x.is_rational():
            return x
        x = x.rational()
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x
