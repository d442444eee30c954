"""Laurent polynomials in q, cyclotomic polynomials and primitive prime divisors.

All arithmetic is exact.  Coefficients are Python ints, Fractions, or
elements of a real cyclotomic field (for dihedral Schur elements with
irrational character values).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

import sympy

from .numfield import FieldElement, as_rational

__all__ = [
    "LaurentPoly",
    "q",
    "cyclotomic",
    "CyclotomicProduct",
    "factor_cyclotomic_substitution",
    "factor_into_cyclotomics",
    "zsigmondy",
    "primitive_prime_divisors",
    "euler_phi",
]


def _norm(c):
    if isinstance(c, FieldElement):
        return as_rational(c)
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _div(a, b):
    if isinstance(a, FieldElement) or isinstance(b, FieldElement):
        return _norm(a / b)
    return _norm(Fraction(a) / Fraction(b))


class LaurentPoly:
    """Univariate Laurent polynomial sum(c_e * q^e) with exact coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean = {}
        for e, c in (coeffs or {}).items():
            c = _norm(c)
            if c != 0:
                clean[int(e)] = c
        self._c = clean

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, shift: int = 0) -> "LaurentPoly":
        """Build from a list of coefficients, lowest exponent (= shift) first."""
        return cls({shift + i: c for i, c in enumerate(coeffs)})

    @staticmethod
    def _lift(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(other)

    # structure
    def items(self):
        return sorted(self._c.items())

    def coeff(self, e: int):
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of zero polynomial")
        return min(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero polynomial")
        return max(self._c)

    def is_polynomial(self) -> bool:
        return not self._c or self.valuation >= 0

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def coefficients(self) -> list:
        """Dense coefficient list from q^valuation up to q^degree."""
        if not self._c:
            return []
        return [self._c.get(e, 0) for e in range(self.valuation, self.degree + 1)]

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self._c.items()})
        out: dict[int, object] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            ((e, c),) = self._c.items()
            return LaurentPoly({e * n: _div(1, c) ** (-n)})
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._c.items()})

    def divmod(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Euclidean division after clearing both valuations (q is a unit)."""
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        s, t = self.valuation, other.valuation
        num = self.coefficients()
        den = other.coefficients()
        lead = den[-1]
        quo = [0] * max(len(num) - len(den) + 1, 0)
        num = list(num)
        for i in range(len(num) - len(den), -1, -1):
            c = _div(num[i + len(den) - 1], lead)
            quo[i] = c
            if c != 0:
                for j, d in enumerate(den):
                    num[i + j] = num[i + j] - c * d
        rem = num[: len(den) - 1]
        return LaurentPoly.from_coeffs(quo, s - t), LaurentPoly.from_coeffs(rem, s)

    def exact_div(self, other) -> "LaurentPoly":
        other = self._lift(other)
        quo, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quo

    def divides(self, other: "LaurentPoly") -> bool:
        return other.divmod(self)[1].is_zero()

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            return self.exact_div(other)
        return LaurentPoly({e: _div(c, other) for e, c in self._c.items()})

    def substitute_power(self, m: int) -> "LaurentPoly":
        """The polynomial f(q^m); m = 0 collapses to the constant f(1)."""
        if m == 0:
            return LaurentPoly.constant(sum(self._c.values(), 0))
        return LaurentPoly({e * m: c for e, c in self._c.items()})

    def __call__(self, x):
        total = 0
        for e, c in self._c.items():
            if e >= 0:
                total = total + c * x**e
            else:
                total = total + c * _div(1, x**(-e))
        return _norm(total)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Rational, FieldElement)):
            return self._c == LaurentPoly.constant(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self._c.items(), key=lambda t: t[0])))

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "q") -> str:
        if not self._c:
            return "0"
        parts = []
        for idx, e in enumerate(sorted(self._c, reverse=True)):
            c = self._c[e]
            irrational = isinstance(c, FieldElement)
            neg = (not irrational) and c < 0
            mag = -c if neg else c
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            if irrational:
                cstr = f"({mag})"
            elif isinstance(mag, Fraction):
                cstr = f"({mag})"
            else:
                cstr = str(mag)
            if not mono:
                body = cstr if not isinstance(mag, Fraction) else str(mag)
            elif mag == 1 and not irrational:
                body = mono
            else:
                body = f"{cstr}*{mono}"
            if idx == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def to_json(self) -> dict:
        return {str(e): str(c) for e, c in self.items()}


q = LaurentPoly.monomial(1)


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPoly:
    """Phi_n(q), by dividing q^n - 1 by Phi_d(q) for every proper divisor d of n."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = LaurentPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            poly = poly.exact_div(cyclotomic(d))
    return poly


_SUBSCRIPT = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


@dataclass(frozen=True)
class CyclotomicProduct:
    """scalar * q^shift * prod Phi_n(q)^mult."""

    factors: tuple[tuple[int, int], ...] = ()
    scalar: object = 1
    shift: int = 0

    @classmethod
    def of(cls, factors: Mapping[int, int] | Iterable[int], scalar=1, shift: int = 0) -> "CyclotomicProduct":
        if not isinstance(factors, Mapping):
            counts: dict[int, int] = {}
            for n in factors:
                counts[n] = counts.get(n, 0) + 1
            factors = counts
        return cls(tuple(sorted((n, m) for n, m in factors.items() if m)), _norm(scalar), shift)

    def expand(self) -> LaurentPoly:
        result = LaurentPoly.monomial(self.shift, self.scalar)
        for n, mult in self.factors:
            result = result * cyclotomic(n) ** mult
        return result

    def multiplicity(self, n: int) -> int:
        return dict(self.factors).get(n, 0)

    def __mul__(self, other: "CyclotomicProduct") -> "CyclotomicProduct":
        counts = dict(self.factors)
        for n, m in other.factors:
            counts[n] = counts.get(n, 0) + m
        return CyclotomicProduct.of(counts, self.scalar * other.scalar, self.shift + other.shift)

    def __str__(self):
        parts = [str(self.scalar)]
        if self.shift:
            parts.append("q" if self.shift == 1 else f"q^{self.shift}")
        parts += [f"Φ{n}(q)^{m}" for n, m in self.factors]
        return " · ".join(parts)

    def pretty(self) -> str:
        """Compact form as written in tables, e.g. 'Φ₃(q)Φ₆(q)²'."""
        out = "" if self.scalar == 1 else str(self.scalar)
        if self.shift:
            out += "q" if self.shift == 1 else "q" + str(self.shift).translate(_SUPERSCRIPT)
        for n, m in self.factors:
            out += f"Φ{str(n).translate(_SUBSCRIPT)}(q)"
            if m > 1:
                out += str(m).translate(_SUPERSCRIPT)
        return out or "1"

    def to_json(self) -> dict:
        return {"scalar": str(self.scalar), "shift": self.shift, "factors": [[n, m] for n, m in self.factors]}


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def factor_cyclotomic_substitution(n: int, m: int) -> CyclotomicProduct:
    """Write Phi_n(q^m) as a product of cyclotomic polynomials in q.

    Every root of Phi_n(q^m) is a root of unity of order dividing nm, so the
    candidate factors are Phi_d with d | nm; each is stripped by exact
    division.  m = 0 gives the scalar Phi_n(1).
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    target = cyclotomic(n).substitute_power(m)
    if m == 0:
        return CyclotomicProduct.of({}, target.coeff(0))
    counts: dict[int, int] = {}
    rest = target
    for d in _divisors(n * m):
        phi = cyclotomic(d)
        while rest.degree >= phi.degree:
            quo, rem = rest.divmod(phi)
            if not rem.is_zero():
                break
            counts[d] = counts.get(d, 0) + 1
            rest = quo
    if rest.degree != 0:
        raise ArithmeticError(f"Phi_{n}(q^{m}) did not split into cyclotomic factors")
    product = CyclotomicProduct.of(counts, rest.coeff(0))
    assert product.expand() == target
    return product


def factor_into_cyclotomics(poly: LaurentPoly) -> CyclotomicProduct | None:
    """Factor a Laurent polynomial as scalar * q^s * prod Phi_d^m, or None if impossible."""
    if poly.is_zero():
        return None
    s = poly.valuation
    rest = poly.shift(-s)
    counts: dict[int, int] = {}
    d = 1
    # phi(d) >= sqrt(d/2), so d <= 2 deg^2 bounds the search
    while rest.degree > 0 and d <= 2 * max(rest.degree, 1) ** 2:
        phi = cyclotomic(d)
        if phi.degree <= rest.degree:
            while rest.degree >= phi.degree:
                quo, rem = rest.divmod(phi)
                if not rem.is_zero():
                    break
                counts[d] = counts.get(d, 0) + 1
                rest = quo
        d += 1
    if rest.degree != 0:
        return None
    return CyclotomicProduct.of(counts, rest.coeff(0), s)


def _multiplicative_order_is(q_: int, n: int, r: int) -> bool:
    if pow(q_, n, r) != 1:
        return False
    return all(pow(q_, n // p, r) != 1 for p in sympy.factorint(n))


def primitive_prime_divisors(q_: int, n: int) -> list[int]:
    """Primes r with q has multiplicative order exactly n modulo r."""
    if q_ < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")
    value = cyclotomic(n)(q_)
    # every primitive prime divisor of q^n - 1 divides Phi_n(q)
    return sorted(r for r in sympy.factorint(abs(value)) if _multiplicative_order_is(q_, n, r))


def zsigmondy(q_: int, n: int) -> int | None:
    """Smallest primitive prime divisor of q^n - 1, or None in the exceptional cases.

    The exceptions are n = 1 with q = 2, n = 2 with q + 1 a power of two, and
    (q, n) = (2, 6); a missing divisor outside that list raises.
    """
    primes = primitive_prime_divisors(q_, n)
    exceptional = (n == 1 and q_ == 2) or (n == 2 and (q_ + 1) & q_ == 0) or (q_, n) == (2, 6)
    if bool(primes) == exceptional:
        raise ArithmeticError(f"Zsigmondy exception table disagrees with factorisation at q={q_}, n={n}")
    return primes[0] if primes else None
