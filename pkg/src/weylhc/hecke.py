"""Schur elements, fake degrees and Poincare polynomials.

Hecke algebras use the normalisation (T_s - u_s)(T_s + 1) = 0, so the
trivial Schur element is the parameter-weighted Poincare polynomial
sum_w u_w and the sign Schur element of A1 is u^{-1}(1 + u).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
import sympy

from .chartab import CharacterTable, character_table
from .chartab.core import standard_generator_map
from .chartab.dihedral import _from_group as dihedral_table
from .coxeter import CoxeterGroup, coxeter_group
from .cyclo import (
    CyclotomicProduct,
    LaurentPoly,
    factor_cyclotomic_substitution,
    factor_into_cyclotomics,
)
from .numfield import FieldElement, RealCyclotomicField

__all__ = [
    "HeckeParams",
    "SchurElement",
    "FakeDegree",
    "DomainError",
    "schur_A1",
    "schur_G2",
    "schur_dihedral",
    "schur_linear",
    "fake_degrees",
    "poincare_polynomial",
    "poincare_index",
    "degrees_of",
    "principal_series_degree",
    "G2_LEVELS",
    "TABLE1_CLAIMS",
    "Table1Cell",
    "verify_table1",
]

G2_LEVELS = (1, 2, 5)
q = LaurentPoly.monomial(1)


class DomainError(ValueError):
    """Arguments outside the range where a closed form is defined."""


# ---------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class HeckeParams:
    """Parameter u_s = q^{exponents[s]} for each simple reflection s."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 1 for e in self.exponents):
            raise DomainError("parameter exponents must be positive")

    @classmethod
    def equal(cls, rank: int, k: int = 1) -> "HeckeParams":
        return cls((k,) * rank)

    @classmethod
    def g2(cls, k: int) -> "HeckeParams":
        """(q, q^{2k-1}) on the two generators of G2."""
        return cls((1, 2 * k - 1))

    def u(self, s: int) -> LaurentPoly:
        return LaurentPoly.monomial(self.exponents[s])

    def validate(self, W: CoxeterGroup) -> None:
        """Generators joined by an odd bond are conjugate and need equal parameters."""
        cox = W.datum.coxeter_matrix
        if len(self.exponents) != W.rank:
            raise DomainError(f"{len(self.exponents)} parameters for rank {W.rank}")
        for i in range(W.rank):
            for j in range(W.rank):
                if i != j and cox[i][j] % 2 == 1 and self.exponents[i] != self.exponents[j]:
                    raise DomainError(f"s{i + 1} and s{j + 1} are conjugate but carry different parameters")

    def weight(self, word: Sequence[int]) -> int:
        return sum(self.exponents[g] for g in word)

    def to_json(self) -> list[str]:
        return [str(self.u(s)) for s in range(len(self.exponents))]


@dataclass(frozen=True)
class SchurElement:
    label: str
    value: LaurentPoly
    factored: CyclotomicProduct | None = None

    def __post_init__(self):
        if self.value.is_zero():
            raise ArithmeticError("a Schur element is never zero")

    def to_json(self) -> dict:
        out = {"label": self.label, "value": str(self.value), "coefficients": self.value.to_json()}
        if self.factored is not None:
            out["factored"] = str(self.factored)
        return out


@dataclass(frozen=True)
class FakeDegree:
    label: str
    polynomial: LaurentPoly
    b_invariant: int

    def to_json(self) -> dict:
        return {"label": self.label, "polynomial": str(self.polynomial), "b": self.b_invariant}


def _factored(poly: LaurentPoly) -> CyclotomicProduct | None:
    if any(isinstance(c, FieldElement) for _, c in poly.items()):
        return None
    return factor_into_cyclotomics(poly)


# ---------------------------------------------------------------------------
# closed forms


def schur_A1(k: int) -> tuple[SchurElement, SchurElement]:
    """(c_triv, c_sign) = (Phi2(q^k), q^{-k} Phi2(q^k)) for the parameter q^k."""
    if k < 1:
        raise DomainError("k must be a positive integer")
    base = factor_cyclotomic_substitution(2, k)
    c1 = base.expand()
    triv = SchurElement("triv", c1, base)
    sign = SchurElement("sign", c1.shift(-k), CyclotomicProduct.of(dict(base.factors), base.scalar, -k))
    return triv, sign


def schur_G2(k: int, b: int) -> SchurElement:
    """c_{phi_{2,b}} = 2 q^{-2k+1} Phi3(q^{k+b-2}) Phi6(q^{k-b+1}) for parameters (q, q^{2k-1})."""
    if k not in G2_LEVELS or b not in (1, 2):
        raise DomainError(f"schur_G2 is defined for k in {G2_LEVELS} and b in (1, 2), got k={k}, b={b}")
    prod = (
        CyclotomicProduct.of({}, 2, -2 * k + 1)
        * factor_cyclotomic_substitution(3, k + b - 2)
        * factor_cyclotomic_substitution(6, k - b + 1)
    )
    return SchurElement(f"phi2,{b}", prod.expand(), prod)


def _dihedral_m(W: CoxeterGroup) -> int:
    comp, _ = standard_generator_map(W)
    return {"A": 3, "B": 4, "C": 4, "G": 6}.get(comp.family, comp.m)


def schur_linear(W: CoxeterGroup, params: HeckeParams, signs: Sequence[int]) -> LaurentPoly:
    """Schur element of the one-dimensional character T_s -> u_s (sign +1) or -1 (sign -1).

    c = sum_w chi(T_w)^2 / u_w over all w in W.
    """
    total = LaurentPoly()
    per_gen = []
    for s in range(W.rank):
        u = params.u(s)
        per_gen.append(u if signs[s] > 0 else LaurentPoly.monomial(-params.exponents[s]))
    # group elements by their multiset of generators: weight is multiplicative along a reduced word
    exps: dict[tuple[int, ...], int] = {}
    for idx in range(W.order):
        word = W.word(idx)
        key = tuple(sorted(word))
        exps[key] = exps.get(key, 0) + 1
    for key, count in exps.items():
        term = LaurentPoly.constant(count)
        for g in key:
            term = term * per_gen[g]
        total = total + term
    return total


def schur_dihedral(m: int, params: HeckeParams, W: CoxeterGroup | None = None) -> dict[str, SchurElement]:
    """All Schur elements of the dihedral Hecke algebra with parameters (u, v).

    Two-dimensional characters (theta = 2cos(2 pi j/m)):
        c_j = m/(4 - theta^2) * (u + v + theta sqrt(uv)) (uv + 1 - theta sqrt(uv)) / (uv),
    which needs sqrt(uv) to be a power of q.
    """
    if m < 3:
        raise DomainError("dihedral Schur elements need m >= 3")
    if W is None:
        W = coxeter_group({3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})"))
    if _dihedral_m(W) != m:
        raise DomainError(f"W({W.cartan_type}) is not dihedral of order {2 * m}")
    params.validate(W)
    a, b = params.exponents
    _, to_std = standard_generator_map(W)
    if to_std[0] != 0:
        a, b = b, a
    if (a + b) % 2:
        raise DomainError("two-dimensional Schur elements need u*v to be a square power of q")
    u, v = LaurentPoly.monomial(a), LaurentPoly.monomial(b)
    root = LaurentPoly.monomial((a + b) // 2)
    uv = LaurentPoly.monomial(a + b)
    table = dihedral_table(W)
    out: dict[str, SchurElement] = {}
    # one-dimensional characters from their values on s and t
    std_word = {0: [g for g in range(2) if to_std[g] == 0], 1: [g for g in range(2) if to_std[g] == 1]}
    s_class = W.class_of_word(std_word[0])
    t_class = W.class_of_word(std_word[1])
    for label, row in zip(table.labels, table.values):
        if row[0] != 1:
            continue
        signs = [0, 0]
        signs[std_word[0][0]] = int(row[s_class])
        signs[std_word[1][0]] = int(row[t_class])
        val = schur_linear(W, HeckeParams(tuple(params.exponents)), signs)
        out[label] = SchurElement(label, val, _factored(val))
    fld = RealCyclotomicField(m)
    one = LaurentPoly.constant(1)
    for j in range(1, (m - 1) // 2 + 1):
        theta = fld.chebyshev(2 * j)
        scale = Fraction(m) / (4 - theta * theta) if (theta * theta).is_rational() else m / (4 - theta * theta)
        if isinstance(scale, FieldElement) and scale.is_rational():
            scale = scale.rational()
        if isinstance(theta, FieldElement) and theta.is_rational():
            theta = theta.rational()
        first = u + v + root * LaurentPoly.constant(theta)
        second = uv + one - root * LaurentPoly.constant(theta)
        val = (first * second).shift(-(a + b)) * LaurentPoly.constant(scale)
        label = f"phi2,{j}"
        out[label] = SchurElement(label, val, _factored(val))
    return out


# ---------------------------------------------------------------------------
# Poincare polynomials, degrees, fake degrees


def poincare_polynomial(W: CoxeterGroup) -> LaurentPoly:
    return LaurentPoly.from_coeffs(W.poincare_coefficients())


def poincare_index(W: CoxeterGroup, J: Sequence[int]) -> LaurentPoly:
    """sum of q^l(w) over minimal length representatives of the cosets w W_J."""
    J = list(J)
    if J:
        mask = (W.perms[:, J] < W.N).all(axis=1)
        lengths = W.lengths[mask]
    else:
        lengths = W.lengths
    return LaurentPoly.from_coeffs(np.bincount(lengths).tolist())


def degrees_of(W: CoxeterGroup) -> list[int]:
    """Degrees d_i with P(q) = prod (q^{d_i} - 1)/(q - 1).

    The multiplicity of Phi_e in P counts the d_i divisible by e (e > 1);
    Moebius inversion over multiples recovers how many d_i equal each d.
    """
    if W.rank == 0:
        return []
    fac = factor_into_cyclotomics(poincare_polynomial(W))
    if fac is None or fac.scalar != 1:
        raise ArithmeticError("Poincare polynomial is not a product of cyclotomic polynomials")
    mult = dict(fac.factors)
    mult[1] = W.rank
    top = max(mult)
    degrees = []
    for d in range(top, 0, -1):
        count = sum(sympy.mobius(e // d) * mult.get(e, 0) for e in range(d, top + 1, d))
        if count < 0:
            raise ArithmeticError("inconsistent cyclotomic multiplicities in the Poincare polynomial")
        degrees += [d] * int(count)
    degrees.sort()
    if len(degrees) != W.rank or np.prod(degrees, dtype=object) != W.order:
        raise ArithmeticError(f"degrees {degrees} inconsistent with |W| = {W.order}")
    return degrees


def _charpoly_reversed(mat: list[list]) -> LaurentPoly:
    """det(1 - q g) via Faddeev-LeVerrier on det(x - g)."""
    n = len(mat)
    if n == 0:
        return LaurentPoly.constant(1)
    coeffs = [1]  # of x^n, x^{n-1}, ...
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        M = [[sum(mat[i][t] * M[t][j] for t in range(n)) + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        AM = [[sum(mat[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(AM[i][i] for i in range(n))
        coeffs.append(-tr / k if isinstance(tr, FieldElement) else Fraction(-tr, k))
    # det(x - g) = sum coeffs[k] x^{n-k}; det(1 - q g) = q^n det(1/q - g) = sum coeffs[k] q^k
    return LaurentPoly.from_coeffs(coeffs)


def fake_degrees(table: CharacterTable) -> list[FakeDegree]:
    """R_chi(q) = (1/|W|) sum_k |C_k| chi(g_k) prod(1 - q^{d_i}) / det(1 - q g_k).

    Each term is an exact polynomial because the multiplicity of a root of
    unity as an eigenvalue of g never exceeds the number of degrees it divides.
    """
    W = table.group
    if W is None:
        raise ValueError("fake degrees need an enumerated group")
    one = LaurentPoly.constant(1)
    D = one
    for d in degrees_of(W):
        D = D * (one - LaurentPoly.monomial(d))
    terms = []
    for word in table.class_words:
        det = _charpoly_reversed(W.reflection_matrix(word))
        terms.append(D.exact_div(det))
    out = []
    labels = table.labels
    for lab, row in zip(labels, table.values):
        acc = LaurentPoly()
        for size, val, term in zip(table.class_sizes, row, terms):
            if val != 0:
                acc = acc + term * LaurentPoly.constant(val * size)
        acc = acc / table.order
        bad = [c for _, c in acc.items() if not isinstance(c, int) or c < 0]
        if bad or acc.is_zero():
            raise ArithmeticError(f"fake degree of {lab} is not a polynomial with non-negative integer coefficients: {acc}")
        out.append(FakeDegree(lab, acc, acc.valuation))
    return out


# ---------------------------------------------------------------------------
# degree formula


def principal_series_degree(label: str, k: int, W, index: LaurentPoly | None = None, include_phi1: bool = True) -> LaurentPoly:
    """rho_phi(1) = phi(1) [G:P] c_phi^{-1} for the parameters q^k (A1) or (q, q^{2k-1}) (G2).

    For other dihedral types all parameters are q^k.  The index [G:P] is the
    parameter-weighted Poincare polynomial unless given explicitly.  With
    ``include_phi1=False`` the phi(1) factor is dropped (generic degree P/c_phi).
    """
    if isinstance(W, str):
        W = coxeter_group(W)
    comps = W.cartan_type.components
    if len(comps) != 1 or not (comps[0].family == "A" and comps[0].rank == 1 or W.rank == 2):
        raise NotImplementedError(f"principal series degrees are implemented for A1 and dihedral types, not {W.cartan_type}")
    table = character_table(W) if W.rank == 1 else dihedral_table(W)
    i = table.index(label)
    phi1 = table.degrees[i]
    if W.rank == 1:
        triv, sign = schur_A1(k)
        c = (triv if table.values[i][-1] == 1 else sign).value
        idx = triv.value if index is None else index
    else:
        m = _dihedral_m(W)
        comp, to_std = standard_generator_map(W)
        params = HeckeParams.g2(k) if comp.family == "G" else HeckeParams.equal(2, k)
        if to_std[0] != 0:
            params = HeckeParams(params.exponents[::-1])
        schur = schur_dihedral(m, params, W)
        lab = table.labels[i]
        c = schur[lab].value
        idx = schur[table.labels[0]].value if index is None else index
    num = idx * LaurentPoly.constant(phi1 if include_phi1 else 1)
    return num.exact_div(c)


# ---------------------------------------------------------------------------
# G2 factorisation table

# (k, b) -> claimed factorisation of Phi3(q^{k+b-2}) Phi6(q^{k-b+1})
TABLE1_CLAIMS: dict[tuple[int, int], CyclotomicProduct] = {
    (1, 1): CyclotomicProduct.of({6: 1}, 3),
    (1, 2): CyclotomicProduct.of({3: 1}),
    (2, 1): CyclotomicProduct.of({3: 1, 12: 1}),
    (2, 2): CyclotomicProduct.of({3: 1, 6: 2}),
    (5, 1): CyclotomicProduct.of({3: 1, 6: 2, 12: 1, 30: 1}),
    (5, 2): CyclotomicProduct.of({3: 1, 15: 1, 24: 1}),
}


@dataclass(frozen=True)
class Table1Cell:
    k: int
    b: int
    claimed: CyclotomicProduct
    computed: CyclotomicProduct

    @property
    def holds(self) -> bool:
        # both the factor multisets and the expanded polynomials must agree
        return self.claimed == self.computed and self.claimed.expand() == self.computed.expand()

    @property
    def expression(self) -> str:
        return f"Φ3(q^{self.k + self.b - 2})Φ6(q^{self.k - self.b + 1})"

    def line(self) -> str:
        mark = "ok" if self.holds else "MISMATCH"
        return f"k={self.k} b={self.b} {self.expression}: {self.claimed.pretty()} = {self.computed.pretty()} [{mark}]"


def verify_table1(k: int | None = None) -> list[Table1Cell]:
    """Recompute every cell (or the row for one k) by substituting into cyclotomic polynomials."""
    if k is not None and k not in G2_LEVELS:
        raise DomainError(f"k must be one of {G2_LEVELS}")
    cells = []
    for (kk, b), claimed in TABLE1_CLAIMS.items():
        if k is not None and kk != k:
            continue
        computed = factor_cyclotomic_substitution(3, kk + b - 2) * factor_cyclotomic_substitution(6, kk - b + 1)
        cells.append(Table1Cell(kk, b, claimed, computed))
    return cells
