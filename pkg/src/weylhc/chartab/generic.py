"""Exact character tables from class-multiplication coefficients.

The central characters omega_chi(C_k) = |C_k| chi(g_k) / chi(1) are the
common eigenvectors of the matrices A_i[j][k] = a_ijk (the number of ways
to write a fixed z in C_k as x y with x in C_i, y in C_j).  A random integer
combination of the A_i has simple spectrum; its eigenvectors are computed
exactly, over Q or over the real cyclotomic field of the group.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction

import numpy as np
import sympy
from sympy.polys.matrices import DomainMatrix

from ..coxeter import CoxeterGroup, coxeter_group
from ..numfield import FieldElement, RealCyclotomicField, as_rational
from .core import CharacterTable, word_label

log = logging.getLogger(__name__)

MAX_CLASSES = 120


def class_multiplication_coefficients(W: CoxeterGroup) -> np.ndarray:
    """a[i, j, k] = #{x in C_i : x^{-1} z_k in C_j} for the representative z_k of C_k."""
    cls = W.classes
    r = len(cls)
    class_of = cls.class_of
    inv = W.inverses
    a = np.zeros((r, r, r), dtype=np.int64)
    for k, z in enumerate(cls.representatives):
        y = W.lookup(inv[:, W.perms[int(z)]])  # x^{-1} z for every x
        counts = np.bincount(class_of * r + class_of[y], minlength=r * r)
        a[:, :, k] = counts.reshape(r, r)
    return a


def _nullvector(mat: list[list], zero, one) -> list:
    """A nonzero vector spanning the (one-dimensional) kernel of a square matrix."""
    rows = [list(r) for r in mat]
    n = len(rows[0])
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = one / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise ArithmeticError(f"expected a one-dimensional eigenspace, found dimension {len(free)}")
    f = free[0]
    vec = [zero] * n
    vec[f] = one
    for i, c in enumerate(pivots):
        vec[c] = -rows[i][f]
    return vec


def _roots_in_field(coeffs: list[int], fld: RealCyclotomicField) -> list[FieldElement]:
    """All roots of an integer polynomial (lowest degree first) lying in fld.

    Numerical roots guide the search over embeddings; every candidate is
    rationalised and then verified by exact substitution.
    """
    d = fld.degree
    emb = fld.embeddings()
    numeric = np.roots(list(reversed(coeffs))).real
    # V[e][t] = (2cos(l_e pi/m))^t : coefficients -> embedded values
    V = np.array([[(2 * np.cos(l * np.pi / fld.m)) ** t for t in range(d)] for l in emb])
    found = []
    for assign in itertools.product(range(len(numeric)), repeat=len(emb)):
        target = numeric[list(assign)]
        sol, *_ = np.linalg.lstsq(V, target, rcond=None)
        cand = fld([Fraction(float(x)).limit_denominator(10**6) for x in sol])
        value = fld(0)
        for c in reversed(coeffs):
            value = value * cand + c
        if value.is_zero() and cand not in found:
            found.append(cand)
            if len(found) == len(coeffs) - 1:
                break
    return found


def _galois_block(Mq, fc, roots, fld) -> list[list]:
    """Eigenvectors for the roots of one irreducible factor f of degree d > 1.

    ker f(M) is a rational invariant subspace of dimension d; M restricted
    to it is a d x d rational matrix whose eigenvectors are found over fld.
    """
    r = len(Mq)
    Mz = DomainMatrix.from_list(Mq, sympy.ZZ)
    acc = DomainMatrix.eye(r, sympy.ZZ) * sympy.ZZ(fc[-1])
    for c in reversed(fc[:-1]):
        acc = acc * Mz + DomainMatrix.eye(r, sympy.ZZ) * sympy.ZZ(c)
    basis = acc.convert_to(sympy.QQ).nullspace().transpose()  # r x d
    d = len(fc) - 1
    if basis.shape[1] != d:
        raise ArithmeticError("invariant subspace has the wrong dimension")
    B = [[Fraction(int(v.numerator), int(v.denominator)) for v in row] for row in basis.to_list()]
    # rows where B restricts to an invertible d x d block
    pivots = basis.transpose().rref()[1]
    MB = [[sum(Mq[i][k] * B[k][j] for k in range(r) if Mq[i][k]) for j in range(d)] for i in range(r)]
    Bp = [[B[p][j] for j in range(d)] for p in pivots]
    # solve Bp R = MB[pivots]
    inv = _inverse(Bp)
    R = [[sum(inv[i][k] * MB[pivots[k]][j] for k in range(d)) for j in range(d)] for i in range(d)]
    for i in range(r):
        for j in range(d):
            if sum(B[i][k] * R[k][j] for k in range(d)) != MB[i][j]:
                raise ArithmeticError("kernel of f(M) is not M-invariant")
    out = []
    for lam in roots:
        mat = [[fld(R[i][j]) - (lam if i == j else 0) for j in range(d)] for i in range(d)]
        v = _nullvector(mat, fld(0), fld(1))
        vec = [sum((v[k] * B[i][k] for k in range(d) if B[i][k]), fld(0)) for i in range(r)]
        inv0 = vec[0].inverse()
        out.append([x * inv0 for x in vec])
    return out


def _inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def _charpoly(mat: np.ndarray) -> list[int]:
    dm = DomainMatrix.from_list([[int(x) for x in row] for row in mat], sympy.ZZ)
    return [int(c) for c in dm.charpoly()]  # highest degree first


def char_table_generic(W: CoxeterGroup, seed: int = 1) -> CharacterTable:
    """Burnside's algorithm with exact eigenvectors."""
    cls = W.classes
    r = len(cls)
    if r > MAX_CLASSES:
        raise ValueError(f"{r} classes exceeds the generic-algorithm limit {MAX_CLASSES}")
    sizes = [int(s) for s in cls.sizes]
    a = class_multiplication_coefficients(W)
    fld = W.datum.field
    rng = np.random.default_rng(seed)
    x = sympy.Symbol("x")
    for attempt in range(20):
        coef = rng.integers(1, 2**16, size=r)
        M = np.einsum("i,ijk->jk", coef, a)
        cp = _charpoly(M)
        poly = sympy.Poly(cp, x)
        if sympy.degree(sympy.gcd(poly, poly.diff(x))) == 0:
            break
    else:
        raise ArithmeticError("could not find a combination with simple spectrum")
    _, factors = sympy.factor_list(poly)
    omegas = []
    Mq = [[int(v) for v in row] for row in M]
    for f, _mult in factors:
        fc = [int(c) for c in reversed(f.all_coeffs())]
        if len(fc) == 2:
            lam = sympy.Rational(-fc[0], fc[1])
            shifted = DomainMatrix.from_list(Mq, sympy.ZZ).convert_to(sympy.QQ) - DomainMatrix.eye(r, sympy.QQ) * sympy.QQ(lam.p, lam.q)
            kernel = shifted.nullspace().to_list()
            if len(kernel) != 1:
                raise ArithmeticError("eigenspace of a simple eigenvalue is not one-dimensional")
            vec = [Fraction(int(v.numerator), int(v.denominator)) for v in kernel[0]]
            omegas.append([v / vec[0] for v in vec])
            continue
        if fld is None:
            raise ArithmeticError("irrational eigenvalue for a crystallographic group")
        roots = _roots_in_field(fc, fld)
        if len(roots) != len(fc) - 1:
            raise ArithmeticError(f"eigenvalue polynomial {f} does not split in {fld}")
        omegas.extend(_galois_block(Mq, fc, roots, fld))
    rows = []
    for om in omegas:
        s = sum(om[k] * om[k] / sizes[k] for k in range(r))
        deg2 = as_rational(Fraction(W.order) / s if not isinstance(s, FieldElement) else W.order / s)
        if isinstance(deg2, FieldElement) or Fraction(deg2).denominator != 1:
            raise ArithmeticError(f"non-integral squared degree {deg2}")
        deg = sympy.sqrt(int(deg2))
        if not deg.is_Integer:
            raise ArithmeticError(f"squared degree {deg2} is not a square")
        deg = int(deg)
        row = [as_rational(om[k] * deg / sizes[k]) for k in range(r)]
        rows.append(row)
    rows.sort(key=_row_key)
    words = W.class_words()
    return CharacterTable(
        group=W,
        class_sizes=tuple(sizes),
        class_words=tuple(words),
        class_names=tuple(word_label(w) for w in words),
        values=tuple(map(tuple, rows)),
        labels=tuple(f"chi{i + 1}" for i in range(r)),
        method="generic",
        order=W.order,
        field=fld,
    )


def _row_key(row):
    def k(v):
        if isinstance(v, FieldElement):
            return (v.to_float(), tuple(-c for c in v.coeffs))
        return (float(v), ())

    return (row[0], tuple(-k(v)[0] for v in row), tuple(k(v)[1] for v in row))


def char_table_generic_for(type_str: str, bound: int | None = None) -> CharacterTable:
    return char_table_generic(coxeter_group(type_str, bound=bound))
