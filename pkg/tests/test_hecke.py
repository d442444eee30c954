"""Schur elements, fake degrees, Poincare polynomials and degree formulas."""

from fractions import Fraction

import mpmath
import pytest

from weylhc.chartab import character_table
from weylhc.chartab.dihedral import _from_group as dihedral_table
from weylhc.coxeter import coxeter_group
from weylhc.cyclo import CyclotomicProduct, LaurentPoly, factor_into_cyclotomics
from weylhc.hecke import (
    DomainError,
    HeckeParams,
    degrees_of,
    fake_degrees,
    poincare_index,
    poincare_polynomial,
    principal_series_degree,
    schur_A1,
    schur_dihedral,
    schur_G2,
    verify_table1,
)

q = LaurentPoly.monomial(1)


def as_float(x):
    return x.to_float() if hasattr(x, "to_float") else float(x)


def evaluate(poly, qv):
    return sum(as_float(c) * qv**e for e, c in poly.items())


# -- closed forms ----------------------------------------------------------


def test_schur_a1_examples():
    triv, sign = schur_A1(1)
    assert triv.value == q + 1
    assert sign.value == (q + 1).shift(-1)
    assert schur_A1(2)[0].value == q**2 + 1
    for k in range(1, 11):
        t, s = schur_A1(k)
        assert t.value == s.value.shift(k)
        assert t.value != s.value


@pytest.mark.parametrize("k, b, factors, shift", [
    (1, 1, {6: 1}, -1), (2, 1, {3: 1, 12: 1}, -3), (5, 2, {3: 1, 15: 1, 24: 1}, -9),
])
def test_schur_g2_examples(k, b, factors, shift):
    scalar = 6 if (k, b) == (1, 1) else 2
    assert schur_G2(k, b).value == CyclotomicProduct.of(factors, scalar, shift).expand()


@pytest.mark.parametrize("k, b", [(3, 1), (1, 3), (0, 2), (4, 2)])
def test_schur_g2_domain(k, b):
    with pytest.raises(DomainError):
        schur_G2(k, b)


def test_hecke_params_validation():
    with pytest.raises(ValueError):
        HeckeParams((1, 3)).validate(coxeter_group("A2"))
    HeckeParams((1, 3)).validate(coxeter_group("G2"))
    HeckeParams((1, 2)).validate(coxeter_group("B2"))


# -- dihedral Schur elements -----------------------------------------------


def trace_form_schur(m, a, b, qv):
    """Schur elements from the trace form, using explicit matrix representations.

    For (T_s - u)(T_s + 1) = 0 the dual basis of T_w is u_w^{-1} T_{w^{-1}},
    so c_chi chi(1) = sum_w chi(T_w) chi(T_{w^{-1}}) / u_w.  The representation
    with tr(T_s T_t) = sqrt(uv) 2cos(2 pi j/m) specialises at q = 1 to phi2,j.
    Arithmetic is 60-digit mpmath, since the entries span many orders of magnitude.
    """
    with mpmath.workdps(60):
        u, v = mpmath.mpf(qv) ** a, mpmath.mpf(qv) ** b
        root = mpmath.sqrt(u * v)
        words = [()]
        for length in range(1, m + 1):
            for start in (0, 1):
                if length == m and start == 1:
                    continue
                words.append(tuple((start + i) % 2 for i in range(length)))
        out = {}
        for j in range(1, (m - 1) // 2 + 1):
            theta = 2 * mpmath.cos(2 * mpmath.pi * j / m)
            Ts = mpmath.matrix([[-1, 0], [u + v + root * theta, u]])
            Tt = mpmath.matrix([[v, 1], [0, -1]])
            gens = [Ts, Tt]
            lhs, rhs = mpmath.eye(2), mpmath.eye(2)
            for i in range(m):
                lhs, rhs = lhs * gens[i % 2], rhs * gens[(i + 1) % 2]
            assert mpmath.mnorm(lhs - rhs, 1) <= mpmath.mpf(10) ** -40 * mpmath.mnorm(lhs, 1)
            total = mpmath.mpf(0)
            for w in words:
                mat, inv = mpmath.eye(2), mpmath.eye(2)
                for g in w:
                    mat = mat * gens[g]
                for g in reversed(w):
                    inv = inv * gens[g]
                uw = mpmath.fprod(u if g == 0 else v for g in w)
                total += (mat[0, 0] + mat[1, 1]) * (inv[0, 0] + inv[1, 1]) / uw
            out[f"phi2,{j}"] = float(total / 2)
        return out


@pytest.mark.parametrize("m, a, b", [(3, 1, 1), (4, 1, 3), (4, 2, 2), (5, 1, 1), (6, 1, 1), (6, 1, 3), (6, 1, 9),
                                     (7, 2, 2), (8, 1, 1), (8, 1, 3)])
def test_dihedral_schur_matches_trace_form(m, a, b):
    t = {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")
    schur = schur_dihedral(m, HeckeParams((a, b)), coxeter_group(t))
    for qv in (2.0, 3.0, 5.0):
        oracle = trace_form_schur(m, a, b, qv)
        for lab, val in oracle.items():
            assert evaluate(schur[lab].value, qv) == pytest.approx(val, rel=1e-9)


@pytest.mark.parametrize("m, a, b", [(3, 1, 1), (4, 1, 3), (5, 2, 2), (6, 1, 3), (6, 1, 9), (8, 1, 1), (12, 1, 1)])
def test_dihedral_orthogonality_identity(m, a, b):
    """sum_chi chi(1) / c_chi = 1 (the trace of T_1)."""
    t = {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")
    W = coxeter_group(t)
    schur = schur_dihedral(m, HeckeParams((a, b)), W)
    table = dihedral_table(W)
    for qv in (2.0, 7.0):
        total = sum(table.degrees[table.index(lab)] / evaluate(c.value, qv) for lab, c in schur.items())
        assert total == pytest.approx(1.0, rel=1e-10)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_dihedral_specialises_to_g2(k):
    schur = schur_dihedral(6, HeckeParams.g2(k), coxeter_group("G2"))
    for b in (1, 2):
        assert schur[f"phi2,{b}"].value == schur_G2(k, b).value


def test_equal_parameter_g2_two_dimensionals_differ():
    schur = schur_dihedral(6, HeckeParams((1, 1)), coxeter_group("G2"))
    assert schur["phi2,1"].value != schur["phi2,2"].value


def test_trivial_schur_is_poincare():
    for t, m in (("A2", 3), ("B2", 4), ("G2", 6)):
        W = coxeter_group(t)
        assert schur_dihedral(m, HeckeParams((1, 1)), W)["phi1,0"].value == poincare_polynomial(W)


# -- Poincare polynomials and fake degrees ---------------------------------


@pytest.mark.parametrize("t, degs", [("A3", [2, 3, 4]), ("B3", [2, 4, 6]), ("D4", [2, 4, 4, 6]), ("G2", [2, 6]),
                                     ("F4", [2, 6, 8, 12]), ("H3", [2, 6, 10]), ("I2(7)", [2, 7]), ("E6", [2, 5, 6, 8, 9, 12])])
def test_degrees(t, degs):
    assert degrees_of(coxeter_group(t)) == degs


def test_poincare_factorises():
    W = coxeter_group("B3")
    P = poincare_polynomial(W)
    expected = LaurentPoly.constant(1)
    for d in (2, 4, 6):
        expected = expected * LaurentPoly.from_coeffs([1] * d)
    assert P == expected


def test_poincare_index():
    W = coxeter_group("A2")
    assert poincare_index(W, [0]) == q**2 + q + 1
    assert poincare_index(W, []) == poincare_polynomial(W)
    assert poincare_index(W, [0, 1]) == LaurentPoly.constant(1)


@pytest.mark.parametrize("t", ["A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2", "F4", "H3", "I2(5)", "I2(8)", "A2xA1"])
def test_fake_degree_identities(t):
    W = coxeter_group(t)
    tab = character_table(W)
    fds = {fd.label: fd for fd in fake_degrees(tab)}
    triv_row = next(i for i, row in enumerate(tab.values) if all(v == 1 for v in row))
    sign_vals = tab.sign.values
    sign_row = tab.values.index(sign_vals)
    assert fds[tab.labels[triv_row]].polynomial == LaurentPoly.constant(1)
    assert fds[tab.labels[sign_row]].polynomial == LaurentPoly.monomial(W.N)
    total = LaurentPoly()
    for lab, d in zip(tab.labels, tab.degrees):
        fd = fds[lab]
        assert fd.b_invariant == fd.polynomial.valuation
        assert all(c >= 0 for _, c in fd.polynomial.items())
        total = total + fd.polynomial * d
    assert total == poincare_polynomial(W)


def test_g2_b_invariants():
    tab = character_table(coxeter_group("G2"))
    fds = {fd.label: fd for fd in fake_degrees(tab)}
    assert {fds["phi2,1"].b_invariant, fds["phi2,2"].b_invariant} == {1, 2}
    assert fds["phi2,1"].polynomial == q**5 + q
    assert fds["phi2,2"].polynomial == q**4 + q**2


def test_a2_sign_fake_degree():
    tab = character_table(coxeter_group("A2"))
    assert {fd.label: fd.b_invariant for fd in fake_degrees(tab)}["[1,1,1]"] == 3


def test_phi_labels_for_generic_tables():
    tab = character_table(coxeter_group("F4"))
    labels = tab.phi_labels
    assert len(set(labels)) == len(labels)
    assert "phi1,0" in labels and "phi1,24" in labels


# -- principal series degrees ----------------------------------------------


def test_principal_series_a1():
    assert principal_series_degree("[2]", 1, "A1") == LaurentPoly.constant(1)
    assert principal_series_degree("[1,1]", 1, "A1") == q


def test_principal_series_g2_generic_degrees():
    def fac(lab):
        return factor_into_cyclotomics(principal_series_degree(lab, 1, "G2", include_phi1=False))

    assert fac("phi2,1") == CyclotomicProduct.of({2: 2, 3: 1}, Fraction(1, 6), 1)
    assert fac("phi2,2") == CyclotomicProduct.of({2: 2, 6: 1}, Fraction(1, 2), 1)
    assert principal_series_degree("phi1,6", 1, "G2") == q**6


def test_principal_series_with_phi1_factor():
    d = principal_series_degree("phi2,2", 1, "G2")
    assert factor_into_cyclotomics(d) == CyclotomicProduct.of({2: 2, 6: 1}, 1, 1)


def test_principal_series_unsupported_type():
    with pytest.raises(NotImplementedError):
        principal_series_degree("[4]", 1, "A3")


def test_verify_table1_all_cells():
    cells = verify_table1()
    assert len(cells) == 6 and all(c.holds for c in cells)
    assert len(verify_table1(2)) == 2
    assert any(c.computed.pretty() == "Φ₃(q)Φ₆(q)²" for c in verify_table1(2))
