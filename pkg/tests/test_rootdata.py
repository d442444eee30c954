"""Cartan types, root systems and duality."""

import itertools

import pytest

from weylhc.rootdata import (
    InvalidTypeError,
    build_root_datum,
    coxeter_matrix_from_cartan,
    dualize,
    parse_cartan_type,
    recognize,
)

N_POS = {
    "A1": 1, "A4": 10, "A7": 28, "B2": 4, "B5": 25, "C3": 9, "D4": 12, "D6": 30,
    "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6, "H3": 15, "H4": 60, "I2(5)": 5, "I2(8)": 8,
}


@pytest.mark.parametrize("t, n", sorted(N_POS.items()))
def test_positive_root_counts(t, n):
    assert build_root_datum(t).num_positive_roots == n


@pytest.mark.parametrize("text", ["", "A0", "B1", "C1", "D3x", "E9", "F5", "G3", "H5", "I2(2)", "Q4", "A-1"])
def test_bad_types_rejected(text):
    with pytest.raises(InvalidTypeError):
        parse_cartan_type(text)


def test_type_parsing_normalises():
    assert str(parse_cartan_type("a3")) == "A3"
    assert str(parse_cartan_type("A2xB2")) == "A2xB2"
    assert parse_cartan_type("I2(6)").rank == 2


@pytest.mark.parametrize("t", ["A3", "B3", "C4", "D5", "F4", "G2", "E6"])
def test_roots_closed_under_simple_reflections(t):
    d = build_root_datum(t)
    pos = set(d.positive_roots)
    for r in d.positive_roots:
        for i in range(d.rank):
            img = d.reflect(i, r)
            assert img in pos or tuple(-x for x in img) in pos


@pytest.mark.parametrize("t", ["A4", "B3", "D4", "E6", "F4", "G2", "H3", "I2(7)"])
def test_recognize_round_trip(t):
    d = build_root_datum(t)
    comps, _ = recognize(d.coxeter_matrix if not d.crystallographic else d.cartan_matrix,
                         coxeter=not d.crystallographic)
    assert "x".join(str(c) for c in comps) == str(parse_cartan_type(t))


def crystallographic_types(max_rank=6):
    out = [f"A{n}" for n in range(1, max_rank + 1)]
    out += [f"B{n}" for n in range(2, max_rank + 1)] + [f"C{n}" for n in range(2, max_rank + 1)]
    out += [f"D{n}" for n in range(4, max_rank + 1)] + ["E6", "F4", "G2", "A1xA1", "B2xG2", "A2xC3"]
    return out


@pytest.mark.parametrize("t", crystallographic_types())
def test_duality_preserves_coxeter_matrix(t):
    delta = dualize(build_root_datum(t))
    assert delta.check()
    assert sorted(delta.generator_map) == list(range(delta.source.rank))


@pytest.mark.parametrize("n", range(2, 7))
def test_b_and_c_are_dual(n):
    delta = dualize(build_root_datum(f"B{n}"))
    assert str(delta.target.cartan_type) == f"C{n}"
    a, b = delta.source.cartan_matrix, delta.target.cartan_matrix
    g = delta.generator_map
    for i, j in itertools.product(range(n), repeat=2):
        assert b[g[i]][g[j]] == a[j][i]


@pytest.mark.parametrize("t", ["A3", "D4", "E6", "F4", "G2"])
def test_dual_of_self_dual_types_is_same_type(t):
    assert str(dualize(build_root_datum(t)).target.cartan_type) == t


def test_coxeter_matrix_from_cartan_g2():
    assert coxeter_matrix_from_cartan([[2, -1], [-3, 2]]) == [[1, 6], [6, 1]]
