import pytest

from zgray.cyclic import CyclicContext, pmul, poly_str
from zgray.tables import TABLE1, TABLE2, coset_label, reproduce_table1, reproduce_table2

KNOWN_DISAGREEMENT = "z8-hadamard"


@pytest.fixture(scope="module")
def table1():
    return {r.name: r for r in reproduce_table1()}


@pytest.mark.parametrize("row", [r.name for r in TABLE1 if r.name != KNOWN_DISAGREEMENT])
def test_table1_row(table1, row):
    r = table1[row]
    assert not r.notes, r.notes
    assert r.observed == r.expected


@pytest.mark.xfail(strict=True, reason="expected cells (chain, R in B, linear) conflict with the "
                   "Hadamard nonlinearity result for k >= 2, L >= 3; the brute-force oracle agrees "
                   "with the observed nonlinear verdict")
def test_table1_hadamard_row(table1):
    r = table1[KNOWN_DISAGREEMENT]
    assert r.observed == r.expected


def test_table1_hadamard_row_observed(table1):
    r = table1[KNOWN_DISAGREEMENT]
    assert not r.notes
    assert r.observed == {"d_lee": 8, "chain": False, "r_in_b": False, "linear": False, "d_h": 16}


def test_table1_spot_rows(table1):
    o = table1["octacode"].observed
    assert o == {"d_lee": 6, "chain": True, "r_in_b": False, "linear": False, "d_h": 6}
    o = table1["z16-b"].observed
    assert (o["chain"], o["r_in_b"], o["linear"]) == (True, False, False)


@pytest.fixture(scope="module")
def ctx125():
    return CyclicContext(125, large=True)


def test_table2(ctx125):
    res = reproduce_table2(ctx125)
    assert len(res) == len(TABLE2) == 14
    for r in res:
        assert r.ok, (r.name, r.mismatches, r.notes)


def test_table2_spot_row(ctx125):
    r = next(r for r in reproduce_table2(ctx125) if r.name == "C0uC1")
    p5, p25 = ctx125.minimal_polynomial(5), ctx125.minimal_polynomial(25)
    assert r.observed["g1"] == poly_str(pmul(p5, p25))
    assert r.observed["I2"] == "Z" and r.observed["g2"] == "1"


def test_coset_labels():
    assert coset_label((0, 1, 5, 25)) == "Z"
    assert coset_label((0, 5, 25)) == "Z\\C1"
    assert coset_label((1, 5)) == "C1uC5"
