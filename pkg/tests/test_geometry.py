import pytest

from subexc.charseries import Box
from subexc.geometry import (
    IntPolynomial,
    ih_orbit,
    lefschetz_reconstruct,
    local_cohomology_table,
    lyubeznik,
    poincare_gp,
    poincare_printed_form,
    poincare_report,
    primitive_betti,
    validate_local_cohomology,
)


def _product(ps):
    out = IntPolynomial.one()
    for p in ps:
        out = out * p
    return out


def gaussian_binomial_6_3():
    # q-binomial [6 choose 3] in q^2: the Betti generating function of the
    # 9-dimensional Grassmannian of 3-planes in 6-space
    num = _product(IntPolynomial.monomial_diff(2 * i) for i in (4, 5, 6))
    den = _product(IntPolynomial.monomial_diff(2 * i) for i in (1, 2, 3))
    return num.divexact(den)


def test_polynomial_arithmetic():
    p = IntPolynomial([1, 0, 2])
    q = IntPolynomial([1, 1])
    assert (p * q).coeffs == (1, 1, 2, 2)
    assert (p + q).coeffs == (2, 1, 2)
    assert (p - p).coeffs == ()
    assert (p * q).divexact(q) == p
    with pytest.raises(ValueError):
        IntPolynomial([1, 1, 1]).divexact(IntPolynomial([1, 1]))
    assert p(1) == 3 and p(2) == 9


def test_poincare_m1_exact_expansion():
    assert poincare_gp(1) == IntPolynomial([1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 1])
    assert poincare_report(1)["match"] is True


def test_poincare_m2_gaussian_binomial():
    P = poincare_gp(2)
    assert P == gaussian_binomial_6_3()
    assert P[6] == 3


def test_poincare_m8_closed_form():
    want = (IntPolynomial.monomial_sum(10) * IntPolynomial.monomial_sum(18)
            * IntPolynomial.monomial_diff(28)).divexact(IntPolynomial.monomial_diff(2))
    assert poincare_gp(8) == want
    assert poincare_report(8)["match"] is True


def test_poincare_m4_erratum_flag():
    rep = poincare_report(4)
    assert rep["match"] is False
    assert rep["erratum"]
    # the quotient result has the dimension-correct top degree
    assert rep["computed"].degree == 30
    assert rep["printed"].degree == 34
    # and its middle factor exponent is 2m+2 = 10
    q2 = IntPolynomial.monomial_diff(2)
    want = (IntPolynomial.monomial_sum(6) * IntPolynomial.monomial_sum(10)
            * IntPolynomial.monomial_diff(16)).divexact(q2)
    assert rep["computed"] == want


@pytest.mark.parametrize("m", [1, 2, 4, 8])
def test_poincare_shape(m):
    P = poincare_gp(m)
    assert P.degree == 2 * (3 * m + 3)
    assert P.is_palindromic()
    assert all(c >= 0 for c in P.coeffs)
    # value at 1 is the index of the Weyl subgroup: a positive integer
    assert P(1) > 0


@pytest.mark.parametrize(
    "m,nonzero",
    [
        (1, {0: 1, 6: 1}),
        (2, {0: 1, 4: 1, 6: 1}),
        (4, {0: 1, 6: 1, 10: 1}),
        (8, {0: 1, 10: 1, 18: 1}),
    ],
)
def test_primitive_betti(m, nonzero):
    ph = primitive_betti(poincare_gp(m), 3 * m + 3)
    assert {i: v for i, v in enumerate(ph) if v} == nonzero


def test_primitive_betti_point_and_validation():
    assert primitive_betti(IntPolynomial([1]), 0) == [1]
    with pytest.raises(ValueError):
        primitive_betti(IntPolynomial([1, 0, 1]), 0)
    with pytest.raises(ValueError):
        primitive_betti(IntPolynomial([1, 0, 2, 0, 1]), 2)  # not palindromic


@pytest.mark.parametrize("m", [1, 2, 4, 8])
def test_lefschetz_roundtrip(m):
    n = 3 * m + 3
    P = poincare_gp(m)
    assert lefschetz_reconstruct(primitive_betti(P, n), n) == P


IH_TABLE = {
    (1, 1): {0: 1, 6: 1}, (1, 2): {0: 1, 6: 1}, (1, 3): {0: 1, 6: 1},
    (2, 1): {0: 1, 4: 1, 6: 1},
    (2, 2): {0: 1, 2: 1, 4: 1, 6: 1, 8: 1, 10: 1},
    (2, 3): {0: 1, 18: 1},
    (4, 1): {0: 1, 6: 1, 10: 1},
    (4, 2): {0: 1, 4: 1, 8: 1, 10: 1, 14: 1, 18: 1},
    (4, 3): {0: 1, 30: 1},
    (8, 1): {0: 1, 10: 1, 18: 1},
    (8, 2): {0: 1, 8: 1, 16: 1, 18: 1, 26: 1, 34: 1},
    (8, 3): {0: 1, 54: 1},
}


@pytest.mark.parametrize("m,p", sorted(IH_TABLE))
def test_ih_orbit(m, p):
    assert ih_orbit(m, p) == IH_TABLE[(m, p)]


def test_ih_orbit_rejects_bad_p():
    with pytest.raises(ValueError):
        ih_orbit(1, 0)


def test_lyubeznik_tables():
    assert lyubeznik(1, 3) == {(13, 13)}
    assert (0, 5) in lyubeznik(2, 1)
    assert lyubeznik(1, 2) == {(0, 7), (4, 10), (10, 10)}
    for m in (1, 2, 4, 8):
        for p in (1, 2, 3):
            pairs = lyubeznik(m, p)
            d = (6 * m + 8) - {1: 3 * m + 4, 2: m + 3, 3: 1}[p]
            assert (d, d) in pairs


@pytest.mark.parametrize("m", [1, 2, 4, 8])
def test_local_cohomology_indices(m):
    a = m != 1
    by_orbit = {p: {e["index"] for e in local_cohomology_table(m, p)} for p in range(4)}
    assert by_orbit[0] == {6 * m + 8}
    assert by_orbit[3] == {1}
    if a:
        assert by_orbit[1] == {3 * m + 4, 4 * m + 5, 5 * m + 5}
        assert by_orbit[2] == {m + 3, 2 * m + 3, 3 * m + 4}
    else:
        assert by_orbit[1] == {3 * m + 4}
        assert by_orbit[2] == {m + 3, 3 * m + 4}


def test_local_cohomology_specific_factors():
    [h1] = local_cohomology_table(1, 3)
    assert h1["factors"] == ["L3", "L2p"] and h1["shape"] == "extension"
    rows = {e["index"]: e for e in local_cohomology_table(4, 1)}
    assert rows[16]["factors"] == ["L1"]
    assert rows[21]["factors"] == ["E"]
    assert rows[25]["factors"] == ["E"]
    [h14] = local_cohomology_table(1, 0)
    assert h14["factors"] == ["E"] and h14["index"] == 14


@pytest.mark.parametrize("m", [1, 2, 4, 8])
def test_local_cohomology_characters(m):
    box = Box(-(6 * m + 12), 8, 2)
    for p in range(4):
        for row in validate_local_cohomology(m, p, box):
            assert row["status"] == "pass", (m, p, row)
