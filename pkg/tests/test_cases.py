import random
from fractions import Fraction

import pytest

from subexc.cases import (
    case_data,
    default_box,
    ni_multiplicity,
    recursion_check,
    regularity,
    regularity_from,
    regularity_info,
    semiinvariant_degree_check,
    simple_character,
    simple_names,
    verify_identities,
)
from subexc.charseries import Box


def test_case_constants():
    c1 = case_data(1)
    assert (c1.r1, c1.r2, c1.r3) == (-2, Fraction(-5, 2), Fraction(-7, 2))
    assert case_data(8).dimX == 56
    assert case_data(4).codim[2] == 7
    assert case_data(2).diagram.name == "A5"
    for m in (1, 2, 4, 8):
        c = case_data(m)
        assert c.codim == {4: 0, 3: 1, 2: m + 3, 1: 3 * m + 4, 0: 6 * m + 8}
        assert c.pyasetskii == {0: 4, 1: 3, 2: 2, 3: 1, 4: 0}
        assert c.local_b_O2 == (Fraction(-1), c.r1)
        assert c.deg_f == 4


def test_case_data_rejects_bad_m():
    with pytest.raises(ValueError):
        case_data(3)


def test_catalog_names():
    assert "L2p" in simple_names(1)
    assert "L2p" not in simple_names(2)
    with pytest.raises(ValueError):
        simple_character(2, "L2p")
    with pytest.raises(ValueError):
        simple_character(1, "nope")


def test_l3_invariant_window():
    # localization minus ring minus origin module: invariant sections sit in
    # negative degrees divisible by 4, strictly between 0 and -dim
    for m in (2, 4, 8):
        L3 = simple_character(m, "L3")
        z = case_data(m).zero
        assert L3.coeff(z, 0) == 0
        assert L3.coeff(z, -4) == 1
        assert L3.coeff(z, -(6 * m + 8)) == 0


def test_quarter_twists_shift_the_localization():
    for m in (1, 4):
        Sf = simple_character(m, "Sf")
        z = case_data(m).zero
        for name, i in (("L41", 1), ("L43", 3)):
            tw = simple_character(m, name)
            for d in range(-8, 9):
                assert tw.coeff(z, d) == Sf.coeff(z, d - i)


@pytest.mark.parametrize("m", [1, 2, 4, 8])
def test_identities_small_box(m):
    rows = verify_identities(m, Box(-(6 * m + 12), 8, 2))
    assert all(r["status"] == "pass" for r in rows), rows
    names = [r["identity"] for r in rows]
    assert len(names) == 5


def test_identity_verifier_reports_counterexamples():
    # deliberately compare two different catalog entries: the verifier must
    # return the first offending cell rather than raise
    from subexc.cases import _first_difference

    S = simple_character(1, "S")
    E = simple_character(1, "E")
    cex = _first_difference(S, E, Box(-2, 2, 1))
    assert cex is not None and cex["lhs"] != cex["rhs"]


def test_recursion_spot_values():
    from subexc.cases import _recursion_branch

    assert _recursion_branch(0, 0, -3) == 1   # inside the top window
    assert _recursion_branch(0, 0, 1) == 0    # above it
    assert _recursion_branch(0, 0, -9) == 0   # below everything
    rep = recursion_check(1, 1, 2, dband=(-20, 5))
    assert rep["status"] == "pass"


def test_recursion_rejects_other_cases():
    with pytest.raises(ValueError):
        recursion_check(0, 0, 0, m=2)


def test_ni_multiplicity_values():
    assert ni_multiplicity(1, 0, 0, 1, -4, 2) == 1
    assert ni_multiplicity(1, 0, 0, 0, 0, 3) == 0  # parity
    assert ni_multiplicity(1, 2, 0, 0, -10, 3) == 2  # both inequalities hold
    with pytest.raises(ValueError):
        ni_multiplicity(1, 0, 0, 0, 0, 5)
    with pytest.raises(ValueError):
        ni_multiplicity(2, 0, 0, 0, 0, 2)


def test_regularity_table():
    for m in (2, 4, 8):
        assert regularity(m, 1) == m + 2
        assert regularity(m, 2) == m + 3
        assert regularity(m, 0) == 0
    assert regularity(1, 1) == 3
    assert regularity(1, 0) == 0
    info = regularity_info(1, 2)
    assert info["value"] == 3 and not info["derived"]


def test_regularity_from_spin9_preset():
    assert regularity_from(-1, 2, 1) == 1
    assert regularity_from(-8, 2, 16) == 0
    with pytest.raises(ValueError):
        regularity_from(Fraction(-5, 2), 3, 1)


def test_semiinvariant_sections():
    rep = semiinvariant_degree_check(2, 2)
    assert rep["ok"] and rep["degree"] == -10  # equals 4 * r1
    rep = semiinvariant_degree_check(1, 1)
    assert rep["ok"] and rep["degree"] == -10  # equals 4 * r2
    rep = semiinvariant_degree_check(1, 2)
    assert rep["status"] == "no-invariant-section" and rep["ok"]
    for m in (1, 2, 4, 8):
        rep = semiinvariant_degree_check(m, 0)
        assert rep["ok"] and rep["degree"] == -(6 * m + 8)


def test_default_box():
    box = default_box(4)
    assert (box.dmin, box.dmax, box.letter_bound) == (-36, 12, 6)
