import random
from math import comb

import pytest

from subexc.bott import Parabolic, levi_dimension
from subexc.cases import case_data, ni_multiplicity
from subexc.scan import (
    decomp_dimension_check,
    greta_summands,
    ni_oracle,
    sym_cotangent_decomp,
    trivial_scan,
)


def test_cotangent_degree_zero_and_one():
    assert sym_cotangent_decomp(1, 0) == [
        {"a": 0, "b": 0, "c": 0, "weight": (0, 0, 0)}
    ]
    # the cotangent bundle itself is the single summand with weight X4 - 2X
    [row] = sym_cotangent_decomp(1, 1)
    assert (row["a"], row["b"], row["c"]) == (0, 1, 1)
    assert row["weight"] == (0, 2, -2)
    [row] = sym_cotangent_decomp(8, 1)
    assert row["weight"] == (0, 0, 0, 0, 1, -2, 0)


@pytest.mark.parametrize("m", [1, 2, 4, 8])
@pytest.mark.parametrize("d", [0, 1, 2, 3, 5, 8])
def test_cotangent_rank_oracle(m, d):
    total, expected = decomp_dimension_check(m, d)
    assert total == expected == comb(3 * m + 3 + d - 1, d)


def test_greta_zero_triple():
    for m in (1, 2):
        c = case_data(m)
        rows = greta_summands(m, 5, 2)
        zero = next(r for r in rows if (r["a"], r["b"], r["c"]) == (0, 0, 0))
        want = tuple((5 - 2) * x for x in c.X)
        assert zero["weight"] == want


def test_greta_specific_membership():
    # the shape (1, 0, k-3) enters exactly when d >= 3k - 10, with weight
    # value (2, 0, -4) at grading degree d - 3k = -10
    for k in (4, 6, 9):
        d = 3 * k - 10
        rows = greta_summands(1, d, k)
        hit = [r for r in rows if (r["a"], r["b"], r["c"]) == (1, 0, k - 3)]
        assert len(hit) == 1 and hit[0]["weight"] == (2, 0, -4)
        rows = greta_summands(1, d - 1, k)
        assert not [r for r in rows if (r["a"], r["b"], r["c"]) == (1, 0, k - 3)]


def test_greta_multiplicity_free():
    rows = greta_summands(4, 9, 5)
    weights = [r["weight"] for r in rows]
    assert len(weights) == len(set(weights))


TRIVIAL_EXPECTED = {
    1: {0: (0, 0, 0), 1: (0, 2, -2), 5: (2, 0, -4), 6: (0, 0, -4)},
    4: {0: (0, 0, 0, 0, 0, 0), 1: (0, 0, 0, 1, -2, 0),
        5: (0, 2, 0, 1, -6, 0), 6: (0, 3, 0, 0, -6, 0),
        9: (0, 0, 0, 3, -10, 0), 10: (0, 1, 0, 2, -10, 0),
        14: (0, 1, 0, 0, -10, 0), 15: (0, 0, 0, 0, -10, 0)},
    8: {0: (0, 0, 0, 0, 0, 0, 0), 1: (0, 0, 0, 0, 1, -2, 0),
        9: (4, 0, 0, 0, 1, -10, 0), 10: (5, 0, 0, 0, 0, -10, 0),
        17: (0, 0, 0, 0, 5, -18, 0), 18: (1, 0, 0, 0, 4, -18, 0),
        26: (1, 0, 0, 0, 0, -18, 0), 27: (0, 0, 0, 0, 0, -18, 0)},
}


@pytest.mark.parametrize("m", [1, 4, 8])
def test_trivial_scan_bundle_lists(m):
    ts = trivial_scan(m)
    expected = TRIVIAL_EXPECTED[m]
    assert ts.iset == sorted(expected)
    for i, w in expected.items():
        assert [x["weight"] for x in ts.contributors[i]] == [w]
    assert ts.stable


def test_trivial_scan_a5_derived():
    # not printed anywhere; our own chase produces the m=2 instance of the
    # uniform pattern {0, 1, m+1, m+2, 2m+1, 2m+2, 3m+2, 3m+3}
    ts = trivial_scan(2)
    assert ts.iset == [0, 1, 3, 4, 5, 6, 8, 9]
    assert all(len(v) == 1 for v in ts.contributors.values())
    assert ts.stable


@pytest.mark.parametrize("m", [2, 4, 8])
def test_trivial_scan_degree_statements(m):
    ts = trivial_scan(m, degree_targets=(-4 * m - 2, -6 * m - 4))
    low = {0, 1, m + 1, m + 2, 2 * m + 1}
    high = {0, 1, m + 1, m + 2, 2 * m + 1, 2 * m + 2, 3 * m + 2}
    assert ts.at_degree[-4 * m - 2] == {i: 1 for i in low}
    assert ts.at_degree[-6 * m - 4] == {i: 1 for i in high}


def test_trivial_scan_c3_degree_statements():
    ts = trivial_scan(1, degree_targets=(-6, -10))
    assert ts.at_degree[-6].get(5, 0) == 0 and ts.at_degree[-6].get(6, 0) == 0
    assert ts.at_degree[-10].get(5, 0) == 1 and ts.at_degree[-10].get(6, 0) == 0


def test_trivial_scan_k_stability_under_doubling():
    for m in (1, 2):
        base = trivial_scan(m)
        doubled = trivial_scan(m, k=2 * base.k)
        assert base.at_degree == doubled.at_degree
        assert base.contributors == doubled.contributors


def test_parity_obstruction():
    ts = trivial_scan(1)
    assert all(i not in ts.contributors for i in (2, 3, 4))


def test_ni_oracle_agrees_with_inequalities():
    rng = random.Random(99)
    for _ in range(60):
        p, q, r = (rng.randint(0, 4) for _ in range(3))
        d = rng.randint(-25, 5)
        i = rng.choice([2, 3, 4])
        assert ni_oracle(p, q, r, d, i) == ni_multiplicity(1, p, q, r, d, i)


def test_ni_oracle_k_stability():
    for (p, q, r, d, i) in [(0, 0, 1, -4, 2), (2, 1, 0, -10, 3), (1, 0, 3, -15, 4)]:
        k = 2 * abs(d) + 20
        assert ni_oracle(p, q, r, d, i, k=k) == ni_oracle(p, q, r, d, i, k=2 * k)


def test_scan_input_validation():
    with pytest.raises(ValueError):
        sym_cotangent_decomp(1, -1)
    with pytest.raises(ValueError):
        greta_summands(1, 3, -1)
    with pytest.raises(ValueError):
        ni_oracle(0, 0, 0, 0, 2, m=2)
