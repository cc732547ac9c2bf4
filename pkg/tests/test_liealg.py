import random

import pytest

from subexc.liealg import (
    Weight,
    diagram,
    dualize,
    fundamental_degrees,
    positive_roots,
    simple_reflection,
    weyl_dimension,
)


# reflection rows of the three classic chain shapes, checked symbolically
# by instantiating (a, b, c) at random integers
ROWS = [
    ("A3", lambda a, b, c: (a + b, -b, b + c)),
    ("C3", lambda a, b, c: (a + b, -b, b + c)),   # double edge points at the middle
    ("B3", lambda a, b, c: (a + b, -b, 2 * b + c)),  # double edge points at the end
]


@pytest.mark.parametrize("name,expected", ROWS)
def test_middle_reflection_rows(name, expected):
    diag = diagram(name)
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(20):
        a, b, c = (rng.randint(-9, 9) for _ in range(3))
        assert simple_reflection(diag, 2, (a, b, c)) == expected(a, b, c)


def test_c3_third_node_reflection():
    assert simple_reflection(diagram("C3"), 3, (4, 1, -2)) == (4, -3, 2)


def test_reflection_is_involutive():
    rng = random.Random(7)
    for name in ("C3", "A5", "D6", "E7", "F4", "G2", "B4"):
        diag = diagram(name)
        for _ in range(25):
            w = tuple(rng.randint(-6, 6) for _ in range(diag.rank))
            for node in diag.nodes:
                assert simple_reflection(diag, node, simple_reflection(diag, node, w)) == w


def test_reflecting_strictly_dominant_flips_only_that_sign():
    rng = random.Random(11)
    for name in ("C3", "D6", "E7"):
        diag = diagram(name)
        for _ in range(10):
            w = tuple(rng.randint(1, 5) for _ in range(diag.rank))
            for node in diag.nodes:
                out = simple_reflection(diag, node, w)
                pos = diag.position(node)
                assert out[pos] == -w[pos] < w[pos]
                assert all(out[i] > 0 for i in range(diag.rank) if i != pos)


def test_reflection_rejects_bad_node():
    with pytest.raises(ValueError):
        simple_reflection(diagram("C3"), 4, (0, 0, 0))


POSITIVE_ROOT_COUNTS = {
    "A2": 3, "C3": 9, "B3": 9, "A5": 15, "D6": 30,
    "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
}


@pytest.mark.parametrize("name,count", sorted(POSITIVE_ROOT_COUNTS.items()))
def test_positive_root_counts(name, count):
    roots = positive_roots(diagram(name))
    assert len(roots) == count
    assert len(set(roots)) == count
    assert all(min(r) >= 0 for r in roots)


def test_a2_roots_exactly():
    assert positive_roots(diagram("A2")) == [(0, 1), (1, 0), (1, 1)]


def test_roots_sorted_by_height_then_lex():
    roots = positive_roots(diagram("D6"))
    keys = [(sum(r), r) for r in roots]
    assert keys == sorted(keys)


# the cross-check that pins both the root count and the dimension formula:
# dim of the adjoint representation is 2 * #roots + rank
ADJOINT = {
    "C3": (2, 0, 0),
    "A5": (1, 0, 0, 0, 1),
    "D6": (0, 1, 0, 0, 0, 0),
    "E7": (1, 0, 0, 0, 0, 0, 0),
}


@pytest.mark.parametrize("name,adj", sorted(ADJOINT.items()))
def test_adjoint_dimension_identity(name, adj):
    diag = diagram(name)
    assert weyl_dimension(diag, adj) == 2 * len(positive_roots(diag)) + diag.rank


@pytest.mark.parametrize(
    "name,w,dim",
    [
        ("C3", (0, 0, 1), 14),
        ("A5", (0, 0, 1, 0, 0), 20),
        ("D6", (0, 0, 0, 0, 1, 0), 32),
        ("E7", (0, 0, 0, 0, 0, 1, 0), 56),
        ("C3", (0, 0, 0), 1),
        ("A2", (1, 1), 8),
    ],
)
def test_weyl_dimensions(name, w, dim):
    assert weyl_dimension(diagram(name), w) == dim


def test_weyl_dimension_rejects_nondominant():
    with pytest.raises(ValueError):
        weyl_dimension(diagram("C3"), (1, -1, 0))


def test_dual_dimensions_agree():
    rng = random.Random(3)
    for name in ("A5", "D6", "E7", "E6"):
        diag = diagram(name)
        for _ in range(8):
            w = tuple(rng.randint(0, 3) for _ in range(diag.rank))
            assert weyl_dimension(diag, w) == weyl_dimension(diag, dualize(diag, w))


@pytest.mark.parametrize(
    "name,w,expect",
    [
        ("A5", (1, 0, 0, 0, 0), (0, 0, 0, 0, 1)),
        ("A5", (0, 0, 1, 0, 0), (0, 0, 1, 0, 0)),
        ("C3", (3, 1, 2), (3, 1, 2)),
        ("D6", (1, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6)),
        ("E7", (1, 2, 3, 4, 5, 6, 7), (1, 2, 3, 4, 5, 6, 7)),
        ("E6", (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0)),
        ("D5", (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)),
    ],
)
def test_dualize(name, w, expect):
    assert dualize(diagram(name), w) == expect


DEGREES = {
    "A2": [2, 3],
    "C3": [2, 4, 6],
    "A5": [2, 3, 4, 5, 6],
    "D6": [2, 4, 6, 6, 8, 10],
    "E6": [2, 5, 6, 8, 9, 12],
    "E7": [2, 6, 8, 10, 12, 14, 18],
}


@pytest.mark.parametrize("name,degs", sorted(DEGREES.items()))
def test_fundamental_degrees(name, degs):
    assert sorted(fundamental_degrees(name)) == sorted(degs)
    # sum over (d_i - 1) counts the positive roots
    assert sum(d - 1 for d in degs) == len(positive_roots(diagram(name)))


def test_fundamental_degrees_unknown_type():
    with pytest.raises(ValueError):
        fundamental_degrees("H3")


def test_weight_arithmetic():
    diag = diagram("C3")
    u = Weight(diag, (1, 2, 3))
    v = Weight(diag, (0, 1, -1))
    assert (u + v).coords == (1, 3, 2)
    assert (u - v).coords == (1, 1, 4)
    assert (-u).coords == (-1, -2, -3)
    assert (2 * v).coords == (0, 2, -2)
    assert u.dominant and not v.dominant
    with pytest.raises(ValueError):
        u + Weight(diagram("A5"), (0, 0, 0, 0, 0))
