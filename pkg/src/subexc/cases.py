"""The four cases m = 1, 2, 4, 8 and their character catalogs.

Each case is a pair (simple group, fundamental representation):

    m=1: (C3, w3)   m=2: (A5, w3)   m=4: (D6, w5)   m=8: (E7, w6)

with G = G' x C* acting with five orbits O_0 c O_1 c O_2 c O_3 c O_4 on
the 6m+8 dimensional space.  The coordinate ring is generated, as an
algebra with Cartan-product multiplication on highest weight vectors, by
four letters: X in degree 1 and again in degree 3, the adjoint g' in
degree 2, the invariant quartic f in degree 4 and a fourth letter X_4 in
degree 4.  Everything downstream (localizations, simple-module characters,
identity checks) is phrased in these letters.

m = 1 is the outlier: the middle orbit is not simply connected, so an
extra simple module L2' appears, and the two filtration chains decompose
differently.  We call m in {2,4,8} "case a" and m = 1 "case b" throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .liealg import diagram as _diagram
from .charseries import Box, CartanExpr

CASE_GROUPS = {1: "C3", 2: "A5", 4: "D6", 8: "E7"}

_LETTER_TABLE = {
    # m: (X, g', X_4, distinguished node)
    1: ((0, 0, 1), (2, 0, 0), (0, 2, 0), 3),
    2: ((0, 0, 1, 0, 0), (1, 0, 0, 0, 1), (0, 1, 0, 1, 0), 3),
    4: ((0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), 5),
    8: ((0, 0, 0, 0, 0, 1, 0), (1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0), 6),
}

SIMPLE_NAMES_A = ("S", "E", "Sf", "Df_r1p1", "L1", "L2", "L3", "L4p", "L41", "L43")
SIMPLE_NAMES_B = SIMPLE_NAMES_A + ("L2p",)


@dataclass(frozen=True)
class CaseData:
    """Constants of one case; validated on construction."""

    m: int
    diagram: object
    X: tuple
    gprime: tuple
    X4: tuple
    node: int                    # distinguished node of the parabolic
    dimX: int
    codim: dict                  # orbit p -> codimension of its closure
    deg_f: int
    broots: tuple                # roots of the b-function of f, as Fractions
    holonomy: tuple              # ((orbit, orbit, b-root or -1 label), ...)
    local_b_O2: tuple            # roots of the local b-function at O_2
    pyasetskii: dict             # orbit duality p <-> 4-p
    letter: str                  # "a" for m in {2,4,8}, "b" for m=1

    @property
    def zero(self):
        return (0,) * self.diagram.rank

    @property
    def r1(self):
        return self.broots[1]

    @property
    def r2(self):
        return self.broots[2]

    @property
    def r3(self):
        return self.broots[3]

    def orbit_dim(self, p):
        return self.dimX - self.codim[p]


def default_box(m):
    """Degree window and letter bound every identity is checked on."""
    return Box(-(6 * m + 12), 12, 6)


@lru_cache(maxsize=None)
def case_data(m) -> CaseData:
    if m not in CASE_GROUPS:
        raise ValueError(f"m must be one of 1, 2, 4, 8; got {m!r}")
    diag = _diagram(CASE_GROUPS[m])
    X, gp, X4, node = _LETTER_TABLE[m]
    r1 = Fraction(-(m + 3), 2)
    r2 = Fraction(-(2 * m + 3), 2)
    r3 = Fraction(-(3 * m + 4), 2)
    data = CaseData(
        m=m,
        diagram=diag,
        X=X,
        gprime=gp,
        X4=X4,
        node=node,
        dimX=6 * m + 8,
        codim={4: 0, 3: 1, 2: m + 3, 1: 3 * m + 4, 0: 6 * m + 8},
        deg_f=4,
        broots=(Fraction(-1), r1, r2, r3),
        holonomy=((4, 3, Fraction(-1)), (3, 2, r1), (2, 1, r2), (1, 0, r3)),
        local_b_O2=(Fraction(-1), r1),
        pyasetskii={p: 4 - p for p in range(5)},
        letter="b" if m == 1 else "a",
    )
    _validate_case(data)
    return data


def _validate_case(c):
    assert c.dimX == c.diagram.weyl_dimension(c.X)
    nroots = len(c.diagram.positive_roots())
    assert c.diagram.weyl_dimension(c.gprime) == 2 * nroots + c.diagram.rank
    assert len(set(c.broots)) == 4 and all(r <= -1 for r in c.broots)


# -- the character catalog ---------------------------------------------------

def _char_S(c):
    return CartanExpr(
        c.diagram,
        [(1, c.X), (2, c.gprime), (3, c.X), (4, c.zero), (4, c.X4)],
    )


def _char_E(c):
    return CartanExpr(
        c.diagram,
        [(-1, c.X), (-2, c.gprime), (-3, c.X), (-4, c.zero), (-4, c.X4)],
        terms=[(1, -c.dimX, c.zero)],
    )


def _char_Sf(c):
    return CartanExpr(
        c.diagram,
        [(1, c.X), (2, c.gprime), (3, c.X), (4, c.X4)],
        period=4,
    )


def _char_Df(c):
    shift = 4 * (c.r1 + 1)
    assert shift.denominator == 1
    return CartanExpr(
        c.diagram,
        [(-1, c.X), (0, c.X4), (1, c.X), (2, c.gprime), (4, c.zero)],
        terms=[(1, int(shift), c.zero)],
    )


def _char_L2_middle(c):
    # only for m=1: the simple with no invariant sections on the middle orbit
    w1 = tuple(1 if i == 0 else 0 for i in range(c.diagram.rank))
    return CartanExpr(
        c.diagram,
        [(-2, c.gprime), (-1, c.X), (0, c.X4), (1, c.X), (2, c.gprime)],
        terms=[(1, -7, w1)],
    )


@lru_cache(maxsize=None)
def _catalog(m):
    c = case_data(m)
    S, E, Sf, Df = _char_S(c), _char_E(c), _char_Sf(c), _char_Df(c)
    twist = -c.dimX
    cat = {"S": S, "E": E, "Sf": Sf, "Df_r1p1": Df,
           "L41": Sf.shift(1), "L43": Sf.shift(3)}
    if c.letter == "a":
        L4p = Df
        L1 = L4p.dual().shift(twist)
        cat["L4p"] = L4p
        cat["L1"] = L1
        cat["L3"] = Sf - S - E
        cat["L2"] = Sf.shift(2) - L4p - L1
    else:
        L3 = Df - S
        L2p = Sf - Df
        cat["L3"] = L3
        cat["L2p"] = L2p
        cat["L1"] = L3.dual().shift(twist)
        cat["L4p"] = L2p.dual().shift(twist)
        cat["L2"] = _char_L2_middle(c)
    return cat


def simple_names(m):
    return SIMPLE_NAMES_B if m == 1 else SIMPLE_NAMES_A


def simple_character(m, name):
    """Catalog lookup: the graded character of one simple module (or of the
    building blocks S, E, Sf, Df_r1p1)."""
    cat = _catalog(m)
    if name not in cat:
        raise ValueError(
            f"no module {name!r} for m={m}; valid names: {sorted(cat)}"
        )
    return cat[name]


# -- identity verification ----------------------------------------------------

def _cells(box, *chars):
    weights = set()
    for ch in chars:
        weights.update(ch.weights_in_box(box.letter_bound))
    return sorted(weights)


def _first_difference(lhs, rhs, box):
    for w in _cells(box, lhs, rhs):
        for d in box.degrees:
            a = lhs.coeff(w, d)
            b = rhs.coeff(w, d)
            if a != b:
                return {"weight": list(w), "degree": d, "lhs": a, "rhs": b}
    return None


def _first_negative(ch, box):
    for w in ch.weights_in_box(box.letter_bound):
        for d in box.degrees:
            v = ch.coeff(w, d)
            if v < 0:
                return {"weight": list(w), "degree": d, "lhs": v, "rhs": 0}
    return None


def _first_unbounded(small, big, box):
    """First cell where ``small`` exceeds ``big`` coefficientwise."""
    for w in _cells(box, small, big):
        for d in box.degrees:
            a = small.coeff(w, d)
            b = big.coeff(w, d)
            if a > b:
                return {"weight": list(w), "degree": d, "lhs": a, "rhs": b}
    return None


def verify_identities(m, box=None):
    """Check the filtration identities, localization bound, dual involution
    and coefficient nonnegativity on a box.  Failures are returned as data,
    one report row per identity, never raised."""
    c = case_data(m)
    if box is None:
        box = default_box(m)
    cat = _catalog(m)
    S, E, Sf, Df = cat["S"], cat["E"], cat["Sf"], cat["Df_r1p1"]
    report = []

    def add(name, counterexample):
        report.append({
            "identity": name,
            "status": "pass" if counterexample is None else "fail",
            "counterexample": counterexample,
        })

    if c.letter == "a":
        add("Sf = S + L3 + E", _first_difference(Sf, S + cat["L3"] + E, box))
        add("Sf*t^2 = L4p + L2 + L1",
            _first_difference(Sf.shift(2), cat["L4p"] + cat["L2"] + cat["L1"], box))
        add("Df_r1p1 <= Sf*t^2", _first_unbounded(Df, Sf.shift(2), box))
    else:
        add("Sf = S + L3 + L2p", _first_difference(Sf, S + cat["L3"] + cat["L2p"], box))
        add("Sf*t^2 = L4p + L1 + E",
            _first_difference(Sf.shift(2), cat["L4p"] + cat["L1"] + E, box))
        add("Df_r1p1 <= Sf", _first_unbounded(Df, Sf, box))

    bad = None
    for name in simple_names(m):
        ch = cat[name]
        cex = _first_difference(ch, ch.dual().dual(), box)
        if cex is not None:
            bad = {"module": name, **cex}
            break
    add("dual involution", bad)

    bad = None
    for name in simple_names(m):
        cex = _first_negative(cat[name], box)
        if cex is not None:
            bad = {"module": name, **cex}
            break
    add("nonnegativity", bad)
    return report


# -- the middle-orbit recursion (m=1) -----------------------------------------

def _recursion_branch(p, r, d):
    """Value of m^(d-4) - m^d predicted for the weight (2p+1, 2q, r); only
    meaningful when d+r is odd."""
    hi = 2 * p + r - 3
    a1, a2 = 2 * p - r - 5, -2 * p + r - 7
    lo = -2 * p - r - 9
    if d > hi:
        return 0
    if d > max(a1, a2):
        return 1
    if d > min(a1, a2):
        return 0
    if d > lo:
        return -1
    return 0


def recursion_check(p, q, r, dband=(-25, 5), m=1):
    """Verify the degree recursion and the vanishing initial condition of
    the middle-orbit simple for one weight (2p+1)w1 + 2q w2 + r w3."""
    if m != 1:
        raise ValueError("the explicit recursion exists only for m=1")
    L2 = simple_character(1, "L2")
    lam = (2 * p + 1, 2 * q, r)
    mism = []
    dmin, dmax = dband
    for d in range(dmin, dmax + 1):
        got = L2.coeff(lam, d - 4) - L2.coeff(lam, d)
        want = _recursion_branch(p, r, d) if (d + r) % 2 == 1 else 0
        if (d + r) % 2 == 0 and L2.coeff(lam, d) != 0:
            mism.append({"kind": "parity", "d": d, "value": L2.coeff(lam, d)})
        if got != want:
            mism.append({"kind": "recursion", "d": d, "got": got, "want": want})
    top = 2 * p + r - 7
    for d in range(top + 1, top + 13):
        if L2.coeff(lam, d) != 0:
            mism.append({"kind": "initial", "d": d, "value": L2.coeff(lam, d)})
    return {"p": p, "q": q, "r": r, "band": list(dband),
            "status": "pass" if not mism else "fail", "mismatches": mism}


def ni_multiplicity(m, p, q, r, d, i):
    """Multiplicity of (2p+1)w1 + 2q w2 + r w3 in grading degree d of the
    i-th stable cohomology group of the twisted symmetric algebra, by the
    closed degree-window inequalities (m=1 only)."""
    if m != 1:
        raise ValueError("closed degree windows are only available for m=1")
    if i not in (2, 3, 4):
        raise ValueError("i must be 2, 3 or 4")
    if (d + r) % 2 == 0:
        return 0
    if i == 2:
        return 1 if d <= 2 * p + r - 3 else 0
    if i == 3:
        return (1 if d <= 2 * p - r - 5 else 0) + (1 if d <= -2 * p + r - 7 else 0)
    return 1 if d <= -2 * p - r - 9 else 0


# -- regularity bridge ---------------------------------------------------------

def regularity_from(r, deg_f, c):
    """Castelnuovo--Mumford regularity from a b-function root and codimension:
    reg = -r * deg(f) - c, demanded exact."""
    val = -Fraction(r) * deg_f - c
    if val.denominator != 1:
        raise ValueError(f"-({r})*{deg_f} - {c} is not an integer")
    return int(val)


# stored regularity values of the orbit-closure ideals, keyed (m, p)
def _expected_reg(m, p):
    return {1: m + 2, 2: m + 2 if m == 1 else m + 3, 0: 0}[p]


def regularity_info(m, p):
    """Regularity of the defining ideal of the orbit closure p.

    Derived from the b-function root paired with the orbit whenever the
    closure is Gorenstein; the single non-Gorenstein closure (middle orbit,
    m=1) has no derivation here and reports its stored reference value.
    """
    c = case_data(m)
    pairs = {2: (c.r1, c.codim[2]), 1: (c.r2, c.codim[1]), 0: (c.r3, c.codim[0])}
    if c.letter == "b" and p == 2:
        return {"m": m, "orbit": 2, "value": m + 2, "derived": False,
                "note": "closure is not Gorenstein; value is stored reference data"}
    if p not in pairs:
        raise ValueError(f"no regularity data for orbit {p}")
    r, cod = pairs[p]
    val = regularity_from(r, c.deg_f, cod)
    expected = _expected_reg(m, p)
    if val != expected:
        raise AssertionError(f"derived regularity {val} != stored {expected}")
    return {"m": m, "orbit": p, "value": val, "derived": True,
            "root": r, "codim": cod}


def regularity(m, p):
    return regularity_info(m, p)["value"]


SPIN9_PRESET = {
    "group": "Spin(9), 16-dimensional spin representation",
    "deg_f": 2,
    "broots": (Fraction(-1), Fraction(-8)),
    # orbit -> (b-root, codim, expected regularity)
    "orbits": {2: (Fraction(-1), 1, 1), 0: (Fraction(-8), 16, 0)},
}


def semiinvariant_degree_check(m, p, window=40):
    """Degree-window test for the unique semi-invariant section.

    The socle of the top local cohomology of a Gorenstein orbit closure
    carries exactly one invariant annihilated by f, in degree -reg - codim.
    At character level: with g(D) the invariant multiplicity of the module
    and a(D) = g(D) - g(D+4) the f-annihilated count, a(-reg-codim) must be
    1 and a must vanish above.  The non-Gorenstein middle orbit of m=1 has
    no invariant sections at all, which is reported rather than tested.
    """
    c = case_data(m)
    cat = _catalog(m)
    if c.letter == "b" and p == 2:
        ch = cat["L2"]
        degs = [d for d in range(-window, window + 1) if ch.coeff(c.zero, d)]
        return {"m": m, "orbit": 2, "status": "no-invariant-section",
                "invariant_degrees": degs, "ok": not degs}
    if c.letter == "a":
        module = {2: cat["Sf"].shift(2) - cat["Df_r1p1"], 1: cat["L1"], 0: cat["E"]}[p]
    else:
        module = {1: cat["Sf"].shift(2) - cat["L4p"], 0: cat["E"]}[p]
    reg = regularity(m, p)
    top = -reg - c.codim[p]

    def annihilated(D):
        return module.coeff(c.zero, D) - module.coeff(c.zero, D + 4)

    ok = annihilated(top) == 1 and all(
        annihilated(D) == 0 for D in range(top + 1, top + window)
    )
    return {"m": m, "orbit": p, "status": "section", "degree": top,
            "regularity": reg, "ok": ok}
