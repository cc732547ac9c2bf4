"""Sheaf cohomology of irreducible homogeneous bundles on G/P.

The computational content of the Borel--Weil--Bott theorem is a dominance
chase: add rho to the bundle weight, then repeatedly reflect at a node
carrying a negative coefficient.  If a zero coefficient ever appears the
weight is singular under the affine action and all cohomology vanishes;
otherwise the chase reaches the dominant chamber in l(w) steps and

    H^{l(w)}(G/P, V(lambda)) = dual of the irreducible with highest
                               weight w(lambda+rho) - rho,

all other cohomology zero.  Callers wanting the self-dual-weight form
apply :func:`subexc.liealg.dualize` themselves; nothing here dualizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .liealg import DynkinDiagram, Weight, _coords, rho


@dataclass(frozen=True)
class BottResult:
    """Outcome of a chase: singular, or a cohomological degree and weight."""

    singular: bool
    degree: int | None = None
    weight: tuple | None = None

    @classmethod
    def cohomology(cls, degree, weight):
        return cls(False, degree, tuple(weight))

    SINGULAR = None  # set below

    def __repr__(self):
        if self.singular:
            return "BottResult(singular)"
        return f"BottResult(H^{self.degree}, {self.weight})"


BottResult.SINGULAR = BottResult(True)


def bott_chase(diag: DynkinDiagram, weight, trace=None):
    """Run the dominance chase on ``weight``.

    When ``trace`` is a list, every value of lambda+rho visited (including
    the first) is appended to it.

    The chase needs at most one reflection per positive root; the hard cap
    of ten times that signals an implementation bug, never valid input.
    """
    lam = _coords(weight)
    if len(lam) != diag.rank:
        raise ValueError("weight length does not match diagram rank")
    mu = tuple(a + 1 for a in lam)
    if trace is not None:
        trace.append(mu)
    cap = 10 * len(diag.positive_roots())
    steps = 0
    while True:
        neg = None
        for pos, c in enumerate(mu):
            if c == 0:
                return BottResult.SINGULAR
            if c < 0 and neg is None:
                neg = pos
        if neg is None:
            return BottResult.cohomology(steps, tuple(c - 1 for c in mu))
        mu = diag.reflect_weight(diag.nodes[neg], mu)
        if trace is not None:
            trace.append(mu)
        steps += 1
        if steps > cap:
            raise RuntimeError("dominance chase failed to terminate; this is a bug")


@dataclass(frozen=True)
class Parabolic:
    """Maximal parabolic subgroup: a diagram with one distinguished node."""

    diagram: DynkinDiagram
    distinguished: int

    def __post_init__(self):
        self.diagram.position(self.distinguished)  # validates the node


def levi(P: Parabolic):
    """Levi factor of ``P``: the diagram with the distinguished node deleted.

    Returns ``(diagram, node_map)`` where ``node_map`` sends the Levi's node
    labels back to the parent's (the labels are simply kept, so the map is
    an identity inclusion; it is returned to make the contract explicit).
    """
    parent = P.diagram
    keep = [i for i in parent.nodes if i != P.distinguished]
    edges = []
    for a in range(len(keep)):
        for b in range(a + 1, len(keep)):
            i, j = keep[a], keep[b]
            if parent.mult(i, j):
                edges.append((i, j, parent.mult(i, j), parent.mult(j, i)))
    sub = DynkinDiagram(f"{parent.name}|L{P.distinguished}", keep, edges)
    return sub, {i: i for i in keep}


def _check_p_dominant(P: Parabolic, lam):
    for pos, label in enumerate(P.diagram.nodes):
        if label != P.distinguished and lam[pos] < 0:
            raise ValueError(
                f"weight {tuple(lam)} is not dominant for the parabolic at node "
                f"{P.distinguished}: coordinate {label} is negative"
            )


def bundle_cohomology(P: Parabolic, weight, trace=None) -> BottResult:
    """Cohomology of the irreducible bundle V(weight) on G/P.

    ``weight`` must be dominant away from the distinguished node; its
    coordinate there may be any integer.
    """
    lam = _coords(weight)
    _check_p_dominant(P, lam)
    return bott_chase(P.diagram, lam, trace=trace)


def levi_dimension(P: Parabolic, weight):
    """Rank of V(weight): the Weyl dimension of the restriction to the Levi.

    The distinguished coordinate only twists by a character, so the
    dimension is computed over the Levi's positive roots alone.
    """
    lam = _coords(weight)
    _check_p_dominant(P, lam)
    sub, _ = levi(P)
    restricted = tuple(
        lam[P.diagram.position(i)] for i in sub.nodes
    )
    return sub.weyl_dimension(restricted)


def chase_example(diag, weight):
    """Convenience: run a chase and return (result, trace of lambda+rho)."""
    tr = []
    res = bott_chase(diag, weight, trace=tr)
    return res, tr
