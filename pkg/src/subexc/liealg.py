"""Root-system combinatorics with exact integer arithmetic.

Dynkin diagrams, weights in the fundamental basis, simple reflections,
positive roots, duality and the Weyl dimension formula.  Nothing in this
module (or anywhere else in the package) touches floating point.

Node numbering conventions (1-based labels):

* ``A_n``: the chain 1 - 2 - ... - n.
* ``B_n``: the chain with a double edge between n-1 and n pointing at
  node n (node n carries the short root).
* ``C_n``: the same chain with the double edge pointing at node n-1
  (node n carries the long root).
* ``D_n``: the chain 1 - ... - (n-2) with both n-1 and n attached to n-2.
* ``E6``: the chain 1 - 2 - 3 - 4 - 5 with 6 attached to 3.
* ``E7``: the chain 1 - 2 - 3 - 4 - 5 - 6 with 7 attached to 3.
* ``E8``: the chain 1 - 2 - 3 - 4 - 5 - 6 - 7 with 8 attached to 3.
* ``F4``: the chain 1 - 2 - 3 - 4 with a double edge from 2 pointing at 3.
* ``G2``: nodes 1 - 2 with a triple edge from 2 pointing at 1.

"Double edge from i pointing at j" means: under the reflection at i the
coefficient at i is added to node j twice.  Equivalently node i is long,
node j is short.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt


class DynkinDiagram:
    """A finite (possibly disconnected) Dynkin diagram.

    ``nodes`` is an ordered tuple of integer labels.  Weights and roots are
    plain integer tuples aligned with that order.  ``mult(i, j)`` is the
    factor that the coefficient at i picks up on the neighbour j under the
    simple reflection at i: 1 across single edges, 2 or 3 when a multiple
    edge points at j.  ``length(i)`` is the symmetrizer d_i (half square
    length of the simple root), normalised so short roots have d = 1.
    """

    def __init__(self, name, nodes, edges):
        # edges: iterable of (i, j) for single edges, or (i, j, m_ij, m_ji)
        self.name = name
        self.nodes = tuple(nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("duplicate node labels")
        self._pos = {lab: k for k, lab in enumerate(self.nodes)}
        mult = {}
        for e in edges:
            if len(e) == 2:
                i, j, mij, mji = e[0], e[1], 1, 1
            else:
                i, j, mij, mji = e
            if i not in self._pos or j not in self._pos or i == j:
                raise ValueError(f"bad edge {e!r}")
            if (mij > 1) and (mji > 1):
                raise ValueError("at most one direction of an edge may carry multiplicity")
            mult[(i, j)] = mij
            mult[(j, i)] = mji
        self._mult = mult
        nbr = {i: [] for i in self.nodes}
        for (i, j), m in mult.items():
            nbr[i].append((self._pos[j], m))
        # positional neighbour lists, used by the reflection inner loops
        self._nbr_pos = tuple(tuple(sorted(nbr[i])) for i in self.nodes)
        self._lengths = self._compute_lengths()
        self._proots = None
        self._gram = None
        self._dims = {}

    # -- basic structure -------------------------------------------------

    @property
    def rank(self):
        return len(self.nodes)

    def position(self, label):
        try:
            return self._pos[label]
        except KeyError:
            raise ValueError(f"node {label} not in diagram {self.name}") from None

    def mult(self, i, j):
        return self._mult.get((i, j), 0)

    def length(self, label):
        return self._lengths[self.position(label)]

    @property
    def lengths(self):
        return self._lengths

    def _compute_lengths(self):
        # propagate d_i = mult(i, j) * d_j across multiple edges; short = 1
        d = {i: None for i in self.nodes}
        for comp in self.components():
            d[comp[0]] = Fraction(1)
            queue = [comp[0]]
            while queue:
                i = queue.pop()
                for j in comp:
                    if d[j] is None and self.mult(i, j):
                        # mult(i,j) = -<a_i, a_j^v> = 2(a_i,a_j)... ratio d_i/d_j
                        d[j] = d[i] * self.mult(j, i) / self.mult(i, j)
                        queue.append(j)
            low = min(d[j] for j in comp)
            for j in comp:
                d[j] /= low
        out = []
        for i in self.nodes:
            if d[i].denominator != 1:
                raise ValueError("inconsistent edge multiplicities")
            out.append(int(d[i]))
        return tuple(out)

    def components(self):
        """Connected components as lists of node labels (diagram order)."""
        seen, comps = set(), []
        for start in self.nodes:
            if start in seen:
                continue
            comp, queue = [], [start]
            seen.add(start)
            while queue:
                i = queue.pop()
                comp.append(i)
                for jp, _ in self._nbr_pos[self._pos[i]]:
                    j = self.nodes[jp]
                    if j not in seen:
                        seen.add(j)
                        queue.append(j)
            comps.append(sorted(comp, key=self._pos.get))
        return comps

    def cartan_matrix(self):
        """Row i = simple root alpha_i written in fundamental-weight coordinates."""
        n = self.rank
        A = [[0] * n for _ in range(n)]
        for ip, i in enumerate(self.nodes):
            A[ip][ip] = 2
            for jp, m in self._nbr_pos[ip]:
                A[ip][jp] = -m
        return tuple(tuple(row) for row in A)

    # -- reflections -----------------------------------------------------

    def reflect_weight(self, label, coords):
        """Simple reflection at ``label`` on fundamental-weight coordinates.

        The coefficient c at the node is added to every neighbour (with the
        edge multiplicity when a multiple edge points at that neighbour),
        then replaced by -c.
        """
        ip = self.position(label)
        c = coords[ip]
        out = list(coords)
        out[ip] = -c
        for jp, m in self._nbr_pos[ip]:
            out[jp] += m * c
        return tuple(out)

    def reflect_root(self, label, coords):
        """Simple reflection at ``label`` on simple-root coordinates."""
        ip = self.position(label)
        # pairing of the root with the coroot at ``label``
        pair = 2 * coords[ip]
        for jp, m in self._nbr_pos[ip]:
            # <alpha_j, alpha_i^v> = -mult(j, i)
            pair -= self.mult(self.nodes[jp], label) * coords[jp]
        out = list(coords)
        out[ip] -= pair
        return tuple(out)

    # -- roots and dimensions ---------------------------------------------

    def positive_roots(self):
        """All positive roots in simple-root coordinates.

        Generated by reflection closure from the simple roots; ordered by
        (height, coordinates) so output is reproducible.
        """
        if self._proots is not None:
            return self._proots
        n = self.rank
        simple = [tuple(1 if k == ip else 0 for k in range(n)) for ip in range(n)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for r in frontier:
                for lab in self.nodes:
                    s = self.reflect_root(lab, r)
                    if min(s) >= 0 and s not in found:
                        found.add(s)
                        nxt.append(s)
            frontier = nxt
        self._proots = tuple(sorted(found, key=lambda r: (sum(r), r)))
        return self._proots

    def weyl_dimension(self, coords):
        """Dimension of the irreducible with dominant highest weight ``coords``.

        Product over positive roots of (lam+rho, a)/(rho, a), with the
        pairing (mu, a) = sum_j c_j d_j mu_j for a = sum_j c_j alpha_j.
        Disconnected diagrams multiply over components (the pairing already
        does this since roots live in single components).
        """
        coords = tuple(coords)
        if any(c < 0 for c in coords):
            raise ValueError(f"weight {coords} is not dominant")
        hit = self._dims.get(coords)
        if hit is not None:
            return hit
        d = self._lengths
        num = 1
        den = 1
        for root in self.positive_roots():
            a = 0
            b = 0
            for j, c in enumerate(root):
                if c:
                    cd = c * d[j]
                    a += cd * (coords[j] + 1)
                    b += cd
            num *= a
            den *= b
        if num % den:
            raise ArithmeticError("Weyl dimension did not come out integral")
        dim = num // den
        self._dims[coords] = dim
        return dim

    # -- duality -----------------------------------------------------------

    def duality_permutation(self):
        """The involution p with -w_0(omega_i) = omega_{p(i)}, as a label map.

        Computed per component: A_n reverses the chain, D_n for odd n swaps
        the two fork tips, E6 reverses the chain; everything else is fixed.
        """
        perm = {i: i for i in self.nodes}
        for comp in self.components():
            letter, _, ordering = self._classify(comp)
            if letter == "A":
                for a, b in zip(ordering, reversed(ordering)):
                    perm[a] = b
            elif letter == "D" and len(comp) % 2 == 1:
                perm[ordering[-2]], perm[ordering[-1]] = ordering[-1], ordering[-2]
            elif letter == "E" and len(comp) == 6:
                chain = ordering[:5]
                for a, b in zip(chain, reversed(chain)):
                    perm[a] = b
        return perm

    def dualize(self, coords):
        perm = self.duality_permutation()
        out = [0] * self.rank
        for i in self.nodes:
            out[self.position(perm[i])] = coords[self.position(i)]
        return tuple(out)

    # -- component classification ------------------------------------------

    def _classify(self, comp):
        """Classify a connected component; returns (letter, rank, ordering).

        ``ordering`` lists the component's labels in the standard order of
        the named type (chain order for A/B/C, chain-then-fork for D,
        long-chain-then-branch-node for E).
        """
        n = len(comp)
        deg = {i: sum(1 for j in comp if self.mult(i, j)) for i in comp}
        multi = [(i, j) for i in comp for j in comp if self.mult(i, j) > 1]
        if n == 1:
            return "A", 1, list(comp)
        if multi:
            (i, j) = multi[0]
            m = self.mult(i, j)
            if m == 3:
                return "G", 2, [j, i]
            if n == 2:
                return "B", 2, [j, i]  # B2 = C2
            ends = [k for k in comp if deg[k] == 1]
            if deg[i] == 1:
                # multiple edge points from an end node inward: type C
                chain = self._chain_from(next(e for e in ends if e != i), comp)
                return "C", n, chain
            if deg[j] == 1:
                chain = self._chain_from(next(e for e in ends if e != j), comp)
                return "B", n, chain
            chain = self._chain_from(ends[0], comp)
            if self.mult(chain[1], chain[2]) > 1:
                chain = self._chain_from(ends[1], comp)
            return "F", 4, chain
        branch = [i for i in comp if deg[i] == 3]
        if not branch:
            ends = sorted((k for k in comp if deg[k] == 1), key=self._pos.get)
            return "A", n, self._chain_from(ends[0], comp)
        b = branch[0]
        arms = []
        for jp, _ in self._nbr_pos[self._pos[b]]:
            arm = [self.nodes[jp]]
            prev = b
            while True:
                nxts = [k for k in comp if self.mult(arm[-1], k) and k != prev]
                if not nxts:
                    break
                prev = arm[-1]
                arm.append(nxts[0])
            arms.append(arm)
        arms.sort(key=len)
        lens = [len(a) for a in arms]
        if lens[0] == 1 and lens[1] == 1:
            chain = list(reversed(arms[2])) + [b]
            return "D", n, chain + [arms[0][0], arms[1][0]]
        if lens[:2] == [1, 2]:
            chain = list(reversed(arms[2])) + [b] + arms[1]
            return "E", n, chain + arms[0]
        raise ValueError(f"component {comp} is not a Dynkin diagram")

    def _chain_from(self, end, comp):
        chain, prev = [end], None
        while True:
            nxts = [k for k in comp if self.mult(chain[-1], k) and k != prev]
            if not nxts:
                return chain
            prev = chain[-1]
            chain.append(nxts[0])

    def component_types(self):
        """List of (letter, rank) pairs, one per connected component."""
        return [(c[0], c[1]) for c in map(self._classify, self.components())]

    def fundamental_degrees(self):
        """Degrees of the fundamental Weyl-group invariants, all components."""
        degs = []
        for letter, r in self.component_types():
            degs.extend(fundamental_degrees(f"{letter}{r}"))
        return sorted(degs)

    # -- inner products ----------------------------------------------------

    def gram_fundamental(self):
        """Gram matrix of the fundamental weights, as exact fractions."""
        if self._gram is not None:
            return self._gram
        n = self.rank
        A = self.cartan_matrix()
        d = self._lengths
        # M[k][j] = (alpha_k, alpha_j) = d_j * A[k][j], symmetric
        M = [[Fraction(d[j] * A[k][j]) for j in range(n)] for k in range(n)]
        inv = _invert(M)
        # omega_i = sum_k d_i inv[i][k] alpha_k, so (omega_i, omega_j) = d_i d_j inv[i][j]
        gram = tuple(
            tuple(d[i] * d[j] * inv[i][j] for j in range(n)) for i in range(n)
        )
        self._gram = gram
        return gram

    def norm_sq(self, coords):
        """(v, v) for v in fundamental-weight coordinates, exact."""
        g = self.gram_fundamental()
        n = self.rank
        total = Fraction(0)
        for i in range(n):
            if coords[i]:
                for j in range(n):
                    if coords[j]:
                        total += coords[i] * coords[j] * g[i][j]
        return total

    def coord_bounds(self, norm_sq):
        """Per-node bound B_i with |v_i| <= B_i on the Weyl orbit of norm ``norm_sq``.

        Uses |<v, alpha_i^v>| <= |v| * |alpha_i^v| and |alpha_i^v|^2 = 2/d_i.
        """
        out = []
        for d in self._lengths:
            t = norm_sq * 2 / d
            out.append(isqrt(t.numerator // t.denominator) + 1)
        return tuple(out)

    # -- dunder ------------------------------------------------------------

    def __repr__(self):
        return f"DynkinDiagram({self.name!r}, rank={self.rank})"

    def __eq__(self, other):
        return self is other or (
            isinstance(other, DynkinDiagram)
            and self.nodes == other.nodes
            and self._mult == other._mult
        )

    def __hash__(self):
        return hash((self.nodes, tuple(sorted(self._mult.items()))))


def _invert(M):
    """Invert a small square matrix of Fractions by Gaussian elimination."""
    n = len(M)
    a = [row[:] + [Fraction(int(i == k)) for k in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                g = a[r][col]
                a[r] = [x - g * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


# -- named diagrams ---------------------------------------------------------

def _build(name):
    letter, rank = name[0], int(name[1:])
    chain = [(i, i + 1) for i in range(1, rank)]
    if letter == "A":
        return DynkinDiagram(name, range(1, rank + 1), chain)
    if letter == "B":
        if rank < 2:
            raise ValueError(name)
        edges = chain[:-1] + [(rank - 1, rank, 2, 1)]
        return DynkinDiagram(name, range(1, rank + 1), edges)
    if letter == "C":
        if rank < 2:
            raise ValueError(name)
        edges = chain[:-1] + [(rank, rank - 1, 2, 1)]
        return DynkinDiagram(name, range(1, rank + 1), edges)
    if letter == "D":
        if rank < 3:
            raise ValueError(name)
        edges = [(i, i + 1) for i in range(1, rank - 2)]
        edges += [(rank - 2, rank - 1), (rank - 2, rank)]
        return DynkinDiagram(name, range(1, rank + 1), edges)
    if letter == "E":
        if rank not in (6, 7, 8):
            raise ValueError(name)
        edges = [(i, i + 1) for i in range(1, rank - 1)] + [(3, rank)]
        return DynkinDiagram(name, range(1, rank + 1), edges)
    if name == "F4":
        return DynkinDiagram(name, range(1, 5), [(1, 2), (2, 3, 2, 1), (3, 4)])
    if name == "G2":
        return DynkinDiagram(name, range(1, 3), [(2, 1, 3, 1)])
    raise ValueError(f"unknown diagram {name!r}")


@lru_cache(maxsize=None)
def diagram(name):
    """Look up a diagram literal by name ("C3", "A5", "D6", "E7", ...)."""
    return _build(name)


_DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "C": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: sorted(list(range(2, 2 * n - 1, 2)) + [n]),
    "G": lambda n: [2, 6],
    "F": lambda n: [2, 6, 8, 12],
    "E": lambda n: {6: [2, 5, 6, 8, 9, 12],
                    7: [2, 6, 8, 10, 12, 14, 18],
                    8: [2, 8, 12, 14, 18, 20, 24, 30]}[n],
}


def fundamental_degrees(simple_type):
    """Degrees of fundamental Weyl-group invariants for a named simple type."""
    letter, rank = simple_type[0], int(simple_type[1:])
    if letter not in _DEGREES or rank < 1:
        raise ValueError(f"unknown simple type {simple_type!r}")
    if letter == "G" and rank != 2 or letter == "F" and rank != 4:
        raise ValueError(f"unknown simple type {simple_type!r}")
    return _DEGREES[letter](rank)


# -- weights ----------------------------------------------------------------

@dataclass(frozen=True)
class Weight:
    """An integral weight: integer coordinates in the fundamental basis."""

    diagram: DynkinDiagram
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.diagram.rank:
            raise ValueError("coordinate length does not match diagram rank")

    def _check(self, other):
        if self.diagram != other.diagram:
            raise ValueError("weights belong to different diagrams")

    def __add__(self, other):
        self._check(other)
        return Weight(self.diagram, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return Weight(self.diagram, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(self.diagram, tuple(-a for a in self.coords))

    def __mul__(self, n):
        return Weight(self.diagram, tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    @property
    def dominant(self):
        return all(c >= 0 for c in self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return f"Weight{self.coords}"


def rho(diag):
    """The half sum of positive roots: all-ones in fundamental coordinates."""
    return (1,) * diag.rank


def _coords(w):
    return w.coords if isinstance(w, Weight) else tuple(w)


def simple_reflection(diag, node, weight):
    """Reflect ``weight`` at ``node``; involutive."""
    c = _coords(weight)
    out = diag.reflect_weight(node, c)
    if isinstance(weight, Weight):
        return Weight(diag, out)
    return out


def positive_roots(diag):
    """Positive roots in simple-root coordinates, (height, lex)-sorted."""
    return list(diag.positive_roots())


def weyl_dimension(diag, weight):
    return diag.weyl_dimension(_coords(weight))


def dualize(diag, weight):
    """-w_0 applied to a weight: the diagram's duality permutation on coordinates."""
    out = diag.dualize(_coords(weight))
    if isinstance(weight, Weight):
        return Weight(diag, out)
    return out
