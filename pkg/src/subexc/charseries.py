"""Exact calculus of admissible graded characters.

A character here is a formal sum over (dominant weight, degree) cells with
integer multiplicities.  The generating expressions are rational in the
grading variable t with Cartan-product semantics:

    CartanExpr  =  sum of signed monomials  t^s V(w)   over
                   a product of factors  1/(1 - t^k V(letter)),
                   optionally times the two-sided comb  sum_i t^(P*i).

A factor 1/(1 - t^k V(w)) expands as 1 + t^k V(w) + t^2k V(2w) + ...,
products multiply weights additively (Cartan product).  Multiplicities are
extracted per cell by counting lattice points, never by multiplying
truncated series: expressions with degree-zero letters have infinitely
many weights in a single degree, so per-degree truncation is unsound.

The letters occurring in one expression must be linearly independent in
the weight lattice; this makes the letter exponents of any target weight
unique, which is what keeps the counting exact and fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .liealg import DynkinDiagram, Weight, _coords


@dataclass(frozen=True)
class Box:
    """A finite window: degree range plus a bound on letter exponents."""

    dmin: int
    dmax: int
    letter_bound: int = 6

    def __post_init__(self):
        if self.dmin > self.dmax or self.letter_bound < 0:
            raise ValueError("empty box")

    @property
    def degrees(self):
        return range(self.dmin, self.dmax + 1)

    def dual(self):
        return Box(-self.dmax, -self.dmin, self.letter_bound)

    def shift(self, s):
        return Box(self.dmin + s, self.dmax + s, self.letter_bound)


def _tuple_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _tuple_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _scale(a, n):
    return tuple(n * x for x in a)


class CartanExpr:
    """One rational character expression.

    ``factors`` is a sequence of (degree, letter) pairs; a letter of all
    zeros denotes a pure t-power factor 1/(1 - t^degree).  ``terms`` is a
    sequence of (sign, degree_shift, weight_shift) numerator monomials.
    ``period``, when set, multiplies by sum over all integers i of
    t^(period * i); combined with pure t-factors this would diverge, so
    that combination is rejected.
    """

    def __init__(self, diagram, factors, terms=None, period=None):
        self.diagram = diagram
        zero = (0,) * diagram.rank
        self.factors = tuple((int(k), tuple(w)) for k, w in factors)
        if terms is None:
            terms = [(1, 0, zero)]
        self.terms = tuple((int(s), int(d), tuple(w)) for s, d, w in terms)
        for s, _, w in self.terms:
            if s not in (1, -1):
                raise ValueError("term signs must be +1 or -1")
            if len(w) != diagram.rank:
                raise ValueError("weight shift has wrong rank")
        self.period = period
        if period is not None and period <= 0:
            raise ValueError("period must be positive")

        letters = []
        for k, w in self.factors:
            if any(w):
                if w not in letters:
                    letters.append(w)
            elif k == 0:
                raise ValueError("factor 1/(1-1) is not admissible")
        self.letters = tuple(letters)
        self.pure = tuple(k for k, w in self.factors if not any(w))
        if self.period is not None and self.pure:
            raise ValueError("periodic comb cannot be combined with pure t-factors")
        if self.pure and max(self.pure) > 0 and min(self.pure) < 0:
            raise ValueError("pure t-factors of mixed sign diverge")
        self._letter_degrees = tuple(
            tuple(k for k, w in self.factors if w == let) for let in letters
        )
        self._solver = _letter_solver(diagram.rank, letters)
        self._pure_cache = {}
        self._solve_cache = {}
        self._dp_cache = {}

    # -- construction helpers -------------------------------------------

    def shift(self, s):
        """Multiply by t^s."""
        terms = [(sg, d + s, w) for sg, d, w in self.terms]
        return CartanExpr(self.diagram, self.factors, terms, self.period)

    def dual(self):
        """The dual character: cell (w, d) acquires the value at (w*, -d)."""
        dz = self.diagram.dualize
        factors = [(-k, dz(w)) for k, w in self.factors]
        terms = [(sg, -d, dz(w)) for sg, d, w in self.terms]
        return CartanExpr(self.diagram, factors, terms, self.period)

    def __neg__(self):
        return CharCombo([(-1, self)])

    def __add__(self, other):
        return CharCombo([(1, self)]) + other

    def __sub__(self, other):
        return CharCombo([(1, self)]) - other

    # -- the counting core -----------------------------------------------

    def _pure_count(self, R):
        """Number of ways to write R as a nonnegative combination of the
        pure t-factor degrees."""
        if not self.pure:
            return 1 if R == 0 else 0
        hit = self._pure_cache.get(R)
        if hit is not None:
            return hit
        if len(self.pure) == 1:
            k = self.pure[0]
            q, r = divmod(R, k)
            val = 1 if (r == 0 and q >= 0) else 0
        else:
            val = _count_combinations(R, self.pure)
        self._pure_cache[R] = val
        return val

    def _letter_dp(self, exponents):
        """Degree distribution of all ways to route the letter exponents
        through the factors carrying each letter: dict degree -> count."""
        hit = self._dp_cache.get(exponents)
        if hit is not None:
            return hit
        dp = {0: 1}
        for x, degs in zip(exponents, self._letter_degrees):
            dp = _convolve(dp, _split_ways(x, degs))
        self._dp_cache[exponents] = dp
        return dp

    def _decompose(self, target):
        if target in self._solve_cache:
            return self._solve_cache[target]
        x = self._solver(target)
        self._solve_cache[target] = x
        return x

    def coeff(self, weight, degree):
        """Multiplicity of the irreducible V(weight) in graded piece ``degree``."""
        w = _coords(weight)
        total = 0
        for sign, dshift, wshift in self.terms:
            x = self._decompose(_tuple_sub(w, wshift))
            if x is None:
                continue
            dp = self._letter_dp(x)
            need = degree - dshift
            if self.period is not None:
                total += sign * sum(
                    c for D, c in dp.items() if (need - D) % self.period == 0
                )
            else:
                total += sign * sum(
                    c * self._pure_count(need - D) for D, c in dp.items()
                )
        return total

    def weight_slice(self, weight):
        """All degrees carrying ``weight``, as a :class:`Slice`."""
        w = _coords(weight)
        num = {}
        for sign, dshift, wshift in self.terms:
            x = self._decompose(_tuple_sub(w, wshift))
            if x is None:
                continue
            for D, c in self._letter_dp(x).items():
                key = D + dshift
                num[key] = num.get(key, 0) + sign * c
        num = {d: c for d, c in num.items() if c}
        return Slice(num, self.pure, self.period)

    def weights_in_box(self, letter_bound):
        """Every weight whose letter exponents are all <= letter_bound."""
        out = set()
        for _, _, wshift in self.terms:
            for expo in _exponent_grid(len(self.letters), letter_bound):
                w = wshift
                for x, let in zip(expo, self.letters):
                    if x:
                        w = _tuple_add(w, _scale(let, x))
                out.add(w)
        return sorted(out)

    def hilbert(self, degree, letter_bound=None):
        """Total dimension of the graded piece: sum of coeff * Weyl dimension.

        Works directly when every factor degree has one strict sign; for
        mixed-sign or degree-zero factors a letter bound must be supplied
        (the slice is infinite otherwise and the call raises).
        """
        w_count = self._slice_weights(degree, letter_bound)
        dim = self.diagram.weyl_dimension
        return sum(c * dim(w) for w, c in w_count.items())

    def _slice_weights(self, degree, letter_bound):
        ks = [k for k, _ in self.factors]
        uniform = ks and (all(k > 0 for k in ks) or all(k < 0 for k in ks))
        if self.period is None and (uniform or not ks):
            acc = {}
            for sign, dshift, wshift in self.terms:
                self._enumerate_uniform(degree - dshift, wshift, sign, acc)
            return {w: c for w, c in acc.items() if c}
        if letter_bound is None:
            raise ValueError(
                "degree slice is infinite; supply letter_bound to enumerate it"
            )
        acc = {}
        zero = (0,) * self.diagram.rank
        for sign, dshift, wshift in self.terms:
            for expo in _exponent_grid(len(self.letters), letter_bound):
                w = wshift
                for x, let in zip(expo, self.letters):
                    if x:
                        w = _tuple_add(w, _scale(let, x))
                for D, c in self._letter_dp(expo).items():
                    need = degree - dshift - D
                    if self.period is not None:
                        n = c if need % self.period == 0 else 0
                    else:
                        n = c * self._pure_count(need)
                    if n:
                        acc[w] = acc.get(w, 0) + sign * n
        return {w: c for w, c in acc.items() if c}

    def _enumerate_uniform(self, degree, wshift, sign, acc):
        # factor degrees all share one sign: plain bounded recursion
        factors = self.factors
        sgn = 1 if all(k > 0 for k, _ in factors) else -1
        rank = self.diagram.rank

        def rec(i, rem, w):
            if i == len(factors):
                if rem == 0:
                    acc[tuple(w)] = acc.get(tuple(w), 0) + sign
                return
            k, let = factors[i]
            e = 0
            while sgn * (rem - e * k) >= 0:
                rec(i + 1, rem - e * k, [a + e * b for a, b in zip(w, let)] if any(let) else w)
                e += 1

        rec(0, degree, list(wshift))

    # -- dunder ------------------------------------------------------------

    def __repr__(self):
        fs = " ".join(
            f"(1-t^{k})" if not any(w) else f"(1-t^{k} V{w})" for k, w in self.factors
        )
        per = f" * t^{self.period}Z" if self.period else ""
        return f"CartanExpr[{len(self.terms)} terms / {fs}{per}]"


class CharCombo:
    """A formal integer combination of rational character expressions."""

    def __init__(self, parts):
        self.parts = []
        for sign, expr in parts:
            if isinstance(expr, CharCombo):
                self.parts.extend((sign * s, e) for s, e in expr.parts)
            else:
                self.parts.append((sign, expr))
        if not self.parts:
            raise ValueError("empty combination")
        self.diagram = self.parts[0][1].diagram
        if any(e.diagram != self.diagram for _, e in self.parts):
            raise ValueError("mixed diagrams in one combination")

    def coeff(self, weight, degree):
        return sum(s * e.coeff(weight, degree) for s, e in self.parts)

    def shift(self, d):
        return CharCombo([(s, e.shift(d)) for s, e in self.parts])

    def dual(self):
        return CharCombo([(s, e.dual()) for s, e in self.parts])

    def weights_in_box(self, letter_bound):
        out = set()
        for _, e in self.parts:
            out.update(e.weights_in_box(letter_bound))
        return sorted(out)

    def hilbert(self, degree, letter_bound=None):
        return sum(s * e.hilbert(degree, letter_bound) for s, e in self.parts)

    def __neg__(self):
        return CharCombo([(-s, e) for s, e in self.parts])

    def __add__(self, other):
        return CharCombo(self.parts + _parts_of(other))

    def __sub__(self, other):
        return CharCombo(self.parts + [(-s, e) for s, e in _parts_of(other)])

    def __repr__(self):
        return f"CharCombo[{len(self.parts)} parts]"


def _parts_of(obj):
    if isinstance(obj, CharCombo):
        return list(obj.parts)
    if isinstance(obj, CartanExpr):
        return [(1, obj)]
    raise TypeError(f"cannot combine with {type(obj).__name__}")


@dataclass
class Slice:
    """The t-coefficient of one weight: a Laurent polynomial ``num``
    spread by the geometric pure factors and/or a periodic comb."""

    num: dict
    pure: tuple
    period: int | None

    @property
    def finite(self):
        return not self.pure and self.period is None

    def as_poly(self):
        if not self.finite:
            raise ValueError("slice is not a finite Laurent polynomial")
        return dict(sorted(self.num.items()))

    def coeff(self, d):
        if self.period is not None:
            return sum(c for D, c in self.num.items() if (d - D) % self.period == 0)
        total = 0
        for D, c in self.num.items():
            total += c * _pure_count_standalone(d - D, self.pure)
        return total

    def residues(self):
        """For periodic slices: value per residue class mod the period."""
        if self.period is None:
            raise ValueError("slice is not periodic")
        out = {r: 0 for r in range(self.period)}
        for D, c in self.num.items():
            out[D % self.period] += c
        return out

    def min_degree(self):
        """Smallest degree with a nonzero value (None for periodic slices)."""
        if self.period is not None:
            return None
        if not self.num:
            return None
        lo = min(self.num)
        if self.pure and min(self.pure) < 0:
            return None  # support is unbounded below
        # pure factors only add nonnegative degrees (or none at all)
        d = lo
        while self.coeff(d) == 0:
            d += 1
            if d > max(self.num) + sum(abs(k) for k in self.pure) + 1:
                return None
        return d

    def support_in(self, dmin, dmax):
        return {d: self.coeff(d) for d in range(dmin, dmax + 1) if self.coeff(d)}


def _pure_count_standalone(R, pure):
    if not pure:
        return 1 if R == 0 else 0
    if len(pure) == 1:
        q, r = divmod(R, pure[0])
        return 1 if (r == 0 and q >= 0) else 0
    return _count_combinations(R, pure)


def _count_combinations(R, degs):
    # all degs share one sign; bounded recursion
    if all(k < 0 for k in degs):
        return _count_combinations(-R, tuple(-k for k in degs))
    if R < 0:
        return 0

    @lru_cache(maxsize=None)
    def rec(rem, i):
        if i == len(degs) - 1:
            return 1 if rem % degs[i] == 0 else 0
        return sum(rec(rem - e * degs[i], i + 1) for e in range(rem // degs[i] + 1))

    return rec(R, 0)


def _split_ways(total, degs):
    """dict D -> number of ways to split ``total`` over factors with the
    given degrees so the degree contributions sum to D."""
    if len(degs) == 1:
        return {degs[0] * total: 1}
    out = {}

    def rec(i, rem, acc):
        if i == len(degs) - 1:
            key = acc + degs[i] * rem
            out[key] = out.get(key, 0) + 1
            return
        for e in range(rem + 1):
            rec(i + 1, rem - e, acc + degs[i] * e)

    rec(0, total, 0)
    return out


def _convolve(a, b):
    if b == {0: 1}:
        return a
    out = {}
    for da, ca in a.items():
        for db, cb in b.items():
            k = da + db
            out[k] = out.get(k, 0) + ca * cb
    return out


def _exponent_grid(n, bound):
    if n == 0:
        yield ()
        return
    for head in range(bound + 1):
        for tail in _exponent_grid(n - 1, bound):
            yield (head,) + tail


def _letter_solver(rank, letters):
    """Exact nonnegative-integer decomposition of a weight over the letters.

    Returns a function target -> exponent tuple (or None).  Raises at
    construction when the letters are linearly dependent, since then the
    decomposition would not be unique and counting would be wrong.
    """
    s = len(letters)
    if s == 0:
        def solve0(target):
            return () if not any(target) else None
        return solve0
    cols = [[Fraction(letters[j][i]) for j in range(s)] for i in range(rank)]
    # row-reduce to find s pivot rows
    mat = [row[:] for row in cols]
    pivots = []
    r = 0
    for j in range(s):
        piv = next((i for i in range(r, rank) if mat[i][j] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pivots.append((j, mat[r][:]))
        f = mat[r][j]
        mat[r] = [x / f for x in mat[r]]
        for i in range(rank):
            if i != r and mat[i][j]:
                g = mat[i][j]
                mat[i] = [x - g * y for x, y in zip(mat[i], mat[r])]
        r += 1
    if r < s:
        raise ValueError("letters are linearly dependent; counting would be ambiguous")
    # choose s independent rows of the original matrix, invert that block
    import itertools

    block_rows = None
    for rows in itertools.combinations(range(rank), s):
        sub = [[Fraction(letters[j][i]) for j in range(s)] for i in rows]
        if _det(sub) != 0:
            block_rows = rows
            inv = _inv(sub)
            break
    assert block_rows is not None

    def solve(target):
        rhs = [Fraction(target[i]) for i in block_rows]
        x = [sum(inv[a][b] * rhs[b] for b in range(s)) for a in range(s)]
        out = []
        for v in x:
            if v.denominator != 1 or v < 0:
                return None
            out.append(int(v))
        # verify the full equation, not just the pivot rows
        for i in range(rank):
            if sum(out[j] * letters[j][i] for j in range(s)) != target[i]:
                return None
        return tuple(out)

    return solve


def _det(m):
    n = len(m)
    a = [row[:] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        f = a[c][c]
        a[c] = [x / f for x in a[c]]
        for r in range(c + 1, n):
            if a[r][c]:
                g = a[r][c]
                a[r] = [x - g * y for x, y in zip(a[r], a[c])]
    return det


def _inv(m):
    n = len(m)
    a = [row[:] + [Fraction(int(i == k)) for k in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        f = a[c][c]
        a[c] = [x / f for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                g = a[r][c]
                a[r] = [x - g * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


# -- materialized series ------------------------------------------------------

class CharSeries:
    """A finitely supported table of (weight, degree) -> multiplicity."""

    def __init__(self, diagram, box, data):
        self.diagram = diagram
        self.box = box
        self.data = {k: v for k, v in data.items() if v}

    def coeff(self, weight, degree):
        return self.data.get((_coords(weight), degree), 0)

    def items(self):
        return sorted(self.data.items())

    def __add__(self, other):
        return self._pointwise(other, 1)

    def __sub__(self, other):
        return self._pointwise(other, -1)

    def _pointwise(self, other, sign):
        if self.diagram != other.diagram:
            raise ValueError("series over different diagrams")
        if self.box != other.box:
            raise ValueError("series over different boxes")
        data = dict(self.data)
        for k, v in other.data.items():
            data[k] = data.get(k, 0) + sign * v
        return CharSeries(self.diagram, self.box, data)

    def shift(self, s):
        return CharSeries(
            self.diagram, self.box.shift(s),
            {(w, d + s): v for (w, d), v in self.data.items()},
        )

    def dual(self):
        dz = self.diagram.dualize
        return CharSeries(
            self.diagram, self.box.dual(),
            {(dz(w), -d): v for (w, d), v in self.data.items()},
        )

    def __repr__(self):
        return f"CharSeries[{len(self.data)} cells in {self.box}]"


def expand_box(expr, box, max_cells=2_000_000):
    """Materialize an expression over a box.

    Enumerates the weights reachable with letter exponents inside the box
    bound and evaluates every (weight, degree) cell exactly.
    """
    weights = expr.weights_in_box(box.letter_bound)
    ncells = len(weights) * (box.dmax - box.dmin + 1)
    if ncells > max_cells:
        raise ValueError(f"box asks for {ncells} cells, above the cap {max_cells}")
    data = {}
    for w in weights:
        for d in box.degrees:
            c = expr.coeff(w, d)
            if c:
                data[(w, d)] = c
    return CharSeries(expr.diagram, box, data)


# -- functional wrappers -------------------------------------------------------

def coeff(expr, weight, degree):
    return expr.coeff(weight, degree)


def weight_slice(expr, weight):
    return expr.weight_slice(weight)


def hilbert(expr, degree, letter_bound=None):
    return expr.hilbert(degree, letter_bound)


def combine(a, b=None, op="add"):
    """Pointwise combination: add, subtract, degree-shift, dual.

    ``degree-shift`` takes the shift amount as ``b``; ``dual`` ignores ``b``.
    Works uniformly for expressions and materialized series.
    """
    if op == "add":
        return a + b
    if op == "subtract":
        return a - b
    if op == "degree-shift":
        return a.shift(b)
    if op == "dual":
        return a.dual()
    raise ValueError(f"unknown op {op!r}")
