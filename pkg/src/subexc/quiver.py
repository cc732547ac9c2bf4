"""The quiver of the equivariant module category, per case.

Vertices are the simple modules; arrows pair off non-split extensions; the
relations kill every 2-cycle.  For m in {2,4,8} the quiver is two chains

    S <-> L3 <-> E        L4p <-> L2 <-> L1

plus isolated L41, L43.  For m=1 the chains are

    S <-> L3 <-> L2p      L4p <-> L1 <-> E

with L2 isolated as well.  The Fourier symmetry reflects each chain onto
itself in the first shape and swaps the two chains in the second.

Characteristic cycle bookkeeping uses the convention charC(S) = conormal
of the open orbit (zero section) and charC(E) = conormal of the origin
(full fiber); the swapped naming that also circulates is surfaced as a
standing tension in every report rather than silently corrected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cases import case_data


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple            # directed (tail, head) pairs
    relations: str = "all 2-cycles are zero"

    def neighbors_out(self, x):
        return [h for t, h in self.arrows if t == x]

    def isolated(self):
        touched = {v for a in self.arrows for v in a}
        return [v for v in self.vertices if v not in touched]


def _chain(a, b, c):
    return ((a, b), (b, a), (b, c), (c, b))


def build_quiver(m):
    c = case_data(m)
    if c.letter == "a":
        verts = ("S", "L3", "E", "L4p", "L2", "L1", "L41", "L43")
        arrows = _chain("S", "L3", "E") + _chain("L4p", "L2", "L1")
    else:
        verts = ("S", "L3", "L2p", "L4p", "L1", "E", "L2", "L41", "L43")
        arrows = _chain("S", "L3", "L2p") + _chain("L4p", "L1", "E")
    return Quiver(verts, arrows)


def path_count(q, x, y):
    """Number of paths from x to y surviving the relations.

    The relations kill any path containing an immediate back-and-forth, so
    the count is a depth-first walk that never reverses its last arrow.
    For these quivers the answer is always 0 or 1.
    """
    for v in (x, y):
        if v not in q.vertices:
            raise ValueError(f"unknown vertex {v!r}")
    total = 1 if x == y else 0  # the trivial path
    stack = [(x, None, 0)]
    while stack:
        at, came_from, length = stack.pop()
        if at == y and length > 0:
            total += 1
        if length >= len(q.arrows):
            continue  # safety cap; never reached on these quivers
        for nxt in q.neighbors_out(at):
            if nxt == came_from:
                continue  # the 2-cycle relation kills this continuation
            stack.append((nxt, at, length + 1))
    return total


def fourier_permutation(m):
    """The Fourier symmetry as a vertex involution; checked to preserve
    the arrow set."""
    c = case_data(m)
    if c.letter == "a":
        perm = {"S": "E", "E": "S", "L3": "L3", "L4p": "L1", "L1": "L4p",
                "L2": "L2", "L41": "L41", "L43": "L43"}
    else:
        perm = {"S": "E", "E": "S", "L3": "L1", "L1": "L3", "L2p": "L4p",
                "L4p": "L2p", "L2": "L2", "L41": "L41", "L43": "L43"}
    q = build_quiver(m)
    assert all(perm[perm[v]] == v for v in q.vertices), "not an involution"
    mapped = {(perm[t], perm[h]) for t, h in q.arrows}
    assert mapped == set(q.arrows), "not a quiver automorphism"
    return perm


# -- characteristic cycles -----------------------------------------------------

def char_cycles(m):
    """Stored characteristic cycles: module -> set of orbit indices whose
    conormal closures appear (every multiplicity here is one)."""
    c = case_data(m)
    full = frozenset({0, 1, 2, 3, 4})
    if c.letter == "a":
        return {
            "S": frozenset({4}), "E": frozenset({0}),
            "L1": frozenset({1, 0}), "L2": frozenset({2}),
            "L3": frozenset({3, 2, 1}), "L4p": frozenset({4, 3}),
            "L41": full, "L43": full,
        }
    return {
        "S": frozenset({4}), "E": frozenset({0}),
        "L1": frozenset({1}), "L2": frozenset({2}),
        "L2p": frozenset({2, 1, 0}), "L3": frozenset({3}),
        "L4p": frozenset({4, 3}), "L41": full, "L43": full,
    }


def _holonomy_connected(cycle):
    """The holonomy diagram is the chain 4-3-2-1-0, so a component set is
    connected exactly when it is an interval."""
    if not cycle:
        return True
    return max(cycle) - min(cycle) + 1 == len(cycle)


SE_NAMING_TENSION = (
    "characteristic cycle naming: this package sets charC(coordinate ring) "
    "= [conormal of the open orbit] and charC(origin module) = [conormal of "
    "the origin]; the swapped attribution also circulates and is treated "
    "here as a misprint"
)


def charc_report(m):
    """Connectivity and additivity bookkeeping for characteristic cycles.

    Never raises on a mismatch: the known additivity tension in the m=1
    square-root filtration is reported as data.  ``tensions`` lists every
    standing discrepancy; there is one universal naming tension and, for
    m=1 only, the square-root-filtration sum that misses the middle orbit.
    """
    c = case_data(m)
    cycles = char_cycles(m)
    connectivity = {
        name: _holonomy_connected(cyc) for name, cyc in sorted(cycles.items())
    }
    full = frozenset({0, 1, 2, 3, 4})
    if c.letter == "a":
        series = [
            ("f-power filtration of Sf", ["S", "L3", "E"], full),
            ("sqrt-f filtration of Sf*sqrt(f)", ["L4p", "L2", "L1"], full),
            ("quarter twist L41", ["L41"], full),
            ("quarter twist L43", ["L43"], full),
        ]
    else:
        series = [
            ("f-power filtration of Sf", ["S", "L3", "L2p"], full),
            ("sqrt-f filtration of Sf*sqrt(f)", ["L4p", "L1", "E"], full),
            ("quarter twist L41", ["L41"], full),
            ("quarter twist L43", ["L43"], full),
        ]
    sums = []
    tensions = [{"id": "se-naming-convention", "detail": SE_NAMING_TENSION}]
    for label, factors, total in series:
        got = frozenset().union(*(cycles[f] for f in factors))
        ok = got == total
        sums.append({"series": label, "factors": factors,
                     "sum": sorted(got), "stored_total": sorted(total),
                     "status": "match" if ok else "mismatch"})
        if not ok:
            tensions.append({
                "id": "sqrtf-cycle-sum",
                "detail": (
                    f"{label}: factor cycles sum to orbits {sorted(got)} but the "
                    f"stored total claims {sorted(total)}; the two statements "
                    "cannot both hold under additivity, no side is taken"
                ),
            })
    return {
        "m": m,
        "connectivity": connectivity,
        "all_connected": all(connectivity.values()),
        "series_sums": sums,
        "tensions": tensions,
    }


def to_dot(q):
    lines = ["digraph category {"]
    for v in q.vertices:
        lines.append(f'  "{v}";')
    for t, h in q.arrows:
        lines.append(f'  "{t}" -> "{h}";')
    lines.append("}")
    return "\n".join(lines)
