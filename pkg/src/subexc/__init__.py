"""Exact calculator for the subexceptional series C3 / A5 / D6 / E7.

The four cases are indexed by the series parameter m = 1, 2, 4, 8.  The
package computes, with exact integer arithmetic throughout:

* root-system combinatorics and the Weyl dimension formula (``liealg``),
* sheaf cohomology of irreducible homogeneous bundles by the dominance
  chase realizing the Borel--Weil--Bott theorem (``bott``),
* graded equivariant characters as symbolic rational expressions with
  Cartan-product semantics, and exact coefficient extraction by lattice
  point counting (``charseries``),
* the per-case catalog of simple equivariant D-module characters, the
  identity verifier, degree-window formulas and cohomology scans
  (``cases``, ``scan``),
* Poincare polynomials, intersection cohomology, Lyubeznik numbers and
  local cohomology tables of the orbit closures (``geometry``),
* the quiver of the equivariant category with its Fourier symmetry and
  characteristic cycle bookkeeping (``quiver``).

The ``subexc`` command line front end exposes all of it; see README.md.
"""

from .liealg import (
    DynkinDiagram,
    Weight,
    diagram,
    dualize,
    fundamental_degrees,
    positive_roots,
    rho,
    simple_reflection,
    weyl_dimension,
)
from .bott import BottResult, Parabolic, bott_chase, bundle_cohomology, levi, levi_dimension
from .charseries import Box, CartanExpr, CharSeries, coeff, combine, expand_box, hilbert, weight_slice
from .cases import (
    CaseData,
    case_data,
    ni_multiplicity,
    recursion_check,
    regularity,
    regularity_from,
    semiinvariant_degree_check,
    simple_character,
    verify_identities,
)
from .scan import greta_summands, ni_oracle, sym_cotangent_decomp, trivial_scan
from .geometry import (
    IntPolynomial,
    ih_orbit,
    local_cohomology_table,
    lyubeznik,
    poincare_gp,
    primitive_betti,
)
from .quiver import build_quiver, charc_report, fourier_permutation, path_count

__all__ = [name for name in dir() if not name.startswith("_")]
