"""Exact cohomology of GL_4(Z) with coefficients S^{n-4}V_4 (x) det.

The pipeline runs bottom-up: weight arithmetic and shuffles, Kostant
decompositions of nilradical cohomology, torsion traces and Euler
characteristics, GL_2/GL_3 cohomology, parabolic cohomology, the
Mayer-Vietoris spectral sequence of the Borel-Serre boundary, and the
final dimension table.
"""

from .weights import Weight, SymStd, Rho, dot_action, weyl_dimension, module_to_weight, minus_identity_sign
from .weyl import Permutation, Composition, length, shuffles, factor_shuffle
from .kostant import kostant_decompose, nilradical_dim
from .gl2coh import gl2_cohomology, cusp_dim_oracle
from .euler import chi_gl2, chi_gl3, chi_gl4
from .arithcoh import levi_cohomology, parabolic_cohomology, gl3_cohomology, central_character_eval
from .boundary import build_e1_sheet, boundary_cohomology, gl4_cohomology, theorem_table
from .spectral import compute_e2

__version__ = "0.1.0"
