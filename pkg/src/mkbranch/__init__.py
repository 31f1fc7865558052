"""Exact Macdonald-Koornwinder polynomials built by a branching rule."""
from .branching import (BranchingCoeffs, MKFamily, askey_wilson, branch_step, branching_coeffs,
                        branching_poly, compute_mk, compute_mk_chains)
from .field import FieldElement, ParameterPoint, ResonantParameterError, hatted, qpochhammer
from .interp import cauchy_kernel, e_r, one_var_basis
from .laurent import LaurentPoly, bracket
from .pieri import (PieriCoeffTable, SignedSupport, pieri_coeff, principal_specialization,
                    u_factor, v_factor)

__version__ = "0.1.0"
