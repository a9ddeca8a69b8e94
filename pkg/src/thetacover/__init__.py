"""Theta series on the Siegel half space and their transformation laws.

The package builds, from scratch over the integers, the objects needed
to state and numerically verify the half-integral transformation laws of
theta series: the integer symplectic group and its standard generators,
an eighth-root-of-unity pairing cocycle with exact Lagrangian
bookkeeping, quadratic Gauss sums trivializing that cocycle on the
even-diagonal subgroup, the mod-2 coset geometry labelling theta
components, a genuine square root of det(cz + d) with a pinned branch,
and truncated lattice sums with certified tails.  The harness module
runs randomized end-to-end checks of the laws; the cli module exposes
everything as a command line tool.
"""

from .cocycle import (CoverElement, Lagrangian, Mu8, PwsFactorization,
                      cbar_cocycle, cover_inv, cover_mul, m_xstar,
                      maslov_signature, pws_decompose, rao_cocycle, x_star)
from .f2cosets import (CosetRecord, coset_index_of, coset_profile,
                       coset_table, enumerate_isotropic, q0_eval,
                       reduce_mod2, transvection_rep)
from .gauss import (ResidueSystem, SnappedRoot, beta_tilde, coset_split,
                    f_shift, lambda_bar, lambda_multiplier,
                    modified_cocycle, residues_mod_cT, snap_mu8,
                    symplectic_gauss_sum)
from .harness import (MonomialMatrix, VerificationReport,
                      induced_rep_matrix, sample_gamma48, sample_point,
                      verify_scalar_law, verify_vector_law)
from .symplectic import (IntegerSymplectic, IwasawaPair, SiegelPoint,
                         is_symplectic, iwasawa_decompose, j_matrix,
                         make_generator, mobius_act, random_word_element,
                         sqrt_pd, subgroup_membership)
from .theta import (CapacityError, ThetaComponentValue, ThetaParams,
                    big_theta, det_invsqrt, epsilon_factor, gamma_pair,
                    j_half, j_half_bar, j_three_half, j_three_half_bar,
                    sqrt_det, theta_component, theta_series,
                    truncation_radius)

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "CosetRecord", "CoverElement", "IntegerSymplectic",
    "IwasawaPair", "Lagrangian", "MonomialMatrix", "Mu8",
    "PwsFactorization", "ResidueSystem", "SiegelPoint", "SnappedRoot",
    "ThetaComponentValue", "ThetaParams", "VerificationReport",
    "beta_tilde", "big_theta", "cbar_cocycle", "coset_index_of",
    "coset_profile", "coset_split", "coset_table", "cover_inv",
    "cover_mul", "det_invsqrt", "enumerate_isotropic", "epsilon_factor",
    "f_shift", "gamma_pair", "induced_rep_matrix", "is_symplectic",
    "iwasawa_decompose", "j_half", "j_half_bar", "j_matrix",
    "j_three_half", "j_three_half_bar", "lambda_bar",
    "lambda_multiplier", "m_xstar", "make_generator", "maslov_signature",
    "mobius_act", "modified_cocycle", "pws_decompose", "q0_eval",
    "random_word_element", "rao_cocycle", "reduce_mod2",
    "residues_mod_cT", "sample_gamma48", "sample_point", "snap_mu8",
    "sqrt_det", "sqrt_pd", "subgroup_membership", "symplectic_gauss_sum",
    "theta_component", "theta_series", "transvection_rep",
    "truncation_radius", "verify_scalar_law", "verify_vector_law",
    "x_star",
]
