"""Exact plethysm, ell-quotients, Levi branching and affine Kazhdan-Lusztig
polynomials for the classical root systems A, B, C and D."""

from .rootsys import (KINDS, RootSystem, SignedPermutation, dominant_weights, dominates,
                      dot_action, enumerate_weyl, longest_element, root_system, straighten)
from .laurent import LaurentPoly, QPoly, delta, delta_alternating, phi_l, psi_l
from .characters import (CharExpansion, NotWeylInvariant, decompose_schur,
                         hall_littlewood_truncated, phi_plethysm_truncated, psi_plethysm_schur,
                         weight_multiplicity, weyl_character, weyl_dimension)
from .quotient import (EvenEllUnsupported, LeviDatum, QuotientResult, compute_quotient,
                       phi_delta_monomial, verify_quotient_factorization)
from .branching import (branching_coeff, kostant_partition, kostant_partition_q, lusztig_q,
                        restrict_character_oracle, s_mu_I_truncated)
from .hecke import (AffineElement, KLBoundExceeded, OrbitMismatch, alcove_normalize,
                    check_regularity, g_function, h_function, kl_table, n_lambda, parabolic_kl)

__version__ = "0.1.0"
