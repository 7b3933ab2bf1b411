"""psi_ell raises every exponent to the ell-th multiple; phi_ell is its adjoint.

The Weyl denominator of SO4 shows why even ell is special in types C and D.
"""
from weylpleth.characters import phi_plethysm_truncated, psi_plethysm_schur
from weylpleth.laurent import delta, phi_l
from weylpleth.rootsys import root_system

c2 = root_system("C", 2)
print("psi_3 s_(0,1) for Sp4:", psi_plethysm_schur(c2, (0, 1), 3))
print("phi_3 s_(1,5) for Sp4:", phi_plethysm_truncated(c2, (1, 5), 3, 6).to_text())

so4 = root_system("D", 2)
print("Delta(SO4)        =", delta(so4).to_text())
print("phi_2 Delta(SO4)  =", phi_l(delta(so4), 2).to_text(), "(not a product of binomials)")
