"""Parabolic Kazhdan-Lusztig polynomials of the affine Weyl group.

For ell large they recover K_{lambda,mu}(q); at q=1 they count branching
multiplicities.  H^ell_mu interpolates between s_mu and Q'_mu.
"""
from weylpleth.branching import lusztig_q
from weylpleth.hecke import alcove_normalize, h_function, n_lambda, parabolic_kl
from weylpleth.rootsys import root_system

rs = root_system("C", 2)
ell = 5
for lam in [(0, 1), (0, 2), (1, 1)]:
    upper = [ell * a + r for a, r in zip(lam, rs.rho)]
    nf = alcove_normalize(rs, upper, ell)
    print(f"lambda={lam}: minimal representative matches w0 t_lambda:",
          nf.min_rep == n_lambda(rs, lam))
    p = parabolic_kl(rs, rs.rho, upper, ell, 20)
    print(f"   P^- = {p},  K_lambda,0 = {lusztig_q(rs, lam, (0, 0))}")

for e in (1, 3, 5):
    print(f"H^{e}_(0,1) =", h_function(rs, (0, 1), e, 3, 24).to_text())
