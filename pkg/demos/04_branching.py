"""Branching to Levi-type subgroups, and the plethysm theorem that motivates it."""
from weylpleth.branching import branching_coeff, s_mu_I_truncated
from weylpleth.characters import phi_plethysm_truncated
from weylpleth.quotient import compute_quotient
from weylpleth.rootsys import dominant_weights, root_system

rs = root_system("C", 3)
mu = (1, 2, 3)
q = compute_quotient("C", 3, mu, 3)
print("quotient:", q.to_text())
for lam in dominant_weights(rs, 3):
    c = branching_coeff(rs, lam, q.datum, q.weight)
    if c:
        print(f"  [V{lam} : V_I{q.weight}] = {c}")

bound = 5
lhs = s_mu_I_truncated(rs, q.datum, q.weight, bound).scaled(q.sign)
rhs = phi_plethysm_truncated(rs, mu, 3, bound)
print("phi_3 s_mu       =", rhs.to_text())
print("matches branching:", lhs == rhs)
