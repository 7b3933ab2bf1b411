"""ell-quotients: phi_ell(Delta x^mu) = sign * Delta_I x^gamma for a Levi-type subgroup I."""
from weylpleth.quotient import compute_quotient, verify_quotient_factorization

mu = (1, 2, 3, 4, 4, 4, 6, 6)
for kind in "ACD":
    q = compute_quotient(kind, 8, mu, 3)
    print(f"{kind}8, ell=3:", q.to_text())
    print("   factorization holds:", verify_quotient_factorization(kind, 8, mu, 3).holds)

print("B6, ell=2:", compute_quotient("B", 6, (2, 5, 5, 6, 7, 9), 2).to_text())
print("B6, ell=3:", compute_quotient("B", 6, (1, 5, 5, 6, 7, 9), 3).to_text())
