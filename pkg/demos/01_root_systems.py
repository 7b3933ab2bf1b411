"""Root systems, Weyl groups and straightening of Weyl characters."""
from weylpleth.rootsys import enumerate_weyl, root_system, straighten

for kind in "ABCD":
    rs = root_system(kind, 3)
    order = sum(1 for _ in enumerate_weyl(rs))
    rho = ", ".join(map(str, rs.rho))
    print(f"{kind}3: rho = ({rho}), {len(rs.positive_roots)} positive roots, |W| = {order}")

# s_beta for a non-dominant beta is 0 or +-s_lambda
c2 = root_system("C", 2)
for beta in [(0, -3), (0, -4), (2, 1), (3, 1)]:
    print(f"C2: s_{beta} ->", straighten(c2, beta))
