"""Lusztig's q-analogue of weight multiplicity and Hall-Littlewood functions."""
from weylpleth.branching import lusztig_q
from weylpleth.characters import hall_littlewood_truncated, weight_multiplicity
from weylpleth.rootsys import dominant_weights, root_system

rs = root_system("C", 2)
for lam in dominant_weights(rs, 4):
    k = lusztig_q(rs, lam, (0, 0))
    if k:
        print(f"K_{lam},0(q) = {k}   (q=1: {k(1)} = {weight_multiplicity(rs, lam, (0, 0))})")

print("Q'_(1,1) truncated at 4:", hall_littlewood_truncated(rs, (1, 1), 4).to_text())
