"""Exhaustive verification of the extremal constructions.

For every choice of part sizes, the maximum Wiener index over all
connected unicyclic bipartite graphs should be attained by exactly one
graph, the onion On((q-p)//2 rounded down, 2p-3, rounded up), whose
value the closed form predicts. The minimum is attained by a 4-cycle
with the two pendant clusters on adjacent vertices, with C_6 tying at
(3, 3). Both claims are checked below by brute force.

The published polynomial for the maximum value is also evaluated; it
never matches the verified optimum (63 vs 29 already at p = q = 3) and
is therefore reported as a warning, never asserted.
"""

from wiener_unicyclic import theorem_polynomial, verify_both
from wiener_unicyclic.verification import cycle_six_is_min_optimizer

print(" p  q | classes  max  closed-form  polynomial |  min  min-construction")
print("-" * 74)
for p in range(2, 5):
    for q in range(p, 9 - p):
        mx, mn = verify_both(p, q)
        assert mx.value_match and mx.graph_match and mx.uniqueness
        assert mn.graph_match
        poly = theorem_polynomial(p, q)
        tie = " (+ C_6)" if (p, q) == (3, 3) and cycle_six_is_min_optimizer(mn) else ""
        print(
            f" {p}  {q} | {mx.classes:7d} {mx.optimum:4d} {mx.predicted_value_closed_form:12d}"
            f" {poly:11d} | {mn.optimum:4d}  matches{tie}"
        )

print()
print("note the polynomial column: it disagrees with the verified maximum")
print("in every row, so the verifier treats it as a reported-only value.")
