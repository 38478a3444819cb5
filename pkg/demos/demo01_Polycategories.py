# %% Initialize and import polylaw
import sys
sys.path.append("..")
from polylaw.polycat import (FreePolycategory, FamilyMatching, polycompose, peel_orders, is_suitable_matching,
                             check_polycategory_axioms, roundtrip_check)
from polylaw.testtable import free_two_generators, mutate_composition

# %% Binary composition in a free polycategory
F = FreePolycategory("abxyc", {"f": ("a", "xy"), "g": ("x", "b"), "h": ("y", "c")})
f, g, h = F.generator("f"), F.generator("g"), F.generator("h")
gf = F.compose(g, f, 1, 1)
print(gf)                          # (a) -> (b, y)
print(F.compose(h, gf, 2, 1))      # (a) -> (b, c)

# %% Polycomposition along a suitable matching
fm = FamilyMatching((f,), (g, h), [((1, 1), (1, 1)), ((1, 2), (2, 1))])
print("suitable:", is_suitable_matching(fm))
print("peel orders:", peel_orders(fm))
print(polycompose(F, fm))

# %% Tables: truncate a free polycategory and check the axioms
P = free_two_generators(3)
print(P)
print(check_polycategory_axioms(P).to_text())
print(roundtrip_check(P).to_text())

# %% A mutated table breaks a law
broken, key = mutate_composition(P)
print("mutated entry", key)
print(check_polycategory_axioms(broken).to_text())
