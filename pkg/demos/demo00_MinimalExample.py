# %% Initialize and import polylaw
import sys
sys.path.append("..")
from polylaw.fincard import FinMap, Span, pushout, is_connected, is_acyclic, is_suitable_span
from polylaw.symcat import S2Obj, s2_hom
from polylaw.matchings import delta1_elements, delta1_project, transpose

# %% Spans of finite cardinals
# Two edges from one left vertex to two right vertices: a tree.
s = Span(FinMap((1, 1), 1), FinMap((1, 2), 2))
p = pushout(s)
print(s, "| components:", int(p.r), "| connected:", is_connected(s), "| acyclic:", is_acyclic(s))
print("suitable:", is_suitable_span(s))

# Two parallel edges form a cycle of length two.
t = Span(FinMap((1, 1), 1), FinMap((1, 1), 1))
print(t, "| suitable:", is_suitable_span(t))

# %% Monotone maps and their morphisms
phi = S2Obj((1, 1), 1)   # 2 -> 1
psi = S2Obj((1, 2), 2)   # 2 -> 2
print(phi, "has", len(s2_hom(phi, phi)), "automorphisms")

# %% Suitable matchings and their projections to bijections
for x in delta1_elements(phi, psi):
    print(x, "->", delta1_project(x).perm, "| transpose:", transpose(x))
