"""
polylaw Basics
==============

In this tutorial, we will learn about the basic objects of polylaw and how to
verify laws with them.

    * Step 1: Spans of finite cardinals and suitability
    * Step 2: Suitable matchings between monotone maps
    * Step 3: Polycategories and polycomposition
    * Step 4: Running a verification suite

"""

# %% First we import the modules needed.
from polylaw.fincard import FinMap, Span, pushout, is_suitable_span
from polylaw.symcat import S2Obj, enumerate_s2
from polylaw.matchings import delta1_elements
from polylaw.polycat import FreePolycategory, FamilyMatching, polycompose
from polylaw.cli import SuiteConfig, run_suite, render

# %%
# Step 1: Spans
# -------------
#
# A span ``n <- k -> m`` of finite cardinals is a bipartite multigraph with
# ``n`` left vertices, ``m`` right vertices and ``k`` edges. It is *suitable*
# when this graph is a tree: connected and without cycles, where two parallel
# edges count as a cycle.

s = Span(FinMap((1, 1, 2), 2), FinMap((1, 2, 2), 2))
print(s, "components:", int(pushout(s).r), "suitable:", is_suitable_span(s))

# %%
# Step 2: Suitable matchings
# --------------------------
#
# A monotone map ``n -> m`` is given by its values. Two monotone maps with the
# same domain can be matched by a bijection of their domains; the matching is
# suitable when the resulting span is a tree. This requires
# ``m_phi + m_psi == n + 1``.

for phi in enumerate_s2(3, 2):
    for psi in enumerate_s2(3, 2):
        count = len(delta1_elements(phi, psi))
        if count:
            print(phi, psi, count)

# %%
# Step 3: Polycomposition
# -----------------------
#
# In a free polycategory, maps are trees of generators. A family of maps is
# composed with another family along a suitable matching of outputs with
# inputs.

F = FreePolycategory("abxyc", {"f": ("a", "xy"), "g": ("x", "b"), "h": ("y", "c")})
fm = FamilyMatching((F.generator("f"),), (F.generator("g"), F.generator("h")),
                    [((1, 1), (1, 1)), ((1, 2), (2, 1))])
print(polycompose(F, fm))

# %%
# Step 4: Verification
# --------------------
#
# Every law is checked exhaustively up to a size bound and collected in a
# report. The same suites are available from the ``polylaw verify`` command.

code, report = run_suite(SuiteConfig("pdd2", bound=2))
print(render(report, "text"))
