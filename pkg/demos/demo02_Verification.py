# %% Initialize and import polylaw
import sys
sys.path.append("..")
from polylaw.fincard import check_spans
from polylaw.matchings import check_delta1
from polylaw.coherence import check_pdd2, check_pdd3, check_pdd3_dual, check_pda_local_monos
from polylaw.kleisli import check_monad, multiplication_from_polytable
from polylaw.testtable import terminal_polytable

# %% Laws of spans and of suitable matchings
print(check_spans(3).to_text())
print(check_delta1(3).to_text())

# %% Unit, counit and comultiplication cells of the distributive law at 1
print(check_pdd2(2).to_text())
print(check_pdd3(2, progress=True).to_text())
print(check_pdd3_dual(2).to_text())

# %% Local monomorphisms behind the ten axioms
print(check_pda_local_monos(2).to_text())

# %% Polycategories are monads in the Kleisli bicategory
P = terminal_polytable(2)
print(check_monad(P, P.identities, multiplication_from_polytable(P)).to_text())
