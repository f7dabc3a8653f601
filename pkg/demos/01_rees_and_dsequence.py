"""Rees algebra of the 2x2 minors of a 2x3 matrix, and the d-sequence test.

Run with ``python3 demos/01_rees_and_dsequence.py``.
"""

from cwlpowers import catalog as cat
from cwlpowers.dseq import is_d_sequence_on_rees, prop_conclusion_check
from cwlpowers.polycore import MonomialOrder, parse_poly
from cwlpowers.rees import rees_ideal, x_condition

# %% The ideal: 2-minors of [[x1, a, b], [x2, b, c]]
I = cat.minors_2x3()
print("I =", I)

# %% Its Rees algebra is T/J with T = S[y1, y2, y3]; J is the kernel of y_j -> f_j
P = rees_ideal(I)
print("J =", ", ".join(map(str, P.minimal_kernel_gens())))
print("bigraded:", P.is_bigraded(), " substitution defect:", P.substitution_defect())

# %% The x-condition fails here, so the stronger linear-powers shortcut is not available
print("x-condition:", x_condition(P).passed)

# %% Exact test of the sequence x1, x2, a, c, b
z = [parse_poly(s, I.ctx) for s in cat.MINORS_2X3_SEQUENCE]
rep = is_d_sequence_on_rees(I, z)
for s in rep.steps:
    print(f"  step {s.i}: {s.status}  ({s.seconds:.3f}s)")
print("d-sequence:", rep.verdict)

# %% The monomial criterion gives the same answer and shows the initial ideals
order = MonomialOrder.degrevlex(P.ext, cat.MINORS_2X3_CHAIN)
prop = prop_conclusion_check(P, cat.MINORS_2X3_SEQUENCE, order)
for s in prop.steps:
    print(f"  in(J_{s.i - 1}) = ({', '.join(s.initial_ideal)})")
