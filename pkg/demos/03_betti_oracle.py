"""Graded Betti numbers by simplicial homology, and componentwise linearity of powers."""

from cwlpowers import catalog as cat
from cwlpowers.betti import betti_numbers, is_componentwise_linear
from cwlpowers.graphs import cover_ideal
from cwlpowers.monomial import MonomialIdeal
from cwlpowers.polycore import RingCtx

# %% Two generators: the Taylor complex is already minimal
ctx = RingCtx(("x1", "x2", "x3"))
M = MonomialIdeal.parse(ctx, ["x1*x2", "x2*x3"])
print(betti_numbers(M), "\n")

# %% A non-example: (x1^2, x2^3) is not componentwise linear
M = MonomialIdeal.parse(RingCtx(("x1", "x2")), ["x1^2", "x2^3"])
r = is_componentwise_linear(M)
print("(x1^2, x2^3):", r.cwl, r.components, "\n")

# %% Powers of a mixed cover ideal stay componentwise linear
I = cover_ideal(cat.path_of_length(4))
for k in (1, 2, 3):
    T = betti_numbers(I ** k)
    r = is_componentwise_linear(I ** k)
    print(f"I^{k}: reg {T.reg}, componentwise linear {r.cwl}")
print(betti_numbers(I ** 2))
