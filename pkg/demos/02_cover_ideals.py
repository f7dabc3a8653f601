"""Vertex cover ideals of small graphs and their d-sequences."""

from cwlpowers import catalog as cat
from cwlpowers.dseq import generic_d_sequence, is_d_sequence_on_rees
from cwlpowers.graphs import (cover_ideal, is_chordal, is_unmixed, minimal_vertex_covers,
                              star_cover_generators)
from cwlpowers.polycore import parse_poly
from cwlpowers.rees import star_rees_check


def run(I, seq):
    return is_d_sequence_on_rees(I, [parse_poly(s, I.ctx) for s in seq]).verdict


# %% Paths of length 3 and 4: one unmixed, one mixed
for k, seq in [(3, cat.PATH3_SEQUENCE), (4, cat.PATH4_SEQUENCE)]:
    G = cat.path_of_length(k)
    I = cover_ideal(G)
    print(f"path of length {k}: I_G = {I}, unmixed = {is_unmixed(G)}, "
          f"{'; '.join(seq)} -> {run(I.to_ideal(), seq)}")

# %% A star graph on a triangle: closed-form generators and binomial Rees relations
S = cat.triangle_star(star_names=True)
print("star graph edges:", S.sorted_edges())
print("minimal covers:", [sorted(C) for C in minimal_vertex_covers(S)])
print("closed form:", star_cover_generators(S), "== cover ideal:",
      star_cover_generators(S) == cover_ideal(S))
print("Rees kernel generated by the binomials:", star_rees_check(S))
I = cover_ideal(cat.triangle_star()).to_ideal()
print("basis x4, x5, x6, ... ->", run(I, cat.TRIANGLE_STAR_SEQUENCE))

# %% A chordal, mixed graph that is not a star graph: use random bases
G = cat.seven_vertex_graph()
print("seven-vertex graph chordal:", bool(is_chordal(G)), " mixed:", not is_unmixed(G))
rep = generic_d_sequence(cover_ideal(G).to_ideal(), trials=3, seed=0)
print("generic trials:", [(t["seed"], t["verdict"]) for t in rep.trials])
print("first basis:", "; ".join(rep.sequence))
