"""
Independent oracles
===================

The rewriting engine is checked against models that never use its rules:
the smash product K(B) x| W, the q -> 1 group algebra, and the character
sums behind the block projections. This script shows each one agreeing with
the engine and one of them catching a deliberately broken parameter.
"""

# %%
import random

from hecke_params.hecke import AlgebraCtx, b_mono, block_projection
from hecke_params.hecke.degenerate import specialize_q1
from hecke_params.hecke.smash import embed
from hecke_params.hecke.verify import RandomElements, verify_relations
from hecke_params.langlands import descriptor_from_dict

MIXTURE = {
    "group": "Sp",
    "blocks": [
        {"label": "rho1", "k": 2, "d": 2, "t": 2, "self_dual": "none"},
        {"label": "rho2", "k": 1, "d": 1, "t": 1, "self_dual": "orthogonal"},
    ],
    "h": {"trivial": False, "jord": [["rho2", 1], ["rho2", 3], ["rho2-", 1]], "tau_outer_invariant": True},
}
ctx = AlgebraCtx.from_descriptor(descriptor_from_dict(MIXTURE))
rand = RandomElements(ctx, random.Random(0))

# %% Smash-product model: the embedding is multiplicative.
agree = 0
for _ in range(20):
    x, y = rand.element(), rand.element()
    agree += embed(ctx, x * y) == embed(ctx, x) * embed(ctx, y)
print("smash model agrees on", agree, "of 20 products")

# %% Degeneration: at q = 1 the algebra becomes a twisted group algebra.
agree = 0
for _ in range(20):
    x, y = rand.element(), rand.element()
    agree += specialize_q1(ctx, x * y) == specialize_q1(ctx, x) * specialize_q1(ctx, y)
print("q = 1 specialization agrees on", agree, "of 20 products")

# %% Block projections from character sums: idempotent, complete, shift-covariant.
indices = ctx.block_indices()
projections = [block_projection(ctx, j) for j in indices]
print(len(indices), "blocks; sum of projections is 1:", sum(projections[1:], projections[0]) == 1)
j, m = indices[0], (1, 0, 0)
print("p^j b_m == b_m p^(j-m):", projections[0] * b_mono(ctx, m) == b_mono(ctx, m) * block_projection(ctx, ctx.shift_index(j, m)))

# %% A planted bug: double the Bernstein numerator of one generator.
broken = AlgebraCtx.from_descriptor(descriptor_from_dict(MIXTURE))
g = broken.gen_data(broken.simple_gens[0])
g.fnum = g.fnum * 2
report = verify_relations(broken, sample_count=10)
# the engine stays self-consistent, so only the comparisons with the model fail
print("failing checks:", [c.name for c in report.checks if not c.passed])

# %% The healthy context passes everything.
print(verify_relations(ctx, sample_count=10).render())
