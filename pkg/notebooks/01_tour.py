"""
A tour of the package
=====================

From a Langlands-parameter descriptor to the Hecke algebra with parameters:
classification, the based root datum, and normal forms of products.
Run with `python notebooks/01_tour.py`; each `# %%` cell also works in an
editor that understands the percent format.
"""

# %%
from hecke_params.hecke import AlgebraCtx, b_mono, j_gen, t_gen
from hecke_params.hecke.expr import evaluate
from hecke_params.hecke.render import render_lines
from hecke_params.langlands import classify, descriptor_from_dict, reducibility_point

# A symplectic group with one self-dual orthogonal block rho of multiplicity 2;
# rho occurs in Jord with a = 1, 3, and rho_- with a = 1.
desc = descriptor_from_dict({
    "group": "Sp",
    "blocks": [{"label": "rho", "k": 1, "d": 2, "t": 1, "self_dual": "orthogonal"}],
    "h": {"trivial": False, "jord": [["rho", 1], ["rho", 3], ["rho-", 1]], "tau_outer_invariant": True},
})
for b in classify(desc):
    print(b.label, b.case.value, "a =", b.a, "a_minus =", b.a_minus, "point", reducibility_point(b, desc.group, desc.h))

# %% The based root datum: type B2 with the unequal parameters q and q^3.
ctx = AlgebraCtx.from_descriptor(desc)
for line in ctx.datum.cartan_summary():
    print(line)
for s in ctx.simple_gens:
    print(s, ctx.datum.root(s), ctx.datum.params[s].to_dict())

# %% Quadratic relations and the order-4 braid relation hold in normal form.
T1, T2 = t_gen(ctx, (1, 1)), t_gen(ctx, (1, 2))
print("T2^2 =")
print("\n".join(render_lines(T2 * T2)))
print("braid:", (T1 * T2 * T1 * T2 - T2 * T1 * T2 * T1).is_zero())

# %% Moving a lattice monomial across T_s produces the Bernstein correction.
x = b_mono(ctx, (0, 1)) * T2 - T2 * b_mono(ctx, (0, -1))
print("\n".join(render_lines(x)))

# %% A case II block has a nontrivial R-group: J_r swaps the last two T's.
desc2 = descriptor_from_dict({
    "group": "Sp",
    "blocks": [{"label": "rho", "k": 1, "d": 2, "t": 1, "self_dual": "orthogonal"}],
    "h": {"trivial": False, "jord": [["sigma", 1]], "tau_outer_invariant": True},
})
ctx2 = AlgebraCtx.from_descriptor(desc2)
J = j_gen(ctx2, [1])
print("T[1,2] J == J T[1,1]:", t_gen(ctx2, (1, 2)) * J == J * t_gen(ctx2, (1, 1)))
print("J^2 =", evaluate(ctx2, "J[1]*J[1]"))

# %% With t = 2 the stabilizer characters phi act on monomials by roots of unity.
desc3 = descriptor_from_dict({
    "group": "Sp",
    "blocks": [{"label": "rho", "k": 2, "d": 1, "t": 2, "self_dual": "none"}],
    "h": {"trivial": False, "jord": [["sigma", 1]], "tau_outer_invariant": True},
})
ctx3 = AlgebraCtx.from_descriptor(desc3)
print(evaluate(ctx3, "phi[1]*b[1]"))
