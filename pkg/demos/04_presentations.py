"""Three presentations of the fundamental group, and how they compare."""
# %%
from smallcover.charmap import linear_model
from smallcover.cover import cw_presentation, simplify, wu_yu_presentation
from smallcover.morse import default_order
from smallcover.pi1 import abelianization, minimal_presentation
from smallcover.polytope import build

# %% [markdown]
# Over the simplex with colors e1, e2, e3, e1+e2+e3 the small cover is RP^3.

# %%
S = build("simplex")
colors = (1, 2, 4, 7)
order = default_order(S)
res = minimal_presentation(S, colors, order)
print(res.presentation)
print("H1 =", abelianization(res.presentation), " certificate:", res.certificate.level)

# %% [markdown]
# The cell-structure presentation is large but mechanical.  The Wu-Yu style
# presentation uses four symbols per facet.  Generic Tietze moves shrink
# either one.

# %%
cube = build("cube")
col = linear_model(cube)
cw = cw_presentation(cube, col)
wy = wu_yu_presentation(cube, col)
print("cw:", cw.ngens, "gens", cw.nrels, "rels;", "wu-yu:", wy.ngens, "gens", wy.nrels, "rels")
small = simplify(wy).presentation
print("simplified wu-yu:", small)
print("H1:", abelianization(cw), abelianization(wy), abelianization(small))

# %% [markdown]
# The minimal presentation is balanced with f2 - 3 generators.

# %%
m = minimal_presentation(cube, col, default_order(cube)).presentation
print(m.to_text())
