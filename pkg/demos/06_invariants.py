"""Invariants beyond H1: homomorphism counts, connected sums and genus."""
# %%
from smallcover.charmap import find_orientable_coloring, linear_model, truncation_colors
from smallcover.cover import cw_presentation, heegaard_report, wu_yu_presentation
from smallcover.morse import default_order
from smallcover.pi1 import abelianization, count_homs, minimal_presentation, symmetric_group
from smallcover.polytope import build, truncate_vertex

# %% [markdown]
# Counting homomorphisms into S3 sees non-abelian structure.  All three
# presentations of the permutohedral space agree.

# %%
P = build("permutohedron")
col = linear_model(P)
order = default_order(P)
S3 = symmetric_group(3)
for name, pres in [("cw", cw_presentation(P, col, order=order)),
                   ("wu-yu", wu_yu_presentation(P, col, order.by_rank[0])),
                   ("minimal", minimal_presentation(P, col, order).presentation)]:
    print("%-8s |Hom(pi1, S3)| = %d" % (name, count_homs(pres, S3)))

# %% [markdown]
# Truncating a vertex takes a connected sum with RP^3, which adds a Z/2 to H1.

# %%
Q = build("prism:5")
qc = find_orientable_coloring(Q)
before = abelianization(minimal_presentation(Q, qc, default_order(Q)).presentation)
T = truncate_vertex(Q, 0)
tc = truncation_colors(Q, qc, 0)
after = abelianization(minimal_presentation(T, tc, default_order(T)).presentation)
print(before, "->", after)

# %% [markdown]
# Genus numbers depend only on the number of facets.

# %%
for shape in ["simplex", "dodecahedron", "permutohedron"]:
    g = heegaard_report(build(shape))
    print("%-14s reduced canonical %d, minimal %d" % (shape, g.reduced_genus, g.minimal_genus))
