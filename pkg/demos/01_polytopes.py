"""Simple 3-polytopes: building them, counting faces, finding belts."""
# %%
from smallcover.polytope import (
    build, f_vector, h_vector, find_belts, is_flag, is_pogorelov, truncate_vertex,
)

# %% [markdown]
# Every polytope here is stored as its facets, each an oriented cycle of
# vertex ids.  The builders cover the usual suspects.

# %%
for shape in ["simplex", "cube", "prism:5", "dodecahedron", "permutohedron"]:
    P = build(shape)
    print("%-14s f = %-14s h = %s" % (shape, f_vector(P), h_vector(P)))

# %% [markdown]
# Belts are cyclic chains of facets with empty total intersection.  No 3- or
# 4-belts at all is the Pogorelov condition; the dodecahedron is the smallest
# example.

# %%
for shape in ["prism:3", "cube", "dodecahedron"]:
    P = build(shape)
    print(shape, "3-belts:", find_belts(P, 3), "4-belts:", len(find_belts(P, 4)),
          "flag:", is_flag(P), "Pogorelov:", is_pogorelov(P))

# %% [markdown]
# Cutting off a vertex adds a triangle.  On the simplex that gives the
# triangular prism, whose three side squares form a 3-belt.

# %%
T = truncate_vertex(build("simplex"), 0)
print(f_vector(T), find_belts(T, 3))
