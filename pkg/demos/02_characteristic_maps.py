"""Characteristic maps: colorings, orientability and the surfaces over facets."""
# %%
from smallcover.charmap import (
    face_surface_type, find_orientable_coloring, is_orientable, linear_model, validate_charmap,
)
from smallcover.polytope import build

# %% [markdown]
# Vectors of Z_2^3 are written as ints 1..7.  A map is valid when the three
# colors at each vertex are independent.  Colors drawn from {1, 2, 4, 7}
# (all of odd weight) always give an orientable manifold, so a proper
# 4-coloring of the facets is enough.

# %%
D = build("dodecahedron")
colors = find_orientable_coloring(D)
print("coloring:", colors)
print("problems:", validate_charmap(D, colors), "orientable:", is_orientable(D, colors))

# %% [markdown]
# A dependent triple is reported per vertex.

# %%
print(validate_charmap(build("simplex"), (1, 2, 3, 7)))

# %% [markdown]
# Even-sided polytopes are 3-colorable, which gives the linear model.  On the
# cube this is the 3-torus.  A map using 1 twice and an even-weight vector
# can still be valid but is nonorientable.

# %%
cube = build("cube")
print("linear model:", linear_model(cube))
print("orientable:", is_orientable(cube, (1, 2, 4, 1, 2, 6)))

# %% [markdown]
# Over each facet sits a closed surface made of four copies of the polygon.

# %%
print([str(face_surface_type(cube, linear_model(cube), f)) for f in range(6)])
print({str(face_surface_type(D, colors, f)) for f in range(12)})
