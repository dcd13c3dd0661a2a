"""Admissible vertex orders and the Morse data read off them."""
# %%
import collections
import random

from smallcover.morse import default_order, morse_data, random_order
from smallcover.polytope import build, h_vector

# %% [markdown]
# An order is admissible when the induced edge orientation has one source
# and one sink, both globally and on each facet.  The index of a vertex is
# its number of lower neighbours.

# %%
P = build("dodecahedron")
order = default_order(P)
md = morse_data(P, order)
print("source", md.source, "sink", md.sink)
print("index counts", collections.Counter(md.index), "h-vector", h_vector(P))

# %% [markdown]
# The index counts never depend on the order; they always equal the h-vector.

# %%
rng = random.Random(0)
seen = set()
for _ in range(200):
    md = morse_data(P, random_order(P, rng))
    seen.add(tuple(len(md.vertices_of_index(i)) for i in range(4)))
print(seen)

# %% [markdown]
# Each facet not touching the sink has its top at an index-2 vertex; sorting
# facets by that top gives the shelling used for relator names.

# %%
print("shelling", md.shelling)
