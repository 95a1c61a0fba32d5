# %% [markdown]
# # Walk matrices of the path graph
#
# Column j of the walk matrix W(G) counts walks of length j-1 starting at
# each vertex. For the path A_n these counts can be built three ways.

# %%
from walksnf import adjacency_matrix, path_graph, walk_count_dp, walk_count_enumerate, walk_matrix

w = walk_matrix(adjacency_matrix(path_graph(10)))
for row in w:
    print(" ".join(f"{x:4d}" for x in row))

# %% [markdown]
# Entry (3, 4) by brute force over +/-1 step sequences, and by propagating
# a count vector along the path:

# %%
print(w[2, 3], walk_count_enumerate(10, 3, 4), walk_count_dp(10, 3, 4))

# %% [markdown]
# The DP counter has no column limit, so it keeps going past n.

# %%
print([walk_count_dp(10, 5, j) for j in range(1, 25)])

# %% [markdown]
# Row i equals row n+1-i, so only the top ceil(n/2) rows carry information.

# %%
print(all(w.row(i) == w.row(9 - i) for i in range(10)))
