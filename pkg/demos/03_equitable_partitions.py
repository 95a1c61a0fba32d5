# %% [markdown]
# # Equitable partitions and quotient matrices
#
# Pairing vertex k with n+1-k gives an equitable partition of A_n. Its
# quotient matrix B satisfies A C = C B, which compresses the walk matrix.

# %%
from walksnf import (
    adjacency_matrix,
    characteristic_matrix,
    is_equitable,
    path_graph,
    quotient_matrix,
    symmetric_partition,
    truncated_walk_matrix,
    walk_matrix,
)

for n in (9, 10):
    g = path_graph(n)
    p = symmetric_partition(n)
    b = quotient_matrix(g, p)
    c = characteristic_matrix(p)
    print(n, p.as_lists(), is_equitable(g, p))
    print(b)
    print("A C == C B:", adjacency_matrix(g) @ c == c @ b)
    print("truncated W(A_n) == W(B):", truncated_walk_matrix(n) == walk_matrix(b))

# %% [markdown]
# Not every partition is equitable.

# %%
from walksnf import Partition

print(is_equitable(path_graph(4), Partition([[1, 2], [3, 4]])))
