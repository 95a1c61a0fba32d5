# %% [markdown]
# # Smith normal forms
#
# Invariant factors come from integer row/column reduction. For small
# matrices they can also be read off the gcds of all k x k minors.

# %%
from walksnf import IntegerMatrix, determinant_divisor, invariant_factors, invariant_factors_by_minors, smith_normal_form

m = IntegerMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
print(invariant_factors(m))
print(invariant_factors_by_minors(m))
print([determinant_divisor(m, k) for k in range(4)])
print(smith_normal_form(m))

# %% [markdown]
# Walk matrices of A_n: the Smith form is ceil(n/2) ones followed by zeros,
# even though the entries grow quickly.

# %%
from walksnf.walk import path_walk_matrix

for n in (5, 10, 25, 60):
    w = path_walk_matrix(n)
    snf = invariant_factors(w)
    print(n, snf.rank, set(snf.invariant_factors), max(w.entries))
