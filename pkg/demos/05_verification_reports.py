# %% [markdown]
# # Verification reports
#
# The same reports the `walksnf verify` and `walksnf spectral` commands emit,
# produced from Python.

# %%
import json

from walksnf.verify import spectral_sweep, verify_path, walk_oracle

for n in (1, 2, 10, 11):
    print(json.dumps(verify_path(n).to_dict()))

# %%
checked, mismatches = walk_oracle(8, 9)
print(checked, "triples checked,", len(mismatches), "mismatches")

# %%
records = spectral_sweep(5)
print(all(rec["passed"] for rec in records))
