"""Exchange matrix, symmetrizer and one seed mutation.

The initial cluster is the family of group-cell minors indexed by
[-1, -r] and the word positions; mutating an exchangeable position
divides a two-term binomial by the old value, and the division being
exact is the Laurent property in action.
"""

from bminors.cluster import (
    build_bmatrix,
    exchange_step,
    find_symmetrizer,
    initial_seed,
    mutate_matrix,
)
from bminors.rootdata import make_minor_spec

spec = make_minor_spec(r=2, n=4, k=1)
b = build_bmatrix(spec)
print("exchange matrix (rows: frozen then word positions; cols: exchangeable):")
print(b.text())
print("principal part:", b.principal())
print("symmetrizer:", find_symmetrizer(b.principal()))
print()

mutated = mutate_matrix(b, 1)
print("after mutation at 1:")
print(mutated.text())
assert mutate_matrix(mutated, 1) == b  # involution

seed = initial_seed(make_minor_spec(2, 3, 1))
print("initial cluster values:")
for label in seed.matrix.rows:
    print(f"  x[{label}] = {seed.cluster[label]}")
stepped = exchange_step(seed, 1)
print(f"exchange at 1:  x'[1] = {stepped.cluster[1]}")
back = exchange_step(stepped, 1)
assert back.cluster == seed.cluster
print("mutating twice restores the seed.")
