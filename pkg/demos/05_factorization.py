"""The change of variables linking the two cell parametrizations.

phi rewrites (torus point, grid) so that the torus-times-lowering
product equals the negative-elements product; psi undoes it exactly.
Both are certified here on the 7-dimensional vector representation of
rank 3 at random rational points.
"""

import random

from bminors.factorize import (
    check_inverse,
    check_operator_identity,
    phi,
    psi,
    random_point,
)
from bminors.rootdata import make_minor_spec

spec = make_minor_spec(r=3, n=8, k=1)
rng = random.Random(2024)

point = random_point(spec, rng)
print("random torus point:")
print(" ", point.json_dict())
image = phi(point, spec)
print("phi image:")
print(" ", image.json_dict())
assert psi(image, spec) == point
print("psi(phi(point)) == point exactly.")
print()

trials = 25
assert all(check_inverse(spec, random_point(spec, rng)) for _ in range(trials))
assert all(check_operator_identity(spec, random_point(spec, rng)) for _ in range(5))
print(f"inverse relation held on {trials} random points;")
print("operator products agreed entrywise on the vector representation.")
