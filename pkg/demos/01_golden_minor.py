"""Compute one generalized minor three independent ways.

The rank-3 word (1,2,3,1,2,3,1,2) with position k = 5 is the standard
worked example: fourteen Laurent monomials, four of them carrying
coefficient 2.
"""

from bminors import (
    closed_minor_vector,
    make_minor_spec,
    minor_L_vector,
    vector_path_sum,
)

spec = make_minor_spec(r=3, n=8, k=5)
print(f"word = {spec.word}, k = {spec.k}")
print(f"cycles m = {spec.m}, position cycle m' = {spec.m_prime}, degree d = {spec.d}")
print()

via_rep = minor_L_vector(spec)      # coefficient extraction in the wedge module
via_paths = vector_path_sum(spec)   # sum of labelled lattice paths
via_closed = closed_minor_vector(spec)  # closed-form monomial enumeration

print("representation route:")
print(" ", via_rep)
print()
assert via_rep == via_paths == via_closed
print("path-sum and closed-form routes agree exactly.")
print(f"monomials: {len(via_rep.terms)}")
print(f"coefficient-2 monomials: {sum(1 for c in via_rep.terms.values() if c == 2)}")

# the minor specializes to a positive integer on the all-ones grid
point = {v: 1 for v in via_rep.variables()}
print(f"value at Y = 1 everywhere: {via_rep.eval_at(point)}")
