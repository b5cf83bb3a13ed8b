"""Connected sums: Δ and the determinant are multiplicative.

Every choice of cut arcs and both relative orientations give the same
polynomial, which is the product of the factors' polynomials.
"""

from knotforge import knot_table
from knotforge.alexander import alexander_polynomial, knot_determinant
from knotforge.compose import SpliceSpec, connected_sum, splice_sites
from knotforge.conway import conway_polynomial
from knotforge.laurent import normalize_units

a, b = knot_table.get("3_1"), knot_table.get("4_1")
da, db = alexander_polynomial(a), alexander_polynomial(b)
print(f"Δ(3_1) = {da}    Δ(4_1) = {db}")
print(f"product = {normalize_units(da * db)}\n")

seen = set()
for i in splice_sites(a):
    for j in splice_sites(b):
        for match in (True, False):
            s = connected_sum(a, b, SpliceSpec(i, j, match))
            seen.add((normalize_units(alexander_polynomial(s)).render(), knot_determinant(s)))
print(f"{len(splice_sites(a)) * len(splice_sites(b)) * 2} splices, distinct (Δ, det) results: {sorted(seen)}")

s = connected_sum(a, b)
print(f"∇(3_1 # 4_1) = {conway_polynomial(s)}")
