"""Recompute the printed 3_1 # 1_1 matrix and see where it diverges.

The 4x4 matrix below is taken literally; its (4,4) minor is evaluated
with fraction-free elimination and compared with the Alexander
polynomial of an honest connected sum of the same two knots.
"""

from knotforge import knot_table
from knotforge.alexander import alexander_polynomial
from knotforge.compose import connected_sum
from knotforge.laurent import determinant, exact_quotient, normalize_units

m = knot_table.printed_fixture_matrix()
print("matrix:")
print(m.render())

det = determinant(m.minor(3, 3))
print("\ndet of the minor:", det)
print("normalized:       ", normalize_units(det))

trefoil, kink = knot_table.get("3_1"), knot_table.get("1_1")
delta = alexander_polynomial(connected_sum(trefoil, kink))
print("\nΔ(3_1 # 1_1):     ", normalize_units(delta))
print("extra factor:     ", exact_quotient(normalize_units(det), normalize_units(delta)))
