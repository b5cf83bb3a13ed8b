"""A seeded random Reidemeister walk on the figure-eight knot.

The diagram grows and shrinks while Δ stays put; the writhe moves only
under type I moves.
"""

from knotforge import knot_table
from knotforge.alexander import alexander_polynomial
from knotforge.diagram import writhe
from knotforge.laurent import normalize_units
from knotforge.reidemeister import walk

d = knot_table.get("4_1")
print(f"start: {len(d.pd)} crossings, writhe {writhe(d)}, Δ = {alexander_polynomial(d)}")
for step, (site, d) in enumerate(walk(d, 15, seed=2024), 1):
    delta = normalize_units(alexander_polynomial(d))
    print(f"{step:2d} {site.kind:<10} crossings={len(d.pd):2d} writhe={writhe(d):+d}  Δ = {delta}")
