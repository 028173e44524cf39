"""
Counting interior points two ways
=================================

The fractional-part sum ``A_t`` singles out the interior points of a clean
``T_{a,b,n}``.  A bounding-box census gives the same answer by brute force.
"""

from tetlab import StandardTet, census
from tetlab.pointcount import a_t, bc_table, interior_points_formula

T = StandardTet(5, 5, 7)
for t in range(1, T.n):
    print(f"t={t}  A_t={a_t(T, t)}")

print("formula:", interior_points_formula(T))
print("census: ", census(T.to_lattice()).interior)

# rows of the barycentric table; a row summing to 1 is an interior point
for t, row in enumerate(bc_table(T).rows, start=1):
    print(t, [str(q) for q in row], "sum", sum(row))

# a non-clean tetrahedron carries boundary points that the census reports
print("T_{2,4,6} boundary:", census(StandardTet(2, 4, 6).to_lattice()).boundary_nonvertex)
