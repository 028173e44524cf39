"""
Lattice width and plane occupancy
=================================

Width is found by an exact search over a finite candidate set of directions.
For each minimal direction we list how many lattice points of ``T`` sit on
each plane, starting from the plane through the origin when it is outer.
"""

from tetlab import StandardTet, lattice_width
from tetlab.width import width_bound

for t in [(3, 3, 4), (2, 2, 5), (3, 7, 20), (3, 5, 23)]:
    rep = lattice_width(StandardTet(*t))
    print(StandardTet(*t), "width", rep.width)
    for d, occ in rep.occupancy.items():
        print("   u =", d.as_tuple(), "occupancy", occ)

# T_{m,m^2,m^3+1} grows like the cube root of n
for m in range(2, 6):
    T = StandardTet(m, m * m, m**3 + 1)
    print(T, "width", lattice_width(T, with_occupancy=False).width, "bound", width_bound(T.n))
