"""
The eight 1-point tetrahedra
============================

Ripe quadruples are the only possible barycentric numerators of the single
interior point.  Each one is realized by a tetrahedron, and sweeping all
clean ``T_{a,b,n}`` confirms there are exactly eight classes.
"""

from tetlab import StandardTet, classify
from tetlab.classification import (
    ONE_POINT_REPRESENTATIVES,
    enumerate_ripe,
    interior_point_info,
)
from tetlab.pointcount import construct_from_bc

for q in enumerate_ripe(50):
    T, w = construct_from_bc(q.d, q.N)
    print(q.d, "N =", q.N, "->", T, "point", tuple(w))

for t in ONE_POINT_REPRESENTATIVES:
    T = StandardTet(*t)
    (info,) = interior_point_info(T)
    print(T, classify(T), "bc", [str(x) for x in info.bc], "g =", info.g)
