"""
Reducing a tetrahedron to standard form
=======================================

Any lattice tetrahedron with a clean face can be moved by a unimodular map
onto ``T_{a,b,n}``, with vertices (0,0,0), (1,0,0), (0,1,0), (a,b,n).
"""

from tetlab import StandardTet, UnimodularMap, to_standard
from tetlab.lattice import apply_map

# scramble T_{3,7,20} with a shear, a coordinate swap and a translation
scramble = UnimodularMap(((0, 1, 2), (1, 0, 0), (0, 0, -1)), (4, -2, 7))
T = apply_map(scramble, StandardTet(3, 7, 20).to_lattice())
print("input vertices:", [tuple(v) for v in T.vertices])
res = to_standard(T)
print("standard form:", res.standard)
print("normalized volume n =", res.standard.n)

# the witness map really does the job, up to the reported vertex order
image = apply_map(res.witness, T)
print("image vertices:", [tuple(v) for v in res.permuted(image).vertices])
print("expected:      ", [tuple(v) for v in res.standard.vertices()])

# the Euclidean shear on its own pulls (a, b) into the window
from tetlab.normalization import euclidean_shear

a, b, shear = euclidean_shear(23, -13, 20)
print("(23,-13,20) ->", (a, b, 20), "via", shear.matrix)
