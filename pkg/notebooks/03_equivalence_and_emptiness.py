"""
Equivalence classes and empty tetrahedra
========================================

Rescaling ``(a, b, c)`` by the inverse of any of its entries mod ``n`` gives
the full list of standard forms equivalent to ``T_{a,b,n}``.  Empty members of
a class are the ones with a standard form ``T_{1,d,n}``.
"""

from collections import Counter

from tetlab import StandardTet, are_equivalent, canonical_pair
from tetlab.classification import is_empty
from tetlab.equivalence import candidate_pairs, is_clean_params, triple_families

T = StandardTet(3, 7, 20)
print("triples:", triple_families(T))
print("candidate pairs:", sorted(candidate_pairs(T)))
print("canonical:", canonical_pair(T).as_tuple())
print("T_{3,7,20} ~ T_{7,11,20}:", are_equivalent(T, StandardTet(7, 11, 20)))

# how the clean tetrahedra with n = 13 split into classes
n = 13
classes = Counter(
    canonical_pair(StandardTet(a, b, n)).as_tuple()
    for a in range(n)
    for b in range(n)
    if is_clean_params(a, b, n)
)
for canon, size in sorted(classes.items()):
    print(canon, "members:", size, "empty:", is_empty(StandardTet(*canon)))
