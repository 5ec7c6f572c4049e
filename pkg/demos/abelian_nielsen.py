"""Nielsen classes of generating vectors in finite abelian groups.

For Z5 x Z5 there are two classes of generating pairs, told apart by the
determinant of the coordinate matrix up to sign mod 5.  Adding a third entry
merges them.
"""

from aclab import builtin_group, class_count, invariant_factors, nielsen_class
from aclab.graphs import MoveSet, transformation_graph

A = builtin_group("abelian", 5, 5)
inv, basis = invariant_factors(A)
print(f"invariant factors {inv.factors}, basis ids {basis}")

for n in (2, 3):
    g = transformation_graph(A, n, MoveSet.NIELSEN)
    print(f"\nn = {n}: {len(g)} generating vectors, {g.component_count} BFS components, "
          f"formula says {class_count(inv, n)}")
    for c in range(g.component_count):
        rep = g.tuple_at(int(g.members(c)[0]))
        label = nielsen_class(A, rep).as_dict()["delta"]
        print(f"  component {c}: size {g.members(c).size:6d}  rep {rep}  delta {label}")

# a pair whose determinant is 2: not Nielsen equivalent to the basis
two_e1 = A.power(basis[0], 2)
print("\n(2 e1, e2) has delta", nielsen_class(A, (two_e1, basis[1])).delta)
