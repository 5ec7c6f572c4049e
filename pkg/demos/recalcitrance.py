"""How many M-moves turn a normally generating pair into a generating one."""

from aclab import builtin_group, rank, weight
from aclab.graphs import recalcitrance, recalcitrance_group

S3 = builtin_group("symmetric", 3)
t = (1, 1)  # a transposition twice: normally generates S3 but generates only C2
print("S3 tuple", [S3.element_name(x) for x in t], "needs", recalcitrance(S3, t), "move")

print(f"\n{'group':14s} rank weight  rec  2n-1")
for spec in [("symmetric", 3), ("symmetric", 4), ("dihedral", 6), ("affine", 5), ("affine", 4),
             ("quaternion8",), ("heisenberg", 3)]:
    G = builtin_group(*spec)
    n = rank(G)
    r = recalcitrance_group(G, n)
    print(f"{G.name:14s} {n:4d} {weight(G):6d} {r.value:4} {2 * n - 1:5d}")
