"""Andrews-Curtis components above Nielsen classes.

For a soluble group the AC components of normally generating pairs should
match the Nielsen classes of the abelianization one for one.  S5 is shown
for contrast; the check does not apply there.
"""

from aclab import builtin_group, is_soluble
from aclab.graphs import MoveSet, components, gacc1_check, move_equivalence_check

for name, params in [("dihedral", (4,)), ("heisenberg", (3,)), ("affine", (5,)), ("symmetric", (5,))]:
    G = builtin_group(name, *params)
    rep = components(G, 2, MoveSet.AC, diameters=False)
    line = f"{G.name:14s} |G|={G.order:4d}  pairs={rep.vertex_count:6d}  AC components={rep.component_count}"
    if is_soluble(G):
        r = gacc1_check(G, 2)
        line += f"  Nielsen classes of G_ab={r.nielsen_class_count}  bijection={r.passed}"
    else:
        line += "  (not soluble)"
    print(line)

print("\nAC moves and M-moves with inversions give the same partition:")
for name in ("quaternion8", "symmetric"):
    G = builtin_group(name, 4) if name == "symmetric" else builtin_group(name)
    print(f"  {G.name}: {move_equivalence_check(G, 2)}")
