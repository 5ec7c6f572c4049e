"""A weight element of an iterated wreath product whose lifts are all conjugate."""

from aclab.wreath import wreath_weight_one_verify

for orders in ([2, 3], [3, 2], [2, 5], [3, 4], [5, 2]):
    r = wreath_weight_one_verify(orders)
    print(f"C{orders[0]} wr C{orders[1]}: |G|={r.group_order:5d} |G_ab|={r.abelianization_order:2d} "
          f"class of x={r.class_size:4d} self-centralizing={r.self_centralizing} "
          f"lifts conjugate={r.lifts_conjugate} pass={r.passed}")
