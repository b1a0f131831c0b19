"""The order, its one surprise, and a Hasse diagram you can render.

Level 0 is order-reversed: among the non-units, bigger pairs sit lower.
That single reversal is what makes the involution order-reversing while
each level keeps its own chain flavor.
"""

from resilat import AlgebraParams, Window, ap_leq, parse_element, render_element
from resilat.structure import cover_edges

P = AlgebraParams(2, 3)

pairs = [
    ("((1,0),0)", "((0,0),0)"),   # level 0: (1,0) below (0,0), reversed
    ("((0,0),0)", "((1,0),0)"),
    ("((0,0),1)", "((1,0),1)"),   # middle levels: the usual direction
    ("((1,0),0)", "((0,0),1)"),   # climbing out of level 0
    ("((0,0),0)", "((0,0),1)"),   # blocked: the pair sum falls short
]
for left, right in pairs:
    a, b = parse_element(left, P), parse_element(right, P)
    print(f"{a} <= {b} : {ap_leq(a, b)}")

# the r=0 slice of the universe is a finite lattice; print its covers
w = Window(P, 0)
elems = w.elements()
print(f"\nthe r=0 slice has {len(elems)} elements; cover relation:")
for i, j in cover_edges(elems):
    print(f"  {render_element(elems[i])} < {render_element(elems[j])}")

print("\nsame picture as DOT:  python3 -m resilat export hasse --n 2 --p 3 --sub hatLnp")
