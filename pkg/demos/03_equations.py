"""Terms, equations, and window checking.

The checker exhausts every assignment from a finite window W_R (all
valid elements with |r| <= R), so "holds" always means "holds on this
window"; a counterexample is definitive either way.
"""

from resilat import AlgebraParams
from resilat.terms import check_equation, parse_equation, preset, render_equation

P = AlgebraParams(2, 3)

# excluded middle fails immediately: these algebras are not boolean
em = preset("EM", 2)
print(f"checking {render_equation(em)}")
verdict = check_equation(em, P, radius=2)
print(f"  holds={verdict.holds} after {verdict.checked} assignment(s); "
      f"counterexample {verdict.counterexample}")

# but the bounded weak law at k = max(n+1,p) = 3 does hold window-wide
wl3 = preset("WL", 3)
print(f"\nchecking {render_equation(wl3)}")
verdict = check_equation(wl3, P, radius=2)
print(f"  holds={verdict.holds} after {verdict.checked} assignments")

# ... and the same law at k = n fails, which brackets the algebra
# strictly between the two weak-law classes
wl2 = preset("WLwitness", params=P)
print(f"\nchecking {render_equation(wl2)}")
verdict = check_equation(wl2, P, radius=2)
print(f"  holds={verdict.holds}; counterexample {verdict.counterexample}")

# arbitrary equations parse from text; variables are universally
# quantified over the window
eq = parse_equation("x * (y \\/ z) = (x * y) \\/ (x * z)")
print(f"\nchecking {render_equation(eq)} over W_1")
verdict = check_equation(eq, P, radius=1)
print(f"  holds={verdict.holds} after {verdict.checked} assignments")
