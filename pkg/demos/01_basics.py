"""First contact: elements, the product, and the residual at (n,p) = (2,3).

Elements are written ((m,r),a): a lexicographic integer pair (m,r) and a
level a from the finite chain {0,...,p}.  Levels 0 and p carry pairs up
to (n,0); the middle levels stop at (n-1,0).
"""

from resilat import (
    AlgebraParams,
    ap_bot,
    ap_div,
    ap_inv,
    ap_mul,
    ap_pow,
    ap_top,
    parse_element,
    render_element,
)

P = AlgebraParams(2, 3)
bot, top = ap_bot(P), ap_top(P)
print(f"bounds: bot = {render_element(bot)}, top = {render_element(top)}")

# the maximal element outside the radical
c = parse_element("((1,0),2)", P)
print(f"\npowers of {c}:")
for k in range(1, 4):
    print(f"  {c}^{k} = {render_element(ap_pow(c, k))}")
# it dies exactly at k = max(n+1, p) = 3, and its square is its involution
assert ap_pow(c, 3) == bot
assert ap_pow(c, 2) == ap_inv(c)

# the involution flips the level and reflects middle pairs
for text in ["((0,1),1)", "((1,0),2)", "((0,4),0)"]:
    a = parse_element(text, P)
    print(f"~{a} = {render_element(ap_inv(a))}")

# residuation: a * b <= c iff b <= a -> c
a = parse_element("((0,0),1)", P)
b = parse_element("((1,-1),3)", P)
print(f"\n{a} * {b} = {render_element(ap_mul(a, b))}")
print(f"{a} -> {b} = {render_element(ap_div(a, b))}")
print(f"{a} -> bot = {render_element(ap_div(a, bot))}  (the negation)")
