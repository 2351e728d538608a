"""Wedge, contracted wedge and the Graf product on a few blades.

Run: python3 demos/01_products.py
"""
from grafclifford import Form, Signature, contracted_graf, contracted_wedge, graf, triangle, wedge

sig = Signature(3, 0)
e = lambda *idx: Form.blade(sig, idx)  # noqa: E731

# the wedge only sees disjoint indices
print("e1 ^ e2      =", wedge(e(1), e(2)))
print("e2 ^ e1      =", wedge(e(2), e(1)))
print("e12 ^ e23    =", wedge(e(1, 2), e(2, 3)))

# each contraction order pairs one shared index through the metric
print("cw(1, e12, e23) =", contracted_wedge(1, e(1, 2), e(2, 3)))
print("cw(2, e12, e12) =", contracted_wedge(2, e(1, 2), e(1, 2)))

# the Graf product sums the orders with signed 1/l! weights
print("e12 <> e23   =", graf(e(1, 2), e(2, 3)))
print("e12 <> e12   =", graf(e(1, 2), e(1, 2)))
print("e1 <> e1     =", graf(e(1), e(1)))

# the same pair in Lorentzian signature picks up the metric sign
lor = Signature(1, 1)
e12 = Form.blade(lor, (1, 2))
print("(1,1): cw(2, e12, e12) =", contracted_wedge(2, e12, e12))
print("(1,1): e12 <> e12      =", graf(e12, e12))

# contracted Graf and the triangle product
print("cg(1, e12, e123) =", contracted_graf(1, e(1, 2), e(1, 2, 3)))
print("e1 /\\ e2        =", triangle(e(1), e(2)))
print("e1 /\\ e1        =", triangle(e(1), e(1)))

a = Form.one(sig) / 2 + 3 * e(3) - e(1, 2)
print("a            =", a)
print("a <> a       =", graf(a, a))
