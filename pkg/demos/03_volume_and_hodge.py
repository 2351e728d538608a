"""The volume element, its square, and the Hodge operator as right multiplication.

Run: python3 demos/03_volume_and_hodge.py
"""
from grafclifford import Form, Mod8Class, Signature, graf, hodge, volume
from grafclifford.structure import find_non_central_witness

print("  p  q   s  v<>v  v central")
for p in range(6):
    for q in range(6 - p):
        if p + q == 0:
            continue
        sig = Signature(p, q)
        cls = Mod8Class.of(sig)
        vv = graf(volume(sig), volume(sig))
        print(f"{p:>3}{q:>3}{cls.s:>4}{str(vv):>6}  {cls.v_central}")

sig = Signature(3, 0)
e1 = Form.blade(sig, (1,))
print()
print("(3,0): hodge(one) =", hodge(Form.one(sig)))
print("(3,0): hodge(e1)  =", hodge(e1))
print("(3,0): hodge(hodge(e1)) =", hodge(hodge(e1)))

# in even dimension the volume element anticommutes with 1-forms
sig = Signature(2, 0)
w = find_non_central_witness(sig)
v = volume(sig)
print()
print("(2,0): witness", w, ":", graf(w, v), "vs", graf(v, w))
