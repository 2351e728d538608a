"""The elements p+ and p- and the projectors P+ and P-.

Whether P+ and P- are idempotent depends on (p - q) mod 8: in the classes
0, 1, 4, 5 they are complementary idempotents, elsewhere P+ composed with
itself is half the Hodge operator.

Run: python3 demos/04_projectors.py
"""
from grafclifford import Form, Signature, graf, p_element, project_pm, split_reconstruct, volume

for sig in (Signature(5, 0), Signature(2, 0)):
    pp, pm = p_element(1, sig), p_element(-1, sig)
    print(f"{sig}:")
    print("  p+ <> p+ =", graf(pp, pp))
    print("  p+ <> p- =", graf(pp, pm))
    f = Form.blade(sig, (1,))
    print("  P+(P+(e1)) =", project_pm(1, project_pm(1, f)), "  P+(e1) =", project_pm(1, f))

# splitting a form into its self-dual and anti-self-dual parts
sig = Signature(5, 0)
f = Form.one(sig) + 2 * Form.blade(sig, (1, 2)) + volume(sig)
plus, minus = split_reconstruct(f)
print()
print("f      =", f)
print("f+     =", plus)
print("f-     =", minus)
print("f+ + f- == f:", plus + minus == f)
