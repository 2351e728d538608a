"""The truncated Graf product on the lower half of the grades.

For n odd and (p - q) mod 8 in {0, 1, 4, 5}, P+ maps the lower half
isomorphically onto the self-dual forms, turning the truncated product into
an honest copy of the Graf product.

Run: python3 demos/05_truncated_algebra.py
"""
import random

from grafclifford import Form, Signature, graf, iso_to_gamma_L, iso_to_gamma_pm, project_pm, truncated_graf
from grafclifford.sampling import random_lower_form
from grafclifford.structure import find_endomorphism_counterexample, subalgebra_conditions

sig = Signature(5, 0)
print(sig, "satisfies the conditions:", subalgebra_conditions(sig))
rng = random.Random(1)
a, b = random_lower_form(sig, rng, 3), random_lower_form(sig, rng, 3)
print("a        =", a)
print("b        =", b)
t = truncated_graf(1, a, b)
print("a tgp b  =", t)
print("grades   =", t.grades())
print("P+ is a homomorphism:", iso_to_gamma_pm(1, t) == graf(iso_to_gamma_pm(1, a), iso_to_gamma_pm(1, b)))
print("round trip:", iso_to_gamma_L(1, iso_to_gamma_pm(1, a)) == a)
print("unit:", truncated_graf(1, a, Form.one(sig)) == a)

# without the conditions P+ is not multiplicative
sig = Signature(2, 2)
print()
print(sig, "satisfies the conditions:", subalgebra_conditions(sig))
x, y = find_endomorphism_counterexample(sig, 1)
print(f"P+({x} <> {y}) =", project_pm(1, graf(x, y)))
print(f"P+({x}) <> P+({y}) =", graf(project_pm(1, x), project_pm(1, y)))
