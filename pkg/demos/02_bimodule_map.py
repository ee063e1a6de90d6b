"""The bimodule map and its verification.

The two-block bimodule is presented as a quotient of a polynomial ring in
paired variable families; a map out of the base ring is determined by an
element f of the quotient satisfying l divisibility conditions, decided
here by Groebner normal forms.  The closed formula, its determinant form,
and the minor ideals all get exercised.

Run:  python demos/02_bimodule_map.py
"""

import json

from soergelcalc import normal_form, verify_bimodule
from soergelcalc.polycore import Polynomial, poly_to_text, ypvar, yvar
from soergelcalc.soergel import (
    SoergelContext,
    delta_determinant,
    delta_formula,
    ideal_I_generators,
    matrix_M,
    minor_ideal_Ij,
)

print("= The presentation ideal =")
for k, l in [(1, 1), (2, 1)]:
    print(f"(k,l) = ({k},{l}):")
    for i, g in enumerate(ideal_I_generators(k, l), start=1):
        print(f"  generator {i} (degree {2*i}): {g}")
print()

print("= The map on 1, as a signed sum of Schur tensor pairs =")
for k, l in [(1, 1), (2, 1), (2, 2)]:
    expr = delta_formula(k, l)
    print(f"({k},{l}): {expr}")
    print(f"        {len(expr)} terms, image degree {2*k*l}")
print()

print("= Membership verification =")
ctx = SoergelContext(1, 1)
f = delta_formula(1, 1).to_P()
y1, yp1 = Polynomial.variable(yvar(1)), Polynomial.variable(ypvar(1))
print(f"f = {poly_to_text(f)}")
print(f"normal form of (y1 - yp1) * f: {normal_form((y1 - yp1) * f, ctx.gb_I)}")
print(f"normal form of f itself:       {normal_form(f, ctx.gb_I)}  (nonzero: good)")
print()

print("= Full verification reports =")
for k, l in [(1, 1), (2, 1), (2, 2)]:
    report = verify_bimodule(k, l)
    print(json.dumps(report))
print()

print("= The determinant form =")
m = matrix_M(2, 1)
print("matrix for (2,1):")
for i in range(m.rows):
    print("  [" + ", ".join(poly_to_text(m[i, j]) for j in range(m.cols)) + "]")
print(f"its determinant: {poly_to_text(delta_determinant(2, 1))}")
print(f"the map's image: {poly_to_text(delta_formula(2, 1).to_P())}")
print()
print("The measured sign relating the two is recorded next to the printed")
print("closed-form sign; they do not coincide for every (k,l):")
from soergelcalc.soergel import delta_sign_report

for k, l in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)]:
    r = delta_sign_report(k, l)
    print(
        f"  ({k},{l}): measured {r['sign_epsilon']:+d},"
        f" printed (-1)^(k(k+1)/2) = {r['sign_paper']:+d}"
    )
print()

print("= Minor ideals =")
for k, l, j in [(1, 1, 1), (2, 2, 1), (2, 2, 2)]:
    gb = minor_ideal_Ij(k, l, j)
    print(f"I_{j} for ({k},{l}): {[poly_to_text(g) for g in gb]}")
