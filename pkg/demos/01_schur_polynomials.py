"""Schur polynomials in elementary symmetric variables.

A walkthrough of the symmetric-function layer: the convention that Schur
polynomials are written as polynomials in the elementary symmetric
variables of a block, the two determinantal constructions, and the honest
z-variable bialternant they are checked against.

Run:  python demos/01_schur_polynomials.py
"""

from soergelcalc import schur_giambelli, schur_dual_giambelli
from soergelcalc.partitions import Partition
from soergelcalc.schur import (
    complete_h,
    elementary_in_z,
    h_recursion_check,
    laplace_identity_check,
    schur_bialternant_oracle,
    schur_in_z,
)
from soergelcalc.polycore import zvar

print("= Partitions and their operations =")
lam = Partition((3, 3, 1))
print(f"lambda = {lam}, weight {lam.weight()}")
print(f"conjugate: {lam.conjugate()}")
print(f"complement of (3,1) in the 2x3 box: {Partition((3, 1)).complement(2, 3)}")
print()

print("= Schur polynomials via the Giambelli determinant =")
print("A column shape gives back a single elementary variable:")
for j in (1, 2, 3):
    p = schur_giambelli((1,) * j, 3)
    print(f"  pi_(1^{j}) in 3 variables = {p}")
print("A row shape gives the complete symmetric polynomial:")
for m in (1, 2, 3):
    print(f"  h_{m} in 2 variables = {complete_h(m, 2)}")
print("Multiindices that are not partitions, or are too long, vanish:")
print(f"  pi_(1,2) -> {schur_giambelli((1, 2), 3)}")
print(f"  pi_(1,1,1) in 2 variables -> {schur_giambelli((1, 1, 1), 2)}")
print()

print("= The dual (complete-symmetric) determinant agrees =")
for parts in [(2, 1), (3, 3, 1), (4, 2)]:
    a = schur_giambelli(parts, 3)
    b = schur_dual_giambelli(parts, 3)
    print(f"  {Partition(parts)}: Giambelli == dual Giambelli: {a == b}")
print()

print("= The bialternant oracle in honest z variables =")
print("pi_(2) for two variables, straight from the alternant quotient:")
print(f"  {schur_bialternant_oracle((2,), 2)}")
print("Expanding the Giambelli polynomial into z's must reproduce it:")
for parts in [(1,), (2,), (2, 1), (3, 2)]:
    same = schur_in_z(parts, 3) == schur_bialternant_oracle(parts, 3)
    print(f"  {Partition(parts)} in 3 variables: {same}")
print()

print("= Classical identities, exactly =")
print("first-row expansion of the h determinant (recursion), m <= 8:")
print("  ", all(h_recursion_check(m, n) for m in range(1, 9) for n in range(1, 5)))
print("alternating hook convolution (Laplace expansion), p, q <= 5:")
print(
    "  ",
    all(
        laplace_identity_check(p, q, n)
        for p in range(6)
        for q in range(6)
        for n in range(1, 5)
    ),
)
print()

print("= Elementary symmetric polynomials have the expected generating function =")
zs = [zvar(1), zvar(2), zvar(3)]
print(f"e_2(z1,z2,z3) = {elementary_in_z(2, zs)}")
