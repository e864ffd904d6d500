"""Coset weight enumerators and their substitution invariance.

A coset f + R(r,m) has one enumerator no matter which representative is
picked, and applying any invertible affine substitution to f leaves it
unchanged. That invariance is what lets the full-code recursion work from
one representative per class.

Run:  python demos/coset_enumerators.py
"""

import random

from rmenum import coset_enumerator, parse_anf, polynomial_text
from rmenum.boolfn import truth_table_from_anf
from rmenum.gf2 import AffineMap, apply, random_invertible

print("the zero coset is the code itself:")
print("  0 + R(1,3):", polynomial_text(coset_enumerator(parse_anf("0", 3), 1, 3)))

print("\nbent functions sit as far from R(1,m) as possible; x1x2+x3x4 on 4 vars:")
bent = parse_anf("12+34", 4)
print("  (12+34) + R(1,4):", polynomial_text(coset_enumerator(bent, 1, 4)))

print("\nthe same function one degree up is absorbed: (12+34) + R(2,4):")
print(" ", polynomial_text(coset_enumerator(bent, 2, 4)))

print("\nsubstitution invariance, ten random affine maps of x1x2x3 + R(2,5):")
rng = random.Random(1)
f = truth_table_from_anf(parse_anf("123", 5))
base = coset_enumerator(f, 2, 5)
same = all(
    coset_enumerator(apply(f, AffineMap(random_invertible(5, rng), rng.getrandbits(5))), 2, 5)
    == base
    for _ in range(10)
)
print("  all ten enumerators equal:", same)
print("  value:", polynomial_text(base))
