"""Weight distributions of small Reed-Muller codes, three ways.

Run:  python demos/weight_distributions.py
"""

from math import comb

from rmenum import brute_force_distribution, polynomial_text, validate_reference
from rmenum.wenum import WeightEnumerator, distribution_text

print("R(1,3), the [8,4,4] extended Hamming code:")
dist = brute_force_distribution(1, 3)
print(" ", polynomial_text(dist))

print("\nR(1,4): all affine functions on 4 variables, so 30 flats of weight 8:")
print(" ", polynomial_text(brute_force_distribution(1, 4)))

print("\nR(3,4) is the even-weight code on 16 points; binomials on even weights:")
dist = brute_force_distribution(3, 4)
want = WeightEnumerator(16, [comb(16, w) if w % 2 == 0 else 0 for w in range(17)])
assert dist == want
print("  matches sum of C(16, 2i) z^(2i):", dist == want)

print("\nR(2,5) by full enumeration of 2^16 codewords:")
dist = brute_force_distribution(2, 5)
print(distribution_text(dist, comments=["R(2,5)"]))

print("every distribution is re-checked against a priori identities:")
for line in validate_reference(dist, 2, 5).lines():
    print(" ", line)
