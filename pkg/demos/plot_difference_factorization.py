"""
Difference factorization of Z_16
================================

Every edge {x, y} of K_16 has a circular difference in 1..8. Grouping edges
by difference and splitting each difference cycle into alternate edges gives
15 perfect matchings.
"""

from steiner_doubling import DifferenceTriple, difference_factorization, reduced_family, verify_factorization
from steiner_doubling.formats import factors_to_txt

fact = difference_factorization(4)
print(factors_to_txt(fact))

# the verifier checks count, perfect matchings, disjointness and coverage
print("1-factorization:", verify_factorization(fact).passed)

# dropping differences 1, 2, 3 leaves 9 factors, one per point of an STS(9)
fstar = reduced_family(fact, DifferenceTriple(1, 2, 3))
print([str(f.tag) for f in fstar])
