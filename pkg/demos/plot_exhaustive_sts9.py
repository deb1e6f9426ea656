"""
Exhaustive checks on STS(9)
===========================

At 9 points everything can be enumerated: 2^9 subsets for independence,
Bell(9) = 21147 set partitions for bicolorings.
"""

from steiner_doubling import bicoloring_spectrum_brute, max_independent_brute, seed_sts9

ts = seed_sts9().system

size, witness = max_independent_brute(ts)
print("largest independent set:", size, sorted(witness))

spectrum = bicoloring_spectrum_brute(ts)
for k, coloring in spectrum.items():
    print(f"{k}-bicoloring:", [sorted(c) for c in coloring.classes])

# only 3 appears: no 2-bicoloring, and the upper chromatic number is 3
print("class counts realised:", sorted(spectrum))
