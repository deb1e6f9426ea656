"""
From STS(9) to STS(25)
======================

Each of the 9 seed points is joined to the 8 pairs of its own factor
(72 blocks); the translates of {0, 1, 3} mod 16 cover differences 1, 2, 3
(16 blocks). With the 12 seed blocks that is 100 = 25 * 24 / 6.
"""

from steiner_doubling import appendix_phi, double_plus_seven, seed_sts9, verify_sts

seed = seed_sts9()
trace = double_plus_seven(seed.system, 4, phi=appendix_phi())

for x, tag in enumerate(trace.phi.tags()):
    print(f"{seed.system.label(x)} -> {tag}")

for kind in (1, 2, 3):
    print(f"type {kind}: {len(trace.blocks_of_type(kind))} blocks")

report = verify_sts(trace.result)
print("STS(25):", report.passed, report.details)

# a few blocks with their provenance names
for b in trace.result.blocks[:5]:
    print([trace.result.label(p) for p in b])
