"""
Iterating to STS(505)
=====================

Sending the independent set onto the odd-difference factors keeps the even
residues independent, so the independent set grows to (v' - 1) / 2 at each
level, and the odd residues become one new color class.
"""

import time

import numpy as np

from steiner_doubling import build_chain, verify_bicoloring, verify_maximal_independent

start = time.perf_counter()
chain = build_chain(9)
print(f"built and verified 5 levels in {time.perf_counter() - start:.2f}s")

for t in chain:
    v = t.result.v
    sizes = np.bincount(t.carried_coloring.assignment)
    print(
        f"v={v:4d} blocks={len(t.result.blocks):6d} "
        f"|T|={len(t.carried_independent_set):4d} (v-1)/2={(v - 1) // 2:4d} "
        f"classes={t.carried_coloring.num_classes} sizes={sizes.tolist()}"
    )

last = chain[-1]
print(verify_maximal_independent(last.result, last.carried_independent_set).passed)
print(verify_bicoloring(last.result, last.carried_coloring).details)
