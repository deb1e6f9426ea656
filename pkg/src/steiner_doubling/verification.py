"""Exact checkers and small-order exhaustive oracles.

Checkers never raise on a bad subject; they return a
:class:`VerificationReport` listing witnesses. The brute-force searches
raise :class:`TooLarge` past a configurable order limit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable

import numpy as np

from .design import Coloring, Factorization, TripleSystem
from .errors import InvalidInput, NotIndependent, TooLarge

DENSE_PAIR_LIMIT = 1017
MAX_WITNESSES = 100
DEFAULT_INDEPENDENT_LIMIT = 15
DEFAULT_CHROMATIC_LIMIT = 9


@dataclass
class VerificationReport:
    subject: str
    violations: list[tuple[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def add(self, rule: str, witness: Any) -> None:
        self.details[f"{rule}_count"] = self.details.get(f"{rule}_count", 0) + 1
        if len(self.violations) < MAX_WITNESSES:
            self.violations.append((rule, witness))

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "violations": [{"rule": r, "witness": _plain(w)} for r, w in self.violations],
            "details": {k: _plain(v) for k, v in self.details.items()},
        }


def _plain(x: Any) -> Any:
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_plain(i) for i in x]
        return sorted(items) if isinstance(x, (set, frozenset)) else items
    if isinstance(x, np.integer):
        return int(x)
    return x


def _block_array(ts: TripleSystem) -> np.ndarray:
    if not ts.blocks:
        return np.zeros((0, 3), dtype=np.int64)
    return np.sort(np.asarray(ts.blocks, dtype=np.int64), axis=1)


class PairTable:
    """Number of blocks through each unordered pair ``x < y``.

    Dense ``v x v`` storage up to ``DENSE_PAIR_LIMIT`` points, a hashed map
    of non-zero entries above it.
    """

    def __init__(self, ts: TripleSystem, dense_limit: int = DENSE_PAIR_LIMIT):
        self.v = ts.v
        arr = _block_array(ts)
        xs = np.concatenate([arr[:, 0], arr[:, 0], arr[:, 1]])
        ys = np.concatenate([arr[:, 1], arr[:, 2], arr[:, 2]])
        self.dense = self.v <= dense_limit
        if self.dense:
            flat = np.bincount(xs * self.v + ys, minlength=self.v * self.v)
            self._counts = np.minimum(flat, np.iinfo(np.uint16).max).astype(np.uint16)
            self._counts = self._counts.reshape(self.v, self.v)
            self._sparse: dict[tuple[int, int], int] = {}
        else:
            keys, counts = np.unique(xs * self.v + ys, return_counts=True)
            self._sparse = {(int(k) // self.v, int(k) % self.v): int(c) for k, c in zip(keys, counts)}

    def degree(self, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        if self.dense:
            return int(self._counts[x, y])
        return self._sparse.get((x, y), 0)

    def total(self) -> int:
        if self.dense:
            return int(np.triu(self._counts.astype(np.int64), 1).sum())
        return sum(self._sparse.values())

    def irregular_pairs(self) -> Iterable[tuple[int, int, int]]:
        """Yield ``(x, y, degree)`` for every pair whose degree is not 1."""
        if self.dense:
            upper = np.triu(np.ones((self.v, self.v), dtype=bool), 1)
            bad = np.argwhere(upper & (self._counts != 1))
            for x, y in bad:
                yield int(x), int(y), int(self._counts[x, y])
            return
        for (x, y), c in sorted(self._sparse.items()):
            if c != 1:
                yield x, y, c
        if len(self._sparse) < self.v * (self.v - 1) // 2:
            for x, y in combinations(range(self.v), 2):
                if (x, y) not in self._sparse:
                    yield x, y, 0


def pair_table(ts: TripleSystem) -> PairTable:
    return PairTable(ts)


def verify_sts(ts: TripleSystem) -> VerificationReport:
    rep = VerificationReport("sts", details={"v": ts.v, "blocks": len(ts.blocks)})
    if ts.v % 6 not in (1, 3):
        rep.add("order", ts.v)
    for b in ts.blocks:
        if len(set(b)) != 3 or min(b) < 0 or max(b) >= ts.v:
            rep.add("bad_block", b)
    if not rep.passed:
        return rep
    if len(ts.blocks) != ts.expected_block_count:
        rep.add("block_count", (len(ts.blocks), ts.expected_block_count))
    for x, y, d in PairTable(ts).irregular_pairs():
        rep.add("pair_degree", ((x, y), d))
    return rep


def verify_sts_merge(ts: TripleSystem) -> VerificationReport:
    """Second STS check: sort every block pair and merge against all pairs.

    Shares no code with :func:`verify_sts`; used to cross-check it.
    """
    rep = VerificationReport("sts-merge", details={"v": ts.v, "blocks": len(ts.blocks)})
    covered = []
    for b in ts.blocks:
        p, q, r = sorted(b)
        covered.extend([(p, q), (p, r), (q, r)])
    covered.sort()
    i = 0
    for x in range(ts.v):
        for y in range(x + 1, ts.v):
            n = 0
            while i < len(covered) and covered[i] < (x, y):
                rep.add("stray_pair", covered[i])
                i += 1
            while i < len(covered) and covered[i] == (x, y):
                n += 1
                i += 1
            if n != 1:
                rep.add("pair_degree", ((x, y), n))
    for rest in covered[i:]:
        rep.add("stray_pair", rest)
    return rep


def verify_factorization(f: Factorization) -> VerificationReport:
    m = f.m
    rep = VerificationReport("factorization", details={"m": m, "factors": len(f.factors)})
    if m % 2 or m < 2:
        rep.add("odd_order", m)
        return rep
    if len(f.factors) != m - 1:
        rep.add("factor_count", (len(f.factors), m - 1))
    owner: dict[tuple[int, int], int] = {}
    for idx, fac in enumerate(f.factors):
        if fac.m != m or not fac.is_perfect_matching():
            rep.add("not_perfect_matching", str(fac.tag) if fac.tag else idx)
        for pair in fac.pairs:
            if pair in owner:
                rep.add("repeated_edge", pair)
            else:
                owner[pair] = idx
    if len(owner) != m * (m - 1) // 2:
        for x, y in combinations(range(m), 2):
            if (x, y) not in owner:
                rep.add("uncovered_edge", (x, y))
    return rep


def _as_set(ts: TripleSystem, s: Iterable[int]) -> np.ndarray:
    mask = np.zeros(ts.v, dtype=bool)
    for p in s:
        if not 0 <= p < ts.v:
            raise InvalidInput(f"point {p} outside 0..{ts.v - 1}")
        mask[p] = True
    return mask


def verify_independent(ts: TripleSystem, s: Iterable[int]) -> VerificationReport:
    s = set(s)
    mask = _as_set(ts, s)
    rep = VerificationReport("independent", details={"size": len(s)})
    arr = _block_array(ts)
    if len(arr):
        inside = mask[arr].sum(axis=1)
        for row in np.flatnonzero(inside == 3):
            rep.add("contains_block", tuple(int(p) for p in arr[row]))
    return rep


def verify_maximal_independent(ts: TripleSystem, s: Iterable[int]) -> VerificationReport:
    s = set(s)
    indep = verify_independent(ts, s)
    if not indep.passed:
        raise NotIndependent(f"set contains block {indep.violations[0][1]}")
    mask = _as_set(ts, s)
    rep = VerificationReport("maximal_independent", details={"size": len(s)})
    arr = _block_array(ts)
    blocked = np.zeros(ts.v, dtype=bool)
    if len(arr):
        inside = mask[arr]
        two = inside.sum(axis=1) == 2
        outside_pts = arr[two][~inside[two]]
        blocked[outside_pts] = True
    for p in np.flatnonzero(~mask & ~blocked):
        rep.add("extendable_point", int(p))
    return rep


def verify_bicoloring(ts: TripleSystem, c: Coloring) -> VerificationReport:
    rep = VerificationReport("bicoloring", details={"classes": c.num_classes})
    if c.v != ts.v:
        rep.add("coloring_size", (c.v, ts.v))
        return rep
    arr = _block_array(ts)
    if len(arr):
        cols = np.asarray(c.assignment, dtype=np.int64)[arr]
        distinct = 1 + (cols[:, 0] != cols[:, 1]) + (cols[:, 0] != cols[:, 2]) * (cols[:, 1] != cols[:, 2])
        for row in np.flatnonzero(distinct != 2):
            rep.add("block_colors", (tuple(int(p) for p in arr[row]), int(distinct[row])))
    return rep


def brute_limit(default: int) -> int:
    env = os.environ.get("STEINER_BRUTE_LIMIT")
    return int(env) if env else default


def max_independent_brute(ts: TripleSystem, limit: int | None = None) -> tuple[int, frozenset[int]]:
    """Exact maximum independent set by include-first backtracking.

    Returns the size and the lexicographically smallest maximum set.
    """
    limit = brute_limit(DEFAULT_INDEPENDENT_LIMIT) if limit is None else limit
    v = ts.v
    if v > limit:
        raise TooLarge(f"v={v} exceeds the independent-set search limit {limit}")
    # for each point, bitmasks of the two smaller points completing a block
    closers: list[list[int]] = [[] for _ in range(v)]
    for p, q, r in (sorted(b) for b in ts.blocks):
        closers[r].append((1 << p) | (1 << q))

    best_size = -1
    best_mask = 0

    def search(p: int, mask: int, size: int) -> None:
        nonlocal best_size, best_mask
        if size + (v - p) <= best_size:
            return
        if p == v:
            best_size, best_mask = size, mask
            return
        if all(c & mask != c for c in closers[p]):
            search(p + 1, mask | (1 << p), size + 1)
        search(p + 1, mask, size)

    search(0, 0, 0)
    return best_size, frozenset(i for i in range(v) if best_mask >> i & 1)


def bicoloring_spectrum_brute(ts: TripleSystem, limit: int | None = None) -> dict[int, Coloring]:
    """Every class count admitting a bicoloring, with its first witness.

    Enumerates set partitions as restricted growth strings, smallest point
    first, cutting a branch as soon as a completed block does not see
    exactly two colors.
    """
    limit = brute_limit(DEFAULT_CHROMATIC_LIMIT) if limit is None else limit
    v = ts.v
    if v > limit:
        raise TooLarge(f"v={v} exceeds the partition search limit {limit}")
    completing: list[list[tuple[int, int]]] = [[] for _ in range(v)]
    for p, q, r in (sorted(b) for b in ts.blocks):
        completing[r].append((p, q))

    found: dict[int, Coloring] = {}
    colors = [0] * v

    def search(p: int, used: int) -> None:
        if p == v:
            if used not in found:
                found[used] = Coloring(tuple(colors))
            return
        for c in range(used + 1):
            colors[p] = c
            if all(len({colors[a], colors[b], c}) == 2 for a, b in completing[p]):
                search(p + 1, used + 1 if c == used else used)

    if v:
        search(0, 0)
    return dict(sorted(found.items()))


def upper_chromatic_brute(ts: TripleSystem, limit: int | None = None) -> tuple[int, Coloring | None]:
    spectrum = bicoloring_spectrum_brute(ts, limit)
    if not spectrum:
        return 0, None
    k = max(spectrum)
    return k, spectrum[k]


def handshake_holds(ts: TripleSystem) -> bool:
    """Sum of pair degrees equals three times the number of blocks."""
    return PairTable(ts).total() == 3 * len(ts.blocks)
