"""1-factorizations of complete graphs.

The difference factorization of ``Z_{2^n}`` groups the edges of ``K_{2^n}``
by circular difference. Every difference ``a < 2^{n-1}`` generates
``gcd(a, 2^n)`` disjoint cycles of even length; splitting each cycle into
alternate edges gives two factors. Difference ``2^{n-1}`` is already a
perfect matching.
"""

from __future__ import annotations

from math import gcd

from .design import DifferenceTriple, Factor, Factorization, FactorTag
from .errors import BadDifference, InvalidInput, OddOrder


def _check_n(n: int, lowest: int) -> None:
    if n < lowest:
        raise InvalidInput(f"n must be >= {lowest}, got {n}")


def _alternate_split(n: int, a: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    m = 1 << n
    k = gcd(a, m)
    half_cycle = m // (2 * k)
    first, second = [], []
    for i in range(k):
        for j in range(half_cycle):
            p0 = (2 * j * a + i) % m
            p1 = ((2 * j + 1) * a + i) % m
            p2 = ((2 * j + 2) * a + i) % m
            first.append((p0, p1))
            second.append((p1, p2))
    return first, second


def odd_difference_factors(n: int, a: int) -> tuple[Factor, Factor]:
    """The two factors ``F_{a,1}``, ``F_{a,2}`` for an odd difference ``a``.

    ``a`` generates a Hamiltonian cycle ``0, a, 2a, ...``; part 1 takes the
    edges leaving even multiples, part 2 those leaving odd multiples.
    """
    _check_n(n, 2)
    if a % 2 == 0 or not 1 <= a <= 1 << (n - 1):
        raise BadDifference(f"{a} is not an odd difference in 1..{1 << (n - 1)}")
    m = 1 << n
    first, second = _alternate_split(n, a)
    return Factor(m, first, FactorTag("F", a, 1)), Factor(m, second, FactorTag("F", a, 2))


def even_difference_factors(n: int, a: int) -> tuple[Factor, Factor]:
    """The two factors ``G_{a,1}``, ``G_{a,2}`` for an even ``a < 2^{n-1}``.

    One cycle per start offset ``i = 0..gcd(a, 2^n)-1``; each has even
    length ``2^n / gcd`` so alternating edges are well defined.
    """
    _check_n(n, 3)
    half = 1 << (n - 1)
    if a % 2 == 1 or not 2 <= a < half:
        raise BadDifference(f"{a} is not an even difference in 2..{half - 1}")
    m = 1 << n
    first, second = _alternate_split(n, a)
    return Factor(m, first, FactorTag("G", a, 1)), Factor(m, second, FactorTag("G", a, 2))


def half_factor(n: int) -> Factor:
    _check_n(n, 1)
    half = 1 << (n - 1)
    return Factor(2 * half, [(i, i + half) for i in range(half)], FactorTag("H", half, 0))


def difference_factorization(n: int) -> Factorization:
    """All ``2^n - 1`` difference factors: H first, then by difference and part."""
    _check_n(n, 2)
    half = 1 << (n - 1)
    factors = [half_factor(n)]
    for a in range(1, half):
        pair = odd_difference_factors(n, a) if a % 2 else even_difference_factors(n, a)
        factors.extend(pair)
    return Factorization(1 << n, tuple(factors))


def reduced_family(fact: Factorization, t: DifferenceTriple) -> list[Factor]:
    """Drop the six factors whose difference lies in ``t``.

    The remaining ``2^n - 7`` factors keep the order of ``fact``.
    """
    n = fact.m.bit_length() - 1
    if fact.m != 1 << n:
        raise InvalidInput(f"factorization order {fact.m} is not a power of two")
    t.check(n)
    excluded = set(t)
    return [f for f in fact.factors if f.tag is None or f.tag.diff not in excluded]


def circle_method_factorization(m: int) -> Factorization:
    """Round-robin 1-factorization of ``K_m`` with vertex ``m-1`` fixed."""
    if m < 2:
        raise InvalidInput(f"m must be >= 2, got {m}")
    if m % 2:
        raise OddOrder(f"K_{m} has no 1-factorization (odd order)")
    ring = m - 1
    factors = []
    for r in range(ring):
        pairs = [(r, ring)]
        for j in range(1, m // 2):
            pairs.append(((r + j) % ring, (r - j) % ring))
        factors.append(Factor(m, pairs, FactorTag("R", r, 0)))
    return Factorization(m, tuple(factors))
