"""Doubling constructions ``v -> 2v+1`` and ``v -> 2v+7``.

Both attach a fresh vertex set ``Y`` to the seed points ``X`` and join every
seed point ``x`` to the pairs of one factor of a 1-factorization on ``Y``.
For ``v = 2^n - 7`` the factorization is the difference factorization of
``Z_{2^n}`` with the six factors of a difference triple removed; the pairs
of those three differences are covered by the cyclic translates of a base
block instead.

With an all-odd/even split of the factors (see
:func:`parity_split_bijection`) the even residues extend a maximal
independent set of the seed, and the odd residues form one new color class
of a bicoloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .design import (
    Block,
    Coloring,
    DifferenceTriple,
    Factor,
    Factorization,
    TripleSystem,
    relabel_union,
)
from .errors import (
    CardinalityMismatch,
    InvalidInput,
    InvalidTriple,
    NotAnSTS,
    SizeMismatch,
    VerificationFailed,
)
from .factorization import difference_factorization, reduced_family
from .verification import (
    verify_bicoloring,
    verify_independent,
    verify_maximal_independent,
    verify_sts,
)

DEFAULT_TRIPLE = DifferenceTriple(1, 2, 3)

# Blocks of the STS(9) seed, written with 1-based point names x_1..x_9.
_SEED_9 = [
    (1, 2, 3), (1, 4, 7), (1, 5, 9), (1, 6, 8),
    (4, 5, 6), (2, 5, 8), (2, 6, 7), (2, 4, 9),
    (7, 8, 9), (3, 6, 9), (3, 4, 8), (3, 5, 7),
]
_SEED_9_INDEPENDENT = (1, 2, 4, 5)
_SEED_9_CLASSES = ((1, 2, 4, 5), (3, 6, 7, 8), (9,))

# Factor assigned to each seed point x_1..x_9 in the worked STS(25) example.
APPENDIX_PHI_TAGS = ("F5,1", "F5,2", "G4,1", "F7,2", "F7,1", "G4,2", "G6,1", "G6,2", "H")


@dataclass(frozen=True)
class Seed:
    system: TripleSystem
    independent_set: frozenset[int]
    coloring: Coloring


def seed_sts9() -> Seed:
    """The 12-block STS(9) with its 4-point maximal independent set and 3-bicoloring."""
    labels = {i: f"x_{i + 1}" for i in range(9)}
    ts = TripleSystem.from_blocks(9, [[p - 1 for p in b] for b in _SEED_9], labels)
    indep = frozenset(p - 1 for p in _SEED_9_INDEPENDENT)
    coloring = Coloring.from_classes(9, [[p - 1 for p in c] for c in _SEED_9_CLASSES])
    return Seed(ts, indep, coloring)


@dataclass(frozen=True)
class PhiBijection:
    """Seed point ``i`` is joined to the pairs of ``factors[i]``."""

    factors: tuple[Factor, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, point: int) -> Factor:
        return self.factors[point]

    def tags(self) -> list[str]:
        return [str(f.tag) for f in self.factors]

    def check_onto(self, family: Sequence[Factor]) -> None:
        if len(self.factors) != len(family):
            raise SizeMismatch(f"phi has {len(self.factors)} points, family has {len(family)} factors")
        if sorted(id(f) for f in self.factors) == sorted(id(f) for f in family):
            return
        if sorted(f.pairs for f in self.factors) != sorted(f.pairs for f in family):
            raise InvalidInput("phi is not a bijection onto the factor family")


def index_bijection(family: Sequence[Factor]) -> PhiBijection:
    """Point ``i`` gets the ``i``-th factor of ``family``."""
    return PhiBijection(tuple(family))


def bijection_from_tags(family: Sequence[Factor], tags: Sequence[str]) -> PhiBijection:
    by_tag = {str(f.tag): f for f in family}
    missing = [t for t in tags if t not in by_tag]
    if missing:
        raise InvalidInput(f"no factor tagged {missing[0]!r} in family")
    if len(set(tags)) != len(tags):
        raise InvalidInput("phi tags repeat a factor")
    return PhiBijection(tuple(by_tag[t] for t in tags))


def appendix_phi(fstar: Sequence[Factor] | None = None) -> PhiBijection:
    if fstar is None:
        fstar = reduced_family(difference_factorization(4), DEFAULT_TRIPLE)
    return bijection_from_tags(fstar, APPENDIX_PHI_TAGS)


def _gamma(phi: PhiBijection, offset: int) -> list[Block]:
    return [(x, offset + y, offset + z) for x, fac in enumerate(phi.factors) for y, z in fac.pairs]


def _result_labels(seed: TripleSystem, y_size: int, y_name: str) -> dict[int, str]:
    labels = {p: seed.label(p) if seed.labels else f"x_{p + 1}" for p in range(seed.v)}
    for r in range(y_size):
        labels[seed.v + r] = f"{y_name}={r}"
    return labels


def double_plus_one(
    seed: TripleSystem, fact: Factorization, phi: PhiBijection | None = None
) -> TripleSystem:
    """STS(2v+1) containing ``seed``: seed blocks plus one block per (point, factor pair)."""
    v = seed.v
    if fact.m != v + 1 or len(fact.factors) != v:
        raise SizeMismatch(f"need {v} factors on {v + 1} vertices, got {len(fact.factors)} on {fact.m}")
    phi = index_bijection(fact.factors) if phi is None else phi
    phi.check_onto(fact.factors)
    blocks = list(seed.blocks) + _gamma(phi, v)
    return TripleSystem.from_blocks(2 * v + 1, blocks, _result_labels(seed, v + 1, "y"))


def delta_translates(n: int, t: DifferenceTriple, offset: int = 0) -> list[Block]:
    """All ``2^n`` translates of the base block ``{0, a, a+b}``, shifted by ``offset``."""
    t.check(n)
    m = 1 << n
    base = (0, t.a, t.a + t.b)
    return [tuple(sorted(offset + (i + d) % m for d in base)) for i in range(m)]


@dataclass(frozen=True)
class ConstructionTrace:
    """One ``v -> 2v+7`` step and what it carried along."""

    seed: TripleSystem
    n: int
    triple: DifferenceTriple
    phi: PhiBijection
    result: TripleSystem
    block_types: Mapping[Block, int] = field(repr=False)
    carried_independent_set: frozenset[int] | None = None
    carried_coloring: Coloring | None = None
    independent_class: int | None = None

    def blocks_of_type(self, kind: int) -> list[Block]:
        return [b for b in self.result.blocks if self.block_types[b] == kind]


def double_plus_seven(
    seed: TripleSystem,
    n: int,
    t: DifferenceTriple = DEFAULT_TRIPLE,
    phi: PhiBijection | None = None,
    verify: bool = True,
) -> ConstructionTrace:
    """STS(2^{n+1} - 7) containing an STS(2^n - 7) seed.

    ``phi`` must map the seed points onto the reduced family for ``t``; it
    defaults to the index-order bijection. With ``verify`` the seed and the
    result are both checked as Steiner triple systems.
    """
    if n < 3:
        raise InvalidInput(f"n must be >= 3, got {n}")
    v = (1 << n) - 7
    if seed.v != v:
        raise SizeMismatch(f"seed has order {seed.v}, expected 2^{n}-7 = {v}")
    t.check(n)
    if verify and not verify_sts(seed).passed:
        raise NotAnSTS(f"seed of order {v} is not a Steiner triple system")
    fstar = reduced_family(difference_factorization(n), t)
    phi = index_bijection(fstar) if phi is None else phi
    phi.check_onto(fstar)

    m = 1 << n
    types: dict[Block, int] = {b: 1 for b in seed.blocks}
    types.update((tuple(sorted(b)), 2) for b in _gamma(phi, v))
    types.update((b, 3) for b in delta_translates(n, t, offset=v))
    if len(types) != len(seed.blocks) + v * (v + 7) // 2 + m:
        raise VerificationFailed("block families overlap")
    result = TripleSystem.from_blocks(2 * v + 7, types, _result_labels(seed, m, f"y{m}"))
    if verify and not verify_sts(result).passed:
        raise VerificationFailed(f"result of order {result.v} is not a Steiner triple system")
    return ConstructionTrace(seed, n, t, phi, result, types)


def parity_split_bijection(
    seed: TripleSystem, independent: Iterable[int], fstar: Sequence[Factor]
) -> PhiBijection:
    """Send the independent set onto the odd-difference factors, the rest onto the even ones.

    Within each side, points in ascending order take factors in family order.
    """
    indep = sorted(set(independent))
    rest = [p for p in range(seed.v) if p not in set(indep)]
    odd = [f for f in fstar if f.tag.diff % 2 == 1]
    even = [f for f in fstar if f.tag.diff % 2 == 0]
    if len(indep) != len(odd) or len(rest) != len(even):
        raise CardinalityMismatch(
            f"independent set has {len(indep)} points for {len(odd)} odd factors, "
            f"complement has {len(rest)} points for {len(even)} even factors"
        )
    assigned: list[Factor | None] = [None] * seed.v
    for p, f in zip(indep, odd):
        assigned[p] = f
    for p, f in zip(rest, even):
        assigned[p] = f
    return PhiBijection(tuple(assigned))


def even_residues(n: int, v: int) -> list[int]:
    return [relabel_union(v, 1 << n).y(2 * i) for i in range(1 << (n - 1))]


def extend_independent_set(independent: Iterable[int], n: int, v: int) -> frozenset[int]:
    independent = frozenset(independent)
    if any(not 0 <= p < v for p in independent):
        raise InvalidInput(f"independent set is not inside 0..{v - 1}")
    return independent | frozenset(even_residues(n, v))


def extend_bicoloring(coloring: Coloring | None, class_of_t: int | None, n: int, v: int) -> Coloring:
    """Even residues join ``class_of_t``; odd residues become one new class."""
    if coloring is None:
        raise InvalidInput("no coloring to extend")
    if class_of_t is None or not 0 <= class_of_t < coloring.num_classes:
        raise InvalidInput(f"color class {class_of_t!r} does not exist")
    if coloring.v != v:
        raise SizeMismatch(f"coloring covers {coloring.v} points, expected {v}")
    new = coloring.num_classes
    tail = [class_of_t if r % 2 == 0 else new for r in range(1 << n)]
    return Coloring(coloring.assignment + tuple(tail))


def _require(report, what: str) -> None:
    if not report.passed:
        raise VerificationFailed(f"{what}: {report.violations[:3]}")


def build_chain(
    n_target: int,
    t: DifferenceTriple = DEFAULT_TRIPLE,
    phi: str = "parity",
    verify: bool = True,
) -> list[ConstructionTrace]:
    """Iterate ``v -> 2v+7`` from STS(9) up to order ``2^n_target - 7``.

    With ``phi="parity"`` each level carries a maximal independent set of
    size ``(v-1)/2`` and an ``(n-1)``-bicoloring in which that set is a
    color class. ``phi="index"`` only builds the systems.
    """
    if n_target < 4:
        raise InvalidInput(f"target exponent must be >= 4, got {n_target}")
    if phi not in ("parity", "index"):
        raise InvalidInput(f"unknown phi strategy {phi!r}")
    if phi == "parity" and not t.is_parity_mixed():
        raise InvalidTriple(f"{{{t}}} has no odd difference; the parity split needs one")
    seed = seed_sts9()
    system = seed.system
    indep: frozenset[int] | None = seed.independent_set if phi == "parity" else None
    coloring: Coloring | None = seed.coloring if phi == "parity" else None
    class_t = coloring.class_of(min(indep)) if coloring else None

    traces = []
    for n in range(4, n_target):
        v = system.v
        if indep is not None:
            fstar = reduced_family(difference_factorization(n), t)
            bij = parity_split_bijection(system, indep, fstar)
        else:
            bij = None
        trace = double_plus_seven(system, n, t, bij, verify=verify)
        if indep is not None:
            indep = extend_independent_set(indep, n, v)
            coloring = extend_bicoloring(coloring, class_t, n, v)
            if verify:
                res = trace.result
                _require(verify_independent(res, indep), "independent set")
                _require(verify_maximal_independent(res, indep), "maximality")
                _require(verify_bicoloring(res, coloring), "bicoloring")
            trace = ConstructionTrace(
                trace.seed, n, t, trace.phi, trace.result, trace.block_types,
                indep, coloring, class_t,
            )
        traces.append(trace)
        system = trace.result
    return traces
