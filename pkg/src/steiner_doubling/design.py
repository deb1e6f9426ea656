"""Core value types: triple systems, factors, factorizations, colorings.

Points are dense 0-based integers. A block is a sorted ``(p, q, r)`` tuple.
Everything here is immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadDifference,
    DuplicateBlock,
    InvalidInput,
    InvalidTriple,
    OutOfRange,
)

Block = tuple[int, int, int]
Pair = tuple[int, int]


def _freeze_labels(labels: Mapping[int, str] | None) -> Mapping[int, str] | None:
    if labels is None:
        return None
    return dict(sorted((int(k), str(v)) for k, v in labels.items()))


@dataclass(frozen=True)
class TripleSystem:
    """A point set ``{0..v-1}`` together with a list of 3-point blocks.

    The constructor only coerces blocks to tuples; use :func:`canonicalize`
    (or :meth:`from_blocks`) to get sorted, duplicate-checked blocks.
    """

    v: int
    blocks: tuple[Block, ...]
    labels: Mapping[int, str] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.v < 0:
            raise InvalidInput(f"order must be non-negative, got {self.v}")
        blocks = []
        for b in self.blocks:
            t = tuple(int(p) for p in b)
            if len(t) != 3:
                raise InvalidInput(f"block {b!r} does not have 3 points")
            blocks.append(t)
        object.__setattr__(self, "blocks", tuple(blocks))
        object.__setattr__(self, "labels", _freeze_labels(self.labels))

    @classmethod
    def from_blocks(
        cls, v: int, blocks: Iterable[Sequence[int]], labels: Mapping[int, str] | None = None
    ) -> TripleSystem:
        return canonicalize(cls(v, tuple(tuple(b) for b in blocks), labels))

    @property
    def points(self) -> range:
        return range(self.v)

    @property
    def expected_block_count(self) -> int:
        return self.v * (self.v - 1) // 6

    def block_set(self) -> frozenset[Block]:
        return frozenset(self.blocks)

    def label(self, p: int) -> str:
        if self.labels and p in self.labels:
            return self.labels[p]
        return str(p)

    def __len__(self) -> int:
        return len(self.blocks)


def canonicalize(ts: TripleSystem) -> TripleSystem:
    """Sort points inside each block and sort the block list.

    Raises :class:`OutOfRange` for a point outside ``{0..v-1}`` and
    :class:`DuplicateBlock` when the same triple occurs twice.
    """
    seen: set[Block] = set()
    out: list[Block] = []
    for b in ts.blocks:
        s = tuple(sorted(b))
        if s[0] < 0 or s[2] >= ts.v:
            raise OutOfRange(f"block {b!r} has a point outside 0..{ts.v - 1}")
        if s[0] == s[1] or s[1] == s[2]:
            raise InvalidInput(f"block {b!r} repeats a point")
        if s in seen:
            raise DuplicateBlock(f"block {s!r} occurs more than once")
        seen.add(s)
        out.append(s)
    out.sort()
    return TripleSystem(ts.v, tuple(out), ts.labels)


@dataclass(frozen=True)
class UnionLabeling:
    """Flat relabeling of a disjoint union ``X ∪ Z_m``.

    X keeps its indices; residue ``r`` of the cyclic part becomes
    ``x_size + r``.
    """

    x_size: int
    y_size: int

    @property
    def size(self) -> int:
        return self.x_size + self.y_size

    def x(self, i: int) -> int:
        if not 0 <= i < self.x_size:
            raise OutOfRange(f"x index {i} outside 0..{self.x_size - 1}")
        return i

    def y(self, r: int) -> int:
        return self.x_size + r % self.y_size

    def inverse(self, p: int) -> tuple[str, int]:
        """Return ``("x", i)`` or ``("y", r)`` for a flat point."""
        if 0 <= p < self.x_size:
            return ("x", p)
        if self.x_size <= p < self.size:
            return ("y", p - self.x_size)
        raise OutOfRange(f"point {p} outside 0..{self.size - 1}")


def relabel_union(x_size: int, y_size: int) -> UnionLabeling:
    if x_size < 0 or y_size < 0:
        raise InvalidInput("sizes must be non-negative")
    return UnionLabeling(x_size, y_size)


@dataclass(frozen=True, order=True)
class FactorTag:
    """Identity of a factor in the difference factorization.

    ``kind`` is ``"F"`` (odd difference), ``"G"`` (even difference),
    ``"H"`` (half difference) or ``"R"`` (round-robin factor, ``diff`` holds
    its index).
    """

    kind: str
    diff: int
    part: int = 0

    def __str__(self) -> str:
        if self.kind == "H":
            return "H"
        if self.kind == "R":
            return f"R{self.diff}"
        return f"{self.kind}{self.diff},{self.part}"

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> FactorTag:
        if text == "H":
            return cls("H", m // 2 if m else 0, 0)
        kind, rest = text[0], text[1:]
        if kind == "R":
            return cls("R", int(rest), 0)
        if kind not in "FG":
            raise InvalidInput(f"unknown factor tag {text!r}")
        a, p = rest.split(",")
        return cls(kind, int(a), int(p))


@dataclass(frozen=True)
class Factor:
    """Perfect matching on ``{0..m-1}``; pairs kept sorted."""

    m: int
    pairs: tuple[Pair, ...]
    tag: FactorTag | None = None

    def __post_init__(self) -> None:
        pairs = sorted(tuple(sorted((int(x), int(y)))) for x, y in self.pairs)
        object.__setattr__(self, "pairs", tuple(pairs))

    def is_perfect_matching(self) -> bool:
        seen = [False] * self.m
        if len(self.pairs) * 2 != self.m:
            return False
        for x, y in self.pairs:
            if x == y or not (0 <= x < self.m and 0 <= y < self.m):
                return False
            if seen[x] or seen[y]:
                return False
            seen[x] = seen[y] = True
        return True

    def partner(self) -> list[int]:
        """Array mapping each vertex to its matched vertex."""
        mate = [-1] * self.m
        for x, y in self.pairs:
            mate[x] = y
            mate[y] = x
        return mate


@dataclass(frozen=True)
class Factorization:
    m: int
    factors: tuple[Factor, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def by_tag(self) -> dict[FactorTag, Factor]:
        return {f.tag: f for f in self.factors}


def circular_difference(x: int, y: int, m: int) -> int:
    d = (x - y) % m
    return min(d, m - d)


@dataclass(frozen=True)
class DifferenceTriple:
    """Three distinct differences with ``c = a + b`` or ``a + b + c = 2^n``.

    Stored sorted ascending, so ``{0, a, a + b}`` is always a base block
    whose translates realise exactly the differences ``a, b, c``.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = sorted((int(self.a), int(self.b), int(self.c)))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    def problems(self, n: int) -> list[str]:
        m = 1 << n
        half = m >> 1
        out = []
        if len({self.a, self.b, self.c}) != 3:
            out.append("differences are not pairwise distinct")
        for d in self:
            if not 1 <= d <= half:
                out.append(f"{d} is not in 1..{half}")
            elif d == half:
                out.append(f"{d} equals the half difference {half}")
        if self.a + self.b != self.c and self.a + self.b + self.c != m:
            out.append(f"neither c = a + b nor a + b + c = {m}")
        return out

    def is_valid(self, n: int) -> bool:
        return not self.problems(n)

    def check(self, n: int) -> DifferenceTriple:
        bad = self.problems(n)
        if bad:
            raise InvalidTriple(f"{{{self}}} invalid for n={n}: " + "; ".join(bad))
        return self

    def is_parity_mixed(self) -> bool:
        """True when the base block ``{0, a, a+b}`` has points of both parities."""
        return self.a % 2 == 1 or self.b % 2 == 1

    @classmethod
    def parse(cls, text: str) -> DifferenceTriple:
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if len(parts) != 3:
            raise BadDifference(f"expected three comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))


@dataclass(frozen=True)
class Coloring:
    """Point -> color id assignment, ids dense from 0."""

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        assignment = tuple(int(c) for c in self.assignment)
        object.__setattr__(self, "assignment", assignment)
        used = set(assignment)
        if used and used != set(range(max(used) + 1)):
            raise InvalidInput(f"color ids {sorted(used)} are not dense from 0")

    @classmethod
    def from_classes(cls, v: int, classes: Sequence[Iterable[int]]) -> Coloring:
        assignment = [-1] * v
        for cid, cls_points in enumerate(classes):
            for p in cls_points:
                if assignment[p] != -1:
                    raise InvalidInput(f"point {p} is in two classes")
                assignment[p] = cid
        if -1 in assignment:
            raise InvalidInput(f"point {assignment.index(-1)} is uncolored")
        return cls(tuple(assignment))

    @property
    def v(self) -> int:
        return len(self.assignment)

    @property
    def num_classes(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    @property
    def classes(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.num_classes)]
        for p, c in enumerate(self.assignment):
            out[c].add(p)
        return tuple(frozenset(s) for s in out)

    def class_of(self, p: int) -> int:
        return self.assignment[p]
