"""Bivincular pattern containment and the anchored-132 pattern.

A bivincular pattern is a classical pattern plus adjacency constraints: an
element x of pos_adj forces the x-th and (x+1)-th occurrence positions to be
consecutive in the host, and an element y of val_adj forces the y-th and
(y+1)-th smallest occurrence values to be consecutive integers.  The boundary
indices 0 and k anchor to the host's ends: 0 in pos_adj pins the occurrence
to start at position 1, k in pos_adj pins it to end at position n, and
symmetrically for val_adj on values 1 and n.

The module constant ANCHORED_132 is the pattern (132, {0, 2}, {}): an
occurrence of 132 that starts at the first entry and whose last two entries
are adjacent.  A permutation avoids it exactly when every block of its
first-element decomposition is increasing, which yields a product formula
for the number of avoiders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perms import Perm, all_perms, parse_perm, format_perm, reverse


@dataclass(frozen=True)
class BivincularPattern:
    pattern: Perm
    pos_adj: frozenset[int]
    val_adj: frozenset[int]

    def __post_init__(self) -> None:
        k = len(self.pattern)
        object.__setattr__(self, "pos_adj", frozenset(self.pos_adj))
        object.__setattr__(self, "val_adj", frozenset(self.val_adj))
        for name, adj in (("pos_adj", self.pos_adj), ("val_adj", self.val_adj)):
            if not all(0 <= x <= k for x in adj):
                raise ValueError(f"{name} must be a subset of 0..{k}: {sorted(adj)}")

    def __str__(self) -> str:
        return format_bivincular(self)


ANCHORED_132 = BivincularPattern((1, 3, 2), frozenset({0, 2}), frozenset())

# Fishburn permutations avoid this: an occurrence of 231 whose "2" and "3"
# are adjacent in position and whose "1" and "2" are consecutive in value.
FISHBURN_PATTERN = BivincularPattern((2, 3, 1), frozenset({1}), frozenset({1}))


def _value_constraints_ok(values: Sequence[int], val_adj: frozenset[int], n: int) -> bool:
    if not val_adj:
        return True
    k = len(values)
    j = sorted(values)
    for y in val_adj:
        if y == 0:
            if j[0] != 1:
                return False
        elif y == k:
            if j[-1] != n:
                return False
        elif j[y] != j[y - 1] + 1:
            return False
    return True


def _bivincular_search(host: Perm, bp: BivincularPattern) -> Iterator[tuple[int, ...]]:
    pattern = bp.pattern
    k = len(pattern)
    n = len(host)
    if k > n:
        return
    if k == 0:
        yield ()
        return
    chosen: list[int] = []  # 0-based host indices

    def extend() -> Iterator[tuple[int, ...]]:
        m = len(chosen)
        if m == k:
            if _value_constraints_ok([host[i] for i in chosen], bp.val_adj, n):
                yield tuple(i + 1 for i in chosen)
            return
        # positions forced by adjacency: m in pos_adj ties i_{m+1} to i_m
        if m == 0:
            candidates = range(0, 1) if 0 in bp.pos_adj else range(0, n - k + 1)
        elif m in bp.pos_adj:
            candidates = range(chosen[-1] + 1, chosen[-1] + 2)
        else:
            candidates = range(chosen[-1] + 1, n - (k - m) + 1)
        last_forced_to_end = (m == k - 1) and (k in bp.pos_adj)
        for i in candidates:
            if i >= n:
                break
            if last_forced_to_end and i != n - 1:
                continue
            v = host[i]
            if all((v > host[j]) == (pattern[m] > pattern[a]) for a, j in enumerate(chosen)):
                chosen.append(i)
                yield from extend()
                chosen.pop()

    yield from extend()


def contains_bivincular(host: Perm, bp: BivincularPattern) -> bool:
    """True iff host has a classical occurrence of bp.pattern satisfying all
    position- and value-adjacency constraints."""
    return next(_bivincular_search(host, bp), None) is not None


def bivincular_occurrences(host: Perm, bp: BivincularPattern) -> Iterator[tuple[int, ...]]:
    """All constrained occurrences as 1-based index tuples, lexicographic."""
    return _bivincular_search(host, bp)


def reverse_bivincular(bp: BivincularPattern) -> BivincularPattern:
    """Mirror a bivincular pattern left-right.

    Satisfies contains_bivincular(reverse(p), bp) ==
    contains_bivincular(p, reverse_bivincular(bp)) for every p: position
    adjacencies flip to k - x, value adjacencies are untouched.
    """
    k = len(bp.pattern)
    return BivincularPattern(
        reverse(bp.pattern),
        frozenset(k - x for x in bp.pos_adj),
        bp.val_adj,
    )


# A 231 occurrence whose first two entries are adjacent and whose last entry
# sits at the final position.
ANCHORED_132_REVERSED = reverse_bivincular(ANCHORED_132)


def contains_anchored_132(p: Perm) -> bool:
    """True iff some adjacent descent sits entirely above the first entry.

    Equivalent to contains_bivincular(p, ANCHORED_132): an occurrence of 132
    using the first entry and an adjacent pair.
    """
    if len(p) < 3:
        return False
    first = p[0]
    return any(p[j] > p[j + 1] > first for j in range(1, len(p) - 1))


@dataclass(frozen=True)
class FirstElementDecomposition:
    """Split of p as first, B_0, b_1, B_1, ..., b_t, B_t.

    The b_i are the values smaller than the first entry (t of them, in host
    order, at 1-based small_positions); each block holds the larger values
    between consecutive b's.
    """

    t: int
    blocks: tuple[tuple[int, ...], ...]
    small_positions: tuple[int, ...]
    small_values: tuple[int, ...]

    def reassemble(self) -> Perm:
        out = [self.t + 1]
        out.extend(self.blocks[0])
        for b, block in zip(self.small_values, self.blocks[1:]):
            out.append(b)
            out.extend(block)
        return tuple(out)


def first_element_decomposition(p: Perm) -> FirstElementDecomposition:
    if not p:
        raise ValueError("cannot decompose the empty permutation")
    t = p[0] - 1
    blocks: list[tuple[int, ...]] = []
    small_positions: list[int] = []
    small_values: list[int] = []
    current: list[int] = []
    for pos, v in enumerate(p[1:], start=2):
        if v <= t:
            blocks.append(tuple(current))
            current = []
            small_positions.append(pos)
            small_values.append(v)
        else:
            current.append(v)
    blocks.append(tuple(current))
    return FirstElementDecomposition(t, tuple(blocks), tuple(small_positions), tuple(small_values))


def avoids_anchored_132_via_blocks(p: Perm) -> bool:
    """True iff every block of the first-element decomposition is increasing."""
    dec = first_element_decomposition(p)
    return all(
        all(block[i] < block[i + 1] for i in range(len(block) - 1))
        for block in dec.blocks
    )


def count_anchored_132_avoiders(n: int) -> int:
    """Closed-form count of length-n avoiders of ANCHORED_132.

    Grouping by the first entry t+1: the t values below it may appear in any
    order (t! ways) and each of the n-t-1 values above it independently picks
    one of the t+1 increasing blocks to sit in.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(math.factorial(t) * (t + 1) ** (n - t - 1) for t in range(n))


def count_anchored_132_avoiders_brute(n: int) -> int:
    """Exhaustive count of avoiders of ANCHORED_132; oracle for the formula."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(1 for p in all_perms(n) if not contains_anchored_132(p))


def parse_bivincular(text: str) -> BivincularPattern:
    """Parse the "pattern|X|Y" form, e.g. "132|0,2|"."""
    parts = text.split("|")
    if len(parts) != 3:
        raise ValueError(f"expected three '|'-separated fields: {text!r}")
    pattern = parse_perm(parts[0])

    def parse_adj(field: str, name: str) -> frozenset[int]:
        field = field.strip()
        if not field:
            return frozenset()
        try:
            values = [int(tok) for tok in field.split(",")]
        except ValueError:
            raise ValueError(f"invalid {name} field: {field!r}") from None
        if any(v < 0 for v in values):
            raise ValueError(f"invalid {name} field: {field!r}")
        return frozenset(values)

    return BivincularPattern(pattern, parse_adj(parts[1], "X"), parse_adj(parts[2], "Y"))


def format_bivincular(bp: BivincularPattern) -> str:
    return "|".join(
        (
            format_perm(bp.pattern),
            ",".join(str(x) for x in sorted(bp.pos_adj)),
            ",".join(str(y) for y in sorted(bp.val_adj)),
        )
    )
