"""Joint statistics on three families conjectured to be equinumerous.

The three families at each length n: inputs the 312-machine sorts, Fishburn
permutations avoiding 3412, and ascent sequences avoiding the word pattern
201.  Their cardinalities agree as far as exhaustive search reaches; the
explorer also tabulates one statistic pair per family and compares the joint
distributions, reporting (not asserting) whether they coincide.

Statistic conventions for ascent sequences are not forced by anything, so
the right-to-left minima counter takes a strict/weak knob; reports always
state the active convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .bivincular import FISHBURN_PATTERN, contains_bivincular
from .enumeration import sortable_permutations
from .perms import Perm, all_perms, contains

Word = tuple[int, ...]

STAT_NAMES = ("lr_max", "rl_max", "lr_min", "rl_min")


def stat(p: Perm, which: str) -> int:
    """Count left-to-right / right-to-left maxima or minima of a permutation."""
    if which not in STAT_NAMES:
        raise ValueError(f"unknown statistic {which!r}")
    if not p:
        raise ValueError("statistics need a nonempty permutation")
    seq = p if which.startswith("lr") else p[::-1]
    if which.endswith("max"):
        best = 0
        count = 0
        for v in seq:
            if v > best:
                best = v
                count += 1
        return count
    best = len(p) + 1
    count = 0
    for v in seq:
        if v < best:
            best = v
            count += 1
    return count


def ascent_count(word: Sequence[int]) -> int:
    return sum(1 for i in range(len(word) - 1) if word[i] < word[i + 1])


def ascent_sequences(n: int) -> Iterator[Word]:
    """All ascent sequences of length n: first letter 0, each next letter at
    most one more than the number of ascents so far."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def rec(prefix: list[int], ascents: int) -> Iterator[Word]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        last = prefix[-1]
        for letter in range(ascents + 2):
            prefix.append(letter)
            yield from rec(prefix, ascents + (1 if letter > last else 0))
            prefix.pop()

    yield from rec([0], 0)


def word_contains(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """Subsequence containment for words: order-isomorphic with equalities
    respected."""
    k = len(pattern)
    if k == 0:
        return True
    if k > len(word):
        return False
    chosen: list[int] = []

    def cmp(a: int, b: int) -> int:
        return (a > b) - (a < b)

    def extend(start: int) -> bool:
        m = len(chosen)
        if m == k:
            return True
        for i in range(start, len(word) - (k - m) + 1):
            v = word[i]
            if all(cmp(v, word[j]) == cmp(pattern[m], pattern[a]) for a, j in enumerate(chosen)):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def ascent_sequences_avoiding(n: int, pattern: Sequence[int]) -> Iterator[Word]:
    """Ascent sequences of length n with no subsequence matching pattern."""
    pattern = tuple(pattern)
    for seq in ascent_sequences(n):
        if not word_contains(seq, pattern):
            yield seq


def zeros(seq: Sequence[int]) -> int:
    return sum(1 for x in seq if x == 0)


def seq_rl_minima(seq: Sequence[int], strict: bool = True) -> int:
    """Right-to-left minima of a letter sequence.

    Strict: every later letter is strictly greater.  Weak: no later letter
    is strictly smaller.
    """
    count = 0
    best: int | None = None
    for x in reversed(seq):
        if best is None or (x < best if strict else x <= best):
            count += 1
        if best is None or x < best:
            best = x
    return count


def fishburn_permutations(n: int) -> Iterator[Perm]:
    """Permutations of length n avoiding the Fishburn bivincular pattern."""
    for p in all_perms(n):
        if not contains_bivincular(p, FISHBURN_PATTERN):
            yield p


def fishburn_avoiding(n: int, classical: Perm) -> Iterator[Perm]:
    """Fishburn permutations of length n also avoiding a classical pattern."""
    for p in fishburn_permutations(n):
        if not contains(p, classical):
            yield p


KINDS = ("sort312", "fishburn3412", "ascent201")


@dataclass(frozen=True)
class JointDistribution:
    kind: str
    n: int
    counts: dict[tuple[int, int], int]
    convention: str = "strict"

    def total(self) -> int:
        return sum(self.counts.values())


def joint_distribution(kind: str, n: int, minima_convention: str = "strict") -> JointDistribution:
    """Tabulate the statistic pair of one family at length n.

    sort312: (lr_max, rl_max) over inputs the 312-machine sorts.
    fishburn3412: (lr_max, lr_min) over Fishburn permutations avoiding 3412.
    ascent201: (right-to-left minima, zeros) over ascent sequences
    avoiding 201; the minima convention applies here only.
    """
    if minima_convention not in ("strict", "weak"):
        raise ValueError(f"unknown convention {minima_convention!r}")
    counts: dict[tuple[int, int], int] = {}

    def add(pair: tuple[int, int]) -> None:
        counts[pair] = counts.get(pair, 0) + 1

    if kind == "sort312":
        for p in sortable_permutations(n, (3, 1, 2)):
            add((stat(p, "lr_max"), stat(p, "rl_max")))
    elif kind == "fishburn3412":
        for p in fishburn_avoiding(n, (3, 4, 1, 2)):
            add((stat(p, "lr_max"), stat(p, "lr_min")))
    elif kind == "ascent201":
        strict = minima_convention == "strict"
        for seq in ascent_sequences_avoiding(n, (2, 0, 1)):
            add((seq_rl_minima(seq, strict=strict), zeros(seq)))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    ordered = {k: counts[k] for k in sorted(counts)}
    return JointDistribution(kind, n, ordered, minima_convention)


def first_mismatch(
    a: JointDistribution, b: JointDistribution
) -> tuple[tuple[int, int], int, int] | None:
    """Smallest pair on which two distributions disagree, or None."""
    for key in sorted(set(a.counts) | set(b.counts)):
        ca = a.counts.get(key, 0)
        cb = b.counts.get(key, 0)
        if ca != cb:
            return key, ca, cb
    return None


def equidistribution_report(max_n: int, minima_convention: str = "strict") -> list[str]:
    """Per-n blocks of "pair -> count" lines for the three families, each
    block followed by an equidistribution verdict."""
    lines = [f"ascent-sequence right-to-left minima convention: {minima_convention}"]
    for n in range(1, max_n + 1):
        dists = [joint_distribution(kind, n, minima_convention) for kind in KINDS]
        lines.append(f"n = {n}")
        for dist in dists:
            lines.append(f"  {dist.kind} (total {dist.total()})")
            for pair, count in dist.counts.items():
                lines.append(f"    {pair[0]},{pair[1]} -> {count}")
        mism = first_mismatch(dists[0], dists[1]) or first_mismatch(dists[0], dists[2])
        if mism is None:
            lines.append("  EQUIDISTRIBUTED: yes")
        else:
            key, ca, cb = mism
            lines.append(
                f"  EQUIDISTRIBUTED: no (first mismatch: pair {key[0]},{key[1]} "
                f"counts {ca} vs {cb})"
            )
    return lines
