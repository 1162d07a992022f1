"""Exhaustive enumeration of sortable inputs, sorted outputs and fertilities.

The enumerators share work across inputs with a common prefix: the greedy
pass is deterministic, so the machine state after consuming a prefix is the
same for every completion.  Searching the prefix tree and pruning a branch
as soon as the partial output contains 231 (its output can only grow) visits
far fewer states than simulating each permutation separately; a brute-force
twin of each enumerator exists in the test suite.

Totals are independent of the traversal, so the search can be partitioned by
first entry and run on several workers; results are identical for any worker
count, including one.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .machine import push_blocked, stack_pass
from .perms import Perm, all_perms, as_perm

Pair = tuple[Perm, Perm]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _drain_ok(stack: tuple[int, ...], mono: list[int], ceiling: int) -> bool:
    # feed the remaining stack (popped top first) through the 231 detector
    for t in reversed(stack):
        if t < ceiling:
            return False
        while mono and mono[-1] < t:
            ceiling = mono.pop()
        mono.append(t)
    return True


def _sortable_leaves(forbidden: Perm, n: int, first: int | None = None) -> Iterator[Pair]:
    """Yield (input, first-pass output) for every sortable input of length n,
    in lexicographic input order, optionally restricted to one first entry."""
    if len(forbidden) < 2:
        raise ValueError("forbidden pattern must have length >= 2")
    if n == 0:
        yield (), ()
        return

    def rec(
        free: tuple[int, ...],
        stack: tuple[int, ...],
        out: tuple[int, ...],
        mono: tuple[int, ...],
        ceiling: int,
        prefix: tuple[int, ...],
    ) -> Iterator[Pair]:
        if not free:
            if _drain_ok(stack, list(mono), ceiling):
                yield prefix, out + stack[::-1]
            return
        for v in free:
            s, o, mo, ce = stack, out, mono, ceiling
            dead = False
            while s and push_blocked(v, s, forbidden):
                t = s[-1]
                if t < ce:
                    dead = True  # output already contains 231; no completion works
                    break
                cut = len(mo)
                while cut and mo[cut - 1] < t:
                    ce = mo[cut - 1]
                    cut -= 1
                mo = mo[:cut] + (t,)
                s = s[:-1]
                o = o + (t,)
            if dead:
                continue
            yield from rec(
                tuple(x for x in free if x != v),
                s + (v,),
                o,
                mo,
                ce,
                prefix + (v,),
            )

    values = tuple(range(1, n + 1))
    if first is None:
        yield from rec(values, (), (), (), 0, ())
    else:
        yield from rec(
            tuple(x for x in values if x != first), (first,), (), (), 0, (first,)
        )


def sortable_permutations(n: int, forbidden: Perm) -> Iterator[Perm]:
    """All sortable permutations of length n, lexicographic order."""
    return (p for p, _ in _sortable_leaves(forbidden, n))


def machine_outputs(n: int, forbidden: Perm) -> Iterator[Pair]:
    """(input, first-pass output) for every permutation of length n."""
    for p in all_perms(n):
        yield p, stack_pass(forbidden, p)


def _count_partition(forbidden: Perm, n: int, first: int) -> int:
    return sum(1 for _ in _sortable_leaves(forbidden, n, first))


def _profile_partition(forbidden: Perm, n: int, first: int) -> dict[Perm, int]:
    counts: dict[Perm, int] = {}
    for _, out in _sortable_leaves(forbidden, n, first):
        counts[out] = counts.get(out, 0) + 1
    return counts


def count_sortable(n: int, forbidden: Perm, workers: int = 1) -> int:
    """|{p of length n : machine sorts p}|."""
    if len(forbidden) < 2:
        raise ValueError("forbidden pattern must have length >= 2")
    if n == 0:
        return 1
    firsts = range(1, n + 1)
    if workers <= 1:
        return sum(_count_partition(forbidden, n, f) for f in firsts)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_partition, *zip(*[(forbidden, n, f) for f in firsts])))


@dataclass
class SortedProfile:
    """Map from each first-pass output of a sortable input to the number of
    sortable inputs producing it; entries are keyed in lexicographic order."""

    n: int
    forbidden: Perm
    entries: dict[Perm, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.entries.values())


def sorted_profile(n: int, forbidden: Perm, workers: int = 1) -> SortedProfile:
    if len(forbidden) < 2:
        raise ValueError("forbidden pattern must have length >= 2")
    merged: dict[Perm, int] = {}
    if n == 0:
        merged[()] = 1
    elif workers <= 1:
        for f in range(1, n + 1):
            for out, c in _profile_partition(forbidden, n, f).items():
                merged[out] = merged.get(out, 0) + c
    else:
        firsts = range(1, n + 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_profile_partition, *zip(*[(forbidden, n, f) for f in firsts]))
            for part in parts:
                for out, c in part.items():
                    merged[out] = merged.get(out, 0) + c
    ordered = {k: merged[k] for k in sorted(merged)}
    return SortedProfile(n, forbidden, ordered)


def count_sorted(n: int, forbidden: Perm, workers: int = 1) -> int:
    """Number of distinct first-pass outputs over all sortable inputs."""
    return len(sorted_profile(n, forbidden, workers).entries)


def fertility(forbidden: Perm, gamma: Perm) -> int:
    """Number of permutations (of the same length, sortable or not) whose
    first-pass output is exactly gamma."""
    if len(forbidden) < 2:
        raise ValueError("forbidden pattern must have length >= 2")
    gamma = as_perm(gamma)
    n = len(gamma)
    if n == 0:
        return 1

    def rec(free: tuple[int, ...], stack: tuple[int, ...], done: int) -> int:
        if not free:
            return 1 if stack[::-1] == gamma[done:] else 0
        total = 0
        for v in free:
            s, d = stack, done
            dead = False
            while s and push_blocked(v, s, forbidden):
                t = s[-1]
                if gamma[d] != t:  # output must stay a prefix of gamma
                    dead = True
                    break
                s = s[:-1]
                d += 1
            if dead:
                continue
            total += rec(tuple(x for x in free if x != v), s + (v,), d)
        return total

    return rec(tuple(range(1, n + 1)), (), 0)


def count_sortable_123_formula(n: int) -> int:
    """Closed-form count of inputs the 123-machine sorts."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 1 + sum((n - j) * catalan(j) for j in range(1, n))


def gamma_decomposition_123(gamma: Perm) -> tuple[int, int, int] | None:
    """Split a {123, 231}-avoider into three descending runs.

    Returns (i, j, k) such that gamma is the values n..j+k+1 descending, then
    j..1 descending, then j+k..j+1 descending, with j >= 1 and i maximal
    among the splits realizing the same word; None when no split exists.
    """
    n = len(gamma)
    if n < 1:
        raise ValueError("gamma must be nonempty")
    run = 0
    while run < n and gamma[run] == n - run:
        run += 1
    for i in range(min(run, n - 1), -1, -1):
        j = gamma[i]
        if i + j > n:
            continue
        if any(gamma[i + a] != j - a for a in range(j)):
            continue
        k = n - i - j
        if all(gamma[i + j + a] == j + k - a for a in range(k)):
            return (i, j, k)
    return None
