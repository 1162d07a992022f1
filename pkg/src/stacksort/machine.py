"""Greedy one-pass simulation of a pattern-restricted stack.

The stack is never allowed to contain an occurrence of its forbidden pattern,
reading the content from top to bottom.  A pass scans the input left to
right: each element is pushed as long as the stack stays legal, otherwise the
top is popped to the output; at the end the stack is drained.  The full
machine is such a pass followed by a pass through a plain increasing stack
(forbidden pattern 21), and an input is sortable when the machine emits the
identity.

Since the content is legal before every push, a push can only be illegal if
the new element is the *first* (topmost) entry of an occurrence, so the push
test searches occurrences anchored at the candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perms import Perm, identity

PATTERN_21: Perm = (2, 1)


@dataclass(frozen=True)
class TraceEvent:
    op: str  # "push" | "pop"
    value: int


MachineTrace = tuple[TraceEvent, ...]


def _anchored3(v: int, stack: Sequence[int], s1: int, s2: int, s3: int) -> bool:
    # Is there a pair a-then-b below v (top to bottom) with (v, a, b) order-
    # isomorphic to (s1, s2, s3)?  Only the extremal valid 'a' matters: the
    # smallest one when b must exceed a, the largest otherwise.
    up2 = s2 > s1
    up3 = s3 > s1
    up32 = s3 > s2
    best = 0
    for idx in range(len(stack) - 1, -1, -1):
        c = stack[idx]
        if best and ((c > v) == up3) and ((c > best) == up32):
            return True
        if (c > v) == up2:
            if not best or (c < best) == up32:
                best = c
    return False


def _anchored_generic(v: int, stack: Sequence[int], forbidden: Perm) -> bool:
    k = len(forbidden)
    below = stack[::-1]  # top to bottom
    m = len(below)
    if m < k - 1:
        return False
    vals = [v]

    def extend(start: int) -> bool:
        depth = len(vals)
        if depth == k:
            return True
        for i in range(start, m - (k - depth) + 1):
            c = below[i]
            if all((c > vals[a]) == (forbidden[depth] > forbidden[a]) for a in range(depth)):
                vals.append(c)
                if extend(i + 1):
                    return True
                vals.pop()
        return False

    return extend(0)


def push_blocked(v: int, stack: Sequence[int], forbidden: Perm) -> bool:
    """Would pushing v (on top of stack, listed bottom to top) complete an
    occurrence of the forbidden pattern in the content read top to bottom?"""
    k = len(forbidden)
    if len(stack) < k - 1:
        return False
    if k == 2:
        if forbidden[0] > forbidden[1]:
            return v > min(stack)
        return v < max(stack)
    if k == 3:
        return _anchored3(v, stack, *forbidden)
    return _anchored_generic(v, stack, forbidden)


def _check_forbidden(forbidden: Perm) -> None:
    if len(forbidden) < 2:
        raise ValueError("forbidden pattern must have length >= 2")


def stack_pass(forbidden: Perm, perm: Perm) -> Perm:
    """Output of one greedy pass of perm through a forbidden-pattern stack."""
    _check_forbidden(forbidden)
    stack: list[int] = []
    out: list[int] = []
    for v in perm:
        while stack and push_blocked(v, stack, forbidden):
            out.append(stack.pop())
        stack.append(v)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def stack_pass_traced(forbidden: Perm, perm: Perm) -> tuple[Perm, MachineTrace]:
    """Like stack_pass, also returning the full push/pop event sequence."""
    _check_forbidden(forbidden)
    stack: list[int] = []
    out: list[int] = []
    events: list[TraceEvent] = []
    for v in perm:
        while stack and push_blocked(v, stack, forbidden):
            top = stack.pop()
            out.append(top)
            events.append(TraceEvent("pop", top))
        stack.append(v)
        events.append(TraceEvent("push", v))
    while stack:
        top = stack.pop()
        out.append(top)
        events.append(TraceEvent("pop", top))
    return tuple(out), tuple(events)


def machine_output(forbidden: Perm, perm: Perm) -> Perm:
    """Result of the two-stack machine: the restricted pass then a 21-pass."""
    return stack_pass(PATTERN_21, stack_pass(forbidden, perm))


def is_sortable(forbidden: Perm, perm: Perm) -> bool:
    """True iff the machine sorts perm, i.e. the first pass emits a
    231-avoiding permutation (equivalently machine_output is the identity)."""
    _check_forbidden(forbidden)
    return _sortable_pass(forbidden, perm) is not None


def _sortable_pass(forbidden: Perm, perm: Perm) -> Perm | None:
    """First-pass output if it avoids 231, else None (aborts at the first
    231 occurrence, which can only ever appear at the end of the output)."""
    stack: list[int] = []
    out: list[int] = []
    mono: list[int] = []
    ceiling = 0
    for v in perm:
        while stack and push_blocked(v, stack, forbidden):
            t = stack.pop()
            if t < ceiling:
                return None
            while mono and mono[-1] < t:
                ceiling = mono.pop()
            mono.append(t)
            out.append(t)
        stack.append(v)
    while stack:
        t = stack.pop()
        if t < ceiling:
            return None
        while mono and mono[-1] < t:
            ceiling = mono.pop()
        mono.append(t)
        out.append(t)
    return tuple(out)


def replay_trace(perm: Perm, trace: MachineTrace) -> Perm:
    """Re-execute a trace from an empty stack, returning the output.

    Raises ValueError if the events are inconsistent with the input order or
    stack discipline; used to validate traces independently of the simulator.
    """
    stack: list[int] = []
    out: list[int] = []
    pending = list(perm)
    for ev in trace:
        if ev.op == "push":
            if not pending or pending[0] != ev.value:
                raise ValueError(f"push {ev.value} does not match next input")
            stack.append(pending.pop(0))
        elif ev.op == "pop":
            if not stack or stack[-1] != ev.value:
                raise ValueError(f"pop {ev.value} does not match stack top")
            out.append(stack.pop())
        else:
            raise ValueError(f"unknown event {ev.op!r}")
    if pending or stack:
        raise ValueError("trace did not consume the whole input")
    return tuple(out)


def trace_lines(trace: MachineTrace) -> list[str]:
    """One event per line: "push v" / "pop v"."""
    return [f"{ev.op} {ev.value}" for ev in trace]


def parse_trace_lines(lines: Sequence[str]) -> MachineTrace:
    events = []
    for line in lines:
        op, value = line.split()
        if op not in ("push", "pop"):
            raise ValueError(f"unknown event {op!r}")
        events.append(TraceEvent(op, int(value)))
    return tuple(events)


def trace_json(trace: MachineTrace) -> list[dict]:
    return [{"op": ev.op, "value": ev.value} for ev in trace]


def sorts_to_identity(forbidden: Perm, perm: Perm) -> bool:
    """Definitional sortability check via the full machine; oracle twin of
    is_sortable."""
    return machine_output(forbidden, perm) == identity(len(perm))
