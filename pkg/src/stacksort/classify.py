"""Machine classification predicates.

Three independent properties of the forbidden pattern determine how hard its
machine is to analyze: whether the sortable inputs form a pattern-avoidance
class, whether the first stack is effective (its outputs on sortable inputs
never contain the forbidden pattern itself), and whether every sortable
input avoids the anchored-132 pattern.  Each predicate has a closed
characterization in terms of the pattern alone; the verify module checks all
of them against exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bivincular import ANCHORED_132_REVERSED, contains_bivincular
from .perms import Perm, contains, reverse, standardize, swap_first_two

PATTERN_231: Perm = (2, 3, 1)
PATTERN_132: Perm = (1, 3, 2)

# The six mutually exclusive hypothesis labels, in presentation order.
LABEL_SWAP_231_AND_231 = "swap>=231 & self>=231"
LABEL_SWAP_231_NOT_231 = "swap>=231 & self-avoids-231"
LABEL_PLAIN_AVOIDS_231 = "swap-avoids-231 & swap1!=1 & self-avoids-231"
LABEL_CONTAINS_231_NOT_MIRROR = "swap-avoids-231 & swap1!=1 & self-avoids-rev-anchored-132 & self>=231"
LABEL_CONTAINS_MIRROR = "swap-avoids-231 & swap1!=1 & self>=rev-anchored-132"
LABEL_NOT_EFFECTIVE = "swap-avoids-231 & swap1=1"

ALL_LABELS = (
    LABEL_SWAP_231_AND_231,
    LABEL_SWAP_231_NOT_231,
    LABEL_PLAIN_AVOIDS_231,
    LABEL_CONTAINS_231_NOT_MIRROR,
    LABEL_CONTAINS_MIRROR,
    LABEL_NOT_EFFECTIVE,
)


@dataclass(frozen=True)
class ClassificationRow:
    pattern: Perm
    is_class: bool
    class_basis: tuple[Perm, ...] | None
    is_effective: bool
    sortables_avoid_anchored_132: bool
    label: str


def sort_is_class(pattern: Perm) -> tuple[bool, tuple[Perm, ...] | None]:
    """Do the sortable inputs form a pattern-avoidance class, and if so with
    which basis?

    The sortable set is a class exactly when the pattern with its first two
    entries swapped contains 231; the basis is {132} when the pattern itself
    contains 231 and {132, reverse(pattern)} otherwise.
    """
    if len(pattern) < 3:
        raise ValueError("classification requires pattern length >= 3")
    if not contains(swap_first_two(pattern), PATTERN_231):
        return False, None
    if contains(pattern, PATTERN_231):
        return True, (PATTERN_132,)
    return True, (PATTERN_132, reverse(pattern))


def is_effective(pattern: Perm) -> bool:
    """Does the restricted stack keep its own pattern out of every sorted
    output?

    Fails exactly when swapping the first two entries yields 1 followed by a
    231-avoiding remainder.
    """
    if len(pattern) < 2:
        raise ValueError("effectiveness requires pattern length >= 2")
    swapped = swap_first_two(pattern)
    if swapped[0] != 1:
        return True
    return contains(standardize(swapped[1:]), PATTERN_231)


def sortables_avoid_anchored_132(pattern: Perm) -> bool:
    """Do all sortable inputs avoid the anchored-132 pattern?

    False exactly when the pattern starts with its two largest values in
    ascending order followed by a 231-avoiding remainder; equivalently, when
    the swapped pattern avoids 231 and the pattern contains the mirror of
    the anchored-132 pattern.
    """
    if len(pattern) < 3:
        raise ValueError("this predicate requires pattern length >= 3")
    if contains(swap_first_two(pattern), PATTERN_231):
        return True
    return not contains_bivincular(pattern, ANCHORED_132_REVERSED)


def skew_12_decomposition(pattern: Perm) -> Perm | None:
    """The tail beta such that pattern = skew_sum((1, 2), beta), if any."""
    if len(pattern) < 3:
        raise ValueError("decomposition requires pattern length >= 3")
    n = len(pattern)
    if pattern[0] == n - 1 and pattern[1] == n:
        return pattern[2:]
    return None


def hypothesis_label(pattern: Perm) -> str:
    swapped = swap_first_two(pattern)
    if contains(swapped, PATTERN_231):
        if contains(pattern, PATTERN_231):
            return LABEL_SWAP_231_AND_231
        return LABEL_SWAP_231_NOT_231
    if swapped[0] == 1:
        return LABEL_NOT_EFFECTIVE
    if not contains(pattern, PATTERN_231):
        return LABEL_PLAIN_AVOIDS_231
    if contains_bivincular(pattern, ANCHORED_132_REVERSED):
        return LABEL_CONTAINS_MIRROR
    return LABEL_CONTAINS_231_NOT_MIRROR


def classification_row(pattern: Perm) -> ClassificationRow:
    if len(pattern) < 3:
        raise ValueError("classification requires pattern length >= 3")
    is_class, basis = sort_is_class(pattern)
    return ClassificationRow(
        pattern=pattern,
        is_class=is_class,
        class_basis=basis,
        is_effective=is_effective(pattern),
        sortables_avoid_anchored_132=sortables_avoid_anchored_132(pattern),
        label=hypothesis_label(pattern),
    )
