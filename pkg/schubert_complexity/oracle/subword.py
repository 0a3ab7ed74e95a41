"""Bruhat order by the subword property, independent of rank tables."""

from typing import Set

from schubert_complexity.exceptions import SizeMismatchError
from schubert_complexity.perm_core import Permutation, identity, reduced_word


def bruhat_subword_leq(v: Permutation, w: Permutation) -> bool:
    """
    v <= w iff v is a product of a subword of one reduced word of w.

    All subword products of a reduced word of w are exactly the elements of
    [e, w], so the reachable set is built letter by letter.
    """
    if v.n != w.n:
        raise SizeMismatchError(f"cannot compare S_{v.n} with S_{w.n}")
    reachable: Set[Permutation] = {identity(w.n)}
    for letter in reduced_word(w):
        reachable |= {x.right_multiply(letter, letter + 1) for x in reachable}
    return v in reachable
