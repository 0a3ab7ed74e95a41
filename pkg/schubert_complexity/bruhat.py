"""
Bruhat order on S_n.

v <= w iff r_v(a, b) <= r_w(a, b) for all cells. Covers are right
multiplications by transpositions that raise the length by one. Chains
are generated lazily; chain graphs and the atom graph live on [n]. The
component partitions of all chain graphs are counted without enumeration.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Sequence, Set, Tuple

from schubert_complexity.exceptions import ChainError, NotBruhatLeqError, SizeMismatchError
from schubert_complexity.graph_kit import DiGraph
from schubert_complexity.perm_core import Permutation, rank_table

logger = logging.getLogger(__name__)

Transposition = Tuple[int, int]


def leq(v: Permutation, w: Permutation) -> bool:
    """Rank-function test for v <= w."""
    if v.n != w.n:
        raise SizeMismatchError(f"cannot compare S_{v.n} with S_{w.n}")
    rv, rw = rank_table(v), rank_table(w)
    return all(
        rv[a][b] <= rw[a][b] for a in range(v.n) for b in range(v.n)
    )


def is_cover_step(v: Permutation, a: int, b: int) -> bool:
    """True iff v < v * t_{a,b} is a cover (a < b)."""
    low, high = v(a), v(b)
    if low > high:
        return False
    return not any(low < v(c) < high for c in range(a + 1, b))


def covers(v: Permutation) -> List[Tuple[Transposition, Permutation]]:
    """All (t, v*t) with l(v*t) = l(v) + 1."""
    return [
        ((a, b), v.right_multiply(a, b))
        for a in range(1, v.n)
        for b in range(a + 1, v.n + 1)
        if is_cover_step(v, a, b)
    ]


def cocovers(w: Permutation) -> List[Tuple[Transposition, Permutation]]:
    """All (t, w*t) with l(w*t) = l(w) - 1."""
    result = []
    for a in range(1, w.n):
        for b in range(a + 1, w.n + 1):
            u = w.right_multiply(a, b)
            if is_cover_step(u, a, b):
                result.append(((a, b), u))
    return result


@dataclass(frozen=True)
class Interval:
    """A Bruhat interval [v, w]."""

    v: Permutation
    w: Permutation

    def __post_init__(self) -> None:
        if not leq(self.v, self.w):
            raise NotBruhatLeqError(self.v, self.w)

    @property
    def length(self) -> int:
        return self.w.length - self.v.length

    def elements(self) -> List[Permutation]:
        return elements(self.v, self.w)


def interval(v: Permutation, w: Permutation) -> Interval:
    return Interval(v, w)


def atoms(v: Permutation, w: Permutation) -> List[Tuple[Transposition, Permutation]]:
    """Covers of v that stay below w."""
    if not leq(v, w):
        raise NotBruhatLeqError(v, w)
    return [(t, u) for t, u in covers(v) if leq(u, w)]


def elements(v: Permutation, w: Permutation) -> List[Permutation]:
    """All u with v <= u <= w, ordered by length then lexicographically."""
    if not leq(v, w):
        raise NotBruhatLeqError(v, w)
    seen: Set[Permutation] = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for _, x in covers(u):
            if x not in seen and leq(x, w):
                seen.add(x)
                queue.append(x)
    return sorted(seen, key=lambda u: (u.length, u.word))


@dataclass(frozen=True)
class Chain:
    """Saturated chain u_0 < u_1 < ... with u_{i+1} = u_i * t_{a,b}."""

    elements: Tuple[Permutation, ...]
    labels: Tuple[Transposition, ...]

    @property
    def length(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return self.elements[0].n

    def to_dict(self) -> dict:
        return {
            "elements": [str(u) for u in self.elements],
            "labels": [list(t) for t in self.labels],
        }


def chain_from(items: Sequence[Permutation]) -> Chain:
    """
    Build a chain from consecutive elements, recovering the labels.

    Raises:
        ChainError: if a step is not a cover
    """
    if not items:
        raise ChainError("a chain needs at least one element")
    labels = []
    for low, high in zip(items, items[1:]):
        moved = [i for i in range(1, low.n + 1) if low(i) != high(i)]
        if len(moved) != 2:
            raise ChainError(f"{low} -> {high} is not a transposition step")
        a, b = moved
        if low.right_multiply(a, b) != high or not is_cover_step(low, a, b):
            raise ChainError(f"{low} -> {high} is not a cover")
        labels.append((a, b))
    return Chain(tuple(items), tuple(labels))


def maximal_chains(v: Permutation, w: Permutation) -> Iterator[Chain]:
    """Lazy depth-first enumeration of all maximal chains of [v, w]."""
    if not leq(v, w):
        raise NotBruhatLeqError(v, w)
    stack: List[Tuple[List[Permutation], List[Transposition]]] = [([v], [])]
    while stack:
        path, labels = stack.pop()
        top = path[-1]
        if top == w:
            yield Chain(tuple(path), tuple(labels))
            continue
        for t, u in reversed(covers(top)):
            if leq(u, w):
                stack.append((path + [u], labels + [t]))


def some_chain(v: Permutation, w: Permutation) -> Chain:
    return next(maximal_chains(v, w))


def chain_graph(c: Chain) -> DiGraph:
    """Graph on [n] with one edge (a, b) per chain step, parallel edges kept."""
    return DiGraph(vertices=range(1, c.n + 1), edges=c.labels)


def atom_graph(v: Permutation, w: Permutation) -> DiGraph:
    """Edge (a, b) iff v < v * t_{a,b} <= w is a cover."""
    return DiGraph(vertices=range(1, v.n + 1), edges=[t for t, _ in atoms(v, w)])


Partition = FrozenSet[FrozenSet[int]]


def _merge(parts: Partition, a: int, b: int) -> Partition:
    first = next(p for p in parts if a in p)
    if b in first:
        return parts
    second = next(p for p in parts if b in p)
    return (parts - {first, second}) | {first | second}


def chain_partitions(v: Permutation, w: Permutation) -> Dict[Partition, int]:
    """
    Component partitions of [n] over every maximal chain of [v, w].

    Walks the interval upwards in length order, carrying for each element
    the partitions reached so far and how many chains reach each one. The
    result maps each partition realized at w to its number of chains, so
    no chain is ever enumerated.
    """
    members = elements(v, w)
    inside = set(members)
    start: Partition = frozenset(frozenset([i]) for i in range(1, v.n + 1))
    reached: Dict[Permutation, Dict[Partition, int]] = {v: {start: 1}}
    for u in members:
        here = reached.pop(u, {})
        if u == w:
            logger.debug(f"[{v}, {w}]: {len(here)} partitions over {sum(here.values())} chains")
            return here
        for (a, b), x in covers(u):
            if x not in inside:
                continue
            target = reached.setdefault(x, {})
            for parts, count in here.items():
                merged = _merge(parts, a, b)
                target[merged] = target.get(merged, 0) + count
    return {}
