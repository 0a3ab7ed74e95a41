"""
Statistical models behind matrix Schubert and Kazhdan-Lusztig varieties.

Gaussian conditional independence: a statement A _||_ B | C on m variables
asks rank(Sigma_{A u C, B u C}) <= |C| on a symmetric covariance matrix.
Two interval shapes of (A, B, C) give symmetric matrix Schubert varieties,
and two parameter families give Kazhdan-Lusztig varieties.

Quasi-independence: every toric matrix Schubert variety splits into one
two-way quasi-independence model per hook, and each of them has a rational
maximum likelihood estimate (its graph is doubly chordal bipartite).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple

from schubert_complexity import kl_variety, matrix_schubert
from schubert_complexity.diagram import components, hook_decomposition, regions
from schubert_complexity.exceptions import ConsistencyError, NotToricError, ShapeError
from schubert_complexity.graph_kit import DiGraph, bipartite_graph, doubly_chordal_bipartite
from schubert_complexity.perm_core import Cell, Permutation
from schubert_complexity.symbolic import (
    DEFAULT_MINOR_SIZE_LIMIT,
    Polynomial,
    block_minors,
    expand_conditions,
    fulton_conditions,
    symmetric_matrix,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CIStatement:
    """A _||_ B | C on the variables 1..m."""

    m: int
    a: FrozenSet[int]
    b: FrozenSet[int]
    c: FrozenSet[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", frozenset(self.a))
        object.__setattr__(self, "b", frozenset(self.b))
        object.__setattr__(self, "c", frozenset(self.c))
        if not self.a or not self.b:
            raise ShapeError("A and B must be nonempty")
        if self.a & self.b or self.a & self.c or self.b & self.c:
            raise ShapeError("A, B and C must be pairwise disjoint")
        if not (self.a | self.b | self.c) <= set(range(1, self.m + 1)):
            raise ShapeError(f"A, B and C must lie in 1..{self.m}")

    def __str__(self) -> str:
        def fmt(part: FrozenSet[int]) -> str:
            return "{" + ",".join(str(x) for x in sorted(part)) + "}"

        return f"{fmt(self.a)} _||_ {fmt(self.b)} | {fmt(self.c)}"

    def to_dict(self) -> Dict[str, object]:
        return {"m": self.m, "A": sorted(self.a), "B": sorted(self.b), "C": sorted(self.c)}


@dataclass(frozen=True)
class CICondition:
    """(|C|+1)-minors of Sigma restricted to rows A u C and columns B u C."""

    statement: CIStatement
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    bound: int

    def minors(self, size_limit: int = DEFAULT_MINOR_SIZE_LIMIT) -> List[Polynomial]:
        matrix, cells = symmetric_matrix(self.statement.m, "s")
        return block_minors(
            matrix, self.rows, self.cols, self.bound + 1, cells, "s", size_limit
        )


def ci_condition(stmt: CIStatement) -> CICondition:
    return CICondition(
        statement=stmt,
        rows=tuple(sorted(stmt.a | stmt.c)),
        cols=tuple(sorted(stmt.b | stmt.c)),
        bound=len(stmt.c),
    )


def _interval(part: FrozenSet[int]) -> Optional[Tuple[int, int]]:
    if not part:
        return None
    low, high = min(part), max(part)
    return (low, high) if len(part) == high - low + 1 else None


def _realize_oriented(m: int, a: FrozenSet[int], b: FrozenSet[int], c: FrozenSet[int]) -> Optional[Permutation]:
    span_a, span_b = _interval(a), _interval(b)
    if span_a is None or span_b is None or span_a[0] != 1 or span_b[1] != m:
        return None
    i, j = span_a[1], span_b[0]
    n = m
    if not c:
        if i >= j:
            return None
        word = (
            list(range(j - 1, j - i - 1, -1))
            + list(range(n, j - 1, -1))
            + list(range(j - i - 1, 0, -1))
        )
        return Permutation(tuple(word))
    if c != frozenset(range(i + 1, j)) or i >= j - 1:
        return None
    word = (
        list(range(n, n - j + i + 1, -1))
        + list(range(i, 0, -1))
        + list(range(n - j + i + 1, i, -1))
    )
    return Permutation(tuple(word))


def ci_realize_ms(stmt: CIStatement) -> Optional[Permutation]:
    """
    The permutation whose symmetric matrix Schubert variety is the CI variety.

    A must be an initial interval [1, i] and B a final one [j, m], with C
    empty or exactly the gap between them. A and B may be given in either
    order. Returns None for every other statement.
    """
    w = _realize_oriented(stmt.m, stmt.a, stmt.b, stmt.c)
    if w is None:
        w = _realize_oriented(stmt.m, stmt.b, stmt.a, stmt.c)
    if w is None:
        logger.debug(f"{stmt} is not realizable as a symmetric matrix Schubert variety")
    return w


def ci_from_permutation(w: Permutation) -> Optional[CIStatement]:
    """The statement realized by w, if w has one of the two realizable shapes."""
    m = w.n
    for i in range(1, m):
        for j in range(i + 1, m + 1):
            a = frozenset(range(1, i + 1))
            b = frozenset(range(j, m + 1))
            gap = frozenset(range(i + 1, j))
            for c in (frozenset(), gap) if gap else (gap,):
                stmt = CIStatement(m, a, b, c)
                if ci_realize_ms(stmt) == w:
                    return stmt
    return None


def symmetric_generators(
    w: Permutation, size_limit: int = DEFAULT_MINOR_SIZE_LIMIT
) -> List[Polynomial]:
    """Fulton conditions of w imposed on a symmetric variable matrix."""
    matrix, cells = symmetric_matrix(w.n, "s")
    return expand_conditions(matrix, fulton_conditions(w), cells, "s", size_limit)


def ms_ci_complexity(stmt: CIStatement) -> int:
    """
    Complexity of the symmetric variety of a realizable statement.

    0 for C empty, (|C| - 1)(m - 1 - |C|/2) otherwise; checked against the
    symmetric complexity of the realizing permutation.

    Raises:
        ShapeError: if the statement is not realizable
        ConsistencyError: if formula and direct computation differ
    """
    w = ci_realize_ms(stmt)
    if w is None:
        raise ShapeError(f"{stmt} is not realizable as a symmetric matrix Schubert variety")
    size = len(stmt.c)
    formula = Fraction(0) if size == 0 else (size - 1) * (stmt.m - 1 - Fraction(size, 2))
    if formula.denominator != 1:
        raise ConsistencyError(f"non-integral complexity {formula} for {stmt}")
    direct = matrix_schubert.analyze_sym_low(w).complexity
    if direct != formula:
        logger.error(f"CI complexity for {stmt}: formula {formula}, direct {direct}")
        raise ConsistencyError(f"{stmt}: formula {formula} != direct {direct}")
    return int(formula)


@dataclass(frozen=True)
class KLCIInstance:
    v: Permutation
    w: Permutation
    statement: CIStatement

    @property
    def formula(self) -> int:
        m = self.statement.m
        return m * (m - 1) // 2 - len(self.statement.a) * len(self.statement.b)

    def to_dict(self) -> Dict[str, object]:
        return {
            "v": str(self.v),
            "w": str(self.w),
            "statement": self.statement.to_dict(),
            "formula": self.formula,
        }


def kl_ci_construct(m: int, k: int, l: int, case: int = 1, n: Optional[int] = None) -> KLCIInstance:
    """
    Kazhdan-Lusztig pair whose variety is the CI variety of a statement on m variables.

    Args:
        m: number of Gaussian variables
        k, l: block sizes; case 1 needs k + l <= m, case 2 needs k + l = m + 1
        case: 1 for A = [1,k], B = [m-l+1, m], C empty;
            2 for A = [1,k-1], B = [k+1, m], C = {k}
        n: permutation size, at least m + 1 (default m + 1)

    Raises:
        ShapeError: if the parameters violate the case constraints
        ConsistencyError: if the complexity differs from m(m-1)/2 - |A||B|
    """
    n = m + 1 if n is None else n
    if n < m + 1 or k < 1 or l < 1:
        raise ShapeError(f"need k, l >= 1 and n >= m + 1, got k={k}, l={l}, n={n}, m={m}")
    v = Permutation(tuple(range(n - m, n + 1)) + tuple(range(n - m - 1, 0, -1)))
    if case == 1:
        if k + l > m:
            raise ShapeError(f"case 1 needs k + l <= m, got {k} + {l} > {m}")
        word = (
            list(range(n - l, n - l - k, -1))
            + list(range(n, n - l, -1))
            + list(range(n - l - k, 0, -1))
        )
        stmt = CIStatement(m, frozenset(range(1, k + 1)), frozenset(range(m - l + 1, m + 1)))
    elif case == 2:
        if k + l != m + 1:
            raise ShapeError(f"case 2 needs k + l = m + 1, got {k} + {l} != {m + 1}")
        s, t = k - 1, l - 1
        word = (
            [n]
            + list(range(n - 1 - t, n - t - s - 1, -1))
            + list(range(n - 1, n - t - 1, -1))
            + list(range(n - t - s - 1, 0, -1))
        )
        stmt = CIStatement(
            m, frozenset(range(1, k)), frozenset(range(k + 1, m + 1)), frozenset({k})
        )
    else:
        raise ShapeError(f"unknown case {case}")
    instance = KLCIInstance(v, Permutation(tuple(word)), stmt)
    direct = kl_variety.complexity(instance.v, instance.w)
    if direct != instance.formula:
        logger.error(f"KL CI complexity for {instance.v}, {instance.w}: {direct} vs {instance.formula}")
        raise ConsistencyError(f"complexity {direct} != {instance.formula}")
    return instance


# Quasi-independence


@dataclass(frozen=True)
class QIModel:
    """Two-way quasi-independence model on [m] x [n] with state space S."""

    m: int
    n: int
    states: FrozenSet[Cell]
    row_map: Tuple[Tuple[int, int], ...] = ()
    col_map: Tuple[Tuple[int, int], ...] = ()

    @property
    def graph(self) -> DiGraph:
        return bipartite_graph(sorted(self.states))

    def to_dict(self) -> Dict[str, object]:
        return {
            "m": self.m,
            "n": self.n,
            "states": [list(s) for s in sorted(self.states)],
            "row_map": {str(k): x for k, x in self.row_map},
            "col_map": {str(k): x for k, x in self.col_map},
        }


def qi_from_toric(w: Permutation) -> List[QIModel]:
    """
    One model per hook: the cells of the matching component of L(w), rows
    renumbered top to bottom and columns left to right.

    Raises:
        NotToricError: if Y_w is not toric
    """
    if hook_decomposition(w) is None:
        raise NotToricError(f"Y_{w} is not toric")
    models = []
    for part in components(regions(w).l):
        rows = sorted({i for i, _ in part})
        cols = sorted({j for _, j in part})
        row_index = {r: x for x, r in enumerate(rows, start=1)}
        col_index = {c: y for y, c in enumerate(cols, start=1)}
        states = frozenset((row_index[i], col_index[j]) for i, j in part)
        models.append(
            QIModel(
                m=len(rows),
                n=len(cols),
                states=states,
                row_map=tuple(row_index.items()),
                col_map=tuple(col_index.items()),
            )
        )
    return models


def qi_union(w: Permutation) -> QIModel:
    """All hook models of w as one model on the disjoint union of their state spaces."""
    states = set()
    row_map: List[Tuple[int, int]] = []
    col_map: List[Tuple[int, int]] = []
    row_offset = col_offset = 0
    for model in qi_from_toric(w):
        states |= {(i + row_offset, j + col_offset) for i, j in model.states}
        row_map.extend((r, x + row_offset) for r, x in model.row_map)
        col_map.extend((c, y + col_offset) for c, y in model.col_map)
        row_offset += model.m
        col_offset += model.n
    return QIModel(row_offset, col_offset, frozenset(states), tuple(row_map), tuple(col_map))


def rational_mle(model: QIModel) -> bool:
    """The model has a rational MLE iff its graph is doubly chordal bipartite."""
    return doubly_chordal_bipartite(model.graph)
