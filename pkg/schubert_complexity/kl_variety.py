"""
Kazhdan-Lusztig varieties N_{v,w}.

Z^(v) is the slice through v: 1s at (v(i), i), zeros east and north of
each 1, free variables on D°(v). A free cell (i, j) is an unexpected zero
when t_{v(j),i} v is not below w. The graph G_{v,w} has an edge
v(j) -> i for every other free cell; its edge cone is the weight cone of
the torus action, and

    complexity = dim N_{v,w} - dim sigma_{v,w}
               = nu(G_{v,w}) - |D°(w)| + #unexpected zeros.

Also here: the interval toolkit (extending and gluing toric intervals,
moved indices, components from one-line notation), the pair set P_v with
the corner/antidiagonal counts, and the closed complexity formulas for
rectangular diagrams and for w = w0 * t_{l,k}.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, FrozenSet, List, Optional, Set, Tuple, Union

import sympy as sp

from schubert_complexity import bruhat
from schubert_complexity.diagram import components, opposite_rothe, sw_corners
from schubert_complexity.exceptions import (
    ConsistencyError,
    DomainError,
    NotBruhatLeqError,
    NotToricError,
    ShapeError,
    UnexpectedZerosError,
)
from schubert_complexity.graph_kit import (
    DiGraph,
    components_graph,
    cone_dimension,
    cyclomatic,
    has_cycle,
)
from schubert_complexity.perm_core import Cell, Permutation, diagram_size, longest, simple
from schubert_complexity.symbolic import (
    DEFAULT_MINOR_SIZE_LIMIT,
    Polynomial,
    expand_conditions,
    fulton_conditions,
    reduce_generators,
    variable,
    variable_name,
)

logger = logging.getLogger(__name__)

Pair = Tuple[Cell, Cell]


@dataclass(frozen=True)
class ZMatrix:
    """The matrix Z^(v) with entries 1, 0 or a free variable z_ij."""

    v: Permutation
    variables: FrozenSet[Cell]

    @property
    def n(self) -> int:
        return self.v.n

    def entry(self, i: int, j: int) -> Union[int, str]:
        if self.v(j) == i:
            return 1
        if (i, j) in self.variables:
            return variable_name("z", i, j)
        return 0

    def to_sympy(self, prefix: str = "z") -> Tuple[sp.Matrix, Dict[sp.Symbol, Cell]]:
        cells = {variable(prefix, i, j): (i, j) for i, j in self.variables}

        def value(r: int, c: int) -> sp.Expr:
            i, j = r + 1, c + 1
            if self.v(j) == i:
                return sp.Integer(1)
            if (i, j) in self.variables:
                return variable(prefix, i, j)
            return sp.Integer(0)

        return sp.Matrix(self.n, self.n, value), cells

    def rows(self) -> List[List[str]]:
        return [
            [str(self.entry(i, j)) for j in range(1, self.n + 1)]
            for i in range(1, self.n + 1)
        ]

    def __str__(self) -> str:
        table = self.rows()
        width = max(len(x) for row in table for x in row)
        return "\n".join(" ".join(x.rjust(width) for x in row) for row in table)


def z_matrix(v: Permutation) -> ZMatrix:
    return ZMatrix(v, opposite_rothe(v).cells)


def _require_leq(v: Permutation, w: Permutation) -> None:
    if not bruhat.leq(v, w):
        raise NotBruhatLeqError(v, w)


def unexpected_zeros(v: Permutation, w: Permutation) -> FrozenSet[Cell]:
    """Free cells (i, j) of Z^(v) with t_{v(j),i} v not below w."""
    _require_leq(v, w)
    return frozenset(
        (i, j)
        for i, j in opposite_rothe(v).cells
        if not bruhat.leq(v.left_multiply(v(j), i), w)
    )


def kl_graph(v: Permutation, w: Permutation) -> DiGraph:
    """G_{v,w} on [n]: v(j) -> i for every free cell that is not an unexpected zero."""
    zeros = unexpected_zeros(v, w)
    edges = [(v(j), i) for i, j in sorted(opposite_rothe(v).cells) if (i, j) not in zeros]
    return DiGraph(vertices=range(1, v.n + 1), edges=edges)


def bar_graph(v: Permutation) -> DiGraph:
    """The graph of all free cells, i.e. G_{v,w} when no coordinate vanishes."""
    edges = [(v(j), i) for i, j in sorted(opposite_rothe(v).cells)]
    return DiGraph(vertices=range(1, v.n + 1), edges=edges)


def kl_dimension(v: Permutation, w: Permutation) -> int:
    """
    dim N_{v,w} by |D°(v)| - |D°(w)|, checked against l(w) - l(v).

    Raises:
        ConsistencyError: if the two counts differ
    """
    by_diagram = diagram_size(v) - diagram_size(w)
    by_length = w.length - v.length
    if by_diagram != by_length:
        raise ConsistencyError(f"dim N_{{{v},{w}}}: {by_diagram} != {by_length}")
    return by_diagram


def complexity(v: Permutation, w: Permutation) -> int:
    """Complexity of the torus action on N_{v,w}."""
    return kl_dimension(v, w) - cone_dimension(kl_graph(v, w), verify_rank=False)


def is_toric(v: Permutation, w: Permutation) -> bool:
    return complexity(v, w) == 0


def generators(
    v: Permutation, w: Permutation, size_limit: int = DEFAULT_MINOR_SIZE_LIMIT
) -> List[Polynomial]:
    """
    Generators of the ideal of N_{v,w}.

    The minors of Z^(v) imposed by the essential rank conditions of w, less
    those already in the ideal of the rest.
    """
    _require_leq(v, w)
    matrix, cells = z_matrix(v).to_sympy()
    minors = expand_conditions(matrix, fulton_conditions(w), cells, "z", size_limit)
    return reduce_generators(minors)


# Pairs, corners and isolated vertices


def pair_distance(first: Cell, second: Cell) -> int:
    return (second[0] - first[0]) + (second[1] - first[1])


def pairs(v: Permutation, reverse_ties: bool = False) -> List[Pair]:
    """
    The set P_v of north-west / south-east pairs in D°(v).

    Candidates ((i,j),(k,l)) with i < k and j < l are taken in increasing
    distance. A candidate is added unless (i,j) already starts a pair, or
    (k,l) already ends one, at a strictly smaller distance. Candidates at
    equal distance are read lexicographically, or in reverse with
    reverse_ties; the result has the same size either way.
    """
    cells = sorted(opposite_rothe(v).cells)
    candidates = [
        (a, b) for a in cells for b in cells if a[0] < b[0] and a[1] < b[1]
    ]
    candidates.sort(reverse=reverse_ties)
    candidates.sort(key=lambda p: pair_distance(*p))
    starts: Dict[Cell, int] = {}
    ends: Dict[Cell, int] = {}
    chosen: List[Pair] = []
    for first, second in candidates:
        d = pair_distance(first, second)
        if starts.get(first, d) < d or ends.get(second, d) < d:
            continue
        chosen.append((first, second))
        starts.setdefault(first, d)
        ends.setdefault(second, d)
    return chosen


def cv(v: Permutation) -> FrozenSet[Cell]:
    """South-west corners of D°(v)."""
    return sw_corners(opposite_rothe(v))


def av(v: Permutation) -> FrozenSet[int]:
    """Positions i with v(i) = n - i + 1 whose row and column avoid D°(v)."""
    d = opposite_rothe(v)
    n = v.n
    return frozenset(
        i
        for i in range(1, n + 1)
        if v(i) == n - i + 1 and not d.column(i) and not d.row(v(i))
    )


@dataclass(frozen=True)
class PairAnalytics:
    """Corner, antidiagonal and pair counts for a slice without vanishing coordinates."""

    corners: FrozenSet[Cell]
    antidiagonal: FrozenSet[int]
    pairs: Tuple[Pair, ...]
    nu: int
    dim_sigma: int
    complexity: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "C_v": [list(c) for c in sorted(self.corners)],
            "A_v": sorted(self.antidiagonal),
            "P_v": [[list(a), list(b)] for a, b in self.pairs],
            "nu": self.nu,
            "dim_sigma": self.dim_sigma,
            "complexity": self.complexity,
        }


def no_unexpected_zero_analytics(
    v: Permutation, w: Permutation, assume_no_actual_zeros: bool = False
) -> PairAnalytics:
    """
    C_v, A_v and P_v for a pair without unexpected zeros.

    Args:
        v: lower permutation
        w: upper permutation
        assume_no_actual_zeros: use the graph of all free cells even when
            some are unexpected zeros; the caller vouches that none of them
            vanishes on N_{v,w}, and a wrong waiver surfaces as a
            ConsistencyError from the complexity cross-check

    Raises:
        UnexpectedZerosError: if unexpected zeros exist and are not waived
        ConsistencyError: if nu differs from |P_v|, the component count
            differs from |C_v| + |A_v|, or |P_v| - |D°(w)| differs from the
            complexity computed from G_{v,w}
    """
    zeros = unexpected_zeros(v, w)
    if zeros and not assume_no_actual_zeros:
        raise UnexpectedZerosError(
            f"Z^({v}) has unexpected zeros {sorted(zeros)} for w = {w}"
        )
    graph = bar_graph(v)
    corners = cv(v)
    antidiagonal = av(v)
    chosen = tuple(pairs(v))
    nu = cyclomatic(graph)
    if nu != len(chosen):
        logger.error(f"nu(G) = {nu} but |P_v| = {len(chosen)} for v = {v}")
        raise ConsistencyError(f"nu = {nu} != |P_v| = {len(chosen)} for {v}")
    dim_sigma = cone_dimension(graph)
    if dim_sigma != v.n - len(corners) - len(antidiagonal):
        raise ConsistencyError(
            f"dim sigma = {dim_sigma} but n - |C_v| - |A_v| = "
            f"{v.n - len(corners) - len(antidiagonal)} for {v}"
        )
    by_pairs = len(chosen) - diagram_size(w)
    direct = complexity(v, w)
    if by_pairs != direct:
        logger.error(f"|P_v| - |D°(w)| = {by_pairs} but complexity {direct} for ({v}, {w})")
        raise ConsistencyError(
            f"|P_v| - |D°(w)| = {by_pairs} != complexity {direct} for ({v}, {w})"
        )
    return PairAnalytics(
        corners=corners,
        antidiagonal=antidiagonal,
        pairs=chosen,
        nu=nu,
        dim_sigma=dim_sigma,
        complexity=by_pairs,
    )


# Reports


@dataclass
class KLReport:
    v: Permutation
    w: Permutation
    dim_n: int
    unexpected_zeros: FrozenSet[Cell]
    graph: DiGraph
    dim_sigma: int
    complexity: int
    generators: Optional[List[Polynomial]] = None
    analytics: Optional[PairAnalytics] = None

    @property
    def toric(self) -> bool:
        return self.complexity == 0

    def to_dict(self) -> Dict[str, object]:
        return {
            "v": str(self.v),
            "w": str(self.w),
            "dim_N": self.dim_n,
            "unexpected_zeros": [list(c) for c in sorted(self.unexpected_zeros)],
            "graph": {
                "vertices": [str(x) for x in self.graph.vertices],
                "edges": [[str(a), str(b)] for a, b in self.graph.edges],
            },
            "dim_sigma": self.dim_sigma,
            "complexity": self.complexity,
            "toric": self.toric,
            "generators": None if self.generators is None else [str(p) for p in self.generators],
            "analytics": None if self.analytics is None else self.analytics.to_dict(),
        }


def analyze(
    v: Permutation,
    w: Permutation,
    with_generators: bool = False,
    size_limit: int = DEFAULT_MINOR_SIZE_LIMIT,
) -> KLReport:
    """
    Full report on N_{v,w}.

    Pair analytics are attached whenever Z^(v) has no unexpected zeros.
    """
    zeros = unexpected_zeros(v, w)
    graph = kl_graph(v, w)
    dim_n = kl_dimension(v, w)
    dim_sigma = cone_dimension(graph)
    report = KLReport(
        v=v,
        w=w,
        dim_n=dim_n,
        unexpected_zeros=zeros,
        graph=graph,
        dim_sigma=dim_sigma,
        complexity=dim_n - dim_sigma,
    )
    if report.complexity < 0:
        raise ConsistencyError(f"negative complexity for ({v}, {w})")
    if with_generators:
        report.generators = generators(v, w, size_limit)
    if not zeros:
        report.analytics = no_unexpected_zero_analytics(v, w)
    logger.info(f"Analyzed N_{{{v},{w}}}: dim {dim_n}, complexity {report.complexity}")
    return report


# Interval toolkit


def _require_toric(v: Permutation, w: Permutation) -> None:
    if not is_toric(v, w):
        raise NotToricError(f"N_{{{v},{w}}} is not toric")


def toric_components(v: Permutation, w: Permutation) -> List[List[int]]:
    """
    Components of G_{v,w} for a toric pair, read from one-line notation.

    a and w^-1(v(a)) always share a component; the components are the
    cycles of that map.
    """
    _require_leq(v, w)
    _require_toric(v, w)
    step = {a: w.inverse_word[v(a) - 1] for a in range(1, v.n + 1)}
    seen: Set[int] = set()
    cycles = []
    for start in range(1, v.n + 1):
        if start in seen:
            continue
        cycle = []
        a = start
        while a not in seen:
            seen.add(a)
            cycle.append(a)
            a = step[a]
        cycles.append(sorted(cycle))
    return cycles


def moved(v: Permutation, w: Permutation) -> List[int]:
    """Indices moved in a toric interval: exactly those with v(a) != w(a)."""
    _require_leq(v, w)
    _require_toric(v, w)
    return [a for a in range(1, v.n + 1) if v(a) != w(a)]


@dataclass(frozen=True)
class ExtensionVerdict:
    transposition: Tuple[int, int]
    predicted_toric: bool
    complexity: int

    @property
    def agrees(self) -> bool:
        return self.predicted_toric == (self.complexity == 0)

    def to_dict(self) -> Dict[str, object]:
        return {
            "transposition": list(self.transposition),
            "predicted_toric": self.predicted_toric,
            "complexity": self.complexity,
            "agrees": self.agrees,
        }


def extend(v: Permutation, w: Permutation, w_next: Permutation) -> ExtensionVerdict:
    """
    Extend a toric [v, w] by a cover w < w_next = w * t_{a,b}.

    The extension stays toric iff a and b lie in different components.

    Raises:
        NotToricError: if [v, w] is not toric
        ChainError: if w_next does not cover w
    """
    _require_leq(v, w)
    step = bruhat.chain_from([w, w_next])
    a, b = step.labels[0]
    where = {x: index for index, part in enumerate(toric_components(v, w)) for x in part}
    verdict = ExtensionVerdict((a, b), where[a] != where[b], complexity(v, w_next))
    logger.debug(f"Extending [{v}, {w}] by t_{a},{b}: {verdict}")
    return verdict


@dataclass(frozen=True)
class GlueVerdict:
    predicted_toric: bool
    complexity: int

    @property
    def agrees(self) -> bool:
        return self.predicted_toric == (self.complexity == 0)

    def to_dict(self) -> Dict[str, object]:
        return {
            "predicted_toric": self.predicted_toric,
            "complexity": self.complexity,
            "agrees": self.agrees,
        }


def glue(u: Permutation, v: Permutation, w: Permutation) -> GlueVerdict:
    """
    Glue toric intervals [u, v] and [v, w].

    The union is toric iff no alternating cycle runs through components of
    the two graphs, i.e. the bipartite component multigraph is a forest.
    """
    lower = toric_components(u, v)
    upper = toric_components(v, w)
    predicted = not has_cycle(components_graph(lower, upper))
    return GlueVerdict(predicted, complexity(u, w))


# Closed formulas


@dataclass(frozen=True)
class FormulaComplexity:
    """A complexity from a closed formula next to the directly computed one."""

    case: str
    formula: int
    direct: int

    @property
    def agrees(self) -> bool:
        return self.formula == self.direct

    def to_dict(self) -> Dict[str, object]:
        return {
            "case": self.case,
            "formula": self.formula,
            "direct": self.direct,
            "agrees": self.agrees,
        }


def rectangle_complexity(v: Permutation, w: Permutation) -> FormulaComplexity:
    """
    Complexity when D°(w) is a single rectangle.

    Below the rank bound at the essential cell no free cell is an unexpected
    zero; at the bound every cell of the rectangle's size is one.

    Raises:
        ShapeError: if D°(w) is not one l x k rectangle
    """
    _require_leq(v, w)
    d = opposite_rothe(w)
    parts = components(d)
    if len(parts) != 1:
        raise ShapeError(f"D°({w}) is not a single rectangle")
    rows = {i for i, _ in d.cells}
    cols = {j for _, j in d.cells}
    if len(rows) * len(cols) != len(d):
        raise ShapeError(f"D°({w}) is connected but not a rectangle")
    a, b = min(rows), max(cols)
    m = w.rank(a, b)
    nu = cyclomatic(kl_graph(v, w))
    if v.rank(a, b) < m:
        result = FormulaComplexity("below-rank", nu - len(d), complexity(v, w))
    else:
        result = FormulaComplexity("at-rank", nu, complexity(v, w))
    return result


def w0t(n: int, l: int, k: int) -> Permutation:
    """w0 * t_{l,k}."""
    if not 1 <= l < k <= n:
        raise ShapeError(f"need 1 <= l < k <= n, got l={l}, k={k}, n={n}")
    return longest(n).right_multiply(l, k)


def w0t_complexity(v: Permutation, l: int, k: int) -> FormulaComplexity:
    """
    Complexity of N_{v,w} for w = w0 * t_{l,k}.

    Both essential cells (n-k+2, l) and (n-l+1, k-1) carry the rank bound
    l - 1 in w. Below it at both cells there are no unexpected zeros; at it
    in exactly one there are k - l; at both the complexity is nu(G_{v,w}).
    """
    w = w0t(v.n, l, k)
    _require_leq(v, w)
    n = v.n
    bound = l - 1
    first = v.rank(n - k + 2, l)
    second = v.rank(n - l + 1, k - 1)
    nu = cyclomatic(kl_graph(v, w))
    direct = complexity(v, w)
    at_bound = (first == bound) + (second == bound)
    if at_bound == 0:
        return FormulaComplexity("below-both", nu - diagram_size(w), direct)
    if at_bound == 1:
        return FormulaComplexity("one-at-bound", nu + l - k + 1, direct)
    return FormulaComplexity("both-at-bound", nu, direct)


def simple_reflection_count(w: Permutation) -> int:
    """#{i : s_i <= w}."""
    return sum(1 for i in range(1, w.n) if bruhat.leq(simple(i, w.n), w))


def complexity_range(
    n: Optional[int] = None,
    v: Optional[Permutation] = None,
    w: Optional[Permutation] = None,
) -> Tuple[int, int]:
    """
    Inclusive range of complexities reached with one of n, v or w fixed.

    Raises:
        DomainError: unless exactly one of them is given
    """
    given = [x is not None for x in (n, v, w)]
    if sum(given) != 1:
        raise DomainError("fix exactly one of n, v, w")
    if n is not None:
        return 0, comb(n - 1, 2)
    if v is not None:
        return 0, len(pairs(v))
    assert w is not None
    return 0, w.length - simple_reflection_count(w)
