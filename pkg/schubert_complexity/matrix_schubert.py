"""
Matrix Schubert varieties and their T x T actions.

For w in S_n the matrix Schubert variety splits as Y_w x C^d where Y_w is
the projection to the entries of L(w). The weight cone sigma_w is the edge
cone of G_w (edges a -> b* for (a, b) in L(w)), so

    complexity(Y_w) = |L'(w)| - dim sigma_w.

Toricity is witnessed three ways: the hook decomposition of L'(w), pattern
avoidance of 4312 and 3412, and complexity zero. Reflections w -> w * s_M
of toric w are classified by the staircase label of column M.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Set, Tuple

from schubert_complexity.diagram import (
    ColumnLabel,
    StaircaseStructure,
    hook_decomposition,
    hooks_of,
    regions,
)
from schubert_complexity.exceptions import NotToricError, ShapeError
from schubert_complexity.graph_kit import DiGraph, bipartite_graph, cone_dimension, star
from schubert_complexity.perm_core import TORIC_PATTERNS, Cell, Permutation, avoids

logger = logging.getLogger(__name__)


@dataclass
class SymLowBlock:
    """Dimensions of the symmetric and lower triangular variants."""

    dim_x: int
    dim_y: int
    sw_upper: int
    graph: DiGraph
    dim_sigma: int
    complexity: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "dim_X": self.dim_x,
            "dim_Y": self.dim_y,
            "sw_upper": self.sw_upper,
            "graph_edges": [[str(a), str(b)] for a, b in self.graph.edges],
            "dim_sigma": self.dim_sigma,
            "complexity": self.complexity,
        }


@dataclass
class MSReport:
    w: Permutation
    diagram_size: int
    dim_x: int
    free_dimension: int
    dim_y: int
    graph: DiGraph
    dim_sigma: int
    complexity: int
    toric_by_hooks: bool
    toric_by_patterns: bool
    sym_low: Optional[SymLowBlock] = None

    @property
    def toric(self) -> bool:
        return self.complexity == 0

    def to_dict(self) -> Dict[str, object]:
        return {
            "w": str(self.w),
            "diagram_size": self.diagram_size,
            "dim_X": self.dim_x,
            "free_dimension": self.free_dimension,
            "dim_Y": self.dim_y,
            "graph_edges": [[str(a), str(b)] for a, b in self.graph.edges],
            "dim_sigma": self.dim_sigma,
            "complexity": self.complexity,
            "toric": self.toric,
            "toric_by_hooks": self.toric_by_hooks,
            "toric_by_patterns": self.toric_by_patterns,
            "sym_low": None if self.sym_low is None else self.sym_low.to_dict(),
        }


def weight_graph(w: Permutation) -> DiGraph:
    """G_w: a -> b* for every (a, b) in L(w); isolated vertices are left out."""
    return bipartite_graph(regions(w).l)


def complexity(w: Permutation) -> int:
    return len(regions(w).lprime) - cone_dimension(weight_graph(w), verify_rank=False)


def is_toric(w: Permutation) -> bool:
    return hook_decomposition(w) is not None


def analyze_sym_low(w: Permutation) -> SymLowBlock:
    """
    Symmetric / lower triangular variant of Y_w.

    Both variants share dimensions and complexity: everything drops by
    |SW(w) above the diagonal|, and the weight cone keeps its dimension.
    """
    reg = regions(w)
    n = w.n
    sw_upper = sum(1 for i, j in reg.sw if i < j)
    graph = bipartite_graph((i, j) for i, j in reg.l if i >= j)
    plain = complexity(w)
    dim_x = n * n - len(reg.diagram) - comb(n, 2)
    dim_y = len(reg.lprime) - sw_upper
    return SymLowBlock(
        dim_x=dim_x,
        dim_y=dim_y,
        sw_upper=sw_upper,
        graph=graph,
        dim_sigma=cone_dimension(graph),
        complexity=plain - sw_upper,
    )


def analyze(w: Permutation, sym_low: bool = False) -> MSReport:
    """Dimensions, weight cone and complexity of the matrix Schubert variety of w."""
    reg = regions(w)
    n = w.n
    graph = weight_graph(w)
    dim_sigma = cone_dimension(graph)
    dim_y = len(reg.lprime)
    report = MSReport(
        w=w,
        diagram_size=len(reg.diagram),
        dim_x=n * n - len(reg.diagram),
        free_dimension=n * n - len(reg.sw),
        dim_y=dim_y,
        graph=graph,
        dim_sigma=dim_sigma,
        complexity=dim_y - dim_sigma,
        toric_by_hooks=is_toric(w),
        toric_by_patterns=avoids(w, *TORIC_PATTERNS),
    )
    if sym_low:
        report.sym_low = analyze_sym_low(w)
    logger.debug(f"Analyzed Y_{w}: dim {dim_y}, complexity {report.complexity}")
    return report


def embed_for_symmetric(v: Permutation) -> Permutation:
    """w = (v1+m, ..., vm+m, m, ..., 1) in S_2m; SW(w) stays below the diagonal."""
    m = v.n
    return Permutation(tuple(x + m for x in v.word) + tuple(range(m, 0, -1)))


# Reflections


@dataclass(frozen=True)
class ReflectionVerdict:
    w: Permutation
    m: int
    label: ColumnLabel
    case: str
    predicted_toric: bool
    actual_toric: bool
    weight_cone_delta: str
    cone_rule_holds: Optional[bool] = None

    @property
    def agrees(self) -> bool:
        return self.predicted_toric == self.actual_toric

    def to_dict(self) -> Dict[str, object]:
        return {
            "w": str(self.w),
            "M": self.m,
            "label": str(self.label),
            "case": self.case,
            "predicted_toric": self.predicted_toric,
            "actual_toric": self.actual_toric,
            "agrees": self.agrees,
            "weight_cone_delta": self.weight_cone_delta,
            "cone_rule_holds": self.cone_rule_holds,
        }


def _alpha_case(structure: StaircaseStructure, label: ColumnLabel) -> Tuple[str, bool]:
    step = structure.step(label)
    i, k = label.i, label.k
    if i == 1 and k == 1 and not label.column_is_last:
        if step.height == 0:
            return "non-toric-1", False
        return "toric-1", True
    if k == 1 and not label.column_is_last:
        return "toric-2", True
    if label.column_is_last and not label.step_is_last:
        if structure.step(label, i + 1).height >= 2:
            return "non-toric-2", False
        return "toric-3", True
    if label.column_is_last:
        beta = structure.beta_staircase(label.j + 1)
        if beta is None or beta.steps[0].height > 0:
            return "non-toric-3", False
        if step.width > min(1, step.height):
            return "non-toric-3", False
        return "toric-4", True
    return "non-toric-4", False


def _beta_case(structure: StaircaseStructure, label: ColumnLabel) -> Tuple[str, bool]:
    step = structure.step(label)
    k = label.k
    if label.column_is_last:
        return "toric-7", True
    if min(step.height, 2) < k:
        return "non-toric-5", False
    return ("toric-5", True) if k == 1 else ("toric-6", True)


def _predict(structure: StaircaseStructure, label: ColumnLabel) -> Tuple[str, Optional[bool]]:
    if label.kind == "hook":
        return "toric-8", True
    if label.kind == "alpha":
        return _alpha_case(structure, label)
    if label.kind == "beta":
        return _beta_case(structure, label)
    return "unlabeled", None


def _edge_cells(w: Permutation) -> Set[Cell]:
    return set(regions(w).l.cells)


def _cone_delta(w: Permutation, moved: Permutation, m: int) -> str:
    """Describe how G and the hooks change from w to w * s_M."""
    before, after = regions(w), regions(moved)
    hooks_before = hooks_of(before.lprime)
    hooks_after = hooks_of(after.lprime)
    if hooks_after is None:
        return "non-toric"
    if before.lprime == after.lprime:
        gained = _edge_cells(moved) - _edge_cells(w)
        lost = _edge_cells(w) - _edge_cells(moved)
        if not gained and not lost:
            return "no-change"
        if gained == {(w(m), m)} and not lost:
            return f"gains edge {w(m)}->{star(m)}"
        if lost == {(w(m + 1), m)} and not gained:
            return f"loses edge {w(m + 1)}->{star(m)}"
        return "edges changed"
    assert hooks_before is not None
    if len(hooks_after) > len(hooks_before):
        return "new-hook"
    if len(hooks_after) < len(hooks_before):
        return "hook removed"
    for old, new in zip(hooks_before, hooks_after):
        if new.height < old.height:
            return "hook shorter"
        if new.height > old.height:
            return "hook taller"
        if new.width < old.width:
            return "hook narrower"
        if new.width > old.width:
            return "hook wider"
    return "hook moved"


def _cone_rule(case: str, label: ColumnLabel, w: Permutation, m: int, delta: str) -> Optional[bool]:
    """Check the edge gained or lost when the case predicts one; None if it predicts nothing."""
    if case == "toric-2" or (case == "toric-4" and label.i != 1):
        return delta == f"gains edge {w(m)}->{star(m)}"
    if case == "toric-3" and (label.k != 1 or label.i != 1):
        return delta == f"loses edge {w(m + 1)}->{star(m)}"
    return None


def reflection_classify(w: Permutation, m: int) -> ReflectionVerdict:
    """
    Predict whether Y_{w * s_M} is toric from the label of column M.

    Raises:
        NotToricError: if Y_w is not toric
        ShapeError: if M is outside 1..n-1
    """
    if not 1 <= m < w.n:
        raise ShapeError(f"M = {m} is outside 1..{w.n - 1}")
    structure = hook_decomposition(w)
    if structure is None:
        raise NotToricError(f"Y_{w} is not toric")
    moved = w.right_multiply(m, m + 1)
    actual = is_toric(moved)
    label = structure.label(m)
    case, predicted = _predict(structure, label)
    if predicted is None:
        predicted = actual
    delta = _cone_delta(w, moved, m)
    verdict = ReflectionVerdict(
        w=w,
        m=m,
        label=label,
        case=case,
        predicted_toric=predicted,
        actual_toric=actual,
        weight_cone_delta=delta,
        cone_rule_holds=_cone_rule(case, label, w, m, delta),
    )
    if not verdict.agrees:
        logger.warning(f"Reflection of {w} at {m} ({label}, {case}) predicted {predicted}, got {actual}")
    return verdict


def scan_reflections(w: Permutation) -> List[ReflectionVerdict]:
    return [reflection_classify(w, m) for m in range(1, w.n)]
