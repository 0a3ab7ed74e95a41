"""
Opposite Rothe diagrams and the regions derived from them.

D°(w) holds the cells that are neither north nor east of a 1 of the
permutation matrix. From it we read off:
- the essential set Ess(w) (north-east corners of components)
- the dominant piece dom(w), the component of (n, 1)
- SW(w), L(w) = SW \\ dom and L'(w) = SW \\ D°
- for toric w, the hook decomposition of L'(w) and the staircase labels
  (alpha / beta / hook columns) with step widths and heights

Connectivity is 4-adjacency (shared edges), computed with networkx.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from schubert_complexity.perm_core import Cell, Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Diagram:
    """A set of (row, column) cells in an n x n grid."""

    n: int
    cells: FrozenSet[Cell] = field(default_factory=frozenset)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __sub__(self, other: "Diagram") -> "Diagram":
        return Diagram(self.n, self.cells - other.cells)

    def __and__(self, other: "Diagram") -> "Diagram":
        return Diagram(self.n, self.cells & other.cells)

    def __or__(self, other: "Diagram") -> "Diagram":
        return Diagram(self.n, self.cells | other.cells)

    def column(self, j: int) -> List[int]:
        """Rows occupied in column j, top to bottom."""
        return sorted(i for (i, c) in self.cells if c == j)

    def row(self, i: int) -> List[int]:
        return sorted(c for (r, c) in self.cells if r == i)

    def to_list(self) -> List[List[int]]:
        return [[i, j] for (i, j) in sorted(self.cells)]


def opposite_rothe(w: Permutation) -> Diagram:
    """D°(w) = {(i, j) : w(j) < i, w^-1(i) > j}."""
    inv = w.inverse_word
    cells = frozenset(
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(1, w.n + 1)
        if w(j) < i and inv[i - 1] > j
    )
    return Diagram(w.n, cells)


def components(d: Diagram) -> List[Diagram]:
    """Edge-connected components, ordered by their westernmost then northernmost cell."""
    graph = nx.Graph()
    graph.add_nodes_from(d.cells)
    for i, j in d.cells:
        for neighbour in ((i + 1, j), (i, j + 1)):
            if neighbour in d.cells:
                graph.add_edge((i, j), neighbour)
    parts = [frozenset(c) for c in nx.connected_components(graph)]
    parts.sort(key=lambda part: min((j, i) for i, j in part))
    return [Diagram(d.n, part) for part in parts]


def essential_set(d: Diagram) -> FrozenSet[Cell]:
    """North-east corners: cells with nothing of d directly north or directly east."""
    return frozenset(
        (i, j)
        for i, j in d.cells
        if (i - 1, j) not in d.cells and (i, j + 1) not in d.cells
    )


def south_west_of(n: int, corners: Iterable[Cell]) -> Diagram:
    """All cells weakly south-west of at least one of the given cells."""
    cells = set()
    for a, b in corners:
        for i in range(a, n + 1):
            for j in range(1, b + 1):
                cells.add((i, j))
    return Diagram(n, frozenset(cells))


def sw_corners(d: Diagram) -> FrozenSet[Cell]:
    """Cells of d with no cell of d further south in their column or further west in their row."""
    return frozenset(
        (i, j)
        for i, j in d.cells
        if not any((r, j) in d.cells for r in range(i + 1, d.n + 1))
        and not any((i, c) in d.cells for c in range(1, j))
    )


@dataclass(frozen=True)
class Regions:
    """D°(w) and everything read off from it."""

    w: Permutation
    diagram: Diagram
    essential: FrozenSet[Cell]
    dom: Diagram
    sw: Diagram
    l: Diagram
    lprime: Diagram


@lru_cache(maxsize=4096)
def regions(w: Permutation) -> Regions:
    """
    Compute dom, SW, L and L' for w.

    dom is empty when (n, 1) is not in D°(w).
    """
    d = opposite_rothe(w)
    ess = essential_set(d)
    dom = Diagram(w.n)
    if (w.n, 1) in d:
        dom = next(part for part in components(d) if (w.n, 1) in part)
    sw = south_west_of(w.n, ess)
    return Regions(
        w=w,
        diagram=d,
        essential=ess,
        dom=dom,
        sw=sw,
        l=sw - dom,
        lprime=sw - d,
    )


# Hooks and staircases


@dataclass(frozen=True)
class Hook:
    """A corner cell with an arm running north and an arm running east."""

    corner: Cell
    height: int
    width: int

    @property
    def row(self) -> int:
        return self.corner[0]

    @property
    def column(self) -> int:
        return self.corner[1]

    @property
    def top(self) -> int:
        return self.corner[0] - self.height + 1

    @property
    def right(self) -> int:
        return self.corner[1] + self.width - 1

    @property
    def cells(self) -> FrozenSet[Cell]:
        i, j = self.corner
        vertical = {(r, j) for r in range(self.top, i + 1)}
        horizontal = {(i, c) for c in range(j, self.right + 1)}
        return frozenset(vertical | horizontal)

    def to_dict(self) -> Dict[str, object]:
        return {"corner": list(self.corner), "height": self.height, "width": self.width}


def as_hook(part: Diagram) -> Optional[Hook]:
    """Read a connected cell set as a hook, or None if it is not one."""
    row = max(i for i, _ in part.cells)
    col = min(j for i, j in part.cells if i == row)
    height = len(part.column(col))
    width = len(part.row(row))
    hook = Hook((row, col), height, width)
    return hook if hook.cells == part.cells else None


def hooks_of(lprime: Diagram) -> Optional[Tuple[Hook, ...]]:
    """
    Split L' into hooks sharing no row or column.

    Returns:
        Hooks ordered west to east, or None when L' is not such a union
    """
    hooks = []
    for part in components(lprime):
        hook = as_hook(part)
        if hook is None:
            return None
        hooks.append(hook)
    hooks.sort(key=lambda h: h.column)
    for first, second in zip(hooks, hooks[1:]):
        rows_first = set(range(first.top, first.row + 1))
        rows_second = set(range(second.top, second.row + 1))
        if rows_first & rows_second or first.right >= second.column:
            return None
    return tuple(hooks)


@dataclass(frozen=True)
class Step:
    """A maximal run of staircase columns sharing the same top row."""

    columns: Tuple[int, ...]
    top: int
    height: int

    @property
    def width(self) -> int:
        return len(self.columns)

    def to_dict(self) -> Dict[str, object]:
        return {
            "columns": list(self.columns),
            "top": self.top,
            "width": self.width,
            "height": self.height,
        }


@dataclass(frozen=True)
class Staircase:
    kind: str
    index: int
    steps: Tuple[Step, ...]

    @property
    def columns(self) -> Tuple[int, ...]:
        return tuple(c for step in self.steps for c in step.columns)


@dataclass(frozen=True)
class ColumnLabel:
    """Position of a column inside the staircase structure."""

    kind: str  # "alpha", "beta", "hook" or "unlabeled"
    j: int = 0
    i: int = 0
    k: int = 0
    step_count: int = 0
    step_width: int = 0

    @property
    def step_is_last(self) -> bool:
        return self.i == self.step_count

    @property
    def column_is_last(self) -> bool:
        return self.k == self.step_width

    def __str__(self) -> str:
        if self.kind == "hook":
            return f"h_{self.j}"
        if self.kind == "unlabeled":
            return "unlabeled"
        return f"{self.kind}[{self.j}]^{self.i}_{self.k}"


@dataclass(frozen=True)
class StaircaseStructure:
    """Hooks of L'(w) with the alpha and beta staircases around them."""

    w: Permutation
    hooks: Tuple[Hook, ...]
    alpha: Tuple[Staircase, ...]
    beta: Tuple[Optional[Staircase], ...]
    labels: Dict[int, ColumnLabel]
    on_step: Dict[int, bool]

    def label(self, column: int) -> ColumnLabel:
        return self.labels.get(column, ColumnLabel("unlabeled"))

    def alpha_staircase(self, j: int) -> Staircase:
        return self.alpha[j - 1]

    def beta_staircase(self, j: int) -> Optional[Staircase]:
        if 1 <= j <= len(self.beta):
            return self.beta[j - 1]
        return None

    def step(self, label: ColumnLabel, i: Optional[int] = None) -> Step:
        staircase = (
            self.alpha_staircase(label.j)
            if label.kind == "alpha"
            else self.beta_staircase(label.j)
        )
        assert staircase is not None
        return staircase.steps[(label.i if i is None else i) - 1]


def _group_steps(columns: List[int], tops: Dict[int, int]) -> List[Tuple[Tuple[int, ...], int]]:
    groups: List[Tuple[List[int], int]] = []
    for c in columns:
        if groups and groups[-1][1] == tops[c]:
            groups[-1][0].append(c)
        else:
            groups.append(([c], tops[c]))
    return [(tuple(cols), top) for cols, top in groups]


def _with_heights(groups: List[Tuple[Tuple[int, ...], int]], first_height: int) -> Tuple[Step, ...]:
    steps = []
    for index, (cols, top) in enumerate(groups):
        height = first_height if index == 0 else top - groups[index - 1][1]
        steps.append(Step(cols, top, height))
    return tuple(steps)


def hook_decomposition(w: Permutation) -> Optional[StaircaseStructure]:
    """
    Hook decomposition of L'(w) with alpha/beta/hook column labels.

    Every column of the grid gets a label: columns west of the first hook form
    beta[1], the columns right of hook j inside its arm form alpha[j], the
    remaining columns between hooks j-1 and j form beta[j], and the columns
    after the last hook form beta[k+1]. Step heights are differences of top
    rows; first steps use the extended heights.

    Returns:
        The structure, or None when Y_w is not toric
    """
    reg = regions(w)
    hooks = hooks_of(reg.lprime)
    if hooks is None:
        logger.debug(f"L'({w}) is not a union of separated hooks")
        return None

    n = w.n
    inside = reg.l & reg.diagram
    alpha_tops: Dict[int, int] = {}
    alpha_blocks: List[List[int]] = []
    for hook in hooks:
        cols = list(range(hook.column + 1, hook.right + 1))
        alpha_blocks.append(cols)
        for c in cols:
            rows = [r for r in inside.column(c) if hook.top <= r < hook.row]
            alpha_tops[c] = min(rows) if rows else hook.row

    beta_blocks: List[List[int]] = []
    start = 1
    for hook in hooks:
        beta_blocks.append(list(range(start, hook.column)))
        start = hook.right + 1
    beta_blocks.append(list(range(start, n + 1)))

    dom_tops = {c: min(reg.dom.column(c), default=n + 1) for c in range(1, n + 1)}

    beta: List[Optional[Staircase]] = []
    for j, cols in enumerate(beta_blocks, start=1):
        if not cols:
            beta.append(None)
            continue
        groups = _group_steps(cols, dom_tops)
        first_top = groups[0][1]
        if j == 1:
            first_height = first_top - 1
        else:
            first_height = first_top - (hooks[j - 2].row + 1)
        beta.append(Staircase("beta", j, _with_heights(groups, first_height)))

    alpha: List[Staircase] = []
    for j, cols in enumerate(alpha_blocks, start=1):
        if not cols:
            alpha.append(Staircase("alpha", j, ()))
            continue
        groups = _group_steps(cols, alpha_tops)
        a = groups[0][1]
        b = cols[0]
        if beta[j - 1] is None:
            first_height = a - 1 if j == 1 else 0
        else:
            first_height = sum(1 for r in reg.diagram.column(b - 2) if r > a)
        alpha.append(Staircase("alpha", j, _with_heights(groups, first_height)))

    labels: Dict[int, ColumnLabel] = {}
    on_step: Dict[int, bool] = {}
    for j, hook in enumerate(hooks, start=1):
        labels[hook.column] = ColumnLabel("hook", j)
    for staircase in [*alpha, *(s for s in beta if s is not None)]:
        for i, step in enumerate(staircase.steps, start=1):
            for k, c in enumerate(step.columns, start=1):
                labels[c] = ColumnLabel(
                    staircase.kind, staircase.index, i, k, len(staircase.steps), step.width
                )
                on_step[c] = w(c) == step.top - k

    logger.debug(f"Staircase structure of {w}: {len(hooks)} hooks")
    return StaircaseStructure(
        w=w,
        hooks=hooks,
        alpha=tuple(alpha),
        beta=tuple(beta),
        labels=labels,
        on_step=on_step,
    )


def render_ascii(w: Permutation) -> str:
    """
    Grid picture of w: '1' entries, '*' essential cells, '#' other D° cells,
    '+' cells of SW outside D°, '.' elsewhere.
    """
    reg = regions(w)
    lines = []
    for i in range(1, w.n + 1):
        row = []
        for j in range(1, w.n + 1):
            if w(j) == i:
                row.append("1")
            elif (i, j) in reg.essential:
                row.append("*")
            elif (i, j) in reg.diagram:
                row.append("#")
            elif (i, j) in reg.sw:
                row.append("+")
            else:
                row.append(".")
        lines.append(" ".join(row))
    return "\n".join(lines)
