"""
Graphs and edge cones.

A DiGraph here is a directed multigraph on labelled vertices. Row vertices
are plain integers; column vertices of bipartite graphs are starred strings
such as "3*". Components and cycle counts use the undirected view.
"""

import json
import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import networkx as nx
import sympy as sp

from schubert_complexity.exceptions import (
    ConsistencyError,
    DirectedCycleError,
    NotBipartiteError,
)

logger = logging.getLogger(__name__)

Vertex = Union[int, str]
Edge = Tuple[Vertex, Vertex]


def star(b: int) -> str:
    """Column vertex b*."""
    return f"{b}*"


def vertex_key(v: Vertex) -> Tuple[int, int]:
    if isinstance(v, str):
        return (1, int(v.rstrip("*")))
    return (0, v)


class DiGraph:
    """Directed multigraph with an explicit vertex set."""

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[Edge] = ()):
        self._graph = nx.MultiDiGraph()
        self._graph.add_nodes_from(vertices)
        for a, b in edges:
            self._graph.add_edge(a, b)

    def add_edge(self, a: Vertex, b: Vertex) -> None:
        self._graph.add_edge(a, b)

    @property
    def vertices(self) -> List[Vertex]:
        return sorted(self._graph.nodes, key=vertex_key)

    @property
    def edges(self) -> List[Edge]:
        return sorted(
            ((a, b) for a, b, _ in self._graph.edges(keys=True)),
            key=lambda e: (vertex_key(e[0]), vertex_key(e[1])),
        )

    def edge_set(self) -> set:
        return {(a, b) for a, b in self.edges}

    def undirected(self) -> nx.MultiGraph:
        return nx.MultiGraph(self._graph.to_undirected())

    def components(self) -> List[List[Vertex]]:
        parts = [sorted(c, key=vertex_key) for c in nx.connected_components(self.undirected())]
        parts.sort(key=lambda part: vertex_key(part[0]))
        return parts

    def number_of_components(self) -> int:
        return nx.number_connected_components(self.undirected()) if self.vertices else 0

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self._graph)

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __repr__(self) -> str:
        return f"DiGraph(vertices={self.vertices}, edges={self.edges})"

    def to_dot(self, name: str = "G", directed: bool = True) -> str:
        kind, arrow = ("digraph", "->") if directed else ("graph", "--")
        lines = [f"{kind} {name} {{"]
        for v in self.vertices:
            shape = "box" if isinstance(v, str) else "circle"
            lines.append(f'  "{v}" [shape={shape}];')
        for a, b in self.edges:
            lines.append(f'  "{a}" {arrow} "{b}";')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": [str(v) for v in self.vertices],
                "edges": [[str(a), str(b)] for a, b in self.edges],
            }
        )


def bipartite_graph(edges: Iterable[Tuple[int, int]]) -> DiGraph:
    """Graph with edges a -> b* for each pair (a, b); isolated vertices never appear."""
    edges = list(edges)
    return DiGraph(edges=[(a, star(b)) for a, b in edges])


@dataclass(frozen=True)
class Cone:
    """A cone given by ray generators in the lattice spanned by the vertices."""

    basis: Tuple[Vertex, ...]
    generators: Tuple[Tuple[int, ...], ...]

    @property
    def ambient_dimension(self) -> int:
        return len(self.basis)

    def matrix(self) -> sp.Matrix:
        if not self.generators:
            return sp.zeros(0, self.ambient_dimension)
        return sp.Matrix(self.generators)

    @property
    def dimension(self) -> int:
        if not self.generators:
            return 0
        return int(self.matrix().rank())


def edge_cone(g: DiGraph) -> Cone:
    """
    Cone(e_a - e_b | (a -> b) in E).

    Raises:
        DirectedCycleError: if g has a directed cycle
    """
    if not g.is_acyclic():
        raise DirectedCycleError(f"edge cones need an acyclic graph, got {g}")
    basis = tuple(g.vertices)
    index = {v: position for position, v in enumerate(basis)}
    generators = []
    seen = set()
    for a, b in g.edges:
        if (a, b) in seen:
            continue
        seen.add((a, b))
        vector = [0] * len(basis)
        vector[index[a]] += 1
        vector[index[b]] -= 1
        generators.append(tuple(vector))
    return Cone(basis, tuple(generators))


def cone_dimension(g: DiGraph, verify_rank: bool = True) -> int:
    """
    Dimension of the edge cone as |V| - #components.

    Checked against the rank of the generator matrix unless verify_rank is off.
    """
    by_components = len(g) - g.number_of_components()
    if not verify_rank:
        return by_components
    by_rank = edge_cone(g).dimension
    if by_components != by_rank:
        logger.error(f"Cone dimension mismatch for {g}: {by_components} vs rank {by_rank}")
        raise ConsistencyError(f"cone dimension {by_components} != rank {by_rank}")
    return by_components


def cyclomatic(g: DiGraph) -> int:
    """|E| - |V| + #components, counting parallel edges."""
    return len(g.edges) - len(g) + g.number_of_components()


def is_forest(g: DiGraph) -> bool:
    return cyclomatic(g) == 0


def _simple_undirected(g: Union[DiGraph, nx.Graph]) -> nx.Graph:
    if isinstance(g, DiGraph):
        return nx.Graph(g.undirected())
    return nx.Graph(g)


def chord_count(graph: nx.Graph, cycle: Sequence[Vertex]) -> int:
    length = len(cycle)
    on_cycle = {frozenset((cycle[i], cycle[(i + 1) % length])) for i in range(length)}
    return sum(
        1
        for x in range(length)
        for y in range(x + 1, length)
        if graph.has_edge(cycle[x], cycle[y])
        and frozenset((cycle[x], cycle[y])) not in on_cycle
    )


def doubly_chordal_bipartite(g: Union[DiGraph, nx.Graph]) -> bool:
    """
    True iff every cycle of length at least 6 has at least two chords.

    Raises:
        NotBipartiteError: if the graph is not bipartite
    """
    graph = _simple_undirected(g)
    if graph.number_of_nodes() and not nx.is_bipartite(graph):
        raise NotBipartiteError("doubly chordal bipartite needs a bipartite graph")
    # each undirected cycle is yielded once
    for cycle in nx.simple_cycles(graph):
        if len(cycle) < 6:
            continue
        if chord_count(graph, cycle) < 2:
            logger.debug(f"Cycle {cycle} has fewer than two chords")
            return False
    return True


def double_square() -> DiGraph:
    """Two 4-cycles sharing an edge: the smallest graph that is not doubly chordal."""
    return bipartite_graph([(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])


def components_graph(
    first: Sequence[Sequence[Vertex]], second: Sequence[Sequence[Vertex]]
) -> nx.MultiGraph:
    """
    Bipartite multigraph between two partitions, one edge per shared vertex.

    A cycle in it is an alternating cycle through components of both partitions.
    """
    graph = nx.MultiGraph()
    for x, part in enumerate(first):
        graph.add_node(("B", x))
    for y, part in enumerate(second):
        graph.add_node(("C", y))
    where = {v: y for y, part in enumerate(second) for v in part}
    for x, part in enumerate(first):
        for v in part:
            if v in where:
                graph.add_edge(("B", x), ("C", where[v]))
    return graph


def has_cycle(graph: nx.MultiGraph) -> bool:
    edges = graph.number_of_edges()
    return edges - graph.number_of_nodes() + nx.number_connected_components(graph) > 0
