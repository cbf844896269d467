"""
Finite simple graphs: constructors, relabeling, the networkx bridge and JSON documents.

    {"n": 5, "edges": [[0, 1], [1, 2], ...], "name": "C5"}
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from ..actions.documents import read_json
from ..common.config import LabConfig, default_config
from ..common.errors import InputError, check_cap

LOGGER = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices 0..n-1; edges stored as pairs (u, v) with u < v."""

    n: int
    edges: FrozenSet[Edge]
    name: str = field(default="", compare=False)

    @classmethod
    def build(cls, n: int, edges: Iterable[Sequence[int]], name: str = "") -> "SimpleGraph":
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for edge in edges:
            if len(edge) != 2:
                raise InputError(f"edge {list(edge)} must have exactly two endpoints")
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) leaves the vertex range 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}: graphs are irreflexive")
            normalized.add((min(u, v), max(u, v)))
        return cls(n=n, edges=frozenset(normalized), name=name)

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[object]], name: str = "") -> "SimpleGraph":
        adj = np.asarray(matrix, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InputError(f"adjacency matrix must be square, got shape {adj.shape}")
        if not np.array_equal(adj, adj.T):
            raise InputError("adjacency matrix must be symmetric")
        if adj.diagonal().any():
            raise InputError("adjacency matrix must have a false diagonal")
        rows, cols = np.nonzero(np.triu(adj, 1))
        return cls(n=adj.shape[0], edges=frozenset(zip(rows.tolist(), cols.tolist())), name=name)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> List[int]:
        return [u for u in range(self.n) if u != v and self.adjacent(u, v)]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in range(self.n)), reverse=True))

    def non_edges(self) -> List[Edge]:
        return [(u, v) for u, v in itertools.combinations(range(self.n), 2) if (u, v) not in self.edges]

    def adjacency_matrix(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            adj[u, v] = adj[v, u] = True
        return adj

    def as_dict(self) -> Dict:
        payload: Dict = {"n": self.n, "edges": [list(edge) for edge in sorted(self.edges)]}
        if self.name:
            payload["name"] = self.name
        return payload

    def __repr__(self) -> str:
        label = self.name or "graph"
        return f"SimpleGraph({label!r}, n={self.n}, edges={sorted(self.edges)})"


# ============================================================================
# constructors
# ============================================================================


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph.build(n, [], name=f"E{n}")


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.build(n, itertools.combinations(range(n), 2), name=f"K{n}")


def path_graph(n: int) -> SimpleGraph:
    """P_n: n vertices in a row."""
    return SimpleGraph.build(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return SimpleGraph.build(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def star_graph(leaves: int) -> SimpleGraph:
    """K_{1,leaves} with center 0."""
    return SimpleGraph.build(leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=f"K1,{leaves}")


def relabel(graph: SimpleGraph, mapping: Sequence[int]) -> SimpleGraph:
    """Vertex v becomes mapping[v]."""
    if sorted(mapping) != list(range(graph.n)):
        raise InputError(f"{list(mapping)} is not a permutation of {graph.n} vertices")
    return SimpleGraph.build(graph.n, [(mapping[u], mapping[v]) for u, v in graph.edges], name=graph.name)


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    edges: List[Edge] = []
    offset = 0
    for graph in graphs:
        edges.extend((u + offset, v + offset) for u, v in graph.edges)
        offset += graph.n
    return SimpleGraph.build(offset, edges, name="+".join(g.name or "G" for g in graphs))


def copies_graph(graph: SimpleGraph, copies: int, config: LabConfig | None = None) -> SimpleGraph:
    """k disjoint copies: (i, v) sits at index i·n + v, and (i, u) ~ (j, v) iff i = j and u ~ v."""
    config = config or default_config()
    if copies < 1:
        raise InputError(f"number of copies must be positive, got {copies}")
    check_cap("copies_vertices", config.caps.copies_vertices, copies * graph.n)
    if copies == 1:
        return graph
    union = disjoint_union(*([graph] * copies))
    return SimpleGraph(n=union.n, edges=union.edges, name=f"{copies}x{graph.name or 'G'}")


def copy_permutation(graph: SimpleGraph, copies: int, shift: Sequence[int]) -> List[int]:
    """Vertex map of copies_graph sending copy i to copy shift[i]."""
    if sorted(shift) != list(range(copies)):
        raise InputError(f"{list(shift)} is not a permutation of {copies} copies")
    return [shift[i] * graph.n + v for i in range(copies) for v in range(graph.n)]


def labeled_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every graph on vertices 0..n-1, one per edge subset."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph.build(n, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])


def atlas_graphs(max_n: int) -> List[SimpleGraph]:
    """One graph per isomorphism class on 1..max_n vertices (networkx atlas, max_n ≤ 7)."""
    if max_n > 7:
        raise InputError("the graph atlas only covers graphs on at most 7 vertices")
    graphs = []
    for position, atlas_graph in enumerate(nx.graph_atlas_g()):
        n = atlas_graph.number_of_nodes()
        if 1 <= n <= max_n:
            graphs.append(from_networkx(atlas_graph, name=f"G{position}"))
    return graphs


# ============================================================================
# networkx bridge
# ============================================================================


def to_networkx(graph: SimpleGraph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges)
    return result


def from_networkx(source: nx.Graph, name: str = "") -> SimpleGraph:
    nodes = sorted(source.nodes())
    position = {node: i for i, node in enumerate(nodes)}
    return SimpleGraph.build(len(nodes), [(position[u], position[v]) for u, v in source.edges()], name=name)


# ============================================================================
# documents
# ============================================================================


class GraphDocument(BaseModel):
    n: int = Field(ge=0)
    edges: List[List[int]] = Field(default_factory=list)
    name: str = ""

    @model_validator(mode="after")
    def _edges_in_range(self) -> "GraphDocument":
        for edge in self.edges:
            if len(edge) != 2:
                raise ValueError(f"edge {edge} must have exactly two endpoints")
            if not all(0 <= v < self.n for v in edge):
                raise ValueError(f"edge {edge} leaves the vertex range 0..{self.n - 1}")
        return self

    def build(self) -> SimpleGraph:
        return SimpleGraph.build(self.n, self.edges, name=self.name)


def parse_graph_document(payload: object, source: str = "<document>") -> SimpleGraph:
    try:
        document = GraphDocument.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ()))
        raise InputError(f"{source}: invalid graph document at '{location}': {first.get('msg')}") from exc
    return document.build()


def load_graph(path: Path) -> SimpleGraph:
    graph = parse_graph_document(read_json(path), str(path))
    if not graph.name:
        graph = SimpleGraph(n=graph.n, edges=graph.edges, name=Path(path).stem)
    LOGGER.info("Loaded graph %s (%s vertices, %s edges) from %s.", graph.name, graph.n, len(graph.edges), path)
    return graph
