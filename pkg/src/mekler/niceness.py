"""
The "nice graph" predicate and catalogs of nice graphs.

Clauses:
  (i)   at least two vertices
  (ii)  no triangle
  (iii) no 4-cycle
  (iv)  for every ordered pair of distinct vertices (u, v) some vertex is adjacent to u
        and not to v
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import List, Tuple

from .graphs import SimpleGraph, atlas_graphs, labeled_graphs

LOGGER = logging.getLogger(__name__)

CLAUSES = ("vertices", "triangle", "square", "separation")


@dataclass(frozen=True)
class NicenessReport:
    nice: bool
    failed: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.nice

    def as_dict(self) -> dict:
        return {"nice": self.nice, "failedClauses": list(self.failed)}


@dataclass(frozen=True)
class NicePredicate:
    """``require_distinct_witness`` forbids the witness in (iv) from being v itself."""

    require_distinct_witness: bool = False

    def __call__(self, graph: SimpleGraph) -> NicenessReport:
        failed: List[str] = []
        if graph.n < 2:
            failed.append("vertices")
        if _has_triangle(graph):
            failed.append("triangle")
        if _has_square(graph):
            failed.append("square")
        if not self._separates(graph):
            failed.append("separation")
        return NicenessReport(nice=not failed, failed=tuple(failed))

    def _separates(self, graph: SimpleGraph) -> bool:
        neighborhoods = [set(graph.neighbors(v)) for v in range(graph.n)]
        for u, v in itertools.permutations(range(graph.n), 2):
            witnesses = neighborhoods[u] - neighborhoods[v]
            if self.require_distinct_witness:
                witnesses.discard(v)
            if not witnesses:
                return False
        return True


LITERAL = NicePredicate()
STRICT = NicePredicate(require_distinct_witness=True)


def _has_triangle(graph: SimpleGraph) -> bool:
    return any(
        graph.adjacent(u, w) and graph.adjacent(v, w) for u, v in graph.edges for w in range(graph.n) if w not in (u, v)
    )


def _has_square(graph: SimpleGraph) -> bool:
    """A 4-cycle exists iff two distinct vertices share at least two neighbours."""
    neighborhoods = [set(graph.neighbors(v)) for v in range(graph.n)]
    return any(len(neighborhoods[u] & neighborhoods[v]) >= 2 for u, v in itertools.combinations(range(graph.n), 2))


def is_nice(graph: SimpleGraph, predicate: NicePredicate = LITERAL) -> NicenessReport:
    return predicate(graph)


def nice_catalog(max_n: int, *, labeled: bool = False, predicate: NicePredicate = LITERAL) -> List[SimpleGraph]:
    """Nice graphs on at most ``max_n`` vertices: one per isomorphism class, or every labeling."""
    if labeled:
        graphs = [graph for n in range(1, max_n + 1) for graph in labeled_graphs(n) if predicate(graph)]
    else:
        graphs = [graph for graph in atlas_graphs(max_n) if predicate(graph)]
    LOGGER.info("Nice catalog up to %s vertices (labeled=%s): %s graph(s).", max_n, labeled, len(graphs))
    return graphs
