"""
Computable isomorphism invariants of G(Γ).

The centralizer of (a, b) depends only on a: it is cut out by the linear system
χ(a, a') = χ(a', a), whose matrix M_a has row {s, t} equal to a_t·e_s − a_s·e_t.
Its order is p^(n − rank M_a + #non-edges).
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from ..common.config import LabConfig, default_config
from ..common.errors import check_cap
from .graphs import SimpleGraph
from .group import DEFAULT_PRIME, MeklerGroup, mekler_group

LOGGER = logging.getLogger(__name__)

CHUNK = 4096


@dataclass(frozen=True)
class GroupFingerprint:
    p: int
    order_exp: int
    center_order_exp: int
    abelianization_exp: int
    rank_multiset: Tuple[Tuple[int, int], ...]

    def as_dict(self) -> Dict:
        return {
            "p": self.p,
            "orderExp": self.order_exp,
            "centerOrderExp": self.center_order_exp,
            "abelianizationExp": self.abelianization_exp,
            "centralizerRanks": {str(rank): count for rank, count in self.rank_multiset},
        }


def rank_mod_p(matrices: np.ndarray, p: int) -> np.ndarray:
    """Ranks over 𝔽_p of a stack of integer matrices, shape (N, rows, cols)."""
    m = np.array(matrices, dtype=np.int64) % p
    count, rows, cols = m.shape
    rank = np.zeros(count, dtype=np.int64)
    inverses = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    row_index = np.arange(rows)
    for col in range(cols):
        candidates = (m[:, :, col] != 0) & (row_index[None, :] >= rank[:, None])
        active = np.nonzero(candidates.any(axis=1))[0]
        if active.size == 0:
            continue
        pivot = np.argmax(candidates[active], axis=1)
        target = rank[active]
        pivot_rows = m[active, pivot].copy()
        m[active, pivot] = m[active, target]
        m[active, target] = pivot_rows
        scale = inverses[m[active, target, col]]
        m[active, target] = (m[active, target] * scale[:, None]) % p
        factors = m[active, :, col].copy()
        factors[np.arange(active.size), target] = 0
        m[active] = (m[active] - factors[:, :, None] * m[active, target][:, None, :]) % p
        rank[active] += 1
    return rank


def commutation_matrices(group: MeklerGroup, vectors: np.ndarray) -> np.ndarray:
    """M_a for each row a of ``vectors``, shape (N, #non-edges, n)."""
    count = vectors.shape[0]
    matrices = np.zeros((count, len(group.non_edges), group.graph.n), dtype=np.int64)
    for k, (s, t) in enumerate(group.non_edges):
        matrices[:, k, s] = vectors[:, t]
        matrices[:, k, t] = -vectors[:, s]
    return matrices % group.p


def fingerprint(group: MeklerGroup, config: LabConfig | None = None) -> GroupFingerprint:
    config = config or default_config()
    n = group.graph.n
    p = group.p
    check_cap("fingerprint_space", config.caps.fingerprint_space, p**n)
    ranks: Counter = Counter()
    if group.non_edges:
        vectors = itertools.product(range(p), repeat=n)
        while True:
            chunk = np.array(list(itertools.islice(vectors, CHUNK)), dtype=np.int64).reshape(-1, n)
            if chunk.shape[0] == 0:
                break
            ranks.update(rank_mod_p(commutation_matrices(group, chunk), p).tolist())
    else:
        ranks[0] = p**n
    # a is central iff every vertex it touches is adjacent to all others
    involved = {v for pair in group.non_edges for v in pair}
    central_vertices = n - len(involved)
    return GroupFingerprint(
        p=p,
        order_exp=group.order_exponent,
        center_order_exp=central_vertices + len(group.non_edges),
        abelianization_exp=n,
        rank_multiset=tuple(sorted(ranks.items())),
    )


def graph_fingerprint(graph: SimpleGraph, p: int = DEFAULT_PRIME, config: LabConfig | None = None) -> GroupFingerprint:
    return fingerprint(mekler_group(graph, p), config)
