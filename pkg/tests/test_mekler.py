"""Tests for Mekler groups, niceness and the isomorphism oracles."""

from pathlib import Path
import itertools
import json
import sys

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.actions import alternating, check_group_laws, cyclic, direct_product, group_by_name, group_center, subgroup_closure
from src.common.config import LabConfig
from src.common.errors import CapExceeded, InputError, NotAnAutomorphism, NotAnIsomorphism
from src.mekler import (
    STRICT,
    MeklerElement,
    SimpleGraph,
    as_fin_group,
    brute_force_centralizer,
    char_support_centralizer,
    complete_graph,
    copies_graph,
    copies_semidirect,
    copy_permutation,
    cycle_graph,
    empty_graph,
    exact_iso,
    exact_iso_witness,
    fingerprint,
    fingerprint_collisions,
    graph_fingerprint,
    graph_iso,
    induced_group_iso,
    is_graph_isomorphism,
    is_nice,
    labeled_graphs,
    load_graph,
    mekler_group,
    mekler_inv,
    mekler_inv_batch,
    mekler_iso_report,
    mekler_mul,
    mekler_mul_batch,
    mekler_order,
    nice_catalog,
    path_graph,
    random_elements,
    relabel,
    semidirect_with,
    star_graph,
    to_networkx,
)


@pytest.fixture
def config():
    return LabConfig(tol=1e-9, seed=20240611)


@pytest.fixture(scope="module")
def pair():
    """Two non-adjacent vertices: the extraspecial group of order 27."""
    return mekler_group(empty_graph(2), 3)


def _all_elements(group):
    return list(group.elements())


# ============================================================================
# group law
# ============================================================================


def test_identity_law(pair):
    for x in pair.elements():
        assert mekler_mul(pair, x, pair.identity) == x
        assert mekler_mul(pair, pair.identity, x) == x


def test_non_adjacent_generators_do_not_commute(pair):
    xy = mekler_mul(pair, pair.generator(0), pair.generator(1))
    yx = mekler_mul(pair, pair.generator(1), pair.generator(0))
    assert xy.a == yx.a
    assert (xy.b[0] - yx.b[0]) % 3 in (1, 2)


def test_adjacent_generators_commute():
    group = mekler_group(complete_graph(2), 3)
    assert mekler_mul(group, group.generator(0), group.generator(1)) == mekler_mul(group, group.generator(1), group.generator(0))


def _unitriangular(a01, a12, a02):
    return np.array([[1, a01, a02], [0, 1, a12], [0, 0, 1]], dtype=np.int64)


def test_pair_group_matches_heisenberg_model(pair):
    X, Y = _unitriangular(1, 0, 0), _unitriangular(0, 1, 0)

    def inverse(m):
        return np.round(np.linalg.inv(m)).astype(np.int64) % 3

    def power(m, k):
        result = np.eye(3, dtype=np.int64)
        for _ in range(k):
            result = result @ m % 3
        return result

    commutator = inverse(Y) @ inverse(X) @ Y @ X % 3

    def image(x):
        return power(X, x.a[0]) @ power(Y, x.a[1]) @ power(commutator, x.b[0]) % 3

    elements = _all_elements(pair)
    images = {image(x).tobytes() for x in elements}
    assert len(images) == 27
    for x, y in itertools.product(elements, repeat=2):
        assert np.array_equal(image(mekler_mul(pair, x, y)), image(x) @ image(y) % 3)


def test_exhaustive_associativity_and_inverse(pair):
    elements = _all_elements(pair)
    for x in elements:
        assert mekler_mul(pair, x, mekler_inv(pair, x)) == pair.identity
        assert mekler_mul(pair, mekler_inv(pair, x), x) == pair.identity
    for x, y, z in itertools.product(elements, repeat=3):
        assert mekler_mul(pair, mekler_mul(pair, x, y), z) == mekler_mul(pair, x, mekler_mul(pair, y, z))


@pytest.mark.parametrize(
    "graph, exponent",
    [(empty_graph(2), 3), (complete_graph(2), 2), (cycle_graph(5), 10), (empty_graph(3), 6), (path_graph(3), 4)],
)
def test_order_exponent(graph, exponent):
    assert mekler_order(mekler_group(graph, 3)) == exponent


@pytest.mark.parametrize("graph", list(labeled_graphs(3)))
def test_order_by_enumeration(graph):
    group = mekler_group(graph, 3)
    fin = as_fin_group(group)
    assert len(subgroup_closure(fin, fin.generators)) == 3 ** mekler_order(group)


def test_adjacent_pair_is_abelian():
    fin = as_fin_group(mekler_group(complete_graph(2), 3))
    assert fin.is_abelian()
    assert fin.order == 9


@pytest.mark.parametrize("graph", nice_catalog(5))
def test_batched_associativity_on_nice_graphs(graph):
    group = mekler_group(graph, 3)
    rng = np.random.default_rng(20240611)
    x, y, z = (random_elements(group, rng, 100_000) for _ in range(3))
    left = mekler_mul_batch(group, mekler_mul_batch(group, x, y), z)
    right = mekler_mul_batch(group, x, mekler_mul_batch(group, y, z))
    assert np.array_equal(left, right)


def test_batch_agrees_with_scalar_product():
    group = mekler_group(cycle_graph(5), 3)
    rng = np.random.default_rng(1)
    x, y = random_elements(group, rng, 50), random_elements(group, rng, 50)
    batch = mekler_mul_batch(group, x, y)
    for row_x, row_y, row in zip(x.tolist(), y.tolist(), batch.tolist()):
        scalar = mekler_mul(group, MeklerElement(tuple(row_x[:5]), tuple(row_x[5:])), MeklerElement(tuple(row_y[:5]), tuple(row_y[5:])))
        assert list(scalar.a) + list(scalar.b) == row


@pytest.mark.parametrize("graph", nice_catalog(5))
def test_batched_inverse_on_nice_graphs(graph):
    group = mekler_group(graph, 3)
    rng = np.random.default_rng(20240611)
    x = random_elements(group, rng, 100_000)
    inverse = mekler_inv_batch(group, x)
    assert np.array_equal(mekler_mul_batch(group, x, inverse), np.zeros_like(x))
    assert np.array_equal(mekler_mul_batch(group, inverse, x), np.zeros_like(x))


def test_batch_inverse_agrees_with_scalar_inverse():
    group = mekler_group(cycle_graph(5), 3)
    rng = np.random.default_rng(2)
    x = random_elements(group, rng, 50)
    for row_x, row in zip(x.tolist(), mekler_inv_batch(group, x).tolist()):
        scalar = mekler_inv(group, MeklerElement(tuple(row_x[:5]), tuple(row_x[5:])))
        assert list(scalar.a) + list(scalar.b) == row


_C5 = mekler_group(cycle_graph(5), 3)
_C5_ELEMENT = st.tuples(
    st.tuples(*[st.integers(0, 2)] * 5),
    st.tuples(*[st.integers(0, 2)] * 5),
).map(lambda ab: MeklerElement(*ab))


@settings(derandomize=True, max_examples=300, deadline=None)
@given(_C5_ELEMENT, _C5_ELEMENT, _C5_ELEMENT)
def test_c5_group_laws(x, y, z):
    assert mekler_mul(_C5, mekler_mul(_C5, x, y), z) == mekler_mul(_C5, x, mekler_mul(_C5, y, z))
    assert mekler_mul(_C5, x, mekler_inv(_C5, x)) == _C5.identity


def test_dimension_mismatch_is_rejected(pair):
    with pytest.raises(InputError):
        mekler_mul(pair, MeklerElement((1,), (0,)), pair.identity)


def test_p_must_be_an_odd_prime():
    with pytest.raises(InputError):
        mekler_group(empty_graph(2), 2)
    with pytest.raises(InputError):
        mekler_group(empty_graph(2), 9)


# ============================================================================
# niceness
# ============================================================================


def test_niceness_examples():
    assert is_nice(cycle_graph(5))
    triangle = is_nice(complete_graph(3))
    assert not triangle and "triangle" in triangle.failed
    square = is_nice(cycle_graph(4))
    assert not square and "square" in square.failed


def test_nice_catalog_up_to_five_vertices():
    shapes = sorted((g.n, len(g.edges)) for g in nice_catalog(5))
    assert shapes == [(2, 1), (4, 2), (5, 5)]
    assert len(nice_catalog(5, labeled=True)) == 1 + 3 + 12


def test_strict_witness_reading_keeps_only_c5():
    shapes = [(g.n, len(g.edges)) for g in nice_catalog(5, predicate=STRICT)]
    assert shapes == [(5, 5)]


def test_copies_of_nice_graph_under_literal_reading():
    assert is_nice(copies_graph(cycle_graph(5), 2))
    assert is_nice(copies_graph(complete_graph(2), 3))


# ============================================================================
# graph isomorphism
# ============================================================================


def test_graph_iso_examples(config):
    c5 = cycle_graph(5)
    assert graph_iso(c5, c5, config) == [0, 1, 2, 3, 4]
    assert graph_iso(c5, path_graph(5), config) is None
    p4 = path_graph(4)
    relabeled = relabel(p4, [2, 0, 3, 1])
    witness = graph_iso(p4, relabeled, config)
    assert witness is not None
    assert is_graph_isomorphism(p4, relabeled, witness)


def test_graph_iso_agrees_with_networkx(config):
    graphs = list(labeled_graphs(4))
    for first, second in itertools.combinations(graphs[::3], 2):
        expected = nx.is_isomorphic(to_networkx(first), to_networkx(second))
        assert (graph_iso(first, second, config) is not None) == expected


def test_graph_iso_cap(config):
    with pytest.raises(CapExceeded):
        graph_iso(cycle_graph(9), cycle_graph(9), config)


# ============================================================================
# induced isomorphisms
# ============================================================================


def test_identity_lift_is_identity(config, pair):
    lifted = induced_group_iso([0, 1], pair, pair, config)
    for x in pair.elements():
        assert lifted(x) == x


def test_c5_rotation_lifts(config):
    lifted = induced_group_iso([1, 2, 3, 4, 0], _C5, _C5, config)
    assert lifted.is_bijective()


def test_non_isomorphism_is_rejected(config):
    group = mekler_group(path_graph(3), 3)
    with pytest.raises(NotAnIsomorphism):
        induced_group_iso([1, 0, 2], group, group, config)


def test_lifts_between_relabelings(config):
    for graph in nice_catalog(4, labeled=True):
        for other in nice_catalog(4, labeled=True):
            mapping = graph_iso(graph, other, config)
            if mapping is None:
                continue
            lifted = induced_group_iso(mapping, mekler_group(graph, 3), mekler_group(other, 3), config, samples=500)
            assert lifted.is_bijective()


# ============================================================================
# fingerprints
# ============================================================================


def test_abelian_fingerprint():
    fp = graph_fingerprint(complete_graph(2), 3)
    assert fp.rank_multiset == ((0, 9),)


def test_pair_fingerprint(pair):
    fp = fingerprint(pair)
    assert fp.rank_multiset == ((0, 1), (1, 8))
    assert fp.center_order_exp == 1
    assert fp.abelianization_exp == 2
    assert fp.order_exp == 3


def test_center_order_matches_enumeration():
    for graph in (path_graph(3), star_graph(2), SimpleGraph.build(3, [(0, 1)])):
        group = mekler_group(graph, 3)
        assert len(group_center(as_fin_group(group))) == 3 ** fingerprint(group).center_order_exp


def test_fingerprint_is_relabeling_and_order_invariant():
    for graph in nice_catalog(5) + [path_graph(4), star_graph(3), cycle_graph(4)]:
        reference = graph_fingerprint(graph)
        reversed_order = list(reversed(range(graph.n)))
        assert graph_fingerprint(relabel(graph, reversed_order)) == reference
        assert fingerprint(mekler_group(graph, 3, vertex_order=reversed_order)) == reference


def test_fingerprint_soundness_on_four_vertices(config):
    graphs = list(labeled_graphs(4))
    prints = [graph_fingerprint(graph, 3, config) for graph in graphs]
    for i, j in itertools.combinations(range(len(graphs)), 2):
        if nx.is_isomorphic(to_networkx(graphs[i]), to_networkx(graphs[j])):
            assert prints[i] == prints[j]


def test_path_and_star_fingerprints_differ():
    assert graph_fingerprint(path_graph(4)) != graph_fingerprint(star_graph(3))


def test_no_collisions_in_nice_catalog(config):
    assert fingerprint_collisions(nice_catalog(5), 3, config) == []


def test_fingerprint_cap(config):
    with pytest.raises(CapExceeded):
        fingerprint(mekler_group(empty_graph(6), 3), config.with_caps(fingerprint_space=3**5))


# ============================================================================
# exact isomorphism
# ============================================================================


def test_exact_iso_examples(config):
    p4 = path_graph(4)
    assert exact_iso(p4, p4, 3, config)
    assert not exact_iso(p4, star_graph(3), 3, config)
    assert exact_iso(p4, relabel(p4, [3, 1, 0, 2]), 3, config)


def test_exact_iso_witness_is_invertible(config):
    witness = exact_iso_witness(path_graph(4), relabel(path_graph(4), [1, 0, 3, 2]), 3, config)
    columns = np.array([witness[v] for v in range(4)]).T
    assert round(np.linalg.det(columns)) % 3 != 0


def test_mekler_biconditional_on_small_nice_graphs(config):
    graphs = nice_catalog(4, labeled=True)
    for first, second in itertools.product(graphs, repeat=2):
        assert exact_iso(first, second, 3, config) == (graph_iso(first, second, config) is not None)


@pytest.mark.slow
def test_exact_iso_separates_same_size_non_isomorphic(config):
    two_edges = SimpleGraph.build(4, [(0, 1), (2, 3)])
    cherry = SimpleGraph.build(4, [(0, 1), (1, 2)])
    assert not exact_iso(two_edges, cherry, 3, config)


def test_exact_iso_cap(config):
    with pytest.raises(CapExceeded):
        exact_iso(cycle_graph(5), cycle_graph(5), 3, config)


def test_iso_report_uses_fingerprints_on_five_vertices(config):
    c5 = cycle_graph(5)
    report = mekler_iso_report(c5, relabel(c5, [0, 2, 4, 1, 3]), 3, config)
    assert report.method == "fingerprint"
    assert report.groups_isomorphic and report.graphs_isomorphic
    assert not report.collision


def test_iso_report_exact_on_small_graphs(config):
    report = mekler_iso_report(path_graph(4), star_graph(3), 3, config)
    assert report.method == "exact"
    assert report.groups_isomorphic is False


# ============================================================================
# copies and semidirect products
# ============================================================================


def test_copies_graph(config):
    edge = complete_graph(2)
    assert copies_graph(edge, 1, config) == edge
    doubled = copies_graph(edge, 2, config)
    assert doubled.n == 4 and len(doubled.edges) == 2
    assert not any(doubled.adjacent(u, v) for u in (0, 1) for v in (2, 3))
    swap = copy_permutation(edge, 2, [1, 0])
    assert is_graph_isomorphism(doubled, doubled, swap)


def test_copies_cap(config):
    with pytest.raises(CapExceeded):
        copies_graph(cycle_graph(5), 20, config)


def test_semidirect_with_trivial_group(config, pair):
    base = as_fin_group(pair, config)
    product = semidirect_with(base, cyclic(1), lambda h: (lambda g: g), config)
    assert product.order == base.order
    check_group_laws(product)


def test_copies_semidirect_laws(config):
    group = copies_semidirect(complete_graph(2), 2, 3, config)
    assert group.order == 3**8 * 2
    check_group_laws(group, samples=10_000, seed=config.seed)


def test_semidirect_rejects_non_automorphism(config, pair):
    base = as_fin_group(pair, config)
    with pytest.raises(NotAnAutomorphism):
        semidirect_with(base, cyclic(2), lambda h: (lambda g: base.identity) if h else (lambda g: g), config)


# ============================================================================
# character-support centralizer
# ============================================================================


def test_centralizer_of_z2(config):
    report = char_support_centralizer(cyclic(2), config)
    assert report.support_size == 1
    assert sorted(report.centralizer) == [0, 1]


def test_centralizer_of_perfect_group(config):
    report = char_support_centralizer(alternating(5), config)
    assert report.support_size == 0
    assert len(report.centralizer) == 60


def test_centralizer_of_a5_times_z2(config):
    group = group_by_name("A5xZ2")
    report = char_support_centralizer(group, config)
    identity = alternating(5).identity
    assert set(report.centralizer) == {(identity, 0), (identity, 1)}
    assert set(report.centralizer) == set(brute_force_centralizer(group, config))


@pytest.mark.slow
def test_centralizer_with_mekler_factor(config):
    group = direct_product(alternating(5), copies_semidirect(complete_graph(2), 2, 3, config))
    report = char_support_centralizer(group, config)
    assert len(report.centralizer) == 3
    assert set(report.centralizer) == set(brute_force_centralizer(group, config))


# ============================================================================
# documents
# ============================================================================


def test_load_graph(tmp_path):
    path = tmp_path / "c5.json"
    path.write_text(json.dumps({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]}), encoding="utf-8")
    graph = load_graph(path)
    assert graph.name == "c5"
    assert is_nice(graph)


def test_graph_document_rejects_out_of_range_edge(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "edges": [[0, 2]]}), encoding="utf-8")
    with pytest.raises(InputError, match="vertex range"):
        load_graph(path)


def test_adjacency_matrix_must_be_symmetric():
    with pytest.raises(InputError):
        SimpleGraph.from_adjacency([[0, 1], [0, 0]])
