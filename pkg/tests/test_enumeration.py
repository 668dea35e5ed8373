import itertools

import networkx as nx
import pytest

from dalpha.enumeration import CanonicalForm
from dalpha.enumeration import FamilySpec
from dalpha.enumeration import canonical_form
from dalpha.enumeration import chromatic_number
from dalpha.enumeration import enumerate_connected
from dalpha.enumeration import enumerate_family
from dalpha.enumeration import enumerate_trees
from dalpha.enumeration import enumerate_unicyclic
from dalpha.enumeration import filter_by_chromatic
from dalpha.enumeration import level_sequence_trees
from dalpha.enumeration import prufer_trees
from dalpha.enumeration import scan_masks
from dalpha.errors import BadParams
from dalpha.errors import EnumerationCapExceeded
from dalpha.errors import TooLarge
from dalpha.families import complete
from dalpha.families import cycle
from dalpha.families import path
from dalpha.families import star
from dalpha.families import star_plus
from dalpha.families import turan
from dalpha.graph import Graph
from dalpha.graph import add_edge
from dalpha.graph import distance_profile
from dalpha.graph import permute
from dalpha.utils import from_networkx

TREE_COUNTS = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
UNICYCLIC_COUNTS = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def atlas_forms(n):
    return {
        canonical_form(from_networkx(h))
        for h in nx.graph_atlas_g()
        if h.number_of_nodes() == n and nx.is_connected(h)
    }


def test_canonical_form_text():
    form = canonical_form(path(3))
    assert form.n == 3
    assert len(form.bits) == 3
    assert str(form) == f"3:{form.bits}"
    assert str(canonical_form(Graph.empty(1))) == "1:"


def test_canonical_form_roundtrip(named_graph):
    form = canonical_form(named_graph)
    assert canonical_form(form.to_graph()) == form
    assert form.to_graph().edge_count == named_graph.edge_count


def test_canonical_form_is_invariant(rng, named_graph):
    form = canonical_form(named_graph)
    for _ in range(5):
        sigma = [int(v) for v in rng.permutation(named_graph.n)]
        assert canonical_form(permute(named_graph, sigma)) == form


def test_canonical_form_separates():
    assert canonical_form(path(4)) != canonical_form(star(4))
    assert canonical_form(cycle(6)) != canonical_form(
        Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    )


def test_canonical_form_regular_graphs(rng):
    # Vertex-transitive graphs leave the refinement nothing to split.
    petersen = from_networkx(nx.petersen_graph())
    form = canonical_form(petersen)
    sigma = [int(v) for v in rng.permutation(10)]
    assert canonical_form(permute(petersen, sigma)) == form
    prism = from_networkx(nx.circular_ladder_graph(5))
    assert canonical_form(prism) != form


def test_canonical_form_cap():
    with pytest.raises(TooLarge):
        canonical_form(path(13))


def test_canonical_forms_order():
    assert CanonicalForm(4, 3) < CanonicalForm(4, 5)
    assert CanonicalForm(3, 9) < CanonicalForm(4, 0)


@pytest.mark.parametrize("n", sorted(TREE_COUNTS))
def test_tree_counts(n):
    trees = list(enumerate_trees(n))
    assert len(trees) == TREE_COUNTS[n]
    forms = [canonical_form(t) for t in trees]
    assert forms == sorted(set(forms))
    assert all(t.edge_count == n - 1 for t in trees)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_trees_match_prufer(n):
    assert list(enumerate_trees(n)) == prufer_trees(n)


def test_large_trees_in_generation_order():
    trees = list(enumerate_trees(13))
    assert len(trees) == 1301
    assert len(list(level_sequence_trees(13))) == 1301


@pytest.mark.slow
def test_twelve_vertex_trees():
    assert len(list(enumerate_trees(12))) == 551


@pytest.mark.parametrize("n", sorted(UNICYCLIC_COUNTS))
def test_unicyclic_counts(n):
    graphs = list(enumerate_unicyclic(n))
    assert len(graphs) == UNICYCLIC_COUNTS[n]
    assert all(g.edge_count == n for g in graphs)


@pytest.mark.slow
@pytest.mark.parametrize("n, count", [(8, 89), (9, 240), (10, 657)])
def test_unicyclic_counts_large(n, count):
    assert len(list(enumerate_unicyclic(n))) == count


@pytest.mark.parametrize("n", sorted(CONNECTED_COUNTS))
def test_connected_counts(n):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == CONNECTED_COUNTS[n]
    assert {canonical_form(g) for g in graphs} == atlas_forms(n)


@pytest.mark.slow
def test_connected_seven():
    graphs = list(enumerate_connected(7))
    assert len(graphs) == 853
    assert {canonical_form(g) for g in graphs} == atlas_forms(7)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_scan_masks_oracle(n):
    assert scan_masks(n) == list(enumerate_connected(n))


@pytest.mark.slow
def test_scan_masks_oracle_six():
    assert scan_masks(6) == list(enumerate_connected(6))


def test_scan_masks_by_edges():
    # Connected graphs on 5 vertices with 5 edges are the unicyclic ones.
    assert scan_masks(5, edges=5) == list(enumerate_unicyclic(5))
    assert scan_masks(5, edges=4) == list(enumerate_trees(5))


def test_pairwise_non_isomorphic():
    graphs = [nx.Graph(g.edges()) for g in enumerate_connected(5)]
    for a, b in itertools.combinations(graphs, 2):
        if a.number_of_edges() == b.number_of_edges():
            assert not nx.is_isomorphic(a, b)


@pytest.mark.parametrize(
    "graph, chi",
    [
        (path(5), 2),
        (cycle(5), 3),
        (cycle(6), 2),
        (complete(5), 5),
        (turan(7, 3), 3),
        (star(6), 2),
        (Graph.empty(1), 1),
        (from_networkx(nx.petersen_graph()), 3),
        (from_networkx(nx.wheel_graph(6)), 4),
    ],
)
def test_chromatic_number(graph, chi):
    assert chromatic_number(graph) == chi


def test_chromatic_cap():
    with pytest.raises(TooLarge):
        chromatic_number(Graph.empty(17))


def test_chromatic_filter():
    graphs = list(filter_by_chromatic(enumerate_connected(5), 3))
    assert all(chromatic_number(g) == 3 for g in graphs)
    assert canonical_form(turan(5, 3)) in {canonical_form(g) for g in graphs}
    by_chi = {}
    for g in enumerate_connected(5):
        by_chi.setdefault(chromatic_number(g), []).append(g)
    assert sorted(by_chi) == [2, 3, 4, 5]
    assert sum(len(v) for v in by_chi.values()) == 21
    assert len(by_chi[3]) == len(graphs)


def test_family_spec():
    spec = FamilySpec("chromatic", 7, 3)
    assert str(spec) == "chromatic(n=7, r=3)"
    assert spec.to_dict() == {"kind": "chromatic", "n": 7, "r": 3}
    with pytest.raises(BadParams):
        FamilySpec("chromatic", 7)
    with pytest.raises(BadParams):
        FamilySpec("trees", 7, 3)
    with pytest.raises(BadParams):
        FamilySpec("chromatic", 5, 5)
    with pytest.raises(BadParams):
        FamilySpec("forests", 5)


def test_family_caps():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_family(FamilySpec("connected", 8))
    with pytest.raises(EnumerationCapExceeded):
        enumerate_family(FamilySpec("chromatic", 9, 3), allow_large=True)
    with pytest.raises(EnumerationCapExceeded):
        enumerate_family(FamilySpec("trees", 17))
    with pytest.raises(EnumerationCapExceeded):
        enumerate_family(FamilySpec("unicyclic", 13))
    # Allowed but not iterated.
    enumerate_family(FamilySpec("connected", 8), allow_large=True)


def test_family_dispatch():
    trees = list(enumerate_family(FamilySpec("trees", 6)))
    assert trees == list(enumerate_trees(6))
    chromatic = list(enumerate_family(FamilySpec("chromatic", 5, 3)))
    assert chromatic == list(filter_by_chromatic(enumerate_connected(5), 3))


def test_generators_validate_lazily():
    stream = enumerate_trees(1)
    with pytest.raises(BadParams):
        next(stream)
    with pytest.raises(BadParams):
        next(enumerate_unicyclic(2))
    with pytest.raises(EnumerationCapExceeded):
        next(enumerate_connected(9, allow_large=True))


def test_triangle_code():
    assert canonical_form(complete(3)) == CanonicalForm(3, 0b111)


@pytest.mark.parametrize("r, count", [(2, 3), (3, 2), (4, 1)])
def test_chromatic_classes_on_four_vertices(r, count):
    graphs = list(filter_by_chromatic(enumerate_connected(4), r))
    assert len(graphs) == count
    if r == 4:
        assert graphs == [canonical_form(complete(4)).to_graph()]


def test_five_vertex_three_chromatic_members():
    forms = {canonical_form(g) for g in filter_by_chromatic(enumerate_connected(5), 3)}
    assert canonical_form(cycle(5)) in forms
    assert canonical_form(turan(5, 3)) in forms


def brute_force_chromatic(g):
    edges = g.edges()
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    return g.n


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_chromatic_number_matches_brute_force(n):
    for g in enumerate_connected(n):
        assert chromatic_number(g) == brute_force_chromatic(g), g


@pytest.mark.parametrize("n", range(2, 9))
def test_turan_chromatic_number(n):
    for r in range(2, n + 1):
        assert chromatic_number(turan(n, r)) == r


@pytest.mark.parametrize("n", range(4, 11))
def test_star_appears_once_among_trees(n):
    target = canonical_form(star(n))
    assert sum(canonical_form(t) == target for t in enumerate_trees(n)) == 1


@pytest.mark.parametrize("n", range(4, 9))
def test_star_plus_appears_once_among_unicyclic(n):
    target = canonical_form(star_plus(n))
    assert sum(canonical_form(g) == target for g in enumerate_unicyclic(n)) == 1


@pytest.mark.parametrize("n, r", [(n, r) for n in range(4, 7) for r in range(2, n)])
def test_turan_appears_once_in_its_class(n, r):
    target = canonical_form(turan(n, r))
    members = filter_by_chromatic(enumerate_connected(n), r)
    assert sum(canonical_form(g) == target for g in members) == 1


@pytest.mark.slow
@pytest.mark.parametrize("r", range(2, 7))
def test_turan_appears_once_on_seven_vertices(r):
    target = canonical_form(turan(7, r))
    members = filter_by_chromatic(enumerate_connected(7), r)
    assert sum(canonical_form(g) == target for g in members) == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_add_edge_never_lengthens_distances(n):
    for g in enumerate_connected(n):
        before = distance_profile(g).dist
        for u, v in g.non_edges():
            after = distance_profile(add_edge(g, u, v)).dist
            assert after[u][v] == 1
            assert all(
                after[a][b] <= before[a][b] for a in range(n) for b in range(n)
            )


@pytest.mark.slow
def test_canonical_form_invariant_over_suite(connected_suite, rng):
    for g in connected_suite:
        form = canonical_form(g)
        for _ in range(50):
            sigma = [int(v) for v in rng.permutation(g.n)]
            assert canonical_form(permute(g, sigma)) == form, g


@pytest.mark.slow
def test_connected_eight_behind_flag():
    with pytest.raises(EnumerationCapExceeded):
        next(enumerate_connected(8))
    assert sum(1 for _ in enumerate_connected(8, allow_large=True)) == 11117
