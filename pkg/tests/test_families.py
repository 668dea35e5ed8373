import math

import networkx as nx
import numpy as np
import pytest

from dalpha.enumeration import canonical_form
from dalpha.enumeration import enumerate_trees
from dalpha.errors import AlphaOutOfRange
from dalpha.errors import BadParams
from dalpha.errors import EmptyPart
from dalpha.errors import NoRootInInterval
from dalpha.errors import TooSmall
from dalpha.families import TuranParams
from dalpha.families import alpha_zero_root
from dalpha.families import complete_multipartite
from dalpha.families import dq_tree_bound
from dalpha.families import family_from_name
from dalpha.families import quotient_matrix_multipartite
from dalpha.families import quotient_matrix_star_plus
from dalpha.families import rho_distance_star
from dalpha.families import rho_distance_turan
from dalpha.families import rho_dq_turan
from dalpha.families import rho_star_closed
from dalpha.families import rho_star_plus
from dalpha.families import rho_turan_closed
from dalpha.families import rho_turan_lower_root
from dalpha.families import star
from dalpha.families import star_plus
from dalpha.families import star_plus_cubic
from dalpha.families import star_quadratic
from dalpha.families import table_threshold
from dalpha.families import turan
from dalpha.families import turan_hypothesis_holds
from dalpha.families import turan_secular_residual
from dalpha.graph import distance_profile
from dalpha.spectral import build_d_alpha
from dalpha.spectral import dense_spectral_radius
from dalpha.spectral import spectral_radius
from dalpha.utils import from_networkx
from dalpha.utils import to_networkx


def numeric_rho(g, alpha):
    return spectral_radius(build_d_alpha(distance_profile(g), alpha)).rho


def test_turan_params():
    t = TuranParams.of(7, 3)
    assert (t.d, t.s) == (2, 1)
    assert t.parts == [3, 2, 2]
    with pytest.raises(BadParams):
        TuranParams.of(3, 4)


@pytest.mark.parametrize("n, r", [(5, 2), (7, 3), (9, 4), (10, 3)])
def test_turan_matches_networkx(n, r):
    assert canonical_form(turan(n, r)) == canonical_form(
        from_networkx(nx.turan_graph(n, r))
    )


def test_multipartite_shape():
    g = complete_multipartite([3, 2, 2])
    assert g.n == 7
    assert g.edge_count == 16
    assert not g.has_edge(0, 1)
    assert g.has_edge(0, 3)
    assert nx.is_isomorphic(
        to_networkx(g), nx.complete_multipartite_graph(3, 2, 2)
    )
    with pytest.raises(EmptyPart):
        complete_multipartite([2, 0, 1])


def test_turan_example():
    assert rho_turan_closed(7, 3, 0.0) == pytest.approx(4 + 2 * math.sqrt(3))
    assert rho_turan_closed(7, 3, 0.0) == pytest.approx(7.4641016, abs=1e-6)


@pytest.mark.parametrize("n, r", [(5, 3), (6, 3), (7, 3), (8, 3), (8, 5), (9, 4)])
@pytest.mark.parametrize("alpha", [0.0, 0.2, 0.5, 0.6])
def test_turan_closed_form(n, r, alpha):
    rho = rho_turan_closed(n, r, alpha)
    assert rho == pytest.approx(numeric_rho(turan(n, r), alpha), abs=1e-8)
    assert turan_secular_residual(n, r, alpha, rho) == pytest.approx(0.0, abs=1e-9)
    lower = rho_turan_lower_root(n, r, alpha)
    assert lower < rho
    assert lower <= alpha * n + TuranParams.of(n, r).d - 1 + 1e-9
    quotient = quotient_matrix_multipartite(TuranParams.of(n, r).parts, alpha)
    assert max(np.linalg.eigvals(quotient).real) == pytest.approx(rho, abs=1e-8)


@pytest.mark.parametrize("n, r", [(6, 3), (7, 3), (9, 4)])
def test_turan_special_cases(n, r):
    assert rho_distance_turan(n, r) == pytest.approx(rho_turan_closed(n, r, 0.0))
    assert rho_dq_turan(n, r) == pytest.approx(2 * rho_turan_closed(n, r, 0.5))


def test_turan_example_values():
    assert rho_dq_turan(7, 3) == pytest.approx(15.0)
    assert rho_turan_closed(7, 3, 0.5) == pytest.approx(7.5)


def test_turan_argument_checks():
    with pytest.raises(BadParams):
        rho_turan_closed(7, 2, 0.3)
    with pytest.raises(BadParams):
        rho_turan_closed(7, 7, 0.3)
    with pytest.raises(AlphaOutOfRange):
        rho_turan_closed(7, 3, 1.2)


def test_turan_outside_hypothesis_warns(caplog):
    assert turan_hypothesis_holds(3, 2 / 3)
    assert not turan_hypothesis_holds(3, 0.7)
    rho = rho_turan_closed(7, 3, 0.9)
    assert "proven range" in caplog.text
    assert rho == pytest.approx(numeric_rho(turan(7, 3), 0.9), abs=1e-8)


@pytest.mark.parametrize("n", [4, 5, 6, 9, 12])
@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.5, 0.9])
def test_star_closed_form(n, alpha):
    rho = rho_star_closed(n, alpha)
    assert rho == pytest.approx(numeric_rho(star(n), alpha), abs=1e-8)
    assert star_quadratic(n, alpha, rho) == pytest.approx(0.0, abs=1e-8)


@pytest.mark.parametrize("n", [4, 7, 10])
def test_star_special_cases(n):
    assert rho_distance_star(n) == pytest.approx(rho_star_closed(n, 0.0))
    assert dq_tree_bound(n) == pytest.approx(2 * rho_star_closed(n, 0.5))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_dq_bound_strict_for_other_trees(n):
    bound = dq_tree_bound(n)
    target = canonical_form(star(n))
    for tree in enumerate_trees(n):
        if canonical_form(tree) != target:
            assert 2 * numeric_rho(tree, 0.5) > bound


def test_star_argument_checks():
    with pytest.raises(BadParams):
        rho_star_closed(3, 0.5)
    with pytest.raises(AlphaOutOfRange):
        rho_star_closed(5, 1.0)


@pytest.mark.parametrize("n", [4, 6, 7, 10])
@pytest.mark.parametrize("alpha", [0.0, 0.5, 0.75, 1.0])
def test_star_plus(n, alpha):
    rho = rho_star_plus(n, alpha)
    m = build_d_alpha(distance_profile(star_plus(n)), alpha)
    assert rho == pytest.approx(dense_spectral_radius(m), abs=1e-9)
    assert star_plus_cubic(n, alpha, rho) == pytest.approx(0.0, abs=1e-6 * n ** 3)


def test_star_plus_quotient_rows():
    # Row sums of the quotient are the transmissions of each class.
    sums = quotient_matrix_star_plus(6, 1.0).sum(axis=1)
    np.testing.assert_allclose(sums, [5, 8, 9])
    np.testing.assert_allclose(quotient_matrix_star_plus(6, 0.0).sum(axis=1), [5, 8, 9])


@pytest.mark.parametrize(
    "n, half, threshold, one", [(6, 8.3574, 8.6667, 9), (7, 10.4031, 10.8571, 11)]
)
def test_published_table(n, half, threshold, one):
    assert rho_star_plus(n, 0.5) == pytest.approx(half, abs=5e-5)
    assert table_threshold(n) == pytest.approx(threshold, abs=5e-5)
    assert rho_star_plus(n, 1.0) == pytest.approx(one, abs=1e-12)


@pytest.mark.parametrize("n", [6, 7])
def test_alpha_zero_root(n):
    root = alpha_zero_root(n)
    assert 0.5 < root < 1.0
    assert rho_star_plus(n, root) == pytest.approx(table_threshold(n), abs=1e-7)


@pytest.mark.parametrize("n", [9, 10, 12])
def test_alpha_zero_root_missing(n):
    with pytest.raises(NoRootInInterval):
        alpha_zero_root(n)


def test_family_from_name():
    assert family_from_name("star:5") == star(5)
    assert family_from_name("star_plus:6") == star_plus(6)
    assert family_from_name("turan:7:3") == turan(7, 3)
    assert family_from_name("multipartite:3,2,2") == complete_multipartite([3, 2, 2])
    assert family_from_name("cycle:5").edge_count == 5
    with pytest.raises(BadParams):
        family_from_name("turan:7")
    with pytest.raises(BadParams):
        family_from_name("star:x")
    with pytest.raises(TooSmall):
        family_from_name("cycle:2")


def proven_alphas(r):
    return [a / 10 for a in range(10) if a / 10 <= 1 - 1 / r]


@pytest.mark.parametrize("n", range(4, 21))
def test_turan_closed_form_grid(n):
    for r in range(3, n):
        profile = distance_profile(turan(n, r))
        for alpha in proven_alphas(r):
            numeric = spectral_radius(build_d_alpha(profile, alpha)).rho
            assert abs(rho_turan_closed(n, r, alpha) - numeric) <= 1e-8


def test_star_distance_formula_range():
    for n in range(4, 31):
        assert abs(rho_star_closed(n, 0.0) - rho_distance_star(n)) <= 1e-12
