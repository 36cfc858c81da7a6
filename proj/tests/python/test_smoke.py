from fractions import Fraction

import pytest

import dchroma


def test_levi_graph_shape():
    g = dchroma.levi_graph(3)
    assert g.order == 26
    assert g.edge_count == 52
    assert all(g.degree(v) == 4 for v in range(26))
    assert dchroma.Graph.from_text(g.to_text()).edges() == g.edges()


def test_automorphism_orders():
    assert dchroma.automorphism_order(dchroma.levi_graph(2)) == 336
    assert dchroma.automorphism_order(dchroma.complete_graph(4), [0, 0, 1, 1]) == 4


def test_chid_of_heawood():
    r = dchroma.distinguishing_chromatic_number(dchroma.levi_graph(2), 6)
    assert r["value"] == 4
    assert r["chromatic"] == 2
    g = dchroma.levi_graph(2)
    assert dchroma.is_proper(g, r["witness"])
    assert dchroma.is_distinguishing(g, r["witness"])


def test_expected_fixers_below_two():
    rep = dchroma.levi_expected_fixers(5, 2)
    en = Fraction(int(rep["exact_EN"]["num"]), int(rep["exact_EN"]["den"]))
    assert 1 < en < 2
    assert rep["lemma_satisfied"]


def test_bounds():
    assert dchroma.levi_bound(8, 2)["below_2"]
    assert dchroma.max_fixed_ksets(9, 4) == 56


def test_errors_surface():
    with pytest.raises(dchroma.DchromaError):
        dchroma.levi_graph(6)


def test_recipe_is_deterministic():
    a = dchroma.run_recipe("levi", seed=5)
    assert a == dchroma.run_recipe("levi", seed=5)
    assert a["pass"]
