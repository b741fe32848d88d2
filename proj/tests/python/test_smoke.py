import pytest

import wienerlab as wl


def test_wiener_of_small_trees():
    assert wl.wiener(wl.path_tree(4)) == 10
    t = wl.Tree(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    assert wl.wiener(t) == wl.wiener_pairwise(t) == 29
    assert wl.diameter(t) == 3
    assert wl.classify(t) == ("double", 2, 2, 0)


def test_invalid_tree_raises():
    with pytest.raises(wl.WienerlabError):
        wl.Tree(4, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ValueError):
        wl.Tree.parse("3\n0 1\n")


def test_broom_relocation():
    t = wl.triple_broom(12, 2, 2, 2)
    assert wl.wiener(t) == 214
    (ctx,) = wl.special_contexts(t)
    assert ctx["depth"] == 2 and ctx["predicted_delta"] == -7
    after = wl.relocate_broom(t, 0)
    assert wl.wiener(after) == 207
    assert wl.predicted_broom_delta(2, 2, 2, 12) == -7


def test_leaf_relocation():
    p5 = wl.path_tree(5)
    assert wl.predicted_leaf_delta(p5, 0, 4) == -2
    assert wl.wiener(wl.relocate_leaf(p5, 0, 4)) == 18


def test_brooms_and_bounds():
    assert wl.best_double_broom(10, 6) == (2, 3, 139)
    assert wl.best_triple_broom(12, 6) == (1, 3, 2, 216)
    assert (wl.theorem_bound(1634), wl.proposition_bound(1634)) == (1744, 1750)
    cmp = wl.compare_brooms(1750, 1634)
    assert cmp["winner"] == "triple" and cmp["regime"] == "proposition"
    assert wl.okok_bounds(1636) == (28, 29)


def test_enumeration_and_extremal():
    assert [wl.count_free_trees(n) for n in range(4, 11)] == [2, 3, 6, 11, 23, 47, 106]
    rec = wl.extremal_trees(10, 6)
    assert rec["max_wiener"] == 139 and rec["all_double_broom"]
    assert len({wl.canonical_form(t) for t in wl.free_trees(8)}) == 23


def test_verify():
    report = wl.verify("delta-leaf", samples=200)
    assert report["checked"] == 200 and not report["counterexamples"]
    assert "monotone" in wl.lemma_ids
