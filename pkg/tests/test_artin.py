import pytest
from hypothesis import given, strategies as st

from curvegroups import artin
from curvegroups.acceptance import _action_images, _relation_move, garside_oracle_pairs


def _words(rank, n=8):
    return st.lists(st.tuples(st.integers(1, rank), st.sampled_from([1, -1])), max_size=n)


@pytest.mark.parametrize("name, order", [("A1", 2), ("A3", 24), ("D4", 192), ("E6", 51840)])
def test_coxeter_orders(name, order):
    assert artin.build_coxeter(name).group_order() == order


def test_e6_roots():
    assert len(artin.build_coxeter("E6").roots) == 72


def test_bad_types():
    for bad in ("F4", "D3", "E9", "A0", "X"):
        with pytest.raises(artin.ArtinError):
            artin.build_coxeter(bad)
    with pytest.raises(artin.ArtinError):
        artin.normal_form("A3", "a4")


def test_delta_normal_forms():
    assert artin.normal_form("E6", "(a2 a4 a6 a1 a3 a5)^6").delta_power == 1
    assert artin.normal_form("A3", "(a1 a2 a3)^4").delta_power == 2
    nf = artin.normal_form("A3", "a1^-1")
    assert nf.delta_power == -1 and len(nf.simples) == 1


@given(_words(3))
def test_normal_form_is_invariant(w):
    nf = artin.normal_form("A3", w)
    assert artin.normal_form("A3", nf.to_word()) == nf


@given(_words(3), st.randoms(use_true_random=False))
def test_relation_moves_preserve_element(w, rng):
    v = w
    for _ in range(6):
        v = _relation_move(rng, v, 3, 12)
    assert artin.words_equal("A3", w, v)
    assert _action_images(w, 4) == _action_images(v, 4)


@given(_words(3, 6), _words(3, 6))
def test_agrees_with_action_oracle(u, v):
    assert artin.words_equal("A3", u, v) == (_action_images(u, 4) == _action_images(v, 4))


def test_oracle_suite_small():
    counts, bad = garside_oracle_pairs(pairs=60, seed=7)
    assert counts["disagreements"] == 0, bad


def test_delta_centrality():
    for name in ("A3", "E6"):
        d = artin.delta_word(name)
        assert not artin.is_central(name, d)
        assert artin.is_central(name, d + d)
    d = artin.delta_word("D4")
    assert artin.is_central("D4", d)


def test_e6_delta_conjugation_and_abelianization():
    assert artin.delta_conjugation("E6") == {1: 1, 2: 6, 3: 5, 4: 4, 5: 3, 6: 2}
    assert artin.abelianization("E6", artin.delta_word("E6")) == 36
    assert artin.delta_conjugation("A3") == {1: 3, 2: 2, 3: 1}


def test_format_round_trip():
    sysm = artin.build_coxeter("A3")
    w = [(1, 1), (3, -1), (2, 1)]
    assert artin.parse_artin_word(sysm, artin.format_artin_word(w)) == w
