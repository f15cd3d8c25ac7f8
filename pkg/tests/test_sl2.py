import pytest
from hypothesis import given, strategies as st

from curvegroups import sl2
from curvegroups.braid import BraidWord, spherical_relator

gens = st.sampled_from([sl2.S, sl2.T, sl2.S.inverse(), sl2.T.inverse(), sl2.A, sl2.B])
matrices = st.lists(gens, max_size=12).map(
    lambda ms: __import__("functools").reduce(lambda x, y: x * y, ms, sl2.IDENTITY)
)


def test_determinant_enforced():
    with pytest.raises(ValueError):
        sl2.SL2Matrix(1, 1, 1, 1)


def test_generator_orders():
    assert sl2.A ** 4 == sl2.IDENTITY and sl2.A ** 2 == sl2.MINUS_I
    assert sl2.B ** 6 == sl2.IDENTITY and sl2.B ** 3 == sl2.MINUS_I
    assert sl2.order_class(sl2.A).order == 4
    assert sl2.order_class(sl2.B).order == 6
    assert not sl2.order_class(sl2.S).finite


@given(matrices)
def test_normal_form_round_trip(M):
    nf = sl2.amalgam_normal_form(M)
    assert nf.evaluate() == M
    assert sl2.parse_amalgam(nf.letters()) in (M, -M)


@given(matrices)
def test_normal_form_alternates(M):
    syl = sl2.amalgam_normal_form(M).syllables
    for (x, _), (y, _) in zip(syl, syl[1:]):
        assert x != y


def test_printed_amalgam_forms():
    S, T = sl2.S, sl2.T
    t1 = S * T ** 3 * S.inverse()
    assert sl2.amalgam_normal_form(t1).psl_equal(sl2.amalgam_normal_form(sl2.parse_amalgam("ABAB^2AB^2ABA")))
    assert t1 == -sl2.parse_amalgam("ABAB^2AB^2ABA")  # sign lost in print
    assert T * S * T.inverse() == sl2.parse_amalgam("AB^2AB^2A")
    assert S ** 6 == sl2.parse_amalgam("(AB)^6")


def test_klein_sigma_images():
    assert sl2.braid_to_klein(BraidWord.parse("s1", 4)) == sl2.KleinSL2Element((0, 0), sl2.S)
    assert sl2.braid_to_klein(BraidWord.parse("s2", 4)) == sl2.KleinSL2Element(sl2.Y, sl2.T)
    assert sl2.braid_to_klein(BraidWord.parse("s3", 4)) == sl2.KleinSL2Element(sl2.X, sl2.S)


def test_printed_sigma_images_do_not_respect_braid_relation():
    # pinned: the assignment is a map on words, not a homomorphism from B_4
    s = sl2.braid_to_klein(BraidWord.parse("s1 s2 s1", 4))
    t = sl2.braid_to_klein(BraidWord.parse("s2 s1 s2", 4))
    assert s != t
    r = sl2.braid_to_klein(spherical_relator(4))
    assert r == sl2.KleinSL2Element((0, 0), sl2.SL2Matrix(7, 12, 4, 7))


def test_braid_to_klein_needs_four_strands():
    with pytest.raises(ValueError):
        sl2.braid_to_klein(BraidWord.parse("s1", 3))


def test_klein_group_law():
    g = sl2.KleinSL2Element(sl2.X, sl2.T)
    h = sl2.KleinSL2Element(sl2.Y, sl2.S)
    assert (g * h) * g == g * (h * g)
    assert (g * g.inverse()).is_identity()
    assert g ** -2 == (g * g).inverse()


def test_certificate_finds_relation():
    g = sl2.KleinSL2Element((0, 0), sl2.A)
    cert = sl2.free_pair_certificate(g, g, 4)
    assert not cert["passed"]
    assert cert["relation"] is not None


def test_certificate_passes_for_ping_pong_pair():
    g = sl2.KleinSL2Element((0, 0), sl2.S ** 2)
    h = sl2.KleinSL2Element((0, 0), sl2.T ** 2)
    cert = sl2.free_pair_certificate(g, h, 6)
    assert cert["passed"] and cert["bounded"]
