import pytest

from curvegroups.freegroup import FreeGroup
from curvegroups.presentation import (
    FinitePresentation,
    PresentationError,
    Verdict,
    abelian_invariants,
    character_is_defined,
    equal_in_quotient,
    format_presentation,
    group_order,
    parse_presentation,
    simplify,
    tietze_eliminate,
    todd_coxeter,
    verify_table,
)

A5 = "< a, b | a^2, b^3, (a b)^5 >"
S3 = "< a, b | a^2, b^2, (a b)^3 >"


def test_round_trip():
    p = parse_presentation(S3)
    assert parse_presentation(format_presentation(p)) == p


@pytest.mark.parametrize(
    "text, order",
    [
        ("< a | a^3 >", 3),
        (S3, 6),
        ("< a, b | a^4, b^2, (a b)^2 >", 8),
        (A5, 60),
        ("< a, b | a^2, b^3, (a b)^4 >", 24),
        ("< a, b | a b a^-1 b^-1, a^5, b^4 >", 20),
        ("< a, b | a^-1 b a b^-2, b^-1 a b a^-2 >", 1),
    ],
)
def test_orders(text, order):
    assert group_order(parse_presentation(text)) == order


def test_limit_reports_unknown():
    assert group_order(parse_presentation(A5), limit=20) is None
    t = todd_coxeter(parse_presentation(A5), limit=20)
    assert not t.complete


def test_table_verifies_and_subgroup_index():
    p = parse_presentation(A5)
    t = todd_coxeter(p, ["a"])
    assert t.complete and t.index == 30
    assert verify_table(p, t, ["a"])
    assert todd_coxeter(p, ["b"]).index == 20


def test_word_problem_in_quotient():
    p = parse_presentation(S3)
    assert equal_in_quotient(p, "a b a", "b a b") is Verdict.EQUAL
    assert equal_in_quotient(p, "a", "b") is Verdict.DISTINCT
    assert equal_in_quotient(parse_presentation(A5), "a", "b", limit=10) is Verdict.UNKNOWN


def test_abelian_invariants():
    assert abelian_invariants(parse_presentation("< a, b | a b a^-1 b^-1 >")) == [0, 0]
    assert abelian_invariants(parse_presentation("< a, b | a^4, b^6, a b a^-1 b^-1 >")) == [2, 12]
    assert abelian_invariants(parse_presentation(S3)) == [2]


def test_tietze_preserves_group():
    p = parse_presentation("< a, b, c | c a^-1 b^-1, a^2, b^3, c^5 >")
    q = tietze_eliminate(p, "c", 0)
    assert q.generators == ("a", "b")
    assert group_order(q) == group_order(p) == 60


def test_tietze_refuses_non_solvable():
    p = parse_presentation("< a, b | a^2 b >")
    with pytest.raises(PresentationError):
        tietze_eliminate(p, "a", 0)


def test_simplify_keeps_order():
    p = parse_presentation("< a, b, c, d | d c^-1, c a^-1 b^-1, a^2, b^3, (d)^5 >")
    r = simplify(p)
    assert len(r.presentation.generators) < 4
    assert group_order(r.presentation) == 60
    assert r.presentation.total_length() <= p.total_length()


def test_killing_and_character():
    p = parse_presentation("< a, t | t a t^-1 a^-1 >")
    assert group_order(p.killing(["t"]), limit=100) is None  # Z
    assert character_is_defined(p, {"t": 1})
    q = parse_presentation("< a, t | t a t^-1 a^-2 >")
    assert character_is_defined(q, {"t": 1})
    assert not character_is_defined(q, {"a": 1})


def test_build_drops_trivial_relators():
    p = FinitePresentation.build(["a"], ["a a^-1", "a^2"])
    assert len(p.relators) == 1
