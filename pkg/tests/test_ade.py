from fractions import Fraction

import pytest

from curvegroups import ade
from curvegroups.acceptance import _ade_types


def T(name):
    return ade.SingularityType.parse(name)


def test_e6_basis_and_deformation():
    assert [ade.format_monomial(m) for m in ade.milnor_basis(T("E6").polynomial)] == [
        "1", "x1", "x2", "x2^2", "x1 x2", "x1 x2^2",
    ]
    assert ade.deformation_polynomial(T("E6"))["text"] == (
        "x1^3 + x2^4 + t1 + t2 x1 + t3 x2 + t4 x2^2 + t5 x1 x2 + t6 x1 x2^2"
    )


@pytest.mark.parametrize("name", _ade_types(10))
def test_milnor_number_matches_basis(name):
    t = T(name)
    assert ade.milnor_number(t) == t.rank == len(ade.milnor_basis(t.polynomial))


def test_weights_and_branches():
    assert T("E6").weights == (Fraction(3), Fraction(4))
    assert T("D5").weights == (Fraction(8, 3), Fraction(4))
    assert [T(n).branches for n in ("A1", "A2", "D4", "D5", "E6", "E7", "E8")] == [2, 1, 3, 2, 1, 2, 1]
    assert [ade.fiber_rank(T(n)) for n in ("A1", "E6", "E7")] == [2, 6, 8]


def test_non_isolated_rejected():
    f = ade.Polynomial2({(2, 0): 1})
    with pytest.raises(ade.SingularityError):
        ade.milnor_basis(f)


def test_groebner_small():
    x, y = ade.Polynomial2.monomial(1, 0), ade.Polynomial2.monomial(0, 1)
    one = ade.Polynomial2.monomial(0, 0)
    gb = ade.groebner_basis([x * x - y, x * y - one])
    # the quotient is spanned by 1, x1, x2
    assert [str(g) for g in gb] == ["x2^2 - x1", "x1 x2 - 1", "x1^2 - x2"]
    assert len(ade.milnor_basis(T("A4").polynomial)) == 4


def test_specialise_at_zero():
    for name in ("A3", "D5", "E7"):
        t = T(name)
        assert ade.specialize_deformation(t, [0] * t.rank) == t.polynomial


@pytest.mark.parametrize("name", _ade_types(8))
def test_transvections(name):
    t = T(name)
    J = ade.intersection_lattice(t).skew_form
    assert all(ade.preserves_form(M, J) for M in ade.transvection_rep(t))
    assert all(ade.diagram_relations(t).values())


def test_e6_pair_count_and_order():
    rels = ade.diagram_relations(T("E6"))
    assert len(rels) == 15
    assert ade.bipartite_order(T("E6")) == [2, 4, 6, 1, 3, 5]


@pytest.mark.parametrize(
    "name, k",
    [("A1", 1), ("A2", 6), ("A5", 6), ("D4", 3), ("D5", 8), ("E6", 12), ("E7", 9), ("E8", 15)],
)
def test_classical_monodromy_order(name, k):
    # k is the lcm of the denominators of the weights' reciprocals
    assert ade.classical_monodromy_order(T(name)) == k


def test_bad_type():
    with pytest.raises(ValueError):
        T("E5")
