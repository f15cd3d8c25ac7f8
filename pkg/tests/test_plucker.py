import pytest
from hypothesis import given, strategies as st

from curvegroups.plucker import (
    PluckerError,
    consistency,
    dual_invariants,
    duality_roundtrip,
    kappa_relation,
    rational_nodal_family,
    sextic_six_cusps_check,
)


def test_nodal_cubic():
    p = dual_invariants(3, 1, 0)
    assert (p.d_dual, p.iota, p.tau) == (4, 3, 0)


def test_printed_cusp_variant_fails_on_nodal_cubic():
    p = dual_invariants(3, 1, 0)
    assert kappa_relation(p) == 0
    assert kappa_relation(p, as_printed=True) == 12
    c = consistency(p)
    assert c["cusp_relation"] and not c["cusp_relation_as_printed"]


@pytest.mark.parametrize("d, rec", [(4, (12, 24, 28)), (3, (6, 9, 0))])
def test_smooth(d, rec):
    p = dual_invariants(d, 0, 0)
    assert (p.d_dual, p.iota, p.tau) == rec


def test_cuspidal_curves():
    assert dual_invariants(3, 0, 1).d_dual == 3
    q = dual_invariants(4, 0, 3)  # three-cuspidal quartic
    assert (q.d_dual, q.iota, q.tau) == (3, 0, 1)
    assert sextic_six_cusps_check()["record"]["tau"] == 27


@pytest.mark.parametrize("d", range(3, 13))
def test_rational_nodal_family(d):
    fam = rational_nodal_family(d)
    assert fam["agrees"]
    assert duality_roundtrip(fam["primal"])["ok"]


@given(st.integers(2, 9), st.integers(0, 6), st.integers(0, 6))
def test_dual_relations_whenever_defined(d, delta, kappa):
    try:
        p = dual_invariants(d, delta, kappa)
    except PluckerError:
        return
    c = consistency(p)
    assert c["bitangent_relation"] and c["cusp_relation"]


def test_errors():
    with pytest.raises(PluckerError):
        dual_invariants(0, 0, 0)
    with pytest.raises(PluckerError):
        dual_invariants(3, 5, 0)
    with pytest.raises(PluckerError):
        rational_nodal_family(2)
