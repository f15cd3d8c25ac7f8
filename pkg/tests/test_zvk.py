import json

import pytest

from curvegroups.presentation import abelian_invariants, group_order, simplify
from curvegroups.quartic import load_monodromy
from curvegroups.zvk import (
    MonodromyData,
    MonodromyError,
    affine_presentation,
    all_presentations,
    fill_fibers,
    projective_presentation,
    total_space_presentation,
)


def _single(braid, d=2):
    return MonodromyData.from_dict({"degree": d, "base": ["t"], "braids": {"t": braid}})


def test_trivial_monodromy_gives_free_groups():
    m = _single("", 3)
    assert affine_presentation(m).relators == ()
    assert abelian_invariants(affine_presentation(m)) == [0, 0, 0]
    assert abelian_invariants(projective_presentation(m)) == [0, 0]


def test_cusp_local_group_is_trefoil_group():
    p = affine_presentation(_single("s1^3"))
    s = simplify(p).presentation
    assert len(s.relators) == 1
    assert abelian_invariants(p) == [0]
    # B_3 maps onto S_3
    q = type(s).build(s.generators, [str(r) for r in s.relators] + ["g1^2"])
    assert group_order(q) == 6


def test_node_local_group_is_abelian():
    assert abelian_invariants(affine_presentation(_single("s1^2"))) == [0, 0]
    assert group_order(projective_presentation(_single("s1^2")), 100) is None


def test_relator_order_and_labels():
    m = load_monodromy()
    p = total_space_presentation(m)
    assert p.generators == ("a1", "a2", "b1", "b2", "t1", "t2", "t3")
    assert len(p.relators) == 12
    assert p.labels[0].startswith("a1^t1")
    assert p.labels[1].startswith("a1^t2")
    closed = total_space_presentation(m, fiber_closure=True, base_closure=True)
    assert closed.labels[-2:] == ("a1 a2 b2 b1 = 1", "t1 t2 t3 = 1")


def test_four_variants():
    pres = all_presentations(load_monodromy())
    assert set(pres) == {"total", "total_closed", "affine", "projective"}
    assert abelian_invariants(pres["affine"]) == [0]
    assert abelian_invariants(pres["projective"]) == [4]
    assert group_order(pres["projective"]) == 12


def test_partial_filling_keeps_unfilled_base():
    p = fill_fibers(load_monodromy(), ["t2"], base_closure=True)
    assert p.generators == ("a1", "a2", "b1", "b2", "t1", "t3")
    with pytest.raises(MonodromyError):
        fill_fibers(load_monodromy(), ["t9"])


def test_round_trip_json():
    m = load_monodromy()
    assert MonodromyData.loads(json.dumps(m.to_dict())) == m


@pytest.mark.parametrize(
    "data, msg",
    [
        ({"degree": 3, "base": ["t"], "braids": {"t": "s1"}, "fiber": ["a", "b"]}, "fibre names"),
        ({"degree": 2, "base": ["t"], "braids": {}}, "no braid"),
        ({"degree": 2, "base": ["t"], "braids": {"t": "s2"}}, "not in B_2"),
        ({"degree": 2, "base": ["t"]}, "missing field"),
        ({"degree": 2, "base": ["t"], "braids": {"t": "s1", "u": "s1"}}, "unknown base"),
    ],
)
def test_validation(data, msg):
    with pytest.raises(MonodromyError, match=msg):
        MonodromyData.from_dict(data)


def test_strand_count_mismatch():
    from curvegroups.braid import BraidWord

    with pytest.raises(MonodromyError, match="strands"):
        MonodromyData(3, ("t",), {"t": BraidWord.parse("s1", 2)})


def test_malformed_json_has_position():
    with pytest.raises(json.JSONDecodeError) as exc:
        MonodromyData.loads('{"degree": 2,\n "base": [}')
    assert exc.value.lineno == 2
