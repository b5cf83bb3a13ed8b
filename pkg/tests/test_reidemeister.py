import pytest
from hypothesis import given

from knotforge import knot_table
from knotforge.alexander import alexander_polynomial
from knotforge.conway import conway_polynomial
from knotforge.diagram import UNKNOT, is_planar, structurally_equal, validate, writhe
from knotforge.laurent import units_equal
from knotforge.reidemeister import KINDS, MoveError, MoveSite, apply, detect, detect_all, walk

from conftest import walked_diagrams


def _invariants(d):
    return alexander_polynomial(d), conway_polynomial(d)


@pytest.mark.parametrize("name", ["unknot", "1_1", "3_1", "4_1"])
def test_every_site_preserves_invariants(name):
    d = knot_table.get(name)
    inv = _invariants(d)
    for kind, sites in detect_all(d).items():
        for site in sites:
            r = apply(d, site)
            assert validate(r) == [] and is_planar(r), site
            assert _invariants(r) == inv, site


def test_r1_changes_writhe_by_sign():
    d = knot_table.get("4_1")
    for site in detect(d, "R1_add"):
        e, sign, _ = site.params
        assert writhe(apply(d, site)) == writhe(d) + sign


def test_r1_on_unknot_loop():
    sites = detect(UNKNOT, "R1_add")
    assert {s.params for s in sites} == {("loop", 1, None), ("loop", -1, None)}
    for s in sites:
        kink = apply(UNKNOT, s)
        assert len(kink.pd) == 1
        (back,) = detect(kink, "R1_remove")
        assert apply(kink, back) == UNKNOT


def test_adds_are_undone_by_removals():
    d = knot_table.get("3_1")
    for kind, undo in (("R1_add", "R1_remove"), ("R2_add", "R2_remove")):
        for site in detect(d, kind)[:12]:
            r = apply(d, site)
            assert any(structurally_equal(apply(r, u), d) for u in detect(r, undo)), site


def test_r3_after_r2_on_6_2():
    d = knot_table.get("6_2")
    assert detect(d, "R3") == []  # alternating diagrams have no R3 triangles
    inv = _invariants(d)
    found = 0
    for site in detect(d, "R2_add"):
        r = apply(d, site)
        for t in detect(r, "R3"):
            s = apply(r, t)
            found += 1
            assert _invariants(s) == inv
            assert writhe(s) == writhe(r)
            assert any(structurally_equal(apply(s, u), r) for u in detect(s, "R3"))
        if found >= 6:
            break
    assert found


def test_inapplicable_move_raises():
    d = knot_table.get("3_1")
    with pytest.raises(MoveError, match="inapplicable move"):
        apply(d, MoveSite("R1_remove", (0,)))
    with pytest.raises(MoveError):
        apply(d, MoveSite("R2_remove", (0, 1)))
    with pytest.raises(ValueError):
        detect(d, "R4")


def test_walk_is_deterministic_and_capped():
    d = knot_table.get("5_2")
    a = [s for s, _ in walk(d, 40, seed=3)]
    b = [s for s, _ in walk(d, 40, seed=3)]
    assert a == b
    assert all(len(x.pd) <= 16 for _, x in walk(d, 60, seed=11))
    assert {s.kind for s in a} <= set(KINDS)


@given(walked_diagrams(max_steps=8))
def test_walks_keep_delta(item):
    name, d = item
    assert validate(d) == [] and is_planar(d)
    assert units_equal(alexander_polynomial(d), knot_table.entry(name).expected_delta)
