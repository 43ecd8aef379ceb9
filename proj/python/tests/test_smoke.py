import pytest

import gtorders as gt


def tab(*rows):
    return {"n": len(rows), "rows": [list(r) for r in rows]}


def test_calibration_is_unique():
    cal = gt.calibrate()
    assert cal["valid_count"] == 1
    assert cal["profile"] == gt.default_profile()
    assert cal["profile"]["shift_direction"] == -1


def test_relations_and_center():
    rep = gt.verify_relations(3, jobs=2)
    assert rep["status"] == "pass" and rep["checked"] == 36
    assert gt.verify_center(3)["status"] == "pass"
    bad = dict(gt.default_profile(), lowering_sign=-1)
    assert gt.verify_relations(2, profile=bad)["failures"] >= 1


def test_gl2_action_matches_closed_form():
    # (x; a, b) = (1/7; 1/3, 1/5): e12 sends T(x) to -(a - x)(b - x) T(x + 1).
    out = gt.act("e12", tab(["1/3", "1/5"], ["1/7"]))
    assert out == [{"tableau": tab(["1/3", "1/5"], ["8/7"]), "coeff": "-8/735"}]
    assert gt.act("e21", tab(["1/3", "1/5"], ["1/7"]))[0]["coeff"] == "1"


def test_central_character():
    t = tab(["1/3", "1/5", "2/7"], ["1/11", "3/13"], ["1/17"])
    for m in (1, 2, 3):
        for k in range(1, m + 1):
            out = gt.act_c(m, k, t)
            assert out == [{"tableau": t, "coeff": gt.evaluate_gamma(m, k, t)}]


def test_counts():
    assert gt.gt_pattern_count([2, 1, 0]) == 8
    assert len(gt.gt_patterns([1, 0, 0])) == 3
    assert gt.weyl_dimension([1, 0, 0, -1]) == 15
    assert [gt.q_bound(n) for n in (2, 3, 4)] == [1, 2, 12]
    with pytest.raises(gt.NotDominant):
        gt.gt_pattern_count([0, 1])


def test_reachability_and_orbits():
    generic = tab(["1/3", "1/5"], ["1/7"])
    assert gt.reachability(generic, 3)["reached_count"] == 7
    rep = gt.reachability(tab([0, -2], [-1]), 2, mode="pattern")
    assert rep["reached_count"] == 2 and rep["module_verified"]
    s = gt.s_set(tab([2, 1, 0], [1, 0], [0]))
    assert s["s_set_mod_G"] == 2 and s["bound_holds"]
    assert gt.s_set(tab(["1/3", "1/5", "2/7"], ["1/11", "3/13"], ["1/17"]))["s_set"] == [{}]
    assert len(gt.x_set("e12", generic)) == 1
    g = gt.block_graph([generic], 2)
    assert len(g["nodes"]) == 5 and len(g["edges"]) == 4


def test_mackey():
    assert gt.mackey("s3")["dims"] == [1, 1, 2]
    a4 = gt.mackey("a4")
    assert a4["dims"] == [1, 1, 1, 3] and a4["burnside_holds"] and a4["class_count_matches"]
    assert gt.skew_orbit(0, 1, 5)["free_action"]
    with pytest.raises(gt.ZeroShift):
        gt.skew_orbit(0, 0, 5)


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        gt.act("e13", tab(["1/3", "1/5"], ["1/7"]))
    with pytest.raises(ValueError):
        gt.reachability(tab(["1/3", "1/5"], ["1/7"]), 1, mode="spiral")
