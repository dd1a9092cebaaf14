"""The Clifford-Weyl surjection pipeline on truncated quotients."""

import pytest

from symalg.surjection import (
    SurjectionError,
    build_cw_surjection,
    plan_assignment,
    weyl_surjection_note,
)


def test_plan_assignment_31():
    pinned, slots, d = plan_assignment(3, 1, 1, 1)
    assert pinned == {"p1": ("x1", "x3"), "q1": ("x2", "x3")}
    assert slots == [(6, "z"), (7, "c")]
    assert d == 7
    pinned0, slots0, d0 = plan_assignment(3, 1, 0, 2)
    assert pinned0 == {}
    assert dict(slots0) == {5: "a1", 7: "b1", 6: "z"}
    assert d0 == 7


def test_plan_rejects_out_of_range():
    with pytest.raises(SurjectionError):
        plan_assignment(3, 1, 0, 1)
    with pytest.raises(SurjectionError):
        plan_assignment(2, 1, 1, 1)
    with pytest.raises(SurjectionError):
        plan_assignment(3, 0, 1, 1)


def test_cutoff_floor():
    from symalg.presentation import preset

    with pytest.raises(SurjectionError):
        build_cw_surjection(preset(3, 1), 1, 1, l=5)


def test_requires_normalized_presentation():
    from symalg.presentation import SymPresentation

    p = SymPresentation(3, 1, [[[2]], [[0]], [[0]]])
    with pytest.raises(SurjectionError):
        build_cw_surjection(p, 1, 1)


def test_surjection_31_11(model31, p31):
    res = build_cw_surjection(p31, 1, 1, l=13, model=model31)
    assert (res.weight.weyl, res.weight.clifford) == (3, 1)
    assert res.ok, res.flags
    assert res.d_prime == 7


def test_surjection_31_02(model31, p31):
    res = build_cw_surjection(p31, 0, 2, l=13, model=model31)
    assert (res.weight.weyl, res.weight.clifford) == (2, 2)
    assert res.ok, res.flags


def test_plan_larger_r_spills_to_higher_slots():
    # (r,t) = (2,1): z and q2 fill the two weight-6 slots, p2 moves to
    # weight 8, so the odd target lands at weight 9
    _, slots, d = plan_assignment(3, 1, 2, 1)
    assert slots == [(6, "z"), (6, "q2"), (8, "p2"), (9, "c")]
    assert d == 9


def test_report_shape(model31, p31):
    res = build_cw_surjection(p31, 1, 1, l=13, model=model31)
    doc = res.report()
    assert doc["weight"] == {"weyl": 3, "clifford": 1}
    assert set(doc["flags"]) == {
        "bracket_compatible", "flzero", "surjective", "stabilizer_trivial",
    }
    assert "z" in doc["phi"] and "c" in doc["phi"]


def test_surjection_32_multiple_odd_slots():
    # s = 2 gives two odd generator slots per odd weight
    from symalg.presentation import preset

    p = preset(3, 2)
    res = build_cw_surjection(p, 0, 2, l=11)
    assert (res.weight.weyl, res.weight.clifford) == (2, 2)
    assert res.ok
    res2 = build_cw_surjection(p, 1, 2, l=13)
    assert (res2.weight.weyl, res2.weight.clifford) == (3, 2)
    assert res2.ok


def test_normalize_then_surject():
    # a rescaled coupling normalizes to the canonical form and runs
    from symalg.presentation import SymPresentation, normalize

    p = SymPresentation(3, 1, [[[4]], [[0]], [[0]]])
    q, record = normalize(p)
    assert record["odd_change"] == [["1/2"]]
    res = build_cw_surjection(q, 0, 2, l=13)
    assert (res.weight.weyl, res.weight.clifford) == (2, 2)
    assert res.ok


def test_surjection_default_cutoff(p31):
    # the safe default cutoff 2 d' + 1 gives the same weight
    res = build_cw_surjection(p31, 1, 1)
    assert res.l == 15
    assert (res.weight.weyl, res.weight.clifford) == (3, 1)
    assert res.ok


def test_remark_coverage_22_smoke():
    # for the two-even-generator family the scan reaches Weyl index >= 4
    # together with Clifford index >= 3
    from fractions import Fraction

    from symalg.engine import LieModel
    from symalg.presentation import build_relations, preset
    from symalg.superlie import FinDimSuperLieAlgebra, weight_of

    p = preset(2, 2)
    r0, r1 = build_relations(p)
    m = LieModel(p.alphabet, r0 + r1, cutoff=11)
    g = FinDimSuperLieAlgebra.from_model(m)
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
              59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107]
    f = {i: Fraction(primes[k % len(primes)]) for k, i in enumerate(g.even_indices())}
    w = weight_of(g, f)
    assert w.weyl >= 4 and w.clifford >= 3


def test_weyl_surjection_note(p31):
    note = weyl_surjection_note(p31, 1, l=11)
    assert note["odd_relations_killed"]
    assert note["even_relations_survive"]
    assert note["weight"]["clifford"] == 0
    assert note["weight"]["weyl"] == 3
    assert all(note["flags"].values())
