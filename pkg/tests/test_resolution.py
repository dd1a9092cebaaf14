"""Per-weight verification of the length-three resolutions, both sides."""

from symalg.resolution import SidedResolution, verify_resolution


def test_resolution_31_left_right(assoc31, p31):
    out = verify_resolution(assoc31, p31, 10)
    for side in ("left", "right"):
        for rep in out[side]:
            assert rep.ok, (side, rep.weight, rep.checks)


def test_resolution_22(assoc22, p22):
    out = verify_resolution(assoc22, p22, 8)
    for side in ("left", "right"):
        for rep in out[side]:
            assert rep.ok, (side, rep.weight, rep.checks)


def test_top_map_injectivity_ranks(assoc31, p31):
    res = SidedResolution(assoc31, p31, "left")
    for w in (8, 9, 10, 11):
        cols = res.b3_columns(w)
        from symalg.linalg import Echelon, intvec

        ech = Echelon()
        for col in cols.values():
            iv, _ = intvec(col)
            ech.insert(iv)
        assert ech.rank == assoc31.dim(w - 8)


def test_excluded_parameters_rejected():
    import pytest

    from symalg import AssocModel, build_relations, preset

    p = preset(1, 1)
    r0, r1 = build_relations(p)
    model = AssocModel(p.alphabet, r0 + r1, max_weight=6)
    with pytest.raises(ValueError):
        SidedResolution(model, p, "left")


def test_euler_identity_from_module_dims(assoc31, p31):
    res = SidedResolution(assoc31, p31, "left")
    for w in range(0, 13):
        d0, d1, d2, d3 = res.degrees(w)
        assert d0 - d1 + d2 - d3 == (1 if w == 0 else 0)
