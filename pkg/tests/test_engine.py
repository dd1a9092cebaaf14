"""Lie quotient engine: free components, ideal closure, quotient bases,
structure constants, free-generator analyses."""

from fractions import Fraction

import pytest

from symalg.engine import (
    EngineError,
    LieModel,
    free_lie_component,
    free_lie_dims,
    k1s_generators,
    lie_ideal_closure,
    tym_generators,
    tym_hat_generators,
)
from symalg.presentation import build_relations, preset
from symalg.refdata import (
    DEPENDENCY_IDENTITIES_31,
    EXPECTED_CUMULATIVE_31,
    reference_basis_trees,
)
from symalg.tensor import lie_expand


def test_free_lie_component_dims(p31):
    A = p31.alphabet
    assert free_lie_component(A, 2)[0].rank == 3
    assert free_lie_component(A, 4)[0].rank == 3
    assert free_lie_component(A, 6)[0].rank == 9


def test_free_lie_dims_oracle(p31):
    # the rank check inside free_lie_component *is* the oracle comparison
    dims = free_lie_dims(p31.alphabet, 10)
    for w in range(2, 11):
        assert free_lie_component(p31.alphabet, w)[0].rank == dims[w - 1]


def test_ideal_closure_dims(model31):
    assert lie_ideal_closure(model31, 5)[0] == 1
    assert lie_ideal_closure(model31, 6)[0] == 3
    assert lie_ideal_closure(model31, 7)[0] == 3


def test_dimension_ledger(model31, p31):
    # dim(free) = dim(ideal) + dim(quotient) at every weight <= 12
    free = free_lie_dims(p31.alphabet, 12)
    for w in range(2, 13):
        assert free[w - 1] == model31.ideal_dim(w) + model31.dim(w)


def test_quotient_dims_and_cumulative(model31):
    from symalg.presentation import dims_ym

    dims = dims_ym(3, 1, max_j=14)
    for w in range(1, 15):
        assert model31.dim(w) == dims[w - 1]
    cums = [sum(model31.dim(w) for w in range(2, l + 2)) for l in range(1, 8)]
    assert cums == [3, 4, 7, 9, 15, 21, 33]
    assert cums == [EXPECTED_CUMULATIVE_31[l] for l in range(1, 8)]


def test_l1_basis():
    p = preset(3, 1)
    r0, r1 = build_relations(p)
    m = LieModel(p.alphabet, r0 + r1, cutoff=1)
    assert [rep.name for rep in m.basis()] == ["x1", "x2", "x3"]


def test_reference_basis_reduces_independently(model31, p31):
    from symalg.linalg import Echelon, intvec

    for l in (5, 7):
        ech = Echelon()
        count = 0
        for tree in reference_basis_trees(l):
            poly = lie_expand(tree, p31.alphabet)
            coords = model31.project(poly)
            assert coords, f"reference element {tree} fell into the ideal"
            iv, _ = intvec(coords)
            shifted = {poly.weight() * 10**6 + k: v for k, v in iv.items()}
            if ech.insert(shifted) is not None:
                count += 1
        assert count == EXPECTED_CUMULATIVE_31[l]


def test_dependency_identities(model31, p31):
    for lhs, rhs in DEPENDENCY_IDENTITIES_31:
        acc = lie_expand(lhs, p31.alphabet)
        for coeff, tree in rhs:
            acc = acc - lie_expand(tree, p31.alphabet).scale(coeff)
        assert model31.contains_ideal(acc)


def test_project_and_membership(model31, p31):
    r0, r1 = build_relations(p31)
    assert model31.contains_ideal(r0[0])
    assert model31.contains_ideal(r1[0])
    x1 = p31.alphabet.gen("x1")
    coords = model31.project(x1)
    assert list(coords.values()) == [Fraction(1)]


def test_struct_antisymmetry(model31):
    # [b, b'] = -(-1)^(|b||b'|) [b', b] as quotient coordinates
    for (wu, iu, wv, iv) in [(2, 0, 2, 1), (2, 0, 3, 0), (3, 0, 3, 0), (2, 2, 4, 1)]:
        a = model31.struct(wu, iu, wv, iv)
        b = model31.struct(wv, iv, wu, iu)
        pu = wu & 1
        pv = wv & 1
        sign = -1 if not (pu and pv) else 1
        assert a == {k: sign * c for k, c in b.items()}


def test_export_struct_small():
    p = preset(3, 1)
    r0, r1 = build_relations(p)
    m2 = LieModel(p.alphabet, r0 + r1, cutoff=2)
    labels, parities, weights, brackets = m2.export_struct()
    assert labels == ["x1", "x2", "x3", "z1"]
    assert brackets == {}
    m1 = LieModel(p.alphabet, r0 + r1, cutoff=1)
    assert len(m1.export_struct()[0]) == 3


def test_tym_hat_generator_series(model31):
    got = tym_hat_generators(model31, 3, max_weight=10).counts()
    assert [got[w] for w in range(2, 11)] == [1, 1, 3, 1, 2, 1, 2, 1, 2]


def test_tym_generator_series(model31):
    from symalg.presentation import free_gen_series_tym

    series = free_gen_series_tym(3, 1, order=9)
    got = tym_generators(model31, max_weight=9).counts()
    for w in range(2, 10):
        assert got.get(w, 0) == series(w), w


def test_tym30_weight4():
    p = preset(3, 0)
    r0, r1 = build_relations(p)
    m = LieModel(p.alphabet, r0 + r1, cutoff=7)
    got = tym_generators(m, max_weight=8).counts()
    assert got[4] == 3


def test_k13_generator_series():
    p = preset(1, 3)
    r0, r1 = build_relations(p)
    m = LieModel(p.alphabet, r0 + r1, cutoff=11)
    got = k1s_generators(m, 3, max_weight=12).counts()
    assert {w: c for w, c in got.items() if c} == {3: 1, 6: 3, 9: 2, 12: 2}


def test_dims_independent_of_gamma():
    # the dimension table depends only on (n, s), not on the coupling:
    # random rational nondegenerate tensors give the same counts
    import random

    from symalg.presentation import SymPresentation, check_nondegenerate, dims_ym

    rng = random.Random(99)
    want = dims_ym(3, 2, max_j=9)
    for _ in range(3):
        while True:
            g = [[[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(2)]
                  for _ in range(2)] for _ in range(3)]
            for mat in g:
                mat[0][1] = mat[1][0]
            p = SymPresentation(3, 2, g)
            if check_nondegenerate(p)[0]:
                break
        r0, r1 = build_relations(p)
        m = LieModel(p.alphabet, r0 + r1, cutoff=8)
        assert [m.dim(j) for j in range(1, 10)] == want


def test_ym20_engine_matches_formula():
    # the two-even-generator quotient is the three-dimensional Heisenberg
    # algebra: dims 2, 1 in weights 2, 4 and nothing else
    from symalg.presentation import dims_ym

    p = preset(2, 0)
    r0, r1 = build_relations(p)
    m = LieModel(p.alphabet, r0 + r1, cutoff=8)
    formula = dims_ym(2, 0, max_j=9)
    for j in range(1, 10):
        assert m.dim(j) == formula[j - 1]
    assert m.total_dim() == 3


def test_engine_rejects_parity_weight_mismatch():
    from symalg.tensor import Alphabet

    A = Alphabet([("a", 0, 1)])
    with pytest.raises(EngineError):
        LieModel(A, [], cutoff=3)


def test_model_pickle_cache_roundtrip(tmp_path):
    from symalg.engine import load_or_build_model

    p = preset(2, 1)
    r0, r1 = build_relations(p)
    m1 = load_or_build_model(p.alphabet, r0 + r1, 5, tmp_path, "deadbeef")
    assert (tmp_path / "models" / "deadbeef-l5.pickle").is_file()
    m2 = load_or_build_model(p.alphabet, r0 + r1, 5, tmp_path, "deadbeef")
    assert m2.dims() == m1.dims()
    assert [r.name for r in m2.basis()] == [r.name for r in m1.basis()]


def test_basis_report_shape(model31):
    from symalg.engine import basis_report

    records = basis_report(model31)
    assert records[0] == {"weight": 2, "dim": 3, "basis": ["x1", "x2", "x3"]}
    assert records[2]["basis"][0] == ["x1", "x2"]


def test_heis_relation_model():
    # the quotient defining the 2r+t+1 dimensional Heisenberg algebra
    from symalg.presentation import semidirect_relation

    U, rho = semidirect_relation(3, 1)  # q2,q3,p2,p3,w1 with one relation
    m = LieModel(U, [rho], cutoff=5)
    # weight 4 holds p2, p3 and [q2,q3]; the relation first bites at weight 6
    assert m.dim(2) == 2 and m.dim(3) == 1 and m.dim(4) == 3
    assert m.ideal_dim(6) == 1
