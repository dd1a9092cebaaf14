"""Presentation layer: relations, superpotential calculus, predicates,
series, semidirect description."""

import random
from fractions import Fraction

import pytest

from symalg.presentation import (
    PresentationError,
    SymPresentation,
    build_relations,
    check_equivariance_identity,
    check_nondegenerate,
    derive_gamma_tilde,
    dims_ym,
    free_gen_series_k1s,
    free_gen_series_tym,
    free_gen_series_tym_hat,
    hilbert_series_YM,
    preset,
    quartic_form,
    semidirect_maps,
    semidirect_relation,
    superpotential,
    susy_derivations,
    ym_denominator,
)
from symalg.series import enveloping_series
from symalg.tensor import cyclic_derivative, extend_derivation, lie_expand, super_commutator


def random_gamma(n, s, rng, lo=-3, hi=3):
    g = [[[Fraction(rng.randint(lo, hi)) for _ in range(s)] for _ in range(s)]
         for _ in range(n)]
    for m in g:
        for a in range(s):
            for b in range(a):
                m[a][b] = m[b][a]
    return g


def test_relations_31_match_closed_form(p31):
    r0, r1 = build_relations(p31)
    A = p31.alphabet
    want_r01 = (
        lie_expand(("x2", ("x2", "x1")), A)
        + lie_expand(("x3", ("x3", "x1")), A)
        - lie_expand(("z1", "z1"), A).scale(Fraction(1, 2))
    )
    assert r0[0] == want_r01
    assert r1[0] == lie_expand(("x1", "z1"), A)
    assert [r.weight() for r in r0] == [6, 6, 6]
    assert [r.parity() for r in r0] == [0, 0, 0]
    assert r1[0].weight() == 5 and r1[0].parity() == 1


def test_relations_s0_plain():
    p = preset(2, 0)
    r0, r1 = build_relations(p)
    assert r1 == []
    A = p.alphabet
    assert r0[0] == lie_expand(("x2", ("x2", "x1")), A)


def test_relations_11():
    p = preset(1, 1)
    r0, r1 = build_relations(p)
    A = p.alphabet
    z1 = A.gen("z1")
    assert r0[0] == -(z1 * z1)
    assert r1[0] == lie_expand(("x1", "z1"), A)


def test_relations_explicit_metric():
    metric = [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
    p = SymPresentation(3, 1, preset(3, 1).gamma.mats, metric)
    r0, _ = build_relations(p)
    A = p.alphabet
    want = (
        -lie_expand(("x2", ("x2", "x1")), A)
        - lie_expand(("x3", ("x3", "x1")), A)
        - lie_expand(("z1", "z1"), A).scale(Fraction(1, 2))
    )
    # g^{jj} g^{11} weights: j=1 term vanishes, j=2,3 get (-1)(+1)
    assert r0[0] == want + lie_expand(("x1", ("x1", "x1")), A)


def test_singular_metric_rejected():
    with pytest.raises(PresentationError):
        SymPresentation(2, 0, [[], []], [[1, 1], [1, 1]])


def test_nondegenerate_cases(p31):
    ok, lam = check_nondegenerate(p31)
    assert ok and lam == [1, 0, 0]
    zero = SymPresentation(3, 1, [[[0]], [[0]], [[0]]])
    assert check_nondegenerate(zero) == (False, None)
    assert check_nondegenerate(preset(2, 0))[0] is True


def test_equivariance_cases(minkowski32, p31):
    assert check_equivariance_identity(minkowski32) is True
    assert check_equivariance_identity(p31) is False
    # any gamma-tilde fails for the canonical (3,1): i=j=2 forces 0 = 2
    from symalg.presentation import GammaTilde

    for val in (0, 1, -2):
        gt = GammaTilde(3, 1, [[[val]], [[val]], [[val]]])
        assert check_equivariance_identity(p31, gt) is False
    assert check_equivariance_identity(preset(2, 0)) is True


def test_derive_gamma_tilde(minkowski32):
    gt = derive_gamma_tilde(minkowski32)
    assert gt.mats == minkowski32.gamma_tilde.mats
    assert derive_gamma_tilde(preset(2, 0)).mats == [[], []]
    with pytest.raises(PresentationError):
        derive_gamma_tilde(preset(3, 1))


def test_superpotential_derivatives(p31):
    W = superpotential(p31)
    assert W.weight() == 8 and W.parity() == 0
    r0, r1 = build_relations(p31)
    for i in range(3):
        assert cyclic_derivative(W, f"x{i+1}") == r0[i]
    assert cyclic_derivative(W, "z1") == r1[0]


def test_superpotential_random_32():
    rng = random.Random(17)
    for _ in range(3):
        p = SymPresentation(3, 2, random_gamma(3, 2, rng))
        W = superpotential(p)
        r0, r1 = build_relations(p)
        for i in range(3):
            assert cyclic_derivative(W, f"x{i+1}") == r0[i]
        for a in range(2):
            assert cyclic_derivative(W, f"z{a+1}") == r1[a]


def test_superpotential_diagonal_metric(minkowski32):
    W = superpotential(minkowski32)
    r0, r1 = build_relations(minkowski32)
    for i in range(3):
        assert cyclic_derivative(W, f"x{i+1}") == r0[i]
    for a in range(2):
        assert cyclic_derivative(W, f"z{a+1}") == r1[a]


def test_superpotential_s0():
    p = preset(2, 0)
    W = superpotential(p)
    r0, _ = build_relations(p)
    for i in range(2):
        assert cyclic_derivative(W, f"x{i+1}") == r0[i]


def test_superpotential_rejects_nondiagonal():
    metric = [[1, 1], [1, 2]]
    p = SymPresentation(2, 0, [[], []], metric)
    with pytest.raises(PresentationError):
        superpotential(p)


def test_omega_identity(p31, minkowski32):
    rng = random.Random(2)
    presentations = [p31, minkowski32, preset(2, 0)]
    presentations += [SymPresentation(3, 2, random_gamma(3, 2, rng)) for _ in range(3)]
    for p in presentations:
        r0, r1 = build_relations(p)
        acc = p.alphabet.zero()
        for i in range(p.n):
            acc = acc + super_commutator(p.alphabet.gen(f"x{i+1}"), r0[i])
        for a in range(p.s):
            acc = acc + super_commutator(p.alphabet.gen(f"z{a+1}"), r1[a])
        assert acc.is_zero()


def test_quartic_form(p31, minkowski32):
    q, zero = quartic_form(p31)
    assert not zero and q[0][0][0][0] == 3
    _, zero2 = quartic_form(SymPresentation(3, 1, [[[0]], [[0]], [[0]]]))
    assert zero2
    q3, zero3 = quartic_form(minkowski32)
    assert zero3
    # full symmetry under all permutations of the four indices
    from itertools import permutations

    q31, _ = quartic_form(p31)
    for perm in permutations(range(4)):
        idx = [0, 0, 0, 0]
        assert q31[0][0][0][0] == q31[idx[perm[0]]][idx[perm[1]]][idx[perm[2]]][idx[perm[3]]]
    rng = random.Random(8)
    p = SymPresentation(2, 2, random_gamma(2, 2, rng))
    qq, _ = quartic_form(p)
    for perm in permutations((0, 1, 0, 1)):
        a, b, c, d = perm
        assert qq[a][b][c][d] == qq[0][1][0][1]


def test_susy_derivations_shapes(minkowski32):
    ds = susy_derivations(minkowski32)
    assert len(ds) == 2
    A = minkowski32.alphabet
    for c, d in enumerate(ds):
        assert d.parity == 1
        assert d.weight_step == 1
        for i in range(3):
            img = d.images[A.index(f"x{i+1}")]
            if img:
                assert img.parity() == 1 and img.weight() == 3
        for b in range(2):
            img = d.images[A.index(f"z{b+1}")]
            if img:
                assert img.parity() == 0 and img.weight() == 4
        # generator images match the defining formulas
        want = A.zero()
        for dd in range(2):
            coef = minkowski32.metric_lower(0, 0) * minkowski32.gamma[0][c][dd]
            if coef:
                want = want + A.gen(f"z{dd+1}").scale(coef)
        assert d.images[A.index("x1")] == want


def test_hilbert_series(p31):
    ser = hilbert_series_YM(3, 1, order=20)
    assert ser[0] == 1 and ser[1] == 0
    den = ym_denominator(3, 1).series(20)
    assert (den * ser).coeffs == [1] + [0] * 20
    # enveloping product formula over the Lie dimensions
    dims = dims_ym(3, 1, max_j=20)
    assert enveloping_series(dims, 20) == ser


def test_dims_ym(p31):
    assert dims_ym(3, 1, max_j=20) == [0, 3, 1, 3, 2, 6, 6, 12, 15, 33, 42,
                                       77, 114, 213, 314, 555, 876, 1540, 2460, 4242]
    assert dims_ym(2, 0, max_j=6)[0] == 0
    assert dims_ym(5, 3, max_j=1) == [0]


def test_semidirect_maps(p31):
    psi, psi_inv, d_action = semidirect_maps(p31)
    assert psi == {"x1": "d", "x2": "q2", "x3": "q3", "z1": "w1"}
    for name, img in psi.items():
        assert psi_inv[img] == name or isinstance(psi_inv[img], tuple)
    assert psi_inv["p2"] == ("x1", "x2")
    # the derivation maps the defining relation into its own ideal
    from symalg.engine import LieModel

    U, rho = semidirect_relation(3, 1)
    D = extend_derivation(U, d_action, 0)
    model = LieModel(U, [rho], cutoff=9)
    assert model.contains_ideal(D(rho))


def test_semidirect_requires_normalized():
    p = SymPresentation(3, 1, [[[2]], [[0]], [[0]]])
    with pytest.raises(PresentationError):
        semidirect_maps(p)


def test_generator_series():
    hat31 = free_gen_series_tym_hat(3, 1)
    assert [hat31(d) for d in range(2, 11)] == [1, 1, 3, 1, 2, 1, 2, 1, 2]
    k13 = free_gen_series_k1s(3)
    assert [k13(d) for d in (3, 6, 9, 12)] == [1, 3, 2, 2]
    assert free_gen_series_tym_hat(2, 5)(2) == 0
    w30 = free_gen_series_tym(3, 0, order=10)
    assert w30(4) == 3
    with pytest.raises(PresentationError):
        free_gen_series_k1s(2)


def test_presentation_json_roundtrip(minkowski32):
    doc = minkowski32.to_json()
    back = SymPresentation.from_json(doc)
    assert back.canonical_json() == minkowski32.canonical_json()


def test_normalize_paths():
    from symalg.presentation import normalize

    q, rec = normalize(preset(3, 1))
    assert q.gamma.mats == preset(3, 1).gamma.mats
    # rescaling a multiple of the identity
    p2 = SymPresentation(2, 2, [[[4, 0], [0, 4]], [[0, 1], [1, 0]]])
    q2, rec2 = normalize(p2)
    assert q2.gamma[0] == [[1, 0], [0, 1]]
    assert q2.gamma[1] == [[0, Fraction(1, 4)], [Fraction(1, 4), 0]]
    # witness on the second coordinate: orthogonal swap
    p3 = SymPresentation(2, 1, [[[0]], [[1]]])
    q3, rec3 = normalize(p3)
    assert q3.gamma[0] == [[1]] and rec3["even_swap"] == [1, 2]
    # irrational normalizer is refused
    with pytest.raises(PresentationError):
        normalize(SymPresentation(1, 1, [[[2]]]))
    # symmetric gram-schmidt on a non-diagonal first matrix
    q5, _ = normalize(SymPresentation(1, 2, [[[1, 1], [1, 2]]]))
    assert q5.gamma[0] == [[1, 0], [0, 1]]


def test_omega_check_function(p31, minkowski32):
    from symalg.presentation import omega_check

    assert omega_check(p31)
    assert omega_check(minkowski32)
    assert omega_check(preset(4, 0))
