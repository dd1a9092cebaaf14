"""Structure-constant algebras and the Kirillov-form toolkit."""

import random
from fractions import Fraction

import pytest

from symalg.engine import LieModel
from symalg.presentation import build_relations, preset
from symalg.superlie import (
    FieldExtensionRequired,
    FinDimSuperLieAlgebra,
    SuperLieError,
    even_functional,
    heis,
    kirillov_form,
    stabilizer_subspace,
    subordinate_check,
    vergne_polarization,
    weight_of,
)


def ymodel(n, s, cutoff):
    p = preset(n, s)
    r0, r1 = build_relations(p)
    return LieModel(p.alphabet, r0 + r1, cutoff=cutoff)


def test_validate_examples():
    assert heis(1, 1).validate()["nilpotency_class"] == 2
    ab = FinDimSuperLieAlgebra(["x", "y"], [0, 0], {}, [2, 2])
    assert ab.validate()["nilpotency_class"] == 1
    g = FinDimSuperLieAlgebra.from_model(ymodel(3, 1, 5))
    report = g.validate()
    assert report["dim_even"] + report["dim_odd"] == 15


def test_validate_rejects_bad_jacobi():
    bad = FinDimSuperLieAlgebra(
        ["x", "y", "z"], [0, 0, 0], {(0, 1): {2: 1}, (0, 2): {1: 1}}, None
    )
    with pytest.raises(SuperLieError):
        bad.validate()


def test_kirillov_form_blocks():
    g = heis(1, 1)
    f = even_functional(g, {"z": 1})
    form = kirillov_form(g, f)
    assert form.even_rank() == 2 and form.odd_rank() == 1
    zero = kirillov_form(g, {})
    assert zero.even_rank() == 0 and zero.odd_rank() == 0


def test_kirillov_form_ym12():
    g = FinDimSuperLieAlgebra.from_model(ymodel(1, 2, 5))
    # charge the direction of [z1,z1]
    f = even_functional(g, {"[z1,z1]": 1})
    assert kirillov_form(g, f).odd_rank() == 2


def test_weight_of_heis_family():
    for (r, t) in [(0, 1), (0, 2), (1, 1), (2, 3)]:
        g = heis(r, t)
        w = weight_of(g, even_functional(g, {"z": 1}))
        assert (w.weyl, w.clifford) == (r, t)
    g = heis(2, 2)
    w0 = weight_of(g, {})
    assert (w0.weyl, w0.clifford) == (0, 0)


def test_weight_scale_invariance():
    g = heis(2, 3)
    f = even_functional(g, {"z": 1, "q1": 2})
    for lam in (1, -2, Fraction(3, 7)):
        fl = {k: lam * v for k, v in f.items()}
        assert weight_of(g, fl) == weight_of(g, f)


def test_weight_basis_invariance():
    rng = random.Random(13)
    g = heis(1, 2)
    f = even_functional(g, {"z": 1})
    w0 = weight_of(g, f)
    for _ in range(5):
        n = g.dim
        while True:
            mat = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(n):
                    if g.parities[i] == g.parities[j]:
                        mat[i][j] = Fraction(rng.randint(-2, 2))
            try:
                gs = g.change_basis(mat)
                break
            except SuperLieError:
                continue
        # transport f: f'(b_i) = f(sum mat[i][j] e_j)
        fs = {}
        for i in range(n):
            val = sum(mat[i][j] * f.get(j, Fraction(0)) for j in range(n))
            if val and gs.parities[i] == 0:
                fs[i] = val
        assert weight_of(gs, fs) == w0


def test_ym12_weights_exhaust_grid():
    g = FinDimSuperLieAlgebra.from_model(ymodel(1, 2, 5))
    evens = g.even_indices()
    seen = set()
    for a in range(-2, 3):
        for b in range(-2, 3):
            for c in range(-2, 3):
                f = {evens[0]: Fraction(a), evens[1]: Fraction(b), evens[2]: Fraction(c)}
                f = {k: v for k, v in f.items() if v}
                w = weight_of(g, f)
                seen.add((w.weyl, w.clifford))
    assert seen == {(0, 0), (0, 2)}


def test_ym12_weights_rank_reasoning():
    # the odd block is [[-b, c], [c, b]] for f = b.[z1,z1]* + c.[z1,z2]*:
    # determinant -(b^2 + c^2) vanishes over Q only at b = c = 0
    g = FinDimSuperLieAlgebra.from_model(ymodel(1, 2, 5))
    i1 = g.index("[z1,z1]")
    i2 = g.index("[z1,z2]")
    for (b, c) in [(1, 0), (0, 1), (2, 3), (-5, 7)]:
        f = {i1: Fraction(b), i2: Fraction(c)}
        assert weight_of(g, f).clifford == (2 if (b, c) != (0, 0) else 0)


def test_polarization_heis11():
    g = heis(1, 1)
    f = even_functional(g, {"z": 1})
    pol = vergne_polarization(g, f)
    names = {g.names[next(iter(v))] for v in pol}
    assert names == {"z", "q1"}
    assert subordinate_check(g, f, pol)


def test_polarization_with_explicit_flag():
    from symalg.superlie import default_flag

    g = heis(1, 1)
    f = even_functional(g, {"z": 1})
    flag = default_flag(g)
    assert [len(layer) for layer in flag] == list(range(1, g.dim + 1))
    pol = vergne_polarization(g, f, flag=flag)
    assert len(pol) == 2


def test_polarization_abelian():
    g = FinDimSuperLieAlgebra(["x", "y"], [0, 0], {}, None)
    pol = vergne_polarization(g, {0: Fraction(1)})
    assert len(pol) == 2


def test_polarization_heis02_uses_isotropic_pair():
    g = heis(0, 2)
    f = even_functional(g, {"z": 1})
    pol = vergne_polarization(g, f)
    odd = [v for v in pol if g.parities[next(iter(v))] == 1]
    assert len(odd) == 1  # hyperbolic plane: one isotropic direction


def test_polarization_field_extension_flagged():
    # odd block <1, 1>: anisotropic over Q, isotropic over C
    g = FinDimSuperLieAlgebra(
        ["z", "o1", "o2"],
        [0, 1, 1],
        {(1, 1): {0: Fraction(1)}, (2, 2): {0: Fraction(1)}},
        [6, 3, 3],
    )
    g.validate()
    with pytest.raises(FieldExtensionRequired):
        vergne_polarization(g, {0: Fraction(1)})


def test_polarization_truncated_quotient():
    g = FinDimSuperLieAlgebra.from_model(ymodel(3, 1, 3))
    f = even_functional(g, {"[x1,x2]": 1, "[x2,x3]": 3})
    pol = vergne_polarization(g, f)
    w = weight_of(g, f)
    even_dim = sum(1 for v in pol if g.parities[next(iter(v))] == 0)
    assert even_dim == len(g.even_indices()) - w.weyl
    assert subordinate_check(g, f, pol)
    # maximality oracle: any basis direction keeping the span isotropic
    # already lies in the span
    from symalg.superlie import _Span

    for i in range(g.dim):
        if subordinate_check(g, f, pol + [{i: Fraction(1)}]):
            assert _Span.spans(pol, g.dim, {i: Fraction(1)})


def test_subordinate_check_cases():
    g = heis(1, 1)
    f = even_functional(g, {"z": 1})
    assert subordinate_check(g, f, [{g.index("q1"): Fraction(1)}])
    full = [{i: Fraction(1)} for i in range(g.dim)]
    assert not subordinate_check(g, f, full)
    assert subordinate_check(g, {}, full)


def test_stabilizer_subspace():
    g = heis(1, 1)
    center = [{g.index("z"): Fraction(1)}]
    f = even_functional(g, {"z": 1})
    st = stabilizer_subspace(g, center, f)
    assert len(st) == g.dim  # center brackets to zero with everything
    st0 = stabilizer_subspace(g, [{i: Fraction(1)} for i in range(g.dim)], {})
    assert len(st0) == g.dim  # f = 0 stabilizes everything
    f2 = even_functional(g, {"z": 1})
    st2 = stabilizer_subspace(g, [{g.index("q1"): Fraction(1)}], f2)
    # f([x, q1]) = 0 kills the p1 direction only
    assert len(st2) == g.dim - 1
    # against the abelian span(q1, z): full iff f(z) = 0
    h = [{g.index("q1"): Fraction(1)}, {g.index("z"): Fraction(1)}]
    assert len(stabilizer_subspace(g, h, {})) == g.dim
    assert len(stabilizer_subspace(g, h, f2)) == g.dim - 1


def test_heis_dimensions():
    assert heis(1, 1).dim == 4  # q, p, z | c
    g = heis(0, 2)
    assert (len(g.even_indices()), len(g.odd_indices())) == (1, 2)
    assert heis(0, 0).dim == 1
    assert heis(0, 0).validate()["nilpotency_class"] == 1


def test_json_roundtrip():
    g = heis(2, 3)
    doc = g.to_json()
    back = FinDimSuperLieAlgebra.from_json(doc)
    assert back.names == g.names
    assert back.table == g.table
    assert back.weights == g.weights


def test_even_functional_rejects_odd_charge():
    g = heis(1, 1)
    with pytest.raises(SuperLieError):
        even_functional(g, {"c": 1})
    # explicit zeros on odd entries are tolerated
    assert even_functional(g, {"c": 0, "z": 1}) == {g.index("z"): Fraction(1)}
