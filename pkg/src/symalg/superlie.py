"""Finite-dimensional super Lie algebras by structure constants, and the
Kirillov-form computations attached to an even functional: block ranks,
the weight (Weyl index, Clifford index) of the associated primitive
quotient, polarizations along a flag of ideals, and stabilizer subspaces.

Conventions: a basis element carries a parity (and optionally a weight);
brackets are stored for i <= j only, the other half being determined by
super antisymmetry [x,y] = -(-1)^{|x||y|} [y,x].  An even functional kills
the odd part, so its Kirillov form splits into an antisymmetric block on
the even part and a symmetric block on the odd part.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import dense_kernel, dense_rank
from .presentation import rat, rat_str


class SuperLieError(ValueError):
    pass


@dataclass(frozen=True)
class IdealWeight:
    """Named record: the two indices are too easy to transpose as a bare
    pair, so they never travel unnamed."""

    weyl: int
    clifford: int


class FinDimSuperLieAlgebra:
    def __init__(self, names, parities, brackets, weights=None):
        self.names = list(names)
        self.parities = list(parities)
        self.weights = list(weights) if weights is not None else None
        self.dim = len(self.names)
        if len(self.parities) != self.dim:
            raise SuperLieError("parity list length mismatch")
        table = {}
        for (i, j), coords in brackets.items():
            if i > j:
                raise SuperLieError("store brackets for i <= j only")
            coords = {k: Fraction(c) for k, c in coords.items() if c}
            if coords:
                par = (self.parities[i] + self.parities[j]) % 2
                for k in coords:
                    if self.parities[k] != par:
                        raise SuperLieError(
                            f"bracket ({i},{j}) violates parity at {k}"
                        )
                table[(i, j)] = coords
        self.table = table

    # -- bracket evaluation

    def bracket(self, i, j):
        if i <= j:
            return dict(self.table.get((i, j), {}))
        sign = -1 if not (self.parities[i] and self.parities[j]) else 1
        # [ei,ej] = -(-1)^(pi pj) [ej,ei]: even*odd or even*even -> -1, odd*odd -> +1
        return {k: sign * c for k, c in self.table.get((j, i), {}).items()}

    def bracket_vec(self, u, v):
        out = {}
        for i, a in u.items():
            if not a:
                continue
            for j, b in v.items():
                if not b:
                    continue
                for k, c in self.bracket(i, j).items():
                    val = out.get(k, Fraction(0)) + a * b * c
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out

    def even_indices(self):
        return [i for i, p in enumerate(self.parities) if p == 0]

    def odd_indices(self):
        return [i for i, p in enumerate(self.parities) if p == 1]

    def index(self, name):
        return self.names.index(name)

    # -- consistency and nilpotency

    def validate(self):
        """Check super antisymmetry (diagonal), the super Jacobi identity,
        and nilpotency; returns a report dict including the class."""
        for i in range(self.dim):
            if self.parities[i] == 0 and self.table.get((i, i)):
                raise SuperLieError(f"[{self.names[i]},{self.names[i]}] must vanish")
        # graded Jacobi in adjoint form:
        # [x,[y,z]] = [[x,y],z] + (-1)^(|x||y|) [y,[x,z]]
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    lhs = self.bracket_vec({i: Fraction(1)}, self.bracket(j, k))
                    rhs = self.bracket_vec(self.bracket(i, j), {k: Fraction(1)})
                    sign = -1 if (self.parities[i] and self.parities[j]) else 1
                    for idx, c in self.bracket_vec(
                        {j: Fraction(1)}, self.bracket(i, k)
                    ).items():
                        v = rhs.get(idx, Fraction(0)) + sign * c
                        if v:
                            rhs[idx] = v
                        else:
                            rhs.pop(idx, None)
                    if lhs != rhs:
                        raise SuperLieError(
                            f"Jacobi fails at ({self.names[i]},{self.names[j]},{self.names[k]})"
                        )
        nclass = self.nilpotency_class()
        if nclass is None:
            raise SuperLieError("algebra is not nilpotent")
        return {"dim_even": len(self.even_indices()),
                "dim_odd": len(self.odd_indices()),
                "nilpotency_class": nclass}

    def lower_central_series(self):
        """Independent spanning sets of C^1 = g, C^2 = [g,g], ... ending with
        the first zero term; None if the series stabilizes without reaching 0.
        """
        full = [{i: Fraction(1)} for i in range(self.dim)]
        series = [full]
        current = full
        current_rank = self.dim
        while True:
            nxt = []
            seen = _Span(self.dim)
            for u in full:
                for v in current:
                    b = self.bracket_vec(u, v)
                    if b and seen.add(b):
                        nxt.append(b)
            series.append(nxt)
            if not nxt:
                return series
            if len(nxt) == current_rank:
                return None  # C^(k+1) = C^k nonzero: not nilpotent
            current = nxt
            current_rank = len(nxt)

    def nilpotency_class(self):
        series = self.lower_central_series()
        if series is None:
            return None
        return len(series) - 1

    def change_basis(self, mat):
        """New algebra with basis e'_i = sum_j mat[i][j] e_j.

        mat must be invertible and parity-preserving (block structure over
        the even/odd split).
        """
        m = [[Fraction(x) for x in row] for row in mat]
        minv = _inverse(m)
        if minv is None:
            raise SuperLieError("singular basis change")
        for i in range(self.dim):
            for j in range(self.dim):
                if m[i][j] and self.parities[i] != self.parities[j]:
                    raise SuperLieError("basis change must preserve parity")
        brackets = {}
        for i in range(self.dim):
            for j in range(i, self.dim):
                u = {k: m[i][k] for k in range(self.dim) if m[i][k]}
                v = {k: m[j][k] for k in range(self.dim) if m[j][k]}
                b = self.bracket_vec(u, v)
                coords = {}
                for k, c in b.items():
                    for t in range(self.dim):
                        if minv[k][t]:
                            val = coords.get(t, Fraction(0)) + c * minv[k][t]
                            if val:
                                coords[t] = val
                            else:
                                coords.pop(t, None)
                if coords:
                    brackets[(i, j)] = coords
        return FinDimSuperLieAlgebra(
            [f"b{i}" for i in range(self.dim)], list(self.parities), brackets,
            self.weights,
        )

    # -- serialization

    def to_json(self):
        basis = []
        for i in range(self.dim):
            entry = {"name": self.names[i], "parity": self.parities[i]}
            if self.weights is not None:
                entry["weight"] = self.weights[i]
            basis.append(entry)
        brackets = [
            {"i": i, "j": j, "coeffs": {str(k): rat_str(c) for k, c in coords.items()}}
            for (i, j), coords in sorted(self.table.items())
        ]
        return {"basis": basis, "brackets": brackets}

    @classmethod
    def from_json(cls, doc):
        basis = doc["basis"]
        names = [b["name"] for b in basis]
        parities = [int(b["parity"]) for b in basis]
        weights = [b["weight"] for b in basis] if all("weight" in b for b in basis) else None
        brackets = {}
        for entry in doc["brackets"]:
            brackets[(int(entry["i"]), int(entry["j"]))] = {
                int(k): rat(v) for k, v in entry["coeffs"].items()
            }
        return cls(names, parities, brackets, weights)

    @classmethod
    def from_model(cls, model):
        """Import the truncated quotient computed by a LieModel."""
        labels, parities, weights, brackets = model.export_struct()
        return cls(labels, parities, brackets, weights)


class _Span:
    def __init__(self, dim):
        self.rows = {}
        self.dim = dim

    def add(self, vec):
        v = dict(vec)
        while v:
            p = min(v)
            r = self.rows.get(p)
            if r is None:
                self.rows[p] = {k: c / v[p] for k, c in v.items()}
                return True
            f = v[p]
            for k, c in r.items():
                val = v.get(k, Fraction(0)) - f * c
                if val:
                    v[k] = val
                else:
                    v.pop(k, None)
        return False

    @staticmethod
    def spans(vectors, dim, target):
        s = _Span(dim)
        for v in vectors:
            s.add(v)
        return not s.add(target)


def _inverse(m):
    n = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


# -- even functionals and the Kirillov form


def even_functional(g, values):
    """values: name or index -> rational; odd entries must be absent/zero."""
    out = {}
    for key, val in values.items():
        i = g.index(key) if isinstance(key, str) else key
        if g.parities[i] == 1:
            if rat(val):
                raise SuperLieError("even functional cannot charge odd elements")
            continue
        v = rat(val)
        if v:
            out[i] = v
    return out


def functional_from_json(g, doc):
    return even_functional(g, {k: rat(v) for k, v in doc.items()})


def apply_functional(f, vec):
    return sum((f[k] * c for k, c in vec.items() if k in f), Fraction(0))


class KirillovForm:
    """B_f(x, y) = f([x, y]): antisymmetric even block, symmetric odd block."""

    def __init__(self, g, f):
        self.g = g
        self.f = dict(f)
        ev = g.even_indices()
        od = g.odd_indices()
        self.even_indices = ev
        self.odd_indices = od
        self.even_block = [
            [apply_functional(self.f, g.bracket(i, j)) for j in ev] for i in ev
        ]
        self.odd_block = [
            [apply_functional(self.f, g.bracket(i, j)) for j in od] for i in od
        ]

    def even_rank(self):
        return dense_rank(self.even_block)

    def odd_rank(self):
        return dense_rank(self.odd_block)

    def radical(self):
        """Basis of g^f = {x : f([x, g]) = 0}, split (even list, odd list)."""
        g = self.g
        ev, od = self.even_indices, self.odd_indices
        even_rad = [
            {i: v for i, v in zip(ev, vec) if v}
            for vec in dense_kernel(_transpose(self.even_block), len(ev))
        ]
        odd_rad = [
            {i: v for i, v in zip(od, vec) if v}
            for vec in dense_kernel(_transpose(self.odd_block), len(od))
        ]
        return even_rad, odd_rad


def _transpose(m):
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def kirillov_form(g, f):
    return KirillovForm(g, f)


def weight_of(g, f):
    """Weight of the primitive quotient attached to an even functional:
    weyl = (even rank of B_f)/2, clifford = odd rank of B_f."""
    form = KirillovForm(g, f)
    er = form.even_rank()
    if er % 2:
        raise SuperLieError("even block of an antisymmetric form has even rank")
    return IdealWeight(weyl=er // 2, clifford=form.odd_rank())


def subordinate_check(g, f, subspace):
    """f([h, h]) == 0 for h spanned by the given coordinate vectors."""
    for u in subspace:
        for v in subspace:
            if apply_functional(f, g.bracket_vec(u, v)):
                return False
    return True


def stabilizer_subspace(g, ideal_vectors, f):
    """{x in g : f([x, h]) = 0} for h spanned by ideal_vectors."""
    rows = []
    for v in ideal_vectors:
        row = []
        for i in range(g.dim):
            row.append(apply_functional(f, g.bracket_vec({i: Fraction(1)}, v)))
        rows.append(row)
    return [
        {i: c for i, c in enumerate(vec) if c} for vec in dense_kernel(rows, g.dim)
    ]


class FieldExtensionRequired(SuperLieError):
    """A maximal isotropic subspace of the required dimension does not exist
    over the rationals (it would after a quadratic extension)."""


def default_flag(g):
    """Homogeneous chain of ideals with one-dimensional steps, refining the
    lower central series (deepest terms first)."""
    series = g.lower_central_series()
    if series is None:
        raise SuperLieError("algebra is not nilpotent")
    layers = []
    chain = []
    # walk from the deepest nonzero term upwards
    terms = [t for t in series if t]
    for term in reversed(terms):
        vecs = []
        probe = _Span(g.dim)
        for v in chain:
            probe.add(v)
        # homogeneous components of the layer, even then odd per basis order
        cand = []
        for v in term:
            for par in (0, 1):
                part = {i: c for i, c in v.items() if g.parities[i] == par}
                if part:
                    cand.append(part)
        for v in sorted(cand, key=lambda d: sorted(d)):
            if probe.add(dict(v)):
                chain.append(v)
                layers.append(list(chain))
    # complete to all of g
    probe = _Span(g.dim)
    for v in chain:
        probe.add(v)
    for i in range(g.dim):
        v = {i: Fraction(1)}
        if probe.add(dict(v)):
            chain.append(v)
            layers.append(list(chain))
    return layers


def vergne_polarization(g, f, flag=None):
    """Sum over the flag of the radicals of the restricted Kirillov form.

    The result is checked to be an isotropic subalgebra whose even part has
    the (field-independent) maximal dimension dim g_0 - weyl.  The odd part
    always contains the odd radical; when it stays below the maximal
    isotropic dimension of the symmetric block over a closed field,
    FieldExtensionRequired is raised -- the kernel-sum recipe cannot see
    isotropic vectors that only exist after extending scalars (and over
    the rationals the block may even be anisotropic).
    """
    if flag is None:
        flag = default_flag(g)
    span = _Span(g.dim)
    basis = []
    for layer in flag:
        for v in _restricted_radical(g, f, layer):
            if span.add(dict(v)):
                basis.append(v)
    w = weight_of(g, f)
    m0 = len(g.even_indices())
    m1 = len(g.odd_indices())
    target_even = m0 - w.weyl
    # closed-field bound: radical + a maximal isotropic of the rank-r part
    bound_odd = m1 - w.clifford + w.clifford // 2
    got_even = got_odd = 0
    par_span_e, par_span_o = _Span(g.dim), _Span(g.dim)
    for v in basis:
        pars = {g.parities[i] for i in v}
        if len(pars) != 1:
            raise SuperLieError("polarization basis not parity-homogeneous")
        if pars.pop() == 0:
            if par_span_e.add(dict(v)):
                got_even += 1
        else:
            if par_span_o.add(dict(v)):
                got_odd += 1
    if not subordinate_check(g, f, basis):
        raise SuperLieError("polarization is not subordinate")
    if not _is_subalgebra(g, basis):
        raise SuperLieError("polarization is not a subalgebra")
    if got_even != target_even:
        raise FieldExtensionRequired(
            f"even isotropic dimension {got_even} misses the target {target_even}"
        )
    if got_odd < m1 - w.clifford or got_odd < bound_odd:
        raise FieldExtensionRequired(
            f"odd isotropic dimension {got_odd} below the closed-field "
            f"bound {bound_odd}"
        )
    return basis


def _restricted_radical(g, f, layer_vectors):
    """{x in span(layer) : f([x, layer]) = 0}."""
    k = len(layer_vectors)
    rows = []
    for v in layer_vectors:
        row = []
        for u in layer_vectors:
            row.append(apply_functional(f, g.bracket_vec(u, v)))
        rows.append(row)
    out = []
    for coeffs in dense_kernel(rows, k):
        vec = {}
        for c, base in zip(coeffs, layer_vectors):
            if c:
                for i, x in base.items():
                    val = vec.get(i, Fraction(0)) + c * x
                    if val:
                        vec[i] = val
                    else:
                        vec.pop(i, None)
        # an even functional's form pairs even with even and odd with odd,
        # so both parity components of a radical vector are radical
        for par in (0, 1):
            part = {i: c for i, c in vec.items() if g.parities[i] == par}
            if part:
                out.append(part)
    return out


def _is_subalgebra(g, basis):
    for u in basis:
        for v in basis:
            b = g.bracket_vec(u, v)
            if b and not _Span.spans(basis, g.dim, b):
                return False
    return True


# -- Heisenberg super Lie algebras


def heis(r, t):
    """Central z, r hyperbolic even pairs, t odd directions pairing into z:
    [qi,pj] = delta_ij z, [ai,bj] = delta_ij z, [c,c] = z for odd t.
    Weights: q 2, p 4, z 6; a, b, c 3."""
    if r < 0 or t < 0:
        raise SuperLieError("need r, t >= 0")
    names, parities, weights = [], [], []
    for i in range(1, r + 1):
        names.append(f"q{i}")
        parities.append(0)
        weights.append(2)
    for i in range(1, r + 1):
        names.append(f"p{i}")
        parities.append(0)
        weights.append(4)
    names.append("z")
    parities.append(0)
    weights.append(6)
    tprime = t // 2
    for i in range(1, tprime + 1):
        names.append(f"a{i}")
        parities.append(1)
        weights.append(3)
    for i in range(1, tprime + 1):
        names.append(f"b{i}")
        parities.append(1)
        weights.append(3)
    if t % 2:
        names.append("c")
        parities.append(1)
        weights.append(3)
    z = names.index("z")
    brackets = {}
    for i in range(1, r + 1):
        qi = names.index(f"q{i}")
        pi = names.index(f"p{i}")
        brackets[(min(qi, pi), max(qi, pi))] = {z: Fraction(1 if qi < pi else -1)}
    for i in range(1, tprime + 1):
        ai = names.index(f"a{i}")
        bi = names.index(f"b{i}")
        brackets[(min(ai, bi), max(ai, bi))] = {z: Fraction(1)}
    if t % 2:
        c = names.index("c")
        brackets[(c, c)] = {z: Fraction(1)}
    return FinDimSuperLieAlgebra(names, parities, brackets, weights)


def save_algebra(g, path):
    with open(path, "w") as fh:
        json.dump(g.to_json(), fh, indent=1, sort_keys=True)


def load_algebra(path):
    with open(path) as fh:
        return FinDimSuperLieAlgebra.from_json(json.load(fh))
