"""Homology of finite-dimensional (or weight-truncated) super Lie algebras
with trivial coefficients, via the Chevalley-Eilenberg complex.

The k-th chain space is the super exterior power: antisymmetric on even
elements, symmetric on odd ones, so a basis is indexed by (strictly
increasing even subsets) x (weakly increasing odd multisets).  With trivial
coefficients the differential keeps only the bracket terms:

  d(y1 ^ ... ^ yk) = sum_{i<j} (-1)^E [yi,yj] ^ y1 ^ ... ^ yi^ ... ^ yj^ ... ^ yk
  E = |yi| (|y1|+..+|y_{i-1}|) + |yj| (|y1|+..+|y_{j-1}|) + |yi||yj| + i + j

and homology ranks are dim - rank(d_k) - rank(d_{k+1}) per degree (and per
weight when the algebra is weight-graded).
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .linalg import Echelon, intvec


def wedge_basis(g, k, weight_max=None):
    """Basis wedges as (even tuple, odd tuple); optionally weight-bounded."""
    ev = g.even_indices()
    od = g.odd_indices()
    out = []
    for ne in range(min(k, len(ev)), -1, -1):
        no = k - ne
        for esub in combinations(ev, ne):
            for osub in combinations_with_replacement(od, no):
                if weight_max is not None and g.weights is not None:
                    wt = sum(g.weights[i] for i in esub) + sum(
                        g.weights[i] for i in osub
                    )
                    if wt > weight_max:
                        continue
                out.append((esub, osub))
    return out


def wedge_weight(g, wedge):
    esub, osub = wedge
    if g.weights is None:
        return 0
    return sum(g.weights[i] for i in esub) + sum(g.weights[i] for i in osub)


def _canonical(g, factors, coeff):
    """Sort a wedge into (evens ascending, odds ascending) with Koszul signs.

    factors: list of basis indices.  Returns (key, coeff) or None if zero
    (repeated even factor).
    """
    fs = list(factors)
    # insertion sort tracking the sign: swapping adjacent u, v costs
    # -(-1)^(|u||v|)
    for i in range(1, len(fs)):
        j = i
        while j > 0 and _order_key(g, fs[j - 1]) > _order_key(g, fs[j]):
            pu, pv = g.parities[fs[j - 1]], g.parities[fs[j]]
            coeff = coeff if (pu and pv) else -coeff
            fs[j - 1], fs[j] = fs[j], fs[j - 1]
            j -= 1
    esub = tuple(i for i in fs if g.parities[i] == 0)
    osub = tuple(i for i in fs if g.parities[i] == 1)
    for a, b in zip(esub, esub[1:]):
        if a == b:
            return None
    return (esub, osub), coeff


def _order_key(g, i):
    # evens before odds, then by index: matches wedge_basis enumeration
    return (g.parities[i], i)


def ce_differential(g, wedge):
    """d of a basis wedge, as {basis wedge -> Fraction}."""
    esub, osub = wedge
    ys = list(esub) + list(osub)
    k = len(ys)
    out = {}
    pref = [0] * (k + 1)
    for idx, y in enumerate(ys):
        pref[idx + 1] = (pref[idx] + g.parities[y]) & 1
    for i in range(k):
        for j in range(i + 1, k):
            br = g.bracket(ys[i], ys[j])
            if not br:
                continue
            exp = (
                g.parities[ys[i]] * pref[i]
                + g.parities[ys[j]] * pref[j]
                + g.parities[ys[i]] * g.parities[ys[j]]
                + (i + 1)
                + (j + 1)
            )
            sign = -1 if exp % 2 else 1
            rest = [ys[t] for t in range(k) if t != i and t != j]
            for tgt, c in br.items():
                got = _canonical(g, [tgt] + rest, Fraction(sign) * c)
                if got is None:
                    continue
                key, coeff = got
                val = out.get(key, Fraction(0)) + coeff
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
    return out


def ce_check_d_squared(g, degree_max, weight_max=None):
    """d o d == 0 on all basis wedges up to the given degree."""
    for k in range(2, degree_max + 1):
        for wedge in wedge_basis(g, k, weight_max):
            acc = {}
            for mid, c in ce_differential(g, wedge).items():
                for tgt, d in ce_differential(g, mid).items():
                    val = acc.get(tgt, Fraction(0)) + c * d
                    if val:
                        acc[tgt] = val
                    else:
                        acc.pop(tgt, None)
            if acc:
                return False
    return True


def ce_homology(g, degree_max, weight_max=None):
    """Betti numbers of the (weight-truncated) complex.

    Returns {degree: total dim} when the algebra carries no weights, else
    {degree: {weight: dim}} with zero entries dropped.
    """
    graded = g.weights is not None and weight_max is not None
    bases = {
        k: wedge_basis(g, k, weight_max) for k in range(0, degree_max + 2)
    }
    ranks = {}
    for k in range(1, degree_max + 2):
        if graded:
            by_w = {}
            for wedge in bases[k]:
                by_w.setdefault(wedge_weight(g, wedge), []).append(wedge)
            ranks[k] = {
                w: _matrix_rank(g, ws, bases[k - 1]) for w, ws in by_w.items()
            }
        else:
            ranks[k] = _matrix_rank(g, bases[k], bases[k - 1])
    out = {}
    for k in range(0, degree_max + 1):
        if graded:
            dims_w = {}
            for wedge in bases[k]:
                w = wedge_weight(g, wedge)
                dims_w[w] = dims_w.get(w, 0) + 1
            betti = {}
            for w, d in sorted(dims_w.items()):
                rk = ranks[k].get(w, 0) if k else 0
                b = d - rk - ranks[k + 1].get(w, 0)
                if b:
                    betti[w] = b
            out[k] = betti
        else:
            d = len(bases[k])
            rk = ranks[k] if k else 0
            rk1 = ranks[k + 1]
            out[k] = d - rk - rk1
    return out


def _matrix_rank(g, wedges, target_basis):
    index = {wedge: i for i, wedge in enumerate(target_basis)}
    ech = Echelon()
    for wedge in wedges:
        col = ce_differential(g, wedge)
        if not col:
            continue
        iv, _ = intvec({index[t]: c for t, c in col.items()})
        ech.insert(iv)
    return ech.rank
