"""The Kirillov-orbit pipeline: from truncations to Clifford-Weyl quotients.

For a nilpotent super Lie algebra and an even functional, the ranks of the
Kirillov form give the weight (Weyl index, Clifford index) of the primitive
quotient.  Mapping free generators of the distinguished ideal onto a
Heisenberg basis produces surjections of the truncated quotients onto
U(heis)/(z - 1), realizing every admissible Clifford-Weyl algebra.
"""

from symalg import (
    CWAlgebra,
    build_cw_surjection,
    even_functional,
    heis,
    preset,
    vergne_polarization,
    weight_of,
)

# weights across the Heisenberg family
for (r, t) in [(0, 1), (0, 2), (1, 1), (2, 3)]:
    g = heis(r, t)
    w = weight_of(g, even_functional(g, {"z": 1}))
    print(f"heis({r},{t}): weight = (weyl {w.weyl}, clifford {w.clifford})")

g = heis(1, 1)
pol = vergne_polarization(g, even_functional(g, {"z": 1}))
print("\npolarization of heis(1,1):", [{g.names[i]: str(c) for i, c in v.items()} for v in pol])

# normal-form arithmetic in the Clifford-Weyl target
A = CWAlgebra(1, 1)
q, p, c = A.gen("q", 1), A.gen("p", 1), A.gen("c")
print("\nClifford-Weyl check: pq - qp =", p * q - q * p, ", c^2 =", c * c)

# the full pipeline on the canonical (3,1) presentation
print()
for (r, t) in [(1, 1), (0, 2)]:
    res = build_cw_surjection(preset(3, 1), r, t, l=13)
    print(
        f"target (r,t)=({r},{t}): weight = (weyl {res.weight.weyl}, "
        f"clifford {res.weight.clifford}), flags = {res.flags}"
    )
    for name, src in res.phi.items():
        print(f"    {name} <- {src}")
