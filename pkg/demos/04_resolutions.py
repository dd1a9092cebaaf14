"""Free resolutions of the trivial module, verified weight by weight.

The trivial module has a length-three resolution whose graded components
are finite-dimensional, so complex property, injectivity of the top map
and rank-exactness are all decidable by exact elimination.  The alternating
sum of the module dimensions per weight recovers the defining identity of
the Hilbert series.
"""

from symalg import AssocModel, build_relations, preset
from symalg.resolution import SidedResolution, verify_resolution

for (n, s) in [(3, 1), (2, 2)]:
    p = preset(n, s)
    r0, r1 = build_relations(p)
    model = AssocModel(p.alphabet, r0 + r1, max_weight=12)
    out = verify_resolution(model, p, 12)
    for side, reports in out.items():
        bad = [r.weight for r in reports if not r.ok]
        print(f"({n},{s}) {side:5s} resolution, weights 0..12:",
              "all checks pass" if not bad else f"failures at {bad}")
    res = SidedResolution(model, p, "left")
    euler = [sum((-1) ** k * d for k, d in enumerate(res.degrees(w))) for w in range(13)]
    print(f"({n},{s}) per-weight Euler characteristics:", euler)
