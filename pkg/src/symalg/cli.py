"""Command-line interface: deterministic JSON reports over the library.

Subcommands
-----------
hilbert    dimension series of the quotient algebras
basis      weight-graded basis of a truncation
verify     resolution / omega / susy / semidirect checks
dixmier    Kirillov-form weights, polarizations, Clifford-Weyl surjections
freegens   free-generator series of the distinguished ideals

Every run is a pure function of its configuration; reports are cached by
the configuration hash and cache hits are byte-identical to recomputation
(--no-cache recomputes and diffs).  Exit code 0 means every requested
verification passed.
"""

import argparse
import json
import sys

from . import cache as cachemod
from .assoc import AssocModel
from .engine import (
    LieModel,
    basis_report,
    k1s_generators,
    load_or_build_model,
    tym_generators,
    tym_hat_generators,
)
from .presentation import (
    SymPresentation,
    build_relations,
    check_nondegenerate,
    derive_gamma_tilde,
    dims_ym,
    free_gen_series_k1s,
    free_gen_series_tym,
    free_gen_series_tym_hat,
    hilbert_series_YM,
    preset,
    quartic_form,
    rat_str,
    semidirect_maps,
    semidirect_relation,
    superpotential,
    susy_derivations,
)
from .resolution import verify_resolution
from .superlie import (
    functional_from_json,
    load_algebra,
    vergne_polarization,
    weight_of,
)
from .surjection import build_cw_surjection
from .tensor import cyclic_derivative, lie_expand, super_commutator
from .refdata import (
    DEPENDENCY_IDENTITIES_31,
    EXPECTED_CUMULATIVE_31,
    reference_basis_trees,
)


def _load_presentation(args):
    if getattr(args, "presentation", None):
        with open(args.presentation) as fh:
            return SymPresentation.from_json(json.load(fh))
    if getattr(args, "preset", None):
        n, s = (int(v) for v in args.preset.split(","))
        return preset(n, s)
    raise SystemExit("provide --preset n,s or --presentation file.json")


def _hash(p):
    import hashlib

    return hashlib.sha256(p.canonical_json().encode()).hexdigest()


def cmd_hilbert(args):
    p = _load_presentation(args)
    degree = args.degree
    report = {
        "command": "hilbert",
        "presentation_sha256": _hash(p),
        "n": p.n,
        "s": p.s,
        "degree": degree,
        "ok": True,
    }
    report["series_valid"] = (p.n, p.s) not in ((1, 0), (1, 1))
    if degree > 0:
        ser = hilbert_series_YM(p.n, p.s, order=degree)
        report["enveloping_series"] = [str(int(ser[d])) for d in range(degree + 1)]
        if report["series_valid"]:
            report["lie_dims"] = dims_ym(p.n, p.s, max_j=degree)
        if args.check_engine and report["series_valid"]:
            depth = min(degree, args.engine_depth)
            r0, r1 = build_relations(p)
            model = LieModel(p.alphabet, r0 + r1, cutoff=depth - 1)
            engine_dims = [model.dim(j) for j in range(1, depth + 1)]
            report["engine_depth"] = depth
            report["engine_dims"] = engine_dims
            report["ok"] = engine_dims == report["lie_dims"][:depth]
    return report


def cmd_basis(args):
    p = _load_presentation(args)
    l = args.l
    r0, r1 = build_relations(p)
    model = load_or_build_model(
        p.alphabet, r0 + r1, l, cachemod.cache_dir(args.cache_dir), _hash(p)
    )
    report = {
        "command": "basis",
        "presentation_sha256": _hash(p),
        "l": l,
        "dims": {str(w): model.dim(w) for w in model.weights()},
        "total_dim": model.total_dim(),
        "components": basis_report(model),
        "ok": True,
    }
    if args.check_reference_basis:
        ok = p.n == 3 and p.s == 1 and p.is_orthonormal() and l <= 7
        if ok:
            from .linalg import Echelon, intvec

            ech = Echelon()
            count = 0
            for tree in reference_basis_trees(l):
                poly = lie_expand(tree, p.alphabet)
                coords = model.project(poly)
                if not coords:
                    continue
                iv, _ = intvec(coords)
                # distinct weights use disjoint coordinate blocks
                shifted = {poly.weight() * 10**6 + k: v for k, v in iv.items()}
                if ech.insert(shifted) is not None:
                    count += 1
            ok = count == model.total_dim() == EXPECTED_CUMULATIVE_31[l]
            report["reference_count"] = count
            if l >= 7:
                ident_ok = True
                for lhs, rhs in DEPENDENCY_IDENTITIES_31:
                    acc = lie_expand(lhs, p.alphabet)
                    for coeff, tree in rhs:
                        acc = acc - lie_expand(tree, p.alphabet).scale(coeff)
                    if not model.contains_ideal(acc):
                        ident_ok = False
                report["dependency_identities_ok"] = ident_ok
                ok = ok and ident_ok
        report["reference_basis_ok"] = ok
        report["ok"] = report["ok"] and ok
    return report


def cmd_verify(args):
    p = _load_presentation(args)
    target = args.target
    report = {
        "command": "verify",
        "target": target,
        "presentation_sha256": _hash(p),
        "ok": True,
    }
    r0, r1 = build_relations(p)
    if target == "omega":
        acc = p.alphabet.zero()
        for i in range(p.n):
            acc = acc + super_commutator(p.alphabet.gen(f"x{i+1}"), r0[i])
        for a in range(p.s):
            acc = acc + super_commutator(p.alphabet.gen(f"z{a+1}"), r1[a])
        report["identity_holds"] = acc.is_zero()
        report["ok"] = acc.is_zero()
    elif target == "resolution":
        model = AssocModel(p.alphabet, r0 + r1, max_weight=args.max_weight)
        out = verify_resolution(model, p, args.max_weight)
        details = {}
        ok = True
        for side, reps in out.items():
            bad = {
                str(r.weight): [k for k, v in r.checks.items() if not v]
                for r in reps
                if not r.ok
            }
            details[side] = bad if bad else "all-green"
            ok = ok and not bad
        report["sides"] = details
        report["max_weight"] = args.max_weight
        report["ok"] = ok
    elif target == "susy":
        q, qzero = quartic_form(p)
        report["quartic_zero"] = qzero
        try:
            gt = derive_gamma_tilde(p)
        except Exception:
            gt = _companion_fallback(p)
        ders = susy_derivations(p, gt)
        W = superpotential(p)
        model = AssocModel(p.alphabet, r0 + r1, max_weight=9)
        names = [f"x{i+1}" for i in range(p.n)] + [f"z{a+1}" for a in range(p.s)]
        all_in = True
        for d in ders:
            dW = d(W)
            for name in names:
                cd = cyclic_derivative(dW, name)
                if not model.contains(cd):
                    all_in = False
        report["derivatives_in_ideal"] = all_in
        report["criterion"] = (
            "ideal preserved iff quartic form vanishes"
        )
        report["ok"] = all_in == qzero
        report["verdict"] = (
            "quartic zero; ideal preserved"
            if qzero and all_in
            else "quartic nonzero; ideal not preserved"
            if not qzero and not all_in
            else "MISMATCH"
        )
    elif target == "semidirect":
        ok, witness = check_nondegenerate(p)
        report["nondegenerate"] = ok
        if ok:
            psi, psi_inv, d_action = semidirect_maps(p)
            report["psi"] = {k: _tree_name(v) for k, v in psi.items()}
            report["psi_inv"] = {k: _tree_name(v) for k, v in psi_inv.items()}
            # round trip on generators
            round_ok = all(
                psi_inv[psi[name]] == name
                for name in psi
                if isinstance(psi[name], str) and isinstance(psi_inv[psi[name]], str)
            )
            # d maps the defining relation into the relation ideal
            U, rho = semidirect_relation(p.n, p.s)
            from .tensor import extend_derivation

            D = extend_derivation(U, d_action, 0)
            dmodel = LieModel(U, [rho], cutoff=9)
            report["relation_preserved"] = dmodel.contains_ideal(D(rho))
            report["round_trip"] = round_ok
            report["ok"] = round_ok and report["relation_preserved"]
        else:
            report["ok"] = False
    else:
        raise SystemExit(f"unknown verify target {target}")
    return report


def _tree_name(tree):
    from .tensor import bracket_word_name

    return bracket_word_name(tree) if not isinstance(tree, str) else tree


def _companion_fallback(p):
    """Blockwise inverse companion tensor for susy probing when the
    equivariance system is inconsistent."""
    from .presentation import GammaTilde, _mat_inverse

    mats = []
    for i in range(p.n):
        inv = _mat_inverse(p.gamma[i])
        mats.append(inv if inv is not None else [[0] * p.s for _ in range(p.s)])
    return GammaTilde(p.n, p.s, mats)


def cmd_dixmier(args):
    target = args.target
    report = {"command": "dixmier", "target": target, "ok": True}
    if target in ("weight", "polarization"):
        g = load_algebra(args.algebra)
        with open(args.functional) as fh:
            f = functional_from_json(g, json.load(fh))
        w = weight_of(g, f)
        report["weight"] = {"weyl": w.weyl, "clifford": w.clifford}
        if target == "polarization":
            try:
                pol = vergne_polarization(g, f)
                report["polarization"] = [
                    {g.names[i]: rat_str(c) for i, c in sorted(v.items())}
                    for v in pol
                ]
                report["dims"] = {
                    "even": sum(
                        1 for v in pol if g.parities[next(iter(v))] == 0
                    ),
                    "odd": sum(1 for v in pol if g.parities[next(iter(v))] == 1),
                }
            except Exception as exc:
                report["error"] = str(exc)
                report["ok"] = False
    elif target == "surject":
        p = _load_presentation(args)
        from .surjection import plan_assignment

        _, _, d_prime = plan_assignment(p.n, p.s, args.r, args.t)
        l = args.l if args.l is not None else 2 * d_prime + 1
        r0, r1 = build_relations(p)
        model = load_or_build_model(
            p.alphabet, r0 + r1, l, cachemod.cache_dir(args.cache_dir), _hash(p)
        )
        res = build_cw_surjection(p, args.r, args.t, l=l, model=model)
        report["presentation_sha256"] = _hash(p)
        report.update(res.report())
        report["ok"] = res.ok
    else:
        raise SystemExit(f"unknown dixmier target {target}")
    return report


def cmd_freegens(args):
    p = _load_presentation(args)
    max_w = args.max
    r0, r1 = build_relations(p)
    model = load_or_build_model(
        p.alphabet, r0 + r1, max(max_w - 1, 1),
        cachemod.cache_dir(args.cache_dir), _hash(p),
    )
    if args.ideal == "tym-hat":
        analysis = tym_hat_generators(model, p.n, max_weight=max_w)
        series = free_gen_series_tym_hat(p.n, p.s)
    elif args.ideal == "tym":
        analysis = tym_generators(model, max_weight=max_w)
        series = free_gen_series_tym(p.n, p.s, order=max_w)
    elif args.ideal == "k1s":
        if p.n != 1:
            raise SystemExit("--ideal k1s requires an n = 1 presentation")
        analysis = k1s_generators(model, p.s, max_weight=max_w)
        series = free_gen_series_k1s(p.s)
    else:
        raise SystemExit(f"unknown ideal {args.ideal}")
    counts = analysis.counts()
    expected = {w: int(series(w)) for w in counts}
    report = {
        "command": "freegens",
        "ideal": args.ideal,
        "presentation_sha256": _hash(p),
        "max_weight": max_w,
        "generator_dims": {str(w): c for w, c in counts.items()},
        "series_dims": {str(w): c for w, c in expected.items()},
        "ok": counts == expected,
    }
    return report


def _render_table(doc, indent=0):
    lines = []
    pad = "  " * indent
    if isinstance(doc, dict):
        width = max((len(str(k)) for k in doc), default=0)
        for k, v in doc.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{str(k).ljust(width)}  {v}")
    elif isinstance(doc, list):
        lines.append(pad + "  ".join(str(v) for v in doc))
    else:
        lines.append(pad + str(doc))
    return lines


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="symalg",
        description="exact computations with super Yang-Mills algebras",
    )
    ap.add_argument("--format", choices=("json", "table"), default="json")
    ap.add_argument("--cache-dir", default=None)
    ap.add_argument("--no-cache", action="store_true")
    ap.add_argument(
        "--threads",
        type=int,
        default=1,
        help="reserved; the engine evaluates serially and output never "
        "depends on this value",
    )
    ap.add_argument(
        "--seed",
        type=int,
        default=0,
        help="reserved; no computation is randomized",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_presentation(sp):
        sp.add_argument("--preset", default=None, help="n,s canonical presentation")
        sp.add_argument("--presentation", default=None, help="JSON file")

    sp = sub.add_parser("hilbert")
    add_presentation(sp)
    sp.add_argument("--degree", type=int, default=20)
    sp.add_argument("--check-engine", action="store_true")
    sp.add_argument("--engine-depth", type=int, default=12)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("basis")
    add_presentation(sp)
    sp.add_argument("--l", type=int, default=7)
    sp.add_argument("--check-reference-basis", action="store_true")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("verify")
    sp.add_argument("target", choices=("resolution", "omega", "susy", "semidirect"))
    add_presentation(sp)
    sp.add_argument("--max-weight", type=int, default=10)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dixmier")
    sp.add_argument("target", choices=("weight", "polarization", "surject"))
    add_presentation(sp)
    sp.add_argument("--algebra", default=None)
    sp.add_argument("--functional", default=None)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--l", type=int, default=None)
    sp.set_defaults(func=cmd_dixmier)

    sp = sub.add_parser("freegens")
    add_presentation(sp)
    sp.add_argument("--ideal", choices=("tym-hat", "tym", "k1s"), default="tym-hat")
    sp.add_argument("--max", type=int, default=10)
    sp.set_defaults(func=cmd_freegens)

    args = ap.parse_args(argv)
    config = {
        k: v
        for k, v in vars(args).items()
        if k not in ("func", "format", "cache_dir", "no_cache", "threads")
    }
    key = cachemod.config_key(config)
    cdir = cachemod.cache_dir(args.cache_dir)
    cached = cachemod.lookup(key, cdir)
    if cached is not None and not args.no_cache:
        data = cached
        report = json.loads(data)
    else:
        report = args.func(args)
        report["config"] = config
        data = (
            json.dumps(report, sort_keys=True, indent=1, default=str) + "\n"
        ).encode()
        if cached is not None and data != cached:
            sys.stderr.write("cache mismatch: recomputation differs from cache\n")
            sys.stdout.write(data.decode())
            return 3
        cachemod.store(key, data, cdir)
    if args.format == "table":
        sys.stdout.write("\n".join(_render_table(report)) + "\n")
    else:
        sys.stdout.write(data.decode())
    return 0 if report.get("ok", False) else 1


if __name__ == "__main__":
    raise SystemExit(main())
