"""Batch front-end: spectra, compactifications, the verification suite,
DOT export and the Boolean-rng demonstration.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 parse error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import config
from .booleanrng import (
    UPair,
    finset,
    infinity_point_count,
    noncompactness_witness,
    psi0_decide,
)
from .corpus import CorpusConfig
from .errors import (
    NilspecError,
    NotIdealError,
    RingAxiomError,
    SizeLimitError,
    SpecParseError,
)
from .ideals import enumerate_ideals, nilradical, spectrum
from .nilcomp import canonical_extension, nilcompactification
from .spaces import spec_space, to_dot
from .specs import build_extension_pair, build_ring
from .verify import run_suite

PARSE_ERROR, LIMIT_ERROR = 2, 3


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.max_size is not None:
        config.MAX_RING_SIZE = args.max_size
    try:
        return args.func(args)
    except (SpecParseError, RingAxiomError, NotIdealError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return LIMIT_ERROR


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilspec", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--dot", metavar="PATH", help="also write a DOT graph")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--max-size", type=int, default=None,
                        help="ring size limit (mirrors NILSPEC_MAX_SIZE)")
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("spectrum", parents=[common], help="ideals, primes and nilradical of a ring")
    p.add_argument("ring", help="ring spec JSON")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("nc", parents=[common], help="compactified spectrum of an extension")
    p.add_argument("sub", help="sub-ring spec JSON (ideal_subrng of the ambient spec)")
    p.add_argument("amb", help="ambient ring spec JSON")
    p.set_defaults(func=cmd_nc)

    p = sub.add_parser("nc0", parents=[common], help="canonical compactified spectrum of a rng")
    p.add_argument("sub", help="ring spec JSON")
    p.set_defaults(func=cmd_nc0)

    p = sub.add_parser("verify", parents=[common], help="run the whole property suite")
    p.add_argument("--corpus", metavar="FILE", help="JSON corpus configuration")
    p.add_argument("--mutate", action="store_true",
                   help="corrupt one table entry to prove the harness can fail")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", parents=[common], help="write a spectrum graph to a file")
    p.add_argument("kind", choices=["spectrum", "nc", "nc0"])
    p.add_argument("specs", nargs="+", help="ring spec JSON (two for nc)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("boolean-demo", parents=[common],
                       help="certificates for the infinite Boolean rng")
    p.add_argument("--cover", help="JSON list of finite sets, e.g. [[0],[1,2]]")
    p.set_defaults(func=cmd_boolean_demo)
    return parser


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text, end="")


def _fmt_members(members) -> str:
    return "{" + ",".join(str(m) for m in sorted(members)) + "}"


def cmd_spectrum(args) -> int:
    ring = build_ring(json.loads(args.ring))
    ideals = enumerate_ideals(ring)
    primes = spectrum(ring)
    nil = nilradical(ring)
    lines = [f"RING {ring.label} size={ring.size} identity={ring.identity}"]
    lines.append(f"IDEALS {len(ideals)}")
    lines += [f"  {_fmt_members(i.members)}" for i in ideals]
    lines.append(f"PRIMES {len(primes)}")
    lines += [f"  {_fmt_members(p.members)}" for p in primes]
    lines.append(f"NILRADICAL {_fmt_members(nil.members)}")
    payload = {
        "ring": {"label": ring.label, "size": ring.size, "identity": ring.identity},
        "ideals": [sorted(i.members) for i in ideals],
        "primes": [sorted(p.members) for p in primes],
        "nilradical": sorted(nil.members),
    }
    _emit(args, "\n".join(lines) + "\n", payload)
    if args.dot:
        _write(args.dot, to_dot(spec_space(ring)))
    return 0


def _nc_report(args, ext) -> int:
    nr = nilcompactification(ext)
    lam_rows = []
    for p in spectrum(ext.sub):
        amb = _fmt_members(ext.push(p.members))
        lam_rows.append((_fmt_members(p.members), amb, _fmt_members(nr.lam.mapping[p.members])))
    lines = [
        f"EXTENSION {ext.label} sub_size={ext.sub.size} amb_size={ext.amb.size}",
        f"QUOTIENT {nr.q_ring.label} size={nr.q_ring.size}",
        f"NC points={len(nr.nc_space)}",
    ]
    for sub_m, amb_m, img in lam_rows:
        lines.append(f"  LAMBDA {sub_m} ~ ambient {amb_m} -> {img}")
    lines.append("INVARIANTS embedding=injective,continuous,open dense=yes spectral=yes")
    payload = {
        "extension": ext.label,
        "quotient": {"label": nr.q_ring.label, "size": nr.q_ring.size},
        "nc_points": len(nr.nc_space),
        "lambda": [{"prime": s, "ambient": a, "image": i} for s, a, i in lam_rows],
    }
    _emit(args, "\n".join(lines) + "\n", payload)
    if args.dot:
        _write(args.dot, to_dot(nr.nc_space, name="nc"))
    return 0


def cmd_nc(args) -> int:
    ext = build_extension_pair(json.loads(args.sub), json.loads(args.amb))
    return _nc_report(args, ext)


def cmd_nc0(args) -> int:
    ring = build_ring(json.loads(args.sub))
    return _nc_report(args, canonical_extension(ring))


def cmd_verify(args) -> int:
    cfg = CorpusConfig(seed=args.seed, mutate=args.mutate)
    if args.corpus:
        with open(args.corpus, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        if not isinstance(doc, dict):
            raise SpecParseError("corpus file must be a JSON object")
        if "rings" in doc:
            cfg.ring_docs = doc["rings"]
        for key in ("zmod_max", "product_cap", "unitization_cap", "hom_ring_cap", "max_morphisms"):
            if key in doc:
                setattr(cfg, key, int(doc[key]))
    t0 = time.time()
    report = run_suite(cfg)
    elapsed = time.time() - t0
    if args.json:
        print(report.render_json(), end="")
    else:
        print(report.render_text(), end="")
    print(f"elapsed {elapsed:.1f}s", file=sys.stderr)
    return 0 if report.all_ok else 1


def cmd_export_dot(args) -> int:
    if args.kind == "spectrum":
        if len(args.specs) != 1:
            raise SpecParseError("spectrum export takes one ring spec")
        space = spec_space(build_ring(json.loads(args.specs[0])))
        name = "spectrum"
    elif args.kind == "nc":
        if len(args.specs) != 2:
            raise SpecParseError("nc export takes sub and ambient specs")
        ext = build_extension_pair(json.loads(args.specs[0]), json.loads(args.specs[1]))
        space = nilcompactification(ext).nc_space
        name = "nc"
    else:
        if len(args.specs) != 1:
            raise SpecParseError("nc0 export takes one ring spec")
        ext = canonical_extension(build_ring(json.loads(args.specs[0])))
        space = nilcompactification(ext).nc_space
        name = "nc"
    _write(args.out, to_dot(space, name=name))
    return 0


def cmd_boolean_demo(args) -> int:
    lines = ["BOOLEAN RNG OF FINITE SUBSETS OF THE NATURALS", ""]
    lines.append("transfer of the zero ideal inside the unit extension:")
    lines.append("  membership of (a, k) holds iff a is empty and k is even")
    for pair in (UPair(frozenset(), 4), UPair(frozenset({1}), 0), UPair(frozenset(), 3),
                 UPair(frozenset({0, 2}), 5)):
        d = psi0_decide(pair)
        lines.append(f"  ({sorted(pair.a)}, {pair.alpha}) -> {d.describe()}")
    if args.cover:
        cover = [finset(x) for x in json.loads(args.cover)]
    else:
        cover = [finset({n}) for n in range(4)]
    cert = noncompactness_witness(cover)
    lines.append("")
    lines.append(f"non-compactness: cover by {len(cover)} basic opens, {cert.describe()}")
    inf = infinity_point_count(args.seed)
    lines.append("")
    lines.append(f"points at infinity: {inf.describe()}")
    payload = {
        "noncompactness": {"missed_point": cert.missed_point, "cover_size": cert.cover_size},
        "infinity_points": inf.count,
    }
    _emit(args, "\n".join(lines) + "\n", payload)
    return 0


def _write(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(content)


if __name__ == "__main__":
    sys.exit(main())
