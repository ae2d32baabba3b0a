"""Command-line entry point: ``zeroapn <command> [options]``.

Exit codes: 0 when the property holds (or every instance passes), 1 when it
fails, 2 on usage or configuration errors.  Every global flag can also be
set through an environment variable, e.g. ZEROAPN_THREADS=4.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import __version__, diffprops, equiv, gf2n, gf2poly
from .cache import ReportCache
from .errors import TranscriptionMissing, UnknownTheorem, ZeroApnError
from .families import all_families
from .verify import certificates, exhaustive, theorems

log = logging.getLogger("zeroapn")

ENV_PREFIX = "ZEROAPN_"
X0_LIMIT = 13


class UsageError(Exception):
    pass


def _env(name, default=None):
    return os.environ.get(ENV_PREFIX + name, default)


def _env_flag(name) -> bool:
    return _env(name, "").strip().lower() in ("1", "true", "yes", "on")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _global_parser(suppress: bool) -> argparse.ArgumentParser:
    """Global flags; the copy attached to subcommands leaves values set earlier alone."""
    g = argparse.ArgumentParser(add_help=False)

    def dflt(value):
        return argparse.SUPPRESS if suppress else value

    g.add_argument("--modulus", default=dflt(_env("MODULUS")), metavar="HEX",
                   help="irreducible modulus (hex) for fields of matching degree")
    g.add_argument("--threads", type=_positive, default=dflt(int(_env("THREADS", "1"))), metavar="N")
    g.add_argument("--cache-dir", default=dflt(_env("CACHE_DIR")), metavar="P")
    g.add_argument("--seed", type=int, default=dflt(int(_env("SEED", str(gf2poly.DEFAULT_SEED)))), metavar="S")
    g.add_argument("--force", action="store_true", default=dflt(_env_flag("FORCE")),
                   help="lift the default field-size ceilings")
    g.add_argument("--json", action="store_true", default=dflt(_env_flag("JSON")),
                   help="machine-readable output")
    g.add_argument("-v", "--verbose", action="store_true", default=dflt(False))
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _global_parser(suppress=True)
    p = argparse.ArgumentParser(prog="zeroapn", parents=[_global_parser(suppress=False)],
                                description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"zeroapn {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def nd(sp):
        sp.add_argument("-n", type=int, required=True, help="field degree")
        sp.add_argument("-d", type=int, required=True, help="exponent")

    sp = sub.add_parser("check", parents=[common], help="0-APN test of x^d over GF(2^n)")
    nd(sp)
    sp = sub.add_parser("spectrum", parents=[common], help="differential spectrum of x^d")
    nd(sp)
    sp = sub.add_parser("x0check", parents=[common], help="x0-APN test at a chosen point")
    nd(sp)
    sp.add_argument("--x0", default="0", help="point as hex field element (default 0)")

    sp = sub.add_parser("table1", parents=[common], help="sweep every family over its valid m")
    sp.add_argument("--only", type=int, action="append", metavar="ID", help="restrict to family ID (repeatable)")
    sp.add_argument("--m-max", type=int, default=None, help="largest m to try")
    sp.add_argument("--n-max", type=int, default=20, help="largest field degree (default 20)")

    sp = sub.add_parser("certify", parents=[common], help="replay a printed elimination chain")
    sp.add_argument("theorem", nargs="?", help="tag such as 3.3, 3.4-case2, or a case slug like 4m-1/2")
    sp.add_argument("--all", action="store_true", help="certify every printed case")
    sp.add_argument("-o", "--out-dir", default="certificates", help="directory for certificate JSON")
    sp.add_argument("--method", choices=("auto", "interp", "bareiss"), default="auto")

    sp = sub.add_parser("conjugate", parents=[common], help="check a transcribed system over the whole field")
    sp.add_argument("theorem")
    sp.add_argument("-m", type=int, default=None, help="parameter m (default: smallest valid)")

    sp = sub.add_parser("classify", parents=[common], help="match x^d against the family catalog")
    nd(sp)
    sp.add_argument("--catalog", help="extra catalog file")
    sp = sub.add_parser("coset", parents=[common], help="cyclotomic coset of d modulo 2^n-1")
    nd(sp)
    sp = sub.add_parser("inequiv-matrix", parents=[common], help="pairwise CCZ matrix of catalog instances")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--kinds", nargs="+", choices=equiv.KINDS, default=list(equiv.KINDS))
    sp.add_argument("--catalog", help="extra catalog file")
    return p


# -- helpers ---------------------------------------------------------------------


def _field(args, n: int) -> gf2n.FieldCtx:
    modulus = None
    if args.modulus:
        m = gf2poly.from_hex(args.modulus)
        if gf2poly.degree(m) == n:
            modulus = m
        elif args.command in ("check", "spectrum", "x0check"):
            raise UsageError(f"--modulus has degree {gf2poly.degree(m)}, field degree is {n}")
    return gf2n.field_new(n, modulus)


def _emit(args, record: dict, human: str):
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(human)


def _stamp(args, record: dict, ctx: gf2n.FieldCtx | None = None) -> dict:
    record["seed"] = args.seed
    if ctx is not None:
        record["modulus_hex"] = ctx.modulus_hex
    return record


# -- commands ----------------------------------------------------------------------


def cmd_check(args) -> int:
    ctx = _field(args, args.n)
    pm = diffprops.PowerMap(ctx, args.d)
    cache = ReportCache(args.cache_dir)
    key = dict(n=args.n, modulus=ctx.modulus_hex, d=args.d)
    t0 = time.perf_counter()
    rec = cache.get("check", **key)
    if rec is None:
        rec = diffprops.check_record(pm, threads=args.threads, force=args.force)
        cache.put("check", rec, **key)
    else:
        rec["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    _stamp(args, rec, ctx)
    verdict = "0-APN" if rec["zero_apn"] else "not 0-APN"
    human = f"x^{args.d} over GF(2^{args.n}) [modulus 0x{ctx.modulus_hex}]: {verdict}, uniformity {rec['uniformity']}"
    if rec["witnesses"]:
        human += "\nwitnesses: " + " ".join(rec["witnesses"])
    _emit(args, rec, human)
    return 0 if rec["zero_apn"] else 1


def cmd_spectrum(args) -> int:
    ctx = _field(args, args.n)
    spec = diffprops.diff_spectrum(diffprops.PowerMap(ctx, args.d), force=args.force)
    rec = _stamp(args, {
        "n": args.n,
        "d": args.d,
        "uniformity": spec.uniformity,
        "spectrum": {str(k): v for k, v in spec.counts.items()},
        "row": {str(k): v for k, v in spec.row.items()},
    }, ctx)
    human = f"uniformity {spec.uniformity}\n" + "\n".join(f"  delta={k}: {v} pairs" for k, v in spec.counts.items())
    _emit(args, rec, human)
    return 0


def cmd_x0check(args) -> int:
    if args.n > X0_LIMIT and not args.force:
        raise UsageError(f"x0check scans all pairs; n > {X0_LIMIT} needs --force")
    ctx = _field(args, args.n)
    x0 = int(args.x0, 16)
    if not 0 <= x0 < ctx.order:
        raise UsageError(f"x0={args.x0} is not an element of GF(2^{args.n})")
    ok = diffprops.is_x0_apn(diffprops.PowerMap(ctx, args.d), x0)
    rec = _stamp(args, {"n": args.n, "d": args.d, "x0": format(x0, "x"), "x0_apn": ok}, ctx)
    _emit(args, rec, f"x^{args.d} is {'' if ok else 'not '}{format(x0, 'x')}-APN over GF(2^{args.n})")
    return 0 if ok else 1


def cmd_table1(args) -> int:
    cache = ReportCache(args.cache_dir)
    wanted = set(args.only or [])
    unknown = wanted - {f.id for f in all_families()}
    if unknown:
        raise UsageError(f"unknown family id(s): {sorted(unknown)}")
    all_ok = True
    for fam in all_families():
        if wanted and fam.id not in wanted:
            continue
        for m in fam.valid_m(args.n_max):
            if args.m_max is not None and m > args.m_max:
                break
            d, n = fam.instantiate(m)
            ctx = _field(args, n)
            key = dict(n=n, modulus=ctx.modulus_hex, d=d, family=fam.id, m=m)
            t0 = time.perf_counter()
            rec = cache.get("table1", **key)
            if rec is None:
                rec = exhaustive.verify_family_exhaustive(
                    fam.id, m, force=args.force, threads=args.threads, modulus=ctx.modulus
                )
                cache.put("table1", rec, **key)
            else:
                rec["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
            _stamp(args, rec, ctx)
            ok = rec["zero_apn"] and rec.get("example_ok", True)
            all_ok &= ok
            if args.json:
                print(json.dumps(rec, sort_keys=True), flush=True)
            else:
                tag = " (example)" if rec.get("example") else ""
                print(f"family {fam.id:2d} m={m:<3d} n={n:<3d} d={d:<10d} "
                      f"{'0-APN' if rec['zero_apn'] else 'NOT 0-APN'} uniformity={rec['uniformity']}{tag}",
                      flush=True)
    return 0 if all_ok else 1


def cmd_certify(args) -> int:
    if args.all == bool(args.theorem):
        raise UsageError("give exactly one of THEOREM or --all")
    slugs = theorems.printed_cases() if args.all else [theorems.resolve(args.theorem)]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    all_ok = True
    for slug in slugs:
        t0 = time.perf_counter()
        cert = certificates.replay(slug, seed=args.seed, method=args.method)
        elapsed = time.perf_counter() - t0
        path = out_dir / (slug.replace("/", "_") + ".json")
        path.write_text(cert.to_json())
        all_ok &= cert.passed
        rec = {"theorem": cert.theorem, "case": slug, "verdict": cert.verdict, "file": str(path),
               "seed": args.seed, "diff": cert.diff,
               "errata": [s.name for s in cert.steps if s.status == "erratum"],
               "elapsed_ms": round(elapsed * 1000, 3)}
        human = f"{cert.theorem} [{slug}]: {cert.verdict.upper()} -> {path}"
        if rec["errata"]:
            human += f"\n  errata in printed chain: {', '.join(rec['errata'])}"
        for line in cert.diff:
            human += f"\n  {line}"
        _emit(args, rec, human)
    return 0 if all_ok else 1


def cmd_conjugate(args) -> int:
    m = args.m if args.m is not None else exhaustive.smallest_m(args.theorem)
    if m is None:
        raise UsageError("no valid m with n <= 16")
    rep = exhaustive.conjugate_system_report(args.theorem, m)
    rep["seed"] = args.seed
    _emit(args, rep, f"{rep['case']} m={m} n={rep['n']}: {'agree' if rep['agree'] else 'MISMATCH'}"
                     f" (twists {rep['frobenius_twists']})")
    return 0 if rep["agree"] else 1


def cmd_classify(args) -> int:
    catalog = equiv.load_catalog(args.catalog)
    hits = equiv.classify(args.d, args.n, catalog)
    kinds = {e.name: e.kind for e in catalog}
    coset = equiv.cyclotomic_coset(args.d, args.n)
    inv = equiv.inverse_exponent(args.d, args.n)
    rec = {
        "n": args.n,
        "d": args.d,
        "matches": [{"name": h, "kind": kinds[h]} for h in hits],
        "coset": list(coset.members),
        "inverse_coset": list(equiv.cyclotomic_coset(inv, args.n).members) if inv else None,
        "classical_match": any(kinds[h] == "APN-classical" for h in hits),
    }
    names = ", ".join(hits) if hits else "none (unclassified)"
    _emit(args, rec, f"x^{args.d} over GF(2^{args.n}): {names}\ncoset: {list(coset.members)}")
    return 0


def cmd_coset(args) -> int:
    c = equiv.cyclotomic_coset(args.d, args.n)
    inv = equiv.inverse_exponent(args.d, args.n)
    rec = {"n": args.n, "d": args.d, "leader": c.leader, "size": len(c), "members": list(c.members), "inverse": inv}
    _emit(args, rec, f"leader {c.leader}, size {len(c)}: {list(c.members)}" + (f"\ninverse {inv}" if inv else ""))
    return 0


def cmd_inequiv_matrix(args) -> int:
    entries = [e for e in equiv.load_catalog(args.catalog) if e.kind in args.kinds and e.instances(args.n)]
    rep = equiv.pairwise_inequivalence_report(entries, args.n)
    pairs = equiv.equivalent_pairs(rep)
    if args.json:
        print(json.dumps(rep, sort_keys=True))
    else:
        print(f"n={args.n}: {len(rep['labels'])} instances, {len(pairs)} equivalent pairs")
        for a, b in pairs:
            print(f"  {a} ~ {b}")
    return 0


COMMANDS = {
    "check": cmd_check,
    "spectrum": cmd_spectrum,
    "x0check": cmd_x0check,
    "table1": cmd_table1,
    "certify": cmd_certify,
    "conjugate": cmd_conjugate,
    "classify": cmd_classify,
    "coset": cmd_coset,
    "inequiv-matrix": cmd_inequiv_matrix,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit 2
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except TranscriptionMissing as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnknownTheorem as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ZeroApnError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
