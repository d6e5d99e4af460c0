"""Command-line front end.

Subcommands:
  sigma     signature of one torus knot (oracle / closed / seifert routes)
  classify  full obstruction certificate for one knot
  tables    verdict tables for the built-in knot families
  scan      classify every coprime pair in a parameter box

Exit codes: 0 success, 2 invalid input, 3 internal consistency failure,
4 precision exhaustion.  TORUSTWIST_PRECISION_BITS overrides the default
certified-arithmetic precision cap.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .core import TorusKnotParams, normalize
from .errors import (DomainError, InternalCheckError, InvalidKnotError,
                     SequenceSemanticError, SequenceSyntaxError,
                     UndecidedSignError)
from .fourmanifold import ledger_from_sequence, parse_sequence
from .lattice import sigma_closed, sigma_oracle
from .obstruction import (NOT_IN_T, certificate_to_dict, certificate_to_json,
                          certificate_to_text, classify)
from .tristram import tristram_sigma

SCAN_SCHEMA = "torustwist-scan/1"
SCAN_COLUMNS = ("p", "q", "exceptional", "verdict", "survivors", "sigma",
                "sigma_d_used")


def _precision_cap(args):
    if getattr(args, "precision_bits", None):
        return args.precision_bits
    env = os.environ.get("TORUSTWIST_PRECISION_BITS")
    return int(env) if env else None


def _sigma_one(k, method, cap):
    nk, mirror = normalize(k)
    sign = -1 if mirror else 1
    if nk.is_trivial:
        return 0
    if method == "oracle":
        return sign * sigma_oracle(nk)
    if method == "closed":
        return sign * sigma_closed(nk)
    return tristram_sigma(nk, 2, method="hermitian", precision_cap=cap) * sign


def cmd_sigma(args) -> int:
    k = TorusKnotParams(args.p, args.q)
    cap = _precision_cap(args)
    if args.all:
        values = {m: _sigma_one(k, m, cap) for m in ("oracle", "closed", "seifert")}
        for m, v in values.items():
            print(f"{m}: {v}")
        if len(set(values.values())) != 1:
            raise InternalCheckError(f"signature methods disagree for {k}: {values}")
    else:
        print(_sigma_one(k, args.method, cap))
    return 0


def cmd_classify(args) -> int:
    k = TorusKnotParams(args.p, args.q)
    cert = classify(k, sigma_method=args.sigma_method,
                    precision_cap=_precision_cap(args))
    if args.format == "json":
        payload = certificate_to_dict(cert)
        if args.sequence:
            payload["sequence_ledger"] = _sequence_report(args.sequence)
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(certificate_to_text(cert))
        if args.sequence:
            rep = _sequence_report(args.sequence)
            print("sequence-ledger:")
            print(f"  file: {args.sequence}")
            print(f"  sigma(M)={rep['sigma_m']} b2+={rep['b2_plus']} "
                  f"b2-={rep['b2_minus']} "
                  f"xi.xi={_poly_str(rep['xi_self_intersection'])}")
    return 0


def _poly_str(c):
    c0, c1, c2 = c
    parts = []
    if c2:
        parts.append(f"{c2:+d}w^2" if abs(c2) != 1 else ("-w^2" if c2 < 0 else "+w^2"))
    if c1:
        parts.append(f"{c1:+d}w")
    parts.append(f"{c0:+d}")
    return "".join(parts)


def _sequence_report(path):
    with open(path, encoding="utf-8") as fh:
        seq = parse_sequence(fh.read())
    ledger = ledger_from_sequence(seq, symbolic_omega=True)
    return {
        "sigma_m": ledger.sigma_m,
        "b2_plus": ledger.b2_plus,
        "b2_minus": ledger.b2_minus,
        "xi_self_intersection": list(ledger.xi_self_intersection),
    }


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def _family_rows(which, n_max):
    rows = []
    if which == "thm1.3":
        for n in range(1, n_max + 1):
            for p in (8 * n + 1, 8 * n + 3):
                rows.append(("p=%d (mod8=%d)" % (p, p % 8), p, p + 4))
    elif which == "thm1.5":
        for n in range(1, n_max + 1):
            r = 4
            while True:  # case p = 2nr+1, r even >= 4, 2p >= (r/2+1)^2 - r/2
                p = 2 * n * r + 1
                if 2 * p < (r // 2 + 1) ** 2 - r // 2:
                    break
                rows.append((f"r={r} n={n} p=2nr+1", p, p + r))
                r += 2
            r = 8
            while True:  # case p = 2nr-1, r even >= 8, 2p >= (r/2-1)^2 - r/2
                p = 2 * n * r - 1
                if 2 * p < (r // 2 - 1) ** 2 - r // 2:
                    break
                rows.append((f"r={r} n={n} p=2nr-1", p, p + r))
                r += 2
    elif which == "example1.6":
        for n in range(1, n_max + 1):
            for r in range(4, 15, 2):
                rows.append((f"r={r} n={n} p=2nr+1", 2 * n * r + 1, 2 * n * r + 1 + r))
            for r in range(8, 21, 2):
                rows.append((f"r={r} n={n} p=2nr-1", 2 * n * r - 1, 2 * n * r - 1 + r))
    else:
        raise ValueError(f"unknown table {which!r}")
    return rows


def cmd_tables(args) -> int:
    rows = []
    for label, p, q in _family_rows(args.which, args.n_max):
        cert = classify(TorusKnotParams(p, q), sigma_method=args.sigma_method)
        rows.append({"family": label, "p": p, "q": q, "verdict": cert.verdict})
    if args.format == "json":
        print(json.dumps({"schema": "torustwist-tables/1", "table": args.which,
                          "rows": rows}, indent=2))
    elif args.format == "csv":
        print("family,p,q,verdict")
        for r in rows:
            print(f"{r['family']},{r['p']},{r['q']},{r['verdict']}")
    else:
        wide = max(len(r["family"]) for r in rows)
        print(f"| {'family':<{wide}} | p   | q   | verdict |")
        print(f"|{'-' * (wide + 2)}|-----|-----|---------|")
        for r in rows:
            print(f"| {r['family']:<{wide}} | {r['p']:<3} | {r['q']:<3} "
                  f"| {r['verdict']} |")
    bad = [r for r in rows if r["verdict"] != NOT_IN_T]
    if bad:
        raise InternalCheckError(
            f"family rows escaped the obstruction: {bad}")
    return 0


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


def _scan_pairs(p_range, q_range):
    from math import gcd

    for p in range(p_range[0], p_range[1] + 1):
        for q in range(q_range[0], q_range[1] + 1):
            if p < q and gcd(p, q) == 1:
                yield (p, q)


def _scan_row(task):
    (p, q), sigma_method, prime_cap = task
    k = TorusKnotParams(p, q)
    cert = classify(k, sigma_method=sigma_method, prime_cap=prime_cap)
    nk, _ = normalize(k)
    sigma = 0 if nk.is_trivial else sigma_closed(nk)
    return {
        "p": p,
        "q": q,
        "exceptional": cert.trivial or cert.exceptional,
        "verdict": cert.verdict,
        "survivors": [[s.n, s.omega] for s in cert.survivors],
        "sigma": sigma,
        "sigma_d_used": {str(d): v for d, v in sorted(cert.sigma_inputs.items())},
    }


def scan_rows(p_range, q_range, sigma_method="auto", jobs=1, prime_cap=None):
    """Classify every coprime pair in the box; rows sorted by (p, q), and
    identical for every parallelism degree."""
    pairs = sorted(_scan_pairs(p_range, q_range))
    tasks = [((p, q), sigma_method, prime_cap) for p, q in pairs]
    if jobs <= 1:
        return [_scan_row(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_scan_row, tasks, chunksize=8))


def render_scan_json(rows, config) -> str:
    return json.dumps({"schema": SCAN_SCHEMA, "config": config, "rows": rows},
                      indent=2) + "\n"


def render_scan_csv(rows) -> str:
    out = [f"# {SCAN_SCHEMA}", ",".join(SCAN_COLUMNS)]
    for r in rows:
        survivors = ";".join(f"{n}:{w}" for n, w in r["survivors"])
        sigmas = ";".join(f"{d}:{v}" for d, v in r["sigma_d_used"].items())
        out.append(",".join([str(r["p"]), str(r["q"]),
                             str(r["exceptional"]).lower(), r["verdict"],
                             survivors, str(r["sigma"]), sigmas]))
    return "\n".join(out) + "\n"


def parse_scan_csv(text: str):
    lines = text.strip("\n").split("\n")
    if lines[0] != f"# {SCAN_SCHEMA}" or lines[1] != ",".join(SCAN_COLUMNS):
        raise ValueError("not a scan csv")
    rows = []
    for line in lines[2:]:
        p, q, exc, verdict, survivors, sigma, sigmas = line.split(",")
        rows.append({
            "p": int(p), "q": int(q), "exceptional": exc == "true",
            "verdict": verdict,
            "survivors": [[int(a), int(b)] for a, b in
                          (s.split(":") for s in survivors.split(";") if s)],
            "sigma": int(sigma),
            "sigma_d_used": {a: int(b) for a, b in
                             (s.split(":") for s in sigmas.split(";") if s)},
        })
    return rows


def render_scan_markdown(rows) -> str:
    out = ["| p | q | exceptional | verdict | survivors | sigma |",
           "|---|---|-------------|---------|-----------|-------|"]
    for r in rows:
        survivors = ";".join(f"{n}:{w}" for n, w in r["survivors"]) or "-"
        out.append(f"| {r['p']} | {r['q']} | {str(r['exceptional']).lower()} "
                   f"| {r['verdict']} | {survivors} | {r['sigma']} |")
    return "\n".join(out) + "\n"


def cmd_scan(args) -> int:
    config = {"p_range": [args.p_min, args.p_max],
              "q_range": [args.q_min, args.q_max],
              "sigma_method": args.sigma_method,
              "prime_cap": args.prime_cap}
    out = sys.stdout
    try:
        rows = scan_rows((args.p_min, args.p_max), (args.q_min, args.q_max),
                         sigma_method=args.sigma_method, jobs=args.jobs,
                         prime_cap=args.prime_cap)
    except KeyboardInterrupt:
        out.write("# scan truncated by interrupt\n")
        out.flush()
        return 130
    if args.format == "json":
        out.write(render_scan_json(rows, config))
    elif args.format == "csv":
        out.write(render_scan_csv(rows))
    else:
        out.write(render_scan_markdown(rows))
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="torustwist",
        description="Signature invariants of torus knots and certified "
                    "obstructions to untying them by a single twist.")
    sub = ap.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("sigma", help="signature of T(p,q)")
    ps.add_argument("-p", type=int, required=True)
    ps.add_argument("-q", type=int, required=True)
    ps.add_argument("--method", choices=("oracle", "closed", "seifert"),
                    default="closed")
    ps.add_argument("--all", action="store_true",
                    help="print all three methods and require agreement")
    ps.add_argument("--precision-bits", type=int, default=None)
    ps.set_defaults(func=cmd_sigma)

    pc = sub.add_parser("classify", help="obstruction certificate for T(p,q)")
    pc.add_argument("-p", type=int, required=True)
    pc.add_argument("-q", type=int, required=True)
    pc.add_argument("--sequence", help="twist-sequence file to append")
    pc.add_argument("--sigma-method", choices=("auto", "counting", "hermitian"),
                    default="auto")
    pc.add_argument("--format", choices=("text", "json"), default="text")
    pc.add_argument("--precision-bits", type=int, default=None)
    pc.set_defaults(func=cmd_classify)

    pt = sub.add_parser("tables", help="family verdict tables")
    pt.add_argument("--which", choices=("thm1.3", "thm1.5", "example1.6"),
                    required=True)
    pt.add_argument("--n-max", type=int, default=2)
    pt.add_argument("--sigma-method", choices=("auto", "counting", "hermitian"),
                    default="auto")
    pt.add_argument("--format", choices=("markdown", "csv", "json"),
                    default="markdown")
    pt.set_defaults(func=cmd_tables)

    pn = sub.add_parser("scan", help="classify all coprime pairs in a box")
    pn.add_argument("--p-min", type=int, required=True)
    pn.add_argument("--p-max", type=int, required=True)
    pn.add_argument("--q-min", type=int, required=True)
    pn.add_argument("--q-max", type=int, required=True)
    pn.add_argument("--jobs", type=int, default=1)
    pn.add_argument("--prime-cap", type=int, default=None)
    pn.add_argument("--sigma-method", choices=("auto", "counting", "hermitian"),
                    default="auto")
    pn.add_argument("--format", choices=("json", "csv", "markdown"),
                    default="json")
    pn.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidKnotError, DomainError, SequenceSyntaxError,
            SequenceSemanticError, FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InternalCheckError as e:
        print(f"internal consistency failure: {e}", file=sys.stderr)
        return 3
    except UndecidedSignError as e:
        print(f"precision exhausted: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
