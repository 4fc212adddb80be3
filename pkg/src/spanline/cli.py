"""Command-line entry point: `spanline <command> ...`.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.
Reports go to stdout (text) or to the --json target; progress goes to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from math import factorial
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import combin, gkm, groebner, loci, presentations, schubert
from .exact_poly import Polynomial, TermOrder, VarUniverse, parse_polynomial

ACCEPTANCE_SUITE = [(2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 2, 2), (3, 3, 2), (3, 3, 3), (4, 2, 2), (4, 3, 2), (4, 3, 3)]
INTEGRALITY_SUITE = [(2, 2, 1), (2, 2, 2), (3, 2, 2), (3, 3, 2)]
CHECKS = ("counting", "orbit-harmonics", "at-freeness", "invariant-quotient", "integrality",
          "hilbert-factorization", "h-integrality", "gkm", "schubert", "collapse")
DEFAULT_CHECKS = ["orbit-harmonics", "at-freeness", "invariant-quotient", "integrality", "gkm", "schubert"]
THM_CHECKS = ["at-freeness", "invariant-quotient", "integrality"]


class UsageError(Exception):
    pass


def log(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


# -- checks ----------------------------------------------------------------

def _check(name, ok, expected, actual, elapsed_ms=0, details: dict | None = None) -> dict:
    out = {"name": name, "pass": bool(ok), "expected": expected, "actual": actual, "elapsed_ms": elapsed_ms}
    if details:
        out["details"] = details
    return out


def _from_report(rep: presentations.Report, expected, actual) -> dict:
    return _check(rep.name, rep.ok, expected, actual, rep.elapsed_ms, rep.details)


def check_counting(n, k, d, seed, alpha):
    start = time.perf_counter()
    r = presentations.rank(n, k, d)
    nw = len(combin.words(n, k, d))
    nc = len(presentations.basis_C(n, k, d))
    npts = len(loci.enumerate_points(loci.LocusSpec(n, k, d, loci.default_alpha(k))))
    na = len(presentations.basis_A_exponents(n, k, d))
    ms = int((time.perf_counter() - start) * 1000)
    ok = nw == nc == r and npts == na == r * factorial(d)
    return [_check("counting", ok, {"rank": r, "points": r * factorial(d)},
                   {"words": nw, "basis_C": nc, "points": npts, "basis_A": na}, ms)]


def check_orbit_harmonics(n, k, d, seed, alpha):
    alphas = [tuple(alpha)] if alpha is not None else [loci.default_alpha(k), loci.random_alpha(k, seed)]
    out = []
    for a in alphas:
        rep = loci.verify_orbit_harmonics(n, k, d, a)
        data = rep.to_json()
        out.append(_check("orbit-harmonics", rep.ok, rep.expected, rep.dimension, rep.elapsed_ms, {
            key: data[key] for key in ("ideal_equal", "standard_monomials_match", "gens_vanish",
                                       "locus_dimension", "alpha")}))
    return out


def check_at_freeness(n, k, d, seed, alpha):
    rep = presentations.verify_At_freeness(n, k, d)
    return [_from_report(rep, rep.details["expected"], rep.details["rank"])]


def check_invariant_quotient(n, k, d, seed, alpha):
    rep = presentations.verify_invariant_quotient(n, k, d)
    return [_from_report(rep, rep.details["expected"], rep.details["invariant_dimension"])]


def check_integrality(n, k, d, seed, alpha):
    rep = presentations.verify_integrality(n, k, d)
    return [_from_report(rep, 0, len(rep.details["non_integral_pairs"]))]


def check_hilbert(n, k, d, seed, alpha):
    rep = presentations.hilbert_factorization(n, k, d)
    return [_from_report(rep, rep.details["product"], rep.details["invariant_series"])]


def check_h_integrality(n, k, d, seed, alpha):
    rep = presentations.verify_h_integrality(n, k, d)
    return [_from_report(rep, d, sum(rep.details["members"]))]


def check_gkm(n, k, d, seed, alpha):
    kill, inj, div = gkm.verify_gkm(n, k, d, seed)
    return [_from_report(kill, 0, len(kill.details["nonzero"])),
            _from_report(inj, "nonzero", inj.details["determinant"]),
            _from_report(div, 0, len(div.details["failures"]))]


def check_schubert(n, k, d, seed, alpha):
    if d != k:
        return [_check("schubert-basis", True, None, None, 0,
                       {"skipped": "representatives are known only for d = k"})]
    rep = schubert.verify_representatives(n, k, seed=seed)
    return [_from_report(rep, "unit", rep.details["determinant_values"][0])]


def check_collapse(n, k, d, seed, alpha):
    if d != k:
        return [_check("collapse", True, None, None, 0, {"skipped": "applies only when d = k"})]
    rep = presentations.verify_collapse(n, k)
    return [_from_report(rep, k, sum(rep.details["members"]))]


CHECK_FUNCS = {
    "counting": check_counting, "orbit-harmonics": check_orbit_harmonics, "at-freeness": check_at_freeness,
    "invariant-quotient": check_invariant_quotient, "integrality": check_integrality,
    "hilbert-factorization": check_hilbert, "h-integrality": check_h_integrality, "gkm": check_gkm,
    "schubert": check_schubert, "collapse": check_collapse,
}


# -- suite -----------------------------------------------------------------

@dataclass
class SuiteConfig:
    instances: list = field(default_factory=list)   # dicts with n, k, d and optional checks
    checks: list = field(default_factory=lambda: list(DEFAULT_CHECKS))
    seed: int = 17
    alpha: list | None = None

    @classmethod
    def default(cls) -> "SuiteConfig":
        insts = []
        for n, k, d in ACCEPTANCE_SUITE:
            checks = [c for c in DEFAULT_CHECKS if c != "integrality" or (n, k, d) in INTEGRALITY_SUITE]
            insts.append({"n": n, "k": k, "d": d, "checks": checks})
        return cls(insts)

    @classmethod
    def from_json(cls, data) -> "SuiteConfig":
        if not isinstance(data, dict):
            raise UsageError("config must be a JSON object")
        unknown = set(data) - {"instances", "checks", "seed", "alpha"}
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls.default() if "instances" not in data else cls([])
        if "instances" in data:
            if not isinstance(data["instances"], list) or not data["instances"]:
                raise UsageError("config 'instances' must be a nonempty list")
            for inst in data["instances"]:
                if not isinstance(inst, dict) or not all(isinstance(inst.get(key), int) for key in "nkd"):
                    raise UsageError(f"bad instance {inst!r}; expected {{\"n\":..,\"k\":..,\"d\":..}}")
                _validate_checks(inst.get("checks", []))
                cfg.instances.append(dict(inst))
        if "checks" in data:
            _validate_checks(data["checks"])
            cfg.checks = list(data["checks"])
            if "instances" not in data:
                for inst in cfg.instances:
                    inst.pop("checks", None)
        if "seed" in data:
            if not isinstance(data["seed"], int):
                raise UsageError("config 'seed' must be an integer")
            cfg.seed = data["seed"]
        if data.get("alpha") is not None:
            cfg.alpha = list(data["alpha"])
        return cfg


def _validate_checks(checks) -> None:
    if not isinstance(checks, list):
        raise UsageError("checks must be a list")
    bad = [c for c in checks if c not in CHECK_FUNCS]
    if bad:
        raise UsageError(f"unknown checks {bad}; known: {sorted(CHECK_FUNCS)}")


def _parse_alpha(values, k: int):
    if values is None:
        return None
    try:
        alpha = tuple(Fraction(str(v)) for v in values)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad alpha {values!r}") from None
    if len(alpha) != k or len(set(alpha)) != k:
        raise UsageError(f"alpha must be {k} distinct rationals")
    return alpha


def run_instance(n: int, k: int, d: int, checks: list, seed: int, alpha) -> dict:
    loci.check_params(n, k, d)
    results = []
    for name in checks:
        log(f"[{n},{k},{d}] {name} ...")
        results.extend(CHECK_FUNCS[name](n, k, d, seed, alpha))
    return {"instance": [n, k, d], "seed": seed, "checks": results}


def _run_instance_args(args):
    return run_instance(*args)


def run_suite(config: SuiteConfig, jobs: int = 1) -> tuple:
    """Run every instance; returns (exit code, reports in config order)."""
    tasks = []
    for inst in config.instances:
        n, k, d = inst["n"], inst["k"], inst["d"]
        try:
            loci.check_params(n, k, d)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        alpha = _parse_alpha(config.alpha, k)
        tasks.append((n, k, d, inst.get("checks", config.checks), config.seed, alpha))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_instance_args, tasks))
    else:
        reports = [_run_instance_args(t) for t in tasks]
    ok = all(c["pass"] for r in reports for c in r["checks"])
    return (0 if ok else 1), reports


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {key: (0 if key == "elapsed_ms" else _strip_timings(v)) for key, v in obj.items()}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


def emit(data, args, text: str | None = None) -> None:
    if getattr(args, "no_timings", False):
        data = _strip_timings(data)
    target = getattr(args, "json", None)
    if target is None:
        print(text if text is not None else json.dumps(data, indent=2))
        return
    payload = json.dumps(data, indent=2) + "\n"
    if target == "-":
        sys.stdout.write(payload)
    else:
        Path(target).write_text(payload)
        if text is not None:
            print(text)


def _report_text(reports: list) -> str:
    lines = []
    for r in reports:
        n, k, d = r["instance"]
        for c in r["checks"]:
            status = "SKIP" if c.get("details", {}).get("skipped") else ("PASS" if c["pass"] else "FAIL")
            lines.append(f"({n},{k},{d}) {c['name']:<22} {status}  expected={c['expected']} actual={c['actual']}")
    return "\n".join(lines)


# -- argument parsing -------------------------------------------------------

def _instance_args(p, need_d=True):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    if need_d:
        p.add_argument("--d", type=int, required=True)


def _output_args(p):
    p.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH",
                   help="write JSON to PATH (or stdout when PATH is omitted)")
    p.add_argument("--no-timings", action="store_true", help="zero all elapsed_ms fields")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spanline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="k!/(k-d)! * Stir(n,d)")
    _instance_args(p)
    _output_args(p)

    p = sub.add_parser("words", help="words [n] -> [k] with image size d")
    _instance_args(p)
    p.add_argument("--count", action="store_true")
    _output_args(p)

    p = sub.add_parser("staircases", help="(n,d)-staircases or substaircase sequences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sub", action="store_true", help="list substaircase sequences instead")
    _output_args(p)

    p = sub.add_parser("basis", help="basis A or C")
    p.add_argument("family", choices=["A", "C"])
    _instance_args(p)
    _output_args(p)

    p = sub.add_parser("ideal", help="generators of a named ideal")
    p.add_argument("name", choices=["I", "Jq", "Jqt", "Ink"])
    _instance_args(p, need_d=False)
    p.add_argument("--d", type=int)
    _output_args(p)

    p = sub.add_parser("groebner", help="reduced Groebner basis of a named ideal or JSON file")
    p.add_argument("--ideal", required=True, help="I, Jq, Jqt, Ink, or a JSON file of polynomials")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--order", choices=["lex", "grlex"], default="lex")
    _output_args(p)

    p = sub.add_parser("verify", help="run verification checks on one instance")
    p.add_argument("what", choices=["orbit-harmonics", "thm-1-2", "gkm", "schubert", "all"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--alpha", help="comma-separated distinct rationals, e.g. 1,2,3/2")
    p.add_argument("--seed", type=int, default=17)
    _output_args(p)

    p = sub.add_parser("gkm", help="fixed-point restriction tools")
    gsub = p.add_subparsers(dest="gkm_command", required=True)
    q = gsub.add_parser("restrict")
    _instance_args(q)
    q.add_argument("--word", required=True)
    q.add_argument("--elem", required=True, help="index into basis C, or a file holding a polynomial")
    _output_args(q)
    q = gsub.add_parser("verify")
    _instance_args(q)
    q.add_argument("--seed", type=int, default=17)
    _output_args(q)

    p = sub.add_parser("schubert", help="cell representatives when d = k")
    ssub = p.add_subparsers(dest="schubert_command", required=True)
    q = ssub.add_parser("rep")
    _instance_args(q, need_d=False)
    q.add_argument("--word", required=True)
    q.add_argument("--variant", choices=schubert.VARIANTS, default=schubert.DEFAULT_VARIANT)
    _output_args(q)
    q = ssub.add_parser("verify")
    _instance_args(q, need_d=False)
    q.add_argument("--variant", choices=schubert.VARIANTS, default=schubert.DEFAULT_VARIANT)
    q.add_argument("--seed", type=int, default=17)
    _output_args(q)

    p = sub.add_parser("suite", help="run a configured list of instances and checks")
    p.add_argument("--config", help="JSON config; defaults to the acceptance suite")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    _output_args(p)
    return parser


def _load_polynomial(spec: str, universe: VarUniverse) -> Polynomial:
    text = Path(spec).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return parse_polynomial(text, universe)
    poly = Polynomial.from_json(data)
    if poly.universe != universe:
        raise UsageError(f"polynomial universe {poly.universe} does not match {universe}")
    return poly


def _cmd_groebner(args):
    ideal = args.ideal
    if ideal in ("I", "Jq", "Jqt", "Ink"):
        if args.n is None or args.k is None or (ideal != "Ink" and args.d is None):
            raise UsageError(f"ideal {ideal} needs --n, --k" + ("" if ideal == "Ink" else ", --d"))
        gens = list(presentations.named_ideal(ideal, args.n, args.k, args.d).generators)
    else:
        path = Path(ideal)
        if not path.exists():
            raise UsageError(f"no such ideal name or file: {ideal}")
        data = json.loads(path.read_text())
        items = data["generators"] if isinstance(data, dict) else data
        gens = [Polynomial.from_json(g) for g in items]
    gb = groebner.buchberger(gens, TermOrder(args.order))
    out = gb.to_json()
    dim = groebner.quotient_dimension(gb)
    out["quotient_dimension"] = dim if isinstance(dim, int) else str(dim)
    text = "\n".join(g.to_text(gb.order) for g in gb.generators)
    emit(out, args, text)
    return 0


def _verify(args):
    n, k = args.n, args.k
    d = args.d if args.d is not None else (k if args.what == "schubert" else None)
    if d is None:
        raise UsageError("--d is required")
    loci.check_params(n, k, d)
    alpha = _parse_alpha(args.alpha.split(","), k) if args.alpha else None
    table = {"orbit-harmonics": ["orbit-harmonics"], "thm-1-2": THM_CHECKS, "gkm": ["gkm"],
             "schubert": ["schubert"], "all": list(CHECKS)}
    report = run_instance(n, k, d, table[args.what], args.seed, alpha)
    code = 0 if all(c["pass"] for c in report["checks"]) else 1
    emit(report, args, _report_text([report]))
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except UsageError as exc:
        print(f"spanline: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"spanline: error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "rank":
        loci.check_params(args.n, args.k, args.d)
        r = presentations.rank(args.n, args.k, args.d)
        emit({"n": args.n, "k": args.k, "d": args.d, "rank": r}, args, str(r))
        return 0
    if cmd == "words":
        ws = combin.words(args.n, args.k, args.d)
        data = {"count": len(ws)} if args.count else {"words": [list(w.values) for w in ws]}
        emit(data, args, str(len(ws)) if args.count else "\n".join(str(w) for w in ws))
        return 0
    if cmd == "staircases":
        seqs = combin.substaircase_sequences(args.n, args.d) if args.sub else combin.staircases(args.n, args.d)
        emit({"sequences": [list(s) for s in seqs]}, args, "\n".join(",".join(map(str, s)) for s in seqs))
        return 0
    if cmd == "basis":
        loci.check_params(args.n, args.k, args.d)
        fam = (presentations.basis_A if args.family == "A" else presentations.basis_C)(args.n, args.k, args.d)
        data = {"name": fam.name, "size": len(fam), "elements": [e.to_json() for e in fam.elements]}
        if args.family == "C":
            data["labels"] = [{"x": list(a), "partition": list(lam)} for a, lam in fam.labels]
        emit(data, args, "\n".join(str(e) for e in fam.elements))
        return 0
    if cmd == "ideal":
        if args.name != "Ink" and args.d is None:
            raise UsageError(f"ideal {args.name} needs --d")
        ip = presentations.named_ideal(args.name, args.n, args.k, args.d)
        emit(ip.to_json(), args, "\n".join(str(g) for g in ip.generators))
        return 0
    if cmd == "groebner":
        return _cmd_groebner(args)
    if cmd == "verify":
        return _verify(args)
    if cmd == "gkm":
        n, k, d = args.n, args.k, args.d
        loci.check_params(n, k, d)
        if args.gkm_command == "restrict":
            w = combin.Word.parse(args.word)
            if args.elem.isdigit():
                basis = presentations.basis_C(n, k, d)
                idx = int(args.elem)
                if idx >= len(basis):
                    raise UsageError(f"basis index {idx} out of range (size {len(basis)})")
                f = basis.elements[idx]
            else:
                f = _load_polynomial(args.elem, VarUniverse(n, d, 0))
            r = gkm.restrict_at_word(f, w, k)
            emit({"word": list(w.values), "restriction": r.to_json()}, args, str(r))
            return 0
        report = run_instance(n, k, d, ["gkm"], args.seed, None)
        emit(report, args, _report_text([report]))
        return 0 if all(c["pass"] for c in report["checks"]) else 1
    if cmd == "schubert":
        n, k = args.n, args.k
        loci.check_params(n, k, k)
        if args.schubert_command == "rep":
            w = combin.Word.parse(args.word)
            conv, sigma = combin.convexify(w)
            rep = schubert.cell_representative(w, n, k, args.variant)
            data = {"word": list(w.values), "conv": list(conv.values), "sigma": list(sigma),
                    "std": list(combin.standardize_convex(conv, k)), "representative": rep.to_json()}
            emit(data, args, str(rep))
            return 0
        rep = schubert.verify_representatives(n, k, args.variant, args.seed)
        report = {"instance": [n, k, k], "seed": args.seed,
                  "checks": [_from_report(rep, "unit", rep.details["determinant_values"][0])]}
        emit(report, args, _report_text([report]))
        return 0 if rep.ok else 1
    if cmd == "suite":
        if args.config:
            try:
                cfg = SuiteConfig.from_json(json.loads(Path(args.config).read_text()))
            except json.JSONDecodeError as exc:
                raise UsageError(f"config is not valid JSON: {exc}") from None
        else:
            cfg = SuiteConfig.default()
        if args.seed is not None:
            cfg.seed = args.seed
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        code, reports = run_suite(cfg, args.jobs)
        emit({"seed": cfg.seed, "reports": reports}, args, _report_text(reports))
        return code
    raise UsageError(f"unknown command {cmd}")


if __name__ == "__main__":
    sys.exit(main())
