"""Run the default verification suite and write the JSON report."""
import argparse
import json
import sys
from pathlib import Path

from spanline.cli import SuiteConfig, _report_text, _strip_timings, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results/suite.json")
    ap.add_argument("--seed", type=int, default=17)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-timings", action="store_true")
    args = ap.parse_args()
    cfg = SuiteConfig.default()
    cfg.seed = args.seed
    code, reports = run_suite(cfg, args.jobs)
    data = {"seed": cfg.seed, "reports": reports}
    if args.no_timings:
        data = _strip_timings(data)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(data, indent=2) + "\n")
    print(_report_text(reports))
    print(f"wrote {out}")
    sys.exit(code)


if __name__ == "__main__":
    main()
