"""Write CSV traces, SVG plots and verify reports for the bundled fixtures.

    python3 scripts/run_fixtures.py [--out results]
"""
import argparse
import contextlib
import io
import sys
from pathlib import Path

from hyperkin import cli

ROOT = Path(__file__).resolve().parents[1]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(ROOT / "results"))
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    worst = 0
    for doc in sorted((ROOT / "scenarios").glob("*.json")):
        stem = doc.stem
        codes = [
            cli.main(["simulate", "--spec", str(doc), "--out", str(out / f"{stem}.csv")]),
            cli.main(["plot", "--spec", str(doc), "--out", str(out / f"{stem}.svg"),
                      "--point=0.5,-1", "--point=0,0.5"]),
        ]
        report = io.StringIO()
        with contextlib.redirect_stdout(report):
            codes.append(cli.main(["verify", "--spec", str(doc)]))
        (out / f"{stem}_verify.txt").write_text(report.getvalue())
        print(f"{stem}: exit codes simulate/plot/verify = {codes}")
        worst = max(worst, *codes)
    return worst


if __name__ == "__main__":
    sys.exit(main())
