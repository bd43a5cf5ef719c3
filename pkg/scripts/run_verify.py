#!/usr/bin/env python3
"""Run the verification suite and write its CSV report.

Thin launcher around the CLI's verify subcommand so the suite can be run
straight from a checkout:

    python3 scripts/run_verify.py
    python3 scripts/run_verify.py --suite grushin_kernel,dirac_heat_exactness
"""

import argparse
import sys

from oscwave.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", default="all",
                    help="'all' or comma-separated check names")
    ap.add_argument("--output", default="verify_report.csv")
    args = ap.parse_args()
    return cli_main(["verify", "--suite", args.suite, "--output", args.output])


if __name__ == "__main__":
    sys.exit(main())
