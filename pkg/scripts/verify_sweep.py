"""Run the randomized oracle cross-check over many seeds and report totals.

    python scripts/verify_sweep.py --seeds 20 --cases 200
"""
import argparse
import time

from idealpow.verify import verify_ff, verify_nf


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--cases", type=int, default=300)
    ap.add_argument("--mmax", type=int, default=8)
    args = ap.parse_args()

    failures = 0
    for seed in range(args.seeds):
        t0 = time.perf_counter()
        for report in (verify_ff(args.cases, seed, args.mmax), verify_nf(args.cases, seed, args.mmax)):
            print(report.summary(), f"[{time.perf_counter() - t0:.1f}s]")
            bad = report.first_failure
            if bad is not None:
                failures += 1
                print("  first failure:", bad.description, bad.failures)
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
