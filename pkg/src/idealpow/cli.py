"""Command-line front end: power, verify, bench, selftest.

Exit codes: 0 success, 1 verification/benchmark mismatch or failed self-test,
2 invalid input, 3 recursion not applicable (gcd condition fails).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bench import CSV_HEADER, BenchMismatch, bench_ff, bench_nf
from .curve import Curve, random_curve
from .ff_core import check_modulus
from .errors import IdealPowError, NonCoprime, NoPointFound
from .ff_ideal import FfIdeal, ideal_pow, random_coprime_ideal
from .nf_ideal import NfIdeal, check_discriminant, nf_ideal_pow, nf_random_ideal
from .polyring import poly_format, poly_parse
from .selftest import CHECKS, run_selftest
from .verify import FF_GENERA, FF_PRIMES, random_ff_instance, verify_ff, verify_nf

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_NONCOPRIME = 0, 1, 2, 3
MAX_M = 1000


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    ff: bool = False
    nf: bool = False
    p: int | None = None
    f: str | None = None
    h: str = "0"
    g: int | None = None
    delta: int | None = None
    S: str = "1"
    Q: str | None = None
    P: str | None = None
    m: int | None = None
    mmax: int | None = None
    method: str = "recursive"
    cases: int | None = None
    seed: int = 0
    reduce: bool = True
    format: str | None = None

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> RunConfig:
        fields = {k: v for k, v in vars(ns).items() if k in cls.__dataclass_fields__ and v is not None}
        return cls(**fields)


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--ff", action="store_true", help="function field over F_p")
    common.add_argument("--nf", action="store_true", help="imaginary quadratic number field")
    common.add_argument("--p", type=int, help="prime modulus")
    common.add_argument("--f", help="curve polynomial f, e.g. 'x^3+1'")
    common.add_argument("--h", help="curve polynomial h (default 0)")
    common.add_argument("--g", type=int, help="genus, for randomly drawn curves")
    common.add_argument("--delta", type=int, help="discriminant")
    common.add_argument("--S", help="ideal content S (default 1)")
    common.add_argument("--Q", help="ideal norm part Q")
    common.add_argument("--P", help="ideal root coordinate P")
    common.add_argument("--m", type=int, help="exponent")
    common.add_argument("--mmax", type=int, help="largest exponent")
    common.add_argument("--method", choices=["recursive", "repeated", "hnf"])
    common.add_argument("--cases", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--reduce", type=_bool, metavar="true|false")
    common.add_argument("--format", choices=["json", "csv"])

    parser = argparse.ArgumentParser(prog="idealpow", description=__doc__, allow_abbrev=False)
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("power", parents=[common], allow_abbrev=False, help="compute a^m")
    sub.add_parser("verify", parents=[common], allow_abbrev=False, help="randomized oracle cross-check")
    sub.add_parser("bench", parents=[common], allow_abbrev=False, help="recursion vs repeated multiplication")
    sub.add_parser("selftest", parents=[common], allow_abbrev=False, help="run embedded worked examples")
    return parser


# --- input helpers -------------------------------------------------------------

def _kind(cfg: RunConfig) -> str:
    if cfg.ff == cfg.nf:
        raise UsageError("exactly one of --ff / --nf is required")
    return "ff" if cfg.ff else "nf"


def _int(text: str | None, name: str) -> int:
    if text is None:
        raise UsageError(f"--{name} is required")
    try:
        return int(text, 10)
    except ValueError:
        raise UsageError(f"--{name}: {text!r} is not a decimal integer") from None


def _exponent(value: int | None, name: str) -> int:
    if value is None:
        raise UsageError(f"--{name} is required")
    if not 1 <= value <= MAX_M:
        raise UsageError(f"--{name} must be in [1, {MAX_M}]")
    return value


def _curve(cfg: RunConfig) -> Curve:
    if cfg.p is None:
        raise UsageError("--p is required for --ff")
    if cfg.f is None:
        if cfg.g is None:
            raise UsageError("--f or --g is required for --ff")
        if cfg.g < 1:
            raise UsageError("--g must be at least 1")
        return random_curve(cfg.p, cfg.g, cfg.seed)
    return Curve(cfg.p, poly_parse(cfg.f, cfg.p), poly_parse(cfg.h, cfg.p))


def _ff_ideal(cfg: RunConfig, curve: Curve) -> FfIdeal:
    if cfg.Q is None or cfg.P is None:
        raise UsageError("--Q and --P are required")
    p = curve.p
    return FfIdeal(curve, poly_parse(cfg.S, p), poly_parse(cfg.Q, p), poly_parse(cfg.P, p))


def _nf_ideal(cfg: RunConfig) -> NfIdeal:
    if cfg.delta is None:
        raise UsageError("--delta is required for --nf")
    return NfIdeal(cfg.delta, _int(cfg.S, "S"), _int(cfg.Q, "Q"), _int(cfg.P, "P"))


def _emit(record: dict, fmt: str, out):
    if fmt == "csv":  # json is the default
        keys = [k for k in record if k != "context"]
        out.write(",".join(keys) + "\n")
        out.write(",".join(str(record[k]) for k in keys) + "\n")
    else:
        out.write(json.dumps(record, separators=(",", ":")) + "\n")


# --- subcommands ---------------------------------------------------------------

def cmd_power(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    kind = _kind(cfg)
    m = _exponent(cfg.m, "m")
    if kind == "ff":
        curve = _curve(cfg)
        a = _ff_ideal(cfg, curve)
        r = ideal_pow(a, m, cfg.method, reduce=cfg.reduce)
        record = {
            "S": poly_format(r.S), "Q": poly_format(r.Q), "P": poly_format(r.P),
            "context": {"p": curve.p, "f": poly_format(curve.f), "h": poly_format(curve.h)},
        }
    else:
        a = _nf_ideal(cfg)
        r = nf_ideal_pow(a, m, cfg.method, reduce=cfg.reduce)
        record = {"S": str(r.S), "Q": str(r.Q), "P": str(r.P), "context": {"delta": str(a.delta)}}
    _emit(record, cfg.format, out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if cfg.cases is None or cfg.cases < 1:
        raise UsageError("--cases must be a positive integer")
    mmax = _exponent(cfg.mmax or 8, "mmax")
    kinds = [k for k, on in (("ff", cfg.ff), ("nf", cfg.nf)) if on] or ["ff", "nf"]
    reports = []
    for kind in kinds:
        if kind == "ff":
            primes = (cfg.p,) if cfg.p is not None else FF_PRIMES
            genera = (cfg.g,) if cfg.g is not None else FF_GENERA
            if cfg.p is not None:
                check_modulus(cfg.p)
            if any(g < 1 for g in genera):
                raise UsageError("--g must be at least 1")
            reports.append(verify_ff(cfg.cases, cfg.seed, mmax, primes, genera))
        else:
            deltas = None
            if cfg.delta is not None:
                deltas = [check_discriminant(cfg.delta)]
            reports.append(verify_nf(cfg.cases, cfg.seed, mmax, deltas))
    ok = all(r.first_failure is None for r in reports)
    if cfg.format == "json":
        payload = [
            {"kind": r.kind, "seed": r.seed, "passed": r.passed, "cases": len(r.results),
             "first_failure": None if r.first_failure is None
             else {"case": r.first_failure.description, "failures": r.first_failure.failures}}
            for r in reports
        ]
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
            bad = r.first_failure
            if bad is not None:
                out.write(f"first failure: {bad.description}\n")
                for msg in bad.failures:
                    out.write(f"  {msg}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bench(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    kind = _kind(cfg)
    mmax = _exponent(cfg.mmax or 32, "mmax")
    if kind == "ff":
        if cfg.Q is not None or cfg.P is not None:
            a = _ff_ideal(cfg, _curve(cfg))
        elif cfg.f is not None:
            a = random_coprime_ideal(_curve(cfg), cfg.seed)
        else:
            _curve(cfg)  # validates --p and --g
            a = random_ff_instance(cfg.p, cfg.g, cfg.seed)[1]
        rows = bench_ff(a, mmax, cfg.reduce)
    else:
        if cfg.Q is not None or cfg.P is not None:
            a = _nf_ideal(cfg)
        else:
            if cfg.delta is None:
                raise UsageError("--delta is required for --nf")
            a = nf_random_ideal(cfg.delta, cfg.seed)
        rows = bench_nf(a, mmax, cfg.reduce)
    print(f"# bench {kind} seed={cfg.seed} ideal={a}", file=sys.stderr)
    out.write(CSV_HEADER + "\n")
    for row in rows:
        out.write(row.csv() + "\n")
    return EXIT_OK


def cmd_selftest(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    passed, name, msg = run_selftest()
    if name is not None:
        print(f"selftest FAILED at {name}: {msg}", file=sys.stderr)
        return EXIT_MISMATCH
    out.write(f"selftest: {passed}/{len(CHECKS)} checks passed\n")
    return EXIT_OK


COMMANDS = {"power": cmd_power, "verify": cmd_verify, "bench": cmd_bench, "selftest": cmd_selftest}


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig.from_namespace(ns)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except NonCoprime as exc:
        print(f"error: {exc}\nhint: the closed-form recursion needs S = 1 and a coprime gcd; "
              f"use --method repeated", file=sys.stderr)
        return EXIT_NONCOPRIME
    except BenchMismatch as exc:
        print(f"error: benchmark aborted, methods disagree: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (UsageError, NoPointFound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except IdealPowError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
