"""Seeded random cross-validation of the power recursions against the oracles."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .curve import Curve, random_curve
from .errors import NoPointFound
from .ff_ideal import (
    FfIdeal,
    PowerTrace,
    ideal_pow,
    random_coprime_ideal,
    s3_closed_form,
    s_sequence,
    step_bezout,
)
from .nf_ideal import NfIdeal, nf_ideal_pow, nf_random_ideal, nf_s_sequence, random_discriminant
from .polyring import Poly

FF_PRIMES = (2, 3, 5, 7, 13)
FF_GENERA = (1, 2, 3)
NF_FIXED_DELTAS = (-4, -7, -8, -15, -20, -23, -47, -71)
NF_RANDOM_DELTAS = 20


@dataclass
class CaseResult:
    index: int
    description: str
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class Report:
    kind: str
    seed: int
    results: list[CaseResult]

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.results)

    @property
    def first_failure(self) -> CaseResult | None:
        return next((r for r in self.results if not r.ok), None)

    def summary(self) -> str:
        return f"{self.kind}: {self.passed}/{len(self.results)} ok (seed={self.seed})"


# --- function fields -----------------------------------------------------------

@dataclass(frozen=True)
class FfCase:
    index: int
    curve: Curve
    ideal: FfIdeal
    m: int

    def describe(self) -> str:
        a = self.ideal
        return f"case {self.index}: curve {self.curve}; Q={a.Q} P={a.P}; m={self.m}"


def random_ff_instance(p: int, genus: int, seed) -> tuple[Curve, FfIdeal]:
    """Smooth random curve plus a coprime primitive ideal; redraws the curve until one exists."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        curve = random_curve(p, genus, rng)
        try:
            return curve, random_coprime_ideal(curve, rng)
        except NoPointFound:
            continue


def ff_cases(n: int, seed: int, mmax: int = 8, primes=FF_PRIMES, genera=FF_GENERA):
    """Yield n cases cycling through every (p, g) pair and every m in 1..mmax."""
    rng = random.Random(seed)
    combos = list(itertools.product(primes, genera))
    for i in range(n):
        p, g = combos[i % len(combos)]
        m = 1 + i % mmax
        curve, ideal = random_ff_instance(p, g, rng)
        yield FfCase(i, curve, ideal, m)


def ff_trace_failures(curve: Curve, Q: Poly, P: Poly, trace: PowerTrace) -> list[str]:
    """Identity checks every power trace must satisfy."""
    out = []
    h = curve.h
    if trace.u1 * Q + trace.v1 * (P.scale(2) - h) != 1:
        out.append("bezout-pair")
    if trace.R * Q != curve.f + P * h - P * P:
        out.append("R-quotient")
    if trace.S(1) != 0:
        out.append("S1-zero")
    if len(trace.steps) >= 2 and trace.S(2) != 1:
        out.append("S2-one")
    if len(trace.steps) >= 3:
        closed = s3_closed_form(curve, P, Q, trace)
        if (trace.S(3) - closed) % Q ** 3 != 0:
            out.append("S3-closed-form")
    for n in range(1, len(trace.steps) + 1):
        bt = step_bezout(curve, Q, P, trace, n)
        Sn = trace.S(n)
        lhs = bt.U * Q + bt.V * Q ** n + bt.W * (P.scale(2) - h + trace.v1 * Q * trace.R * Sn)
        if lhs != 1:
            out.append(f"bezout-step-{n}")
            break
    if trace.reduced:
        for n, Sn in enumerate(trace.steps, start=1):
            if not Sn.degree < n * Q.degree:
                out.append(f"size-bound-{n}")
                break
    return out


def check_ff_case(case: FfCase) -> CaseResult:
    res = CaseResult(case.index, case.describe())
    a, m = case.ideal, case.m
    rec = ideal_pow(a, m, "recursive", reduce=True)
    rec_full = ideal_pow(a, m, "recursive", reduce=False)
    rep = ideal_pow(a, m, "repeated")
    hnf = ideal_pow(a, m, "hnf")
    if rec != hnf:
        res.failures.append(f"recursive {rec} != hnf {hnf}")
    if rep != hnf:
        res.failures.append(f"repeated {rep} != hnf {hnf}")
    if rec != rec_full:
        res.failures.append(f"reduced {rec} != unreduced {rec_full}")
    mt = max(m, 3)
    for reduce in (True, False):
        trace = s_sequence(case.curve, a.Q, a.P, mt, reduce)
        res.failures += [f"{name} (reduce={reduce})" for name in ff_trace_failures(case.curve, a.Q, a.P, trace)]
    return res


def verify_ff(n: int, seed: int, mmax: int = 8, primes=FF_PRIMES, genera=FF_GENERA) -> Report:
    results = [check_ff_case(c) for c in ff_cases(n, seed, mmax, primes, genera)]
    return Report("ff", seed, results)


# --- number fields -----------------------------------------------------------

@dataclass(frozen=True)
class NfCase:
    index: int
    ideal: NfIdeal
    m: int

    def describe(self) -> str:
        a = self.ideal
        return f"case {self.index}: delta={a.delta}; Q={a.Q} P={a.P}; m={self.m}"


def nf_deltas(seed: int) -> list[int]:
    rng = random.Random(seed)
    return list(NF_FIXED_DELTAS) + [random_discriminant(rng) for _ in range(NF_RANDOM_DELTAS)]


def nf_cases(n: int, seed: int, mmax: int = 8, deltas=None):
    rng = random.Random(seed)
    deltas = list(deltas) if deltas else nf_deltas(seed)
    for i in range(n):
        delta = deltas[i % len(deltas)]
        yield NfCase(i, nf_random_ideal(delta, rng), 1 + i % mmax)


def nf_trace_failures(a: NfIdeal, trace) -> list[str]:
    out = []
    if trace.u1 * a.Q + trace.v1 * a.P != 1:
        out.append("bezout-pair")
    if 4 * a.Q * trace.c != a.P ** 2 - a.delta:
        out.append("c-quotient")
    if trace.S(1) != 0:
        out.append("S1-zero")
    if len(trace.steps) >= 2 and trace.S(2) % a.Q ** 2 != (trace.c * trace.v1) % a.Q ** 2:
        out.append("S2-cv1")
    if trace.reduced:
        for n, Sn in enumerate(trace.steps, start=1):
            if not 0 <= Sn < a.Q ** n:
                out.append(f"size-bound-{n}")
                break
    return out


def check_nf_case(case: NfCase) -> CaseResult:
    res = CaseResult(case.index, case.describe())
    a, m = case.ideal, case.m
    rec = nf_ideal_pow(a, m, "recursive", reduce=True)
    rec_full = nf_ideal_pow(a, m, "recursive", reduce=False)
    hnf = nf_ideal_pow(a, m, "hnf")
    if rec != hnf:
        res.failures.append(f"recursive {rec} != hnf {hnf}")
    if rec != rec_full:
        res.failures.append(f"reduced {rec} != unreduced {rec_full}")
    for reduce in (True, False):
        trace = nf_s_sequence(a, max(m, 2), reduce)
        res.failures += [f"{name} (reduce={reduce})" for name in nf_trace_failures(a, trace)]
    return res


def verify_nf(n: int, seed: int, mmax: int = 8, deltas=None) -> Report:
    return Report("nf", seed, [check_nf_case(c) for c in nf_cases(n, seed, mmax, deltas)])
