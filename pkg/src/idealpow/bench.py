"""Recursion vs repeated multiplication: wall time and operand sizes."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .ff_ideal import FfIdeal, ideal_mul, ideal_pow, s_sequence
from .nf_ideal import NfIdeal, nf_hnf_mul, nf_ideal_pow, nf_s_sequence

CSV_HEADER = "kind,method,m,size_param,wall_ns,max_operand_size"


class BenchMismatch(Exception):
    def __init__(self, m: int, recursive, repeated):
        self.m = m
        super().__init__(f"m={m}: recursive {recursive} != repeated {repeated}")


@dataclass(frozen=True)
class BenchRow:
    kind: str
    method: str
    m: int
    size_param: int
    wall_ns: int
    max_operand_size: int

    def csv(self) -> str:
        return f"{self.kind},{self.method},{self.m},{self.size_param},{self.wall_ns},{self.max_operand_size}"


def _deg(*polys) -> int:
    return max([0] + [pl.degree for pl in polys if not pl.is_zero()])


def _ff_repeated(a: FfIdeal, m: int):
    acc, size = a, _deg(a.S, a.Q, a.P)
    for _ in range(m - 1):
        acc = ideal_mul(acc, a)
        size = max(size, _deg(acc.S, acc.Q, acc.P))
    return acc, size


def _nf_repeated(a: NfIdeal, m: int):
    acc, size = a, max(a.S.bit_length(), a.Q.bit_length(), abs(a.P).bit_length())
    for _ in range(m - 1):
        acc = nf_hnf_mul(acc, a)
        size = max(size, acc.S.bit_length(), acc.Q.bit_length(), abs(acc.P).bit_length())
    return acc, size


def bench_ff(a: FfIdeal, mmax: int, reduce: bool = True) -> list[BenchRow]:
    """Operand size is the largest degree among stored S_n and the ideals produced."""
    rows = []
    size_param = a.Q.degree
    for m in range(1, mmax + 1):
        t0 = time.perf_counter_ns()
        rec = ideal_pow(a, m, "recursive", reduce=reduce)
        t_rec = time.perf_counter_ns() - t0
        t0 = time.perf_counter_ns()
        rep, rep_size = _ff_repeated(a, m)
        t_rep = time.perf_counter_ns() - t0
        if rec != rep:
            raise BenchMismatch(m, rec, rep)
        trace = s_sequence(a.curve, a.Q, a.P, m, reduce)
        rec_size = max(_deg(*trace.steps), _deg(rec.Q, rec.P))
        rows.append(BenchRow("ff", "recursive", m, size_param, t_rec, rec_size))
        rows.append(BenchRow("ff", "repeated", m, size_param, t_rep, rep_size))
    return rows


def bench_nf(a: NfIdeal, mmax: int, reduce: bool = True) -> list[BenchRow]:
    """Operand size is the largest bit length among stored S_n and the ideals produced."""
    rows = []
    size_param = a.Q.bit_length()
    for m in range(1, mmax + 1):
        t0 = time.perf_counter_ns()
        rec = nf_ideal_pow(a, m, "recursive", reduce=reduce)
        t_rec = time.perf_counter_ns() - t0
        t0 = time.perf_counter_ns()
        rep, rep_size = _nf_repeated(a, m)
        t_rep = time.perf_counter_ns() - t0
        if rec != rep:
            raise BenchMismatch(m, rec, rep)
        trace = nf_s_sequence(a, m, reduce)
        rec_size = max([abs(s).bit_length() for s in trace.steps] + [rec.Q.bit_length(), abs(rec.P).bit_length()])
        rows.append(BenchRow("nf", "recursive", m, size_param, t_rec, rec_size))
        rows.append(BenchRow("nf", "repeated", m, size_param, t_rep, rep_size))
    return rows
