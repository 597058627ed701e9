"""Operand growth of the power recursion with and without reduction mod Q^n.

Writes one CSV table per field kind to stdout, e.g.

    python scripts/operand_growth.py --p 7 --g 2 --delta -1000003 --mmax 12
"""
import argparse
import random

from idealpow.nf_ideal import nf_random_ideal, nf_s_sequence
from idealpow.ff_ideal import s_sequence
from idealpow.verify import random_ff_instance


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=7)
    ap.add_argument("--g", type=int, default=2)
    ap.add_argument("--delta", type=int, default=-1000003)
    ap.add_argument("--mmax", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    curve, a = random_ff_instance(args.p, args.g, args.seed)
    full = s_sequence(curve, a.Q, a.P, args.mmax, reduce=False)
    red = s_sequence(curve, a.Q, a.P, args.mmax, reduce=True)
    print(f"# ff curve {curve}; Q={a.Q} P={a.P}")
    print("kind,n,deg_S_unreduced,deg_S_reduced,n_deg_Q")
    for n in range(1, args.mmax + 1):
        du, dr = full.S(n).degree, red.S(n).degree
        du = -1 if du == float("-inf") else du
        dr = -1 if dr == float("-inf") else dr
        print(f"ff,{n},{du},{dr},{n * a.Q.degree}")

    b = nf_random_ideal(args.delta, random.Random(args.seed))
    full = nf_s_sequence(b, args.mmax, reduce=False)
    red = nf_s_sequence(b, args.mmax, reduce=True)
    print(f"# nf delta={args.delta}; Q={b.Q} P={b.P}")
    print("kind,n,bits_S_unreduced,bits_S_reduced,n_bits_Q")
    for n in range(1, args.mmax + 1):
        print(f"nf,{n},{abs(full.S(n)).bit_length()},{red.S(n).bit_length()},{n * b.Q.bit_length()}")


if __name__ == "__main__":
    main()
