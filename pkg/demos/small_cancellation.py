"""Sweep of the power-relator family (a^n b^n)^k under C'(1/4) and T(4).

Pieces are common prefixes of distinct symmetrized relators.  Raising k
dilutes the longest piece relative to relator length, so the metric
condition flips from fail to pass between k = 4 and k = 5.

Run with: python3 demos/small_cancellation.py
"""

from fractions import Fraction

from cubekit.smallcancel import (
    check_small_cancellation,
    pieces,
    presentation_from_text,
    symmetrize,
)

QUARTER = Fraction(1, 4)


def family(k):
    return f"generators a b\nparam n = 1,2,3\nrelator (a^n b^n)^{k}\n"


FREE_PRODUCT = (
    "factor P cyclic 5 a\n"
    "factor Q cyclic 5 b\n"
    "factor R cyclic 5 c\n"
    "factor S cyclic 5 d\n"
    "param n = 1,2\n"
    "relator [(a b)^n, (c d)^n]^5\n"
)


def main():
    print("relators (a^n b^n)^k for n in {1, 2, 3}\n")
    print(f"{'k':>3s} {'members':>8s} {'max piece':>10s} {'Cprime(1/4)':>12s} {'T(4)':>6s}")
    for k in (3, 4, 5, 6):
        p = presentation_from_text(family(k))
        rep = pieces(symmetrize(p))
        v = check_small_cancellation(p, QUARTER)
        print(f"{k:3d} {v.member_count:8d} {rep.max_length:10d} "
              f"{'pass' if v.cprime.passed else 'fail':>12s} "
              f"{'pass' if v.t.passed else 'fail':>6s}")

    v4 = check_small_cancellation(presentation_from_text(family(4)), QUARTER)
    w = v4.cprime.witness
    print(f"\nk = 4 failure witness: piece '{w.word}' of length {w.length}")
    print(f"  inside relator {w.relator}")
    print(f"  ratio {w.ratio} is not strictly below 1/4")

    print("\nfree product of four cyclic groups of order 5,")
    print("relators [(ab)^n, (cd)^n]^5 for n in {1, 2}:")
    p = presentation_from_text(FREE_PRODUCT)
    v = check_small_cancellation(p, QUARTER)
    print(f"  symmetrized members: {v.member_count}")
    print(f"  Cprime(1/4): {'pass' if v.cprime.passed else 'fail'}, "
          f"T(4): {'pass' if v.t.passed else 'fail'}")
    for note in v.notes:
        print(f"  note: {note}")


if __name__ == "__main__":
    main()
