"""Codimension-two ring verdicts across a grid of degree pairs.

For r = 2 the relation ideal has closed-form coefficients, and a single
exact determinant decides the rational Chow ring of the PGL-stack:
distinct degrees with a nonzero determinant give Q[g1]/(g1^2), equal
degrees with a nonzero determinant give Q, and a vanishing determinant
is reported as INCONCLUSIVE (never guessed).  Every verdict printed here
is double-checked internally by row-reducing the full relation ideal.

Run:  python3 demos/codim2_verdicts.py
"""

from itertools import combinations_with_replacement

from cichow.codim2 import chow_codim2, coeffs_closed_form
from cichow.poly import rat_str
from cichow.relgen import make_profile


def main():
    print(f"{'type':<14}{'case':<10}{'det':>16}  ring")
    print("-" * 56)
    for n in (3, 4, 5):
        for degrees in combinations_with_replacement((2, 3, 4), 2):
            p = make_profile(n, degrees)
            v = chow_codim2(p)
            print(
                f"{f'({n}; {degrees})':<14}{v.case:<10}"
                f"{rat_str(v.det.value):>16}  {v.ring_str}"
            )
    print()
    p = make_profile(3, (2, 3))
    c = coeffs_closed_form(p)
    print(f"closed-form coefficients for (3; (2, 3)):")
    for name in ("A10", "A01", "B20", "B11", "B02", "B00", "C20", "C11", "C02", "C00"):
        print(f"  {name} = {rat_str(getattr(c, name))}")


if __name__ == "__main__":
    main()
