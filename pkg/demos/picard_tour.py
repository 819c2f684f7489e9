"""Tour of the integral Picard-group computations.

For a range of complete-intersection types this prints the discriminant
multidegree F (computed by the admissible-tuple sum and cross-checked
against the closed form when the exponents are distinct), the Picard
group of the SL-stack Z^ell / <F>, and the PGL-stack version through the
linearizable sublattice.  For type (d,...,d) the PGL order matches the
closed arithmetic formula n_ddd.

Run:  python3 demos/picard_tour.py
"""

from cichow.picard import (
    block_f,
    f_vector_closed_form,
    f_vector_sum_form,
    n_ddd,
    pic_pgl,
    pic_sl,
)
from cichow.relgen import make_profile


def main():
    profiles = [
        (3, (2, 2)),
        (3, (2, 3)),
        (3, (3, 3)),
        (4, (2, 2)),
        (4, (2, 3)),
        (4, (2, 2, 2)),
        (5, (2, 2, 2)),
        (5, (2, 3, 4)),
    ]
    print(f"{'type':<16}{'F':<18}{'Pic(SL)':<14}Pic(PGL)")
    print("-" * 60)
    for n, degrees in profiles:
        p = make_profile(n, degrees)
        F = f_vector_sum_form(p)
        if len(set(p.e)) == p.r:
            assert F == f_vector_closed_form(p)
        print(
            f"{f'({n}; {degrees})':<16}{str(block_f(p)):<18}"
            f"{str(pic_sl(p)):<14}{pic_pgl(p)}"
        )
    print()
    print("uniform types (d,...,d): the PGL order formula")
    for n, r, d in [(3, 2, 2), (4, 2, 2), (4, 3, 2), (5, 3, 2), (6, 2, 3)]:
        g = pic_pgl(make_profile(n, (d,) * r))
        print(f"  n={n}, r={r}, d={d}: Pic = {g}, n_ddd = {n_ddd(n, r, d)}")


if __name__ == "__main__":
    main()
