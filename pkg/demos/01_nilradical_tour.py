"""A walk through the nilpotent algebra L4(n).

Run:  python3 demos/01_nilradical_tour.py
"""
from leibniz import (
    build_L4,
    center,
    check_left_leibniz,
    check_right_leibniz,
    derivation_space,
    inner_derivations,
    is_associative,
    is_quasi_filiform,
)
from leibniz.series import format_signatures


def main():
    print("L4(n) has [e1,e1]=e2, [ei,e1]=e(i+1), [e1,e3]=2e2-e4, [e3,e3]=e2, [e1,ej]=-e(j+1)\n")
    print(f"{'n':>2}  {'right':5} {'left':5} {'assoc':5}  {'signatures':32} {'center':14} {'Der':>3} {'Inn':>3}")
    for n in range(4, 9):
        t = build_L4(n)
        print(f"{n:>2}  {str(check_right_leibniz(t).holds):5} {str(check_left_leibniz(t).holds):5} "
              f"{str(is_associative(t)):5}  {format_signatures(t):32} {center(t).describe():14} "
              f"{derivation_space(t).dim:>3} {inner_derivations(t, 'right').dim:>3}")

    t = build_L4(5)
    print("\nL4(5) is quasi-filiform:", is_quasi_filiform(t))
    print("its bracket table:")
    print(t.describe())

    # The only associative member is n = 4; from n = 5 on, [[e3,e1],e1] = e5
    # while [e3,[e1,e1]] = [e3,e2] = 0.
    print("\nA derivation basis of L4(4), as matrices acting on columns:")
    for k, d in enumerate(derivation_space(build_L4(4)).basis, start=1):
        print(f"  d{k}:", [[str(x) for x in d.row(r)] for r in range(d.rows)])


if __name__ == "__main__":
    main()
