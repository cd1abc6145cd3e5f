"""Two generators: nil-independence, points where it breaks, and a repeated algebra.

Run:  python3 demos/03_codim2_findings.py
"""
from fractions import Fraction as F

from leibniz import build, fingerprint, pair_nil_independent
from leibniz.algebra import right_op
from leibniz.derivations import restrict_operator
from leibniz.extensions import BasisChange, apply_basis_change, verify_nilradical, verify_transformation
from leibniz.ratmat import Matrix, det, format_rational, is_nilpotent_matrix
from leibniz.replays import codim2_coincidence, codim3_samples
from leibniz.series import is_nilpotent


def outer_pair(t, n):
    return tuple(restrict_operator(right_op(t, a), n) for a in (n + 1, n + 2))


def main():
    print("Outer derivation pairs of g_{6,3}(c) on L4(4):")
    for c in (F(1, 3), F(2), F(-1, 2)):
        t = build("g_6_3", 4, {"c": c})
        v = pair_nil_independent(*outer_pair(t, 4))
        w = "-" if v.witness is None else "(" + ", ".join(format_rational(q) for q in v.witness) + ")"
        print(f"  c={c!s:5} {v.kind.value:36} witness={w}")

    # At c = -1/2 the side condition c != -2 admits the algebra, yet
    # -2/3 R_e5 + R_e6 is nilpotent, so the nilradical grows past L4(4).
    t = build("g_6_3", 4, {"c": F(-1, 2)})
    d1, d2 = outer_pair(t, 4)
    x = d1 * F(-2, 3) + d2
    print("\n  -2/3 R_e5 + R_e6 nilpotent on N:", is_nilpotent_matrix(x))
    # put x = -2/3 e5 + e6 right after e1..e4 and look at the first five
    swap = BasisChange(Matrix([[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
                               [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, F(-2, 3), 1], [0, 0, 0, 0, 1, 0]]))
    u = apply_basis_change(t, swap)
    rep = verify_nilradical(u, 5)
    print("  span(e1..e4, x) is a two-sided ideal:", rep.item(1).passed)
    print("  and it is nilpotent:", rep.item(2).passed, f"({rep.item(2).detail})")
    print("  so this 6-dimensional algebra has a 5-dimensional nilradical:", is_nilpotent(u.restrict(5))[0])

    print("\nThe b=1 member of g_{6,2} and the c=0 member of g_{6,3}:")
    rp = codim2_coincidence("right")
    print("  same fingerprint:", fingerprint(rp.source) == fingerprint(rp.target))
    print("  explicit isomorphism verified:", verify_transformation(rp.source, rp.change, rp.target))
    print("  new basis rows (old coordinates):")
    for r in range(rp.change.matrix.rows):
        print("   ", [str(v) for v in rp.change.matrix.row(r)])

    print("\nThree candidate generators over L4(4): coefficient determinants")
    for s in codim3_samples(5):
        print("  ", [tuple(str(v) for v in row) for row in s.coeffs], "det =", det(Matrix(s.coeffs)))


if __name__ == "__main__":
    main()
