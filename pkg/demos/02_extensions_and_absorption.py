"""Solvable extensions of L4(n) by one generator, and absorption by a basis change.

Run:  python3 demos/02_extensions_and_absorption.py
"""
import random
from fractions import Fraction as F

from leibniz import (
    ExtensionData,
    assemble,
    build,
    check_left_leibniz,
    check_right_conditions,
    check_right_leibniz,
    verify_nilradical,
)
from leibniz.catalog import enumerate_families, format_params, sample_params
from leibniz.extensions import apply_basis_change, perturb, table_diff
from leibniz.replays import replay_right_absorption


def main():
    print("Right codimension-one families at n = 5 (first default sample):")
    for entry in enumerate_families("right", 1):
        n = entry.fixed_n or 5
        p = sample_params(entry, n)[0]
        t = build(entry.cli_id, n, p)
        print(f"  {entry.id:10} {format_params(p):24} right={check_right_leibniz(t).holds!s:5} "
              f"left={check_left_leibniz(t).holds!s:5} nilradical evidence={verify_nilradical(t, n).passed}")

    t = build("g_5_7", 4, {"a": 2, "d": 1, "f": 0, "eps": 0})
    print("\nNilradical evidence for g_{5,7}(a=2, d=1, f=0, eps=0):")
    for item in verify_nilradical(t, 4).items:
        print(f"  ({item.number}) {item.claim}: {item.passed}  {item.detail}")

    # The extension data alone (operators and top brackets) decides the
    # right identity; random single-entry edits almost always break it.
    ext = ExtensionData.from_table(build("g_n1_1", 5, {"a": 2}), 5)
    rng = random.Random(1)
    agree = 0
    for _ in range(20):
        e = perturb(ext, rng)
        agree += check_right_conditions(e).holds == check_right_leibniz(assemble(e)).holds
    print(f"\nCondition system vs full identity check on 20 perturbations: {agree}/20 agree")

    rp = replay_right_absorption(a=F(2), c=F(1), a23=F(1), a41=F(1), a43=F(1))
    print("\nAbsorption e5' = e5 - a43 e1 + a41 e3 on a one-generator table:")
    print("before:")
    print("  " + rp.source.describe().replace("\n", "\n  "))
    after = apply_basis_change(rp.source, rp.change)
    print("after:")
    print("  " + after.describe().replace("\n", "\n  "))
    print("matches the absorbed form:", not table_diff(after, rp.target))


if __name__ == "__main__":
    main()
