"""Documented basis-change steps, rebuilt as (source, change, target) triples,
and the three-generator operator family used for the codimension-three
impossibility check.

Source and target tables are written out bracket by bracket; the target's
coefficients come from the stated reassignment formulas, so a successful
``verify_transformation`` confirms both the substitution and the formulas.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .algebra import AlgebraTable
from .catalog import build, l4_brackets
from .extensions import BasisChange
from .ratmat import Matrix

F = Fraction


@dataclass(frozen=True)
class Replay:
    name: str
    claim: str
    source: AlgebraTable
    change: BasisChange
    target: AlgebraTable
    params: Mapping


def _table(n: int, dim: int, extra) -> AlgebraTable:
    return AlgebraTable.from_brackets(dim, l4_brackets(n) + list(extra))


# right, one generator, before absorption --------------------------------

def right_case7(a, c, a23, a41, a43, b21, b23, a25) -> AlgebraTable:
    return _table(4, 5, [
        (1, 5, {1: a, 2: a23 - b21 + b23, 3: -a, 4: a41}),
        (3, 5, {1: c, 2: a23, 3: -c, 4: a43}),
        (4, 5, {2: c - a, 4: a - c}),
        (5, 5, {2: a25}),
        (5, 1, {1: -a, 2: b21, 3: a, 4: -a41}),
        (5, 3, {1: -c, 2: b23, 3: c, 4: -a43}),
        (5, 4, {2: a - c, 4: c - a}),
    ])


def right_case7_absorbed(a, c, a23, b21, b23, a25) -> AlgebraTable:
    return right_case7(a, c, a23, 0, 0, b21, b23, a25)


def replay_right_absorption(a=F(2), c=F(1), a23=F(1), a41=F(1), a43=F(1), b21=F(0), b23=F(0), a25=F(0)) -> Replay:
    """e5' = e5 - a43 e1 + a41 e3 removes the e4 terms."""
    source = right_case7(a, c, a23, a41, a43, b21, b23, a25)
    change = BasisChange.substitution(5, {5: {5: 1, 1: -a43, 3: a41}})
    # [e5',e5'] picks up (a41-a43)(a23+b23) + (a41-a43)^2 in front of e2
    new_a25 = a25 + (a41 - a43) * (a23 + b23) + (a41 - a43) ** 2
    target = right_case7_absorbed(a, c, a23 + a41, b21 - a43, b23 + a41 - 2 * a43, new_a25)
    params = dict(a=a, c=c, a23=a23, a41=a41, a43=a43, b21=b21, b23=b23, a25=a25)
    return Replay("right-absorption-case7", "right case (7): absorption e5' = e5 - a43 e1 + a41 e3",
                  source, change, target, params)


# right, one generator, scaling step --------------------------------------

def right_unscaled(a, b) -> AlgebraTable:
    return _table(4, 5, [
        (1, 5, {1: a, 3: b - a}), (2, 5, {2: 2 * b}), (3, 5, {3: b}),
        (4, 5, {2: b - a, 4: a + b}),
        (5, 1, {1: -a, 3: a - b}), (5, 3, {3: -b}), (5, 4, {2: a + b, 4: -(a + b)}),
    ])


def replay_scale_to_unity(a=F(2), b=F(3)) -> Replay:
    """e5' = e5 / a turns the two-parameter table into g_{n+1,1} with parameter b/a."""
    source = right_unscaled(a, b)
    change = BasisChange(Matrix.diag([1, 1, 1, 1, 1 / F(a)]))
    target = build("g_n1_1", 4, {"a": F(b) / a})
    return Replay("right-scale-to-unity", "scaling a to 1 gives g_{n+1,1} with parameter b/a",
                  source, change, target, dict(a=a, b=b))


# right, two generators, absorption of the e2 terms ----------------------

def right_codim2_pre(b21, a23, a53, c2, c5, d2) -> AlgebraTable:
    return _table(5, 7, [
        (1, 6, {1: 1, 2: 3 * b21 - 2 * a23, 3: 1}), (2, 6, {2: 4}), (3, 6, {2: a23, 3: 2, 5: a53}),
        (4, 6, {2: 1, 4: 3}), (5, 6, {5: 4}),
        (1, 7, {1: 1, 2: b21 - a23 / 2}), (2, 7, {2: 2}), (3, 7, {2: a23 / 2, 3: 1, 5: a53}),
        (4, 7, {4: 2}), (5, 7, {5: 3}),
        (6, 1, {1: -1, 2: b21, 3: -1}), (6, 3, {2: a23, 3: -2, 5: -a53}), (6, 4, {2: 3, 4: -3}),
        (6, 5, {5: -4}), (6, 6, {2: 2 * c2 - 2 * a53}), (6, 7, {2: c2, 4: -a53, 5: c5}),
        (7, 1, {1: -1, 2: b21 - a23 / 2}), (7, 3, {2: a23 / 2, 3: -1, 5: -a53}), (7, 4, {2: 2, 4: -2}),
        (7, 5, {5: -3}), (7, 6, {2: d2, 4: a53, 5: -c5}), (7, 7, {2: (d2 + a53) / 2}),
    ])


def right_codim2_post(b21, a23, a53, c5) -> AlgebraTable:
    return _table(5, 7, [
        (1, 6, {1: 1, 2: 3 * b21 - 2 * a23, 3: 1}), (2, 6, {2: 4}), (3, 6, {2: a23, 3: 2, 5: a53}),
        (4, 6, {2: 1, 4: 3}), (5, 6, {5: 4}),
        (1, 7, {1: 1, 2: b21 - a23 / 2}), (2, 7, {2: 2}), (3, 7, {2: a23 / 2, 3: 1, 5: a53}),
        (4, 7, {4: 2}), (5, 7, {5: 3}),
        (6, 1, {1: -1, 2: b21, 3: -1}), (6, 3, {2: a23, 3: -2, 5: -a53}), (6, 4, {2: 3, 4: -3}),
        (6, 5, {5: -4}), (6, 6, {2: -2 * a53}), (6, 7, {4: -a53, 5: c5}),
        (7, 1, {1: -1, 2: b21 - a23 / 2}), (7, 3, {2: a23 / 2, 3: -1, 5: -a53}), (7, 4, {2: 2, 4: -2}),
        (7, 5, {5: -3}), (7, 6, {2: -a53, 4: a53, 5: -c5}),
    ])


def replay_codim2_absorption(b21=F(1), a23=F(2), a53=F(1, 3), c2=F(3), c5=F(-1), d2=F(5)) -> Replay:
    """e6' = e6 - (c2/2) e2, e7' = e7 - ((d2+a53)/4) e2 clears the e2 parts of [e6,e7] and [e7,e7]."""
    source = right_codim2_pre(b21, a23, a53, c2, c5, d2)
    change = BasisChange.substitution(7, {6: {6: 1, 2: -c2 / 2}, 7: {7: 1, 2: -(d2 + a53) / 4}})
    target = right_codim2_post(b21, a23, a53, c5)
    return Replay("right-codim2-absorption", "codimension two at n=5: absorbing the e2 terms of e6, e7",
                  source, change, target, dict(b21=b21, a23=a23, a53=a53, c2=c2, c5=c5, d2=d2))


# left, one generator, before absorption ---------------------------------

def left_case7(a, c, a21, a23, a41, a43, b23, a25) -> AlgebraTable:
    return _table(4, 5, [
        (1, 5, {1: a, 2: a21, 3: -a, 4: a41}),
        (3, 5, {1: c, 2: a23, 3: -c, 4: a43}),
        (4, 5, {2: c - a, 4: a - c}),
        (5, 5, {2: a25}),
        (5, 1, {1: -a, 2: a23 - a21 + b23, 3: a, 4: -a41}),
        (5, 3, {1: -c, 2: b23, 3: c, 4: -a43}),
        (5, 4, {2: a - c, 4: c - a}),
    ])


def replay_left_absorption(a=F(2), c=F(1), a21=F(1, 2), a23=F(1), a41=F(1), a43=F(-1), b23=F(3), a25=F(2)) -> Replay:
    """Left analogue: e5' = e5 - a43 e1 + a41 e3."""
    source = left_case7(a, c, a21, a23, a41, a43, b23, a25)
    change = BasisChange.substitution(5, {5: {5: 1, 1: -a43, 3: a41}})
    new_a25 = a25 + (a41 - a43) * (a23 + b23) + (a41 - a43) ** 2
    target = left_case7(a, c, a21 + 2 * a41 - a43, a23 + a41, 0, 0, b23 + a41 - 2 * a43, new_a25)
    params = dict(a=a, c=c, a21=a21, a23=a23, a41=a41, a43=a43, b23=b23, a25=a25)
    return Replay("left-absorption-case7", "left case (7): absorption e5' = e5 - a43 e1 + a41 e3",
                  source, change, target, params)


def all_replays() -> list[Replay]:
    return [replay_right_absorption(), replay_scale_to_unity(), replay_codim2_absorption(),
            replay_left_absorption()]


# --------------------------------------------------------------------------
# Three candidate outer derivations of L4(4)
# --------------------------------------------------------------------------

def codim3_operator(a, b, c, x, y) -> Matrix:
    """The general right operator R_{e_i}|_N of a would-be third generator."""
    a, b, c, x, y = (F(v) for v in (a, b, c, x, y))
    return Matrix([
        [a, 0, c, 0],
        [((3 * a - 2 * b - 3 * c) * x + (a - 2 * b - 3 * c) * y) / (2 * a), 2 * (b + c), x, 2 * c + b - a],
        [b + c - a, 0, b, 0],
        [0, 0, 0, a + b],
    ])


@dataclass(frozen=True)
class Codim3Sample:
    coeffs: tuple  # three (a, b, c) triples
    xy: tuple      # three (x, y) pairs
    operators: tuple


def codim3_samples(count: int = 10, seed: int = 2024) -> list[Codim3Sample]:
    """Triples satisfying (a_i - b_i) c_j = (a_j - b_j) c_i for all i, j.

    The constraint says (a_i - b_i, c_i) are proportional, so one common
    ratio t gives b_i = a_i - t c_i.
    """
    rng = random.Random(seed)

    def q(nonzero=False):
        while True:
            v = F(rng.randint(-7, 7), rng.randint(1, 4))
            if v or not nonzero:
                return v

    out = []
    while len(out) < count:
        t = q()
        coeffs, xy, ops = [], [], []
        for _ in range(3):
            a, c = q(True), q()
            b = a - t * c
            coeffs.append((a, b, c))
            x, y = q(), q()
            xy.append((x, y))
            ops.append(codim3_operator(a, b, c, x, y))
        out.append(Codim3Sample(tuple(coeffs), tuple(xy), tuple(ops)))
    return out


# --------------------------------------------------------------------------
# Coincidence inside the codimension-two lists
# --------------------------------------------------------------------------

# e1' = 2e1, e2' = 4e2, e3' = e1 + e3, e4' = 2e2 + 2e4, e5' = e5 + e6/2, e6' = e5
COINCIDENCE_MATRIX = Matrix([
    [2, 0, 0, 0, 0, 0],
    [0, 4, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0],
    [0, 2, 0, 2, 0, 0],
    [0, 0, 0, 0, 1, F(1, 2)],
    [0, 0, 0, 0, 1, 0],
])


def codim2_coincidence(side: str = "right") -> Replay:
    """The b=1 member of the (6,2) family is the c=0 member of the (6,3) family."""
    prefix = "g" if side == "right" else "l"
    source = build(f"{prefix}_6_2", 4, {"b": 1})
    target = build(f"{prefix}_6_3", 4, {"c": 0})
    return Replay(f"{side}-codim2-coincidence", f"{prefix}_6_2(b=1) is isomorphic to {prefix}_6_3(c=0)",
                  source, BasisChange(COINCIDENCE_MATRIX), target, dict(b=1, c=0))
