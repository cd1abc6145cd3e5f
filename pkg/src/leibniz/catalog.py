"""Builders for L4(n) and its classified solvable extensions.

Every builder returns the full table: the nilradical brackets of L4(n) are
always added back, followed by the brackets involving e_{n+1} (and
e_{n+2}).  Families are stored once; families valid for both sides are
referenced from both enumerations.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .algebra import AlgebraTable
from .derivations import derivation_space
from .identity import center, check_left_leibniz, check_right_leibniz, squares_ideal
from .ratmat import as_rational, format_rational
from .series import derived_series, lower_central_series

F = Fraction


class InadmissibleParameters(ValueError):
    """Parameters violate a family's side condition; the message quotes it."""


# --------------------------------------------------------------------------
# The nilradical
# --------------------------------------------------------------------------

def l4_brackets(n: int) -> list:
    out = [(1, 1, {2: 1})]
    for i in range(3, n):
        out.append((i, 1, {i + 1: 1}))
    out.append((1, 3, {2: 2, 4: -1}))
    out.append((3, 3, {2: 1}))
    for j in range(4, n):
        out.append((1, j, {j + 1: -1}))
    return out


def build_L4(n: int) -> AlgebraTable:
    """L4(n): [e1,e1]=e2, [ei,e1]=e(i+1) (3<=i<=n-1), [e1,e3]=2e2-e4,
    [e3,e3]=e2, [e1,ej]=-e(j+1) (4<=j<=n-1)."""
    if not isinstance(n, int) or n < 4:
        raise ValueError(f"L4(n) needs n >= 4, got {n!r}")
    return AlgebraTable.from_brackets(n, l4_brackets(n))


# --------------------------------------------------------------------------
# Family data
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Param:
    name: str
    kind: str = "rational"  # rational | flag | tail
    condition: Optional[tuple] = None  # (text, predicate on the value)


@dataclass(frozen=True)
class CatalogEntry:
    id: str            # name as written in the classification, e.g. "g_{n+1,1}"
    cli_id: str        # ASCII id, e.g. "g_n1_1"
    side: str          # right | left | both
    codim: int
    params: tuple      # of Param
    conditions: tuple  # of (text, predicate(params, n) -> bool)
    brackets: Callable  # (n, params) -> list of (i, j, {k: c})
    min_n: int = 4
    fixed_n: Optional[int] = None
    # which identity the family satisfies besides its own side, as a
    # predicate on the parameters
    other_side: Callable = field(default=lambda p: False)

    def dim(self, n: int) -> int:
        return n + self.codim

    def valid_n(self, n: int) -> bool:
        if self.fixed_n is not None:
            return n == self.fixed_n
        return n >= self.min_n

    def n_values(self, wanted: Sequence[int]) -> list[int]:
        if self.fixed_n is not None:
            return [self.fixed_n]
        return [n for n in wanted if n >= self.min_n]

    def sides(self) -> tuple:
        return ("right", "left") if self.side == "both" else (self.side,)

    def expected_identities(self, params: Mapping) -> dict:
        """{'right': bool, 'left': bool} as documented for this family."""
        if self.side == "both":
            return {"right": True, "left": True}
        other = "left" if self.side == "right" else "right"
        return {self.side: True, other: bool(self.other_side(params))}

    def condition_text(self) -> str:
        texts = [p.condition[0] for p in self.params if p.condition] + [c[0] for c in self.conditions]
        return "; ".join(texts) if texts else "none"


def _nonzero(x) -> bool:
    return x != 0


def _sum(i, eps, tail, n, sign=1):
    """e_i + eps e_{i+2} + sum_{k=i+3}^n b_{k-i-2} e_k, scaled by sign."""
    out = {i: sign}
    if i + 2 <= n and eps:
        out[i + 2] = out.get(i + 2, 0) + sign * eps
    for k in range(i + 3, n + 1):
        b = tail[k - i - 3] if k - i - 3 < len(tail) else 0
        if b:
            out[k] = out.get(k, 0) + sign * b
    return out


def _merge(*parts):
    out: dict = {}
    for part in parts:
        for k, c in part.items():
            out[k] = out.get(k, 0) + c
    return out


# right codimension one ---------------------------------------------------

def _g_n1_1(n, p):
    a = p["a"]
    x = n + 1
    out = [(1, x, {1: 1, 3: a - 1}), (2, x, {2: 2 * a}), (3, x, {3: a}),
           (4, x, {2: a - 1, 4: a + 1}),
           (x, 1, {1: -1, 3: -(a - 1)}), (x, 3, {3: -a}), (x, 4, {2: a + 1, 4: -(a + 1)})]
    for i in range(5, n + 1):
        out += [(i, x, {i: a + i - 3}), (x, i, {i: 3 - i - a})]
    return out


def _g_n1_2(n, p):
    x = n + 1
    out = [(1, x, {1: 1, 3: 2 - n}), (2, x, {2: 2 * (3 - n)}), (3, x, {3: 3 - n}),
           (4, x, {2: 2 - n, 4: 4 - n}), (x, x, {n: 1}),
           (x, 1, {1: -1, 3: n - 2}), (x, 3, {3: n - 3}), (x, 4, {2: 4 - n, 4: -(4 - n)})]
    for i in range(5, n + 1):
        out += [(i, x, {i: i - n}), (x, i, {i: n - i})]
    return out


def _g_n1_3(n, p):
    eps, tail = p["eps"], p.get("b", ())
    x = n + 1
    out = [(1, x, {3: 1}), (2, x, {2: 2}), (4, x, {2: 1}), (x, 1, {3: -1}), (x, 4, {2: 1})]
    for i in range(3, n + 1):
        out += [(i, x, _sum(i, eps, tail, n)), (x, i, _sum(i, eps, tail, n, -1))]
    return out


def _g_n1_4(n, p):
    # the right list has [e3,e_{n+1}] = d e2, [e_{n+1},e3] = f e2; the
    # left list swaps the letters d and f, which is a renaming only
    d, f, eps = p["d"], p["f"], p["eps"]
    x = n + 1
    out = [(1, x, {1: 1, 3: -1}), (3, x, {2: d}), (4, x, {2: -1, 4: 1}),
           (x, x, {2: eps}), (x, 1, {1: -1, 2: d + f, 3: 1}), (x, 3, {2: f}),
           (x, 4, {2: 1, 4: -1})]
    for i in range(5, n + 1):
        out += [(i, x, {i: i - 3}), (x, i, {i: 3 - i})]
    return out


def _g_5_5(n, p):
    a, b = p["a"], p["b"]
    return [(1, 5, {1: a, 3: b - a + 1}), (2, 5, {2: 2 * (b + 1)}), (3, 5, {1: 1, 3: b}),
            (4, 5, {2: b - a + 2, 4: a + b}),
            (5, 1, {1: -a, 3: a - b - 1}), (5, 3, {1: -1, 3: -b}), (5, 4, {2: a + b, 4: -(a + b)})]


def _g_5_6(n, p):
    a = p["a"]
    return [(1, 5, {1: a, 3: 1 - 2 * a}), (2, 5, {2: 2 * (1 - a)}), (3, 5, {1: 1, 3: -a}),
            (4, 5, {2: 2 * (1 - a)}), (5, 5, {4: 1}),
            (5, 1, {1: -a, 3: 2 * a - 1}), (5, 3, {1: -1, 3: a})]


def _g_5_7(n, p):
    a, d, f, eps = p["a"], p["d"], p["f"], p["eps"]
    return [(1, 5, {1: a, 3: -a}), (3, 5, {1: 1, 2: f, 3: -1}), (4, 5, {2: 1 - a, 4: a - 1}),
            (5, 5, {2: eps}), (5, 1, {1: -a, 2: d + f, 3: a}), (5, 3, {1: -1, 2: d, 3: 1}),
            (5, 4, {2: a - 1, 4: 1 - a})]


def _g_5_8(n, p):
    c, d, eps = p["c"], p["d"], p["eps"]
    return [(1, 5, {2: c}), (3, 5, {1: 1, 3: -1}), (4, 5, {2: 1, 4: -1}), (5, 5, {2: eps}),
            (5, 1, {2: c + d}), (5, 3, {1: -1, 2: d + 2 * c, 3: 1}), (5, 4, {2: -1, 4: 1})]


# right codimension two ---------------------------------------------------

def _g_n2_1(n, p):
    x, y = n + 1, n + 2
    out = [(1, x, {1: 1, 3: 1}), (2, x, {2: 4}), (3, x, {3: 2}), (4, x, {2: 1, 4: 3}),
           (x, 1, {1: -1, 3: -1}), (x, 3, {3: -2}), (x, 4, {2: 3, 4: -3}),
           (1, y, {1: 1}), (2, y, {2: 2}),
           (y, 1, {1: -1}), (y, 3, {3: -1}), (y, 4, {2: 2, 4: -2})]
    for i in range(5, n + 1):
        out += [(i, x, {i: i - 1}), (x, i, {i: 1 - i}), (y, i, {i: 2 - i})]
    for j in range(3, n + 1):
        out.append((j, y, {j: j - 2}))
    return out


_G62_E5 = [(1, 5, {1: 1}), (2, 5, {2: 2}), (3, 5, {3: 1}), (4, 5, {4: 2}),
           (5, 1, {1: -1}), (5, 3, {3: -1}), (5, 4, {2: 2, 4: -2})]


def _g_6_2(n, p):
    b = p["b"]
    return _G62_E5 + [
        (1, 6, {1: 1, 3: b}), (2, 6, {2: 2 * (b + 1)}), (3, 6, {1: 1, 3: b}),
        (4, 6, {2: b + 1, 4: b + 1}),
        (6, 1, {1: -1, 3: -b}), (6, 3, {1: -1, 3: -b}), (6, 4, {2: b + 1, 4: -(b + 1)})]


def _g_6_3(n, p):
    c = p["c"]
    return [
        (1, 5, {1: 1, 3: c + 1}), (2, 5, {2: 2 * (c + 2)}), (3, 5, {1: c, 3: 2}),
        (4, 5, {2: 2 * c + 1, 4: 3}),
        (5, 1, {1: -1, 3: -(c + 1)}), (5, 3, {1: -c, 3: -2}), (5, 4, {2: 3, 4: -3}),
        (1, 6, {1: 1}), (2, 6, {2: 2}), (3, 6, {3: 1}), (4, 6, {4: 2}),
        (6, 1, {1: -1}), (6, 3, {3: -1}), (6, 4, {2: 2, 4: -2})]


def _g_6_4(n, p):
    b = p["b"]
    return _G62_E5 + [
        (1, 6, {1: b, 3: 1 - b}), (2, 6, {2: 2}), (3, 6, {1: 1}), (4, 6, {2: 2 - b, 4: b}),
        (6, 1, {1: -b, 3: b - 1}), (6, 3, {1: -1}), (6, 4, {2: b, 4: -b})]


# left codimension one ----------------------------------------------------

def _l_n1_1(n, p):
    a = p["a"]
    x = n + 1
    out = [(1, x, {1: 1, 3: a - 1}), (3, x, {3: a}), (4, x, {2: -(a + 1), 4: a + 1}),
           (x, 1, {1: -1, 3: -(a - 1)}), (x, 2, {2: -2 * a}), (x, 3, {3: -a}),
           (x, 4, {2: 1 - a, 4: -(a + 1)})]
    for i in range(5, n + 1):
        out += [(i, x, {i: a + i - 3}), (x, i, {i: 3 - i - a})]
    return out


def _l_n1_2(n, p):
    x = n + 1
    out = [(1, x, {1: 1, 3: 2 - n}), (3, x, {3: 3 - n}), (4, x, {2: n - 4, 4: -(n - 4)}),
           (x, x, {n: 1}), (x, 1, {1: -1, 3: n - 2}), (x, 2, {2: 2 * n - 6}), (x, 3, {3: n - 3}),
           (x, 4, {2: n - 2, 4: n - 4})]
    for i in range(5, n + 1):
        out += [(i, x, {i: i - n}), (x, i, {i: n - i})]
    return out


def _l_n1_3(n, p):
    eps, tail = p["eps"], p.get("b", ())
    x = n + 1
    out = [(1, x, {3: 1}), (4, x, {2: -1}), (x, 1, {3: -1}), (x, 2, {2: -2}), (x, 4, {2: -1})]
    for i in range(3, n + 1):
        out += [(i, x, _sum(i, eps, tail, n)), (x, i, _sum(i, eps, tail, n, -1))]
    return out


def _l_5_5(n, p):
    a, b = p["a"], p["b"]
    return [(1, 5, {1: a, 3: b - a + 1}), (3, 5, {1: 1, 3: b}), (4, 5, {2: -(a + b), 4: a + b}),
            (5, 1, {1: -a, 3: a - b - 1}), (5, 2, {2: -2 * (b + 1)}), (5, 3, {1: -1, 3: -b}),
            (5, 4, {2: a - b - 2, 4: -(a + b)})]


def _l_5_6(n, p):
    a = p["a"]
    return [(1, 5, {1: a, 3: 1 - 2 * a}), (3, 5, {1: 1, 3: -a}), (5, 5, {4: 1}),
            (5, 1, {1: -a, 3: 2 * a - 1}), (5, 2, {2: 2 * (a - 1)}), (5, 3, {1: -1, 3: a}),
            (5, 4, {2: 2 * (a - 1)})]


# left codimension two ----------------------------------------------------

def _l_n2_1(n, p):
    x, y = n + 1, n + 2
    out = [(1, x, {1: 1, 3: 1}), (3, x, {3: 2}), (4, x, {2: -3, 4: 3}),
           (x, 1, {1: -1, 3: -1}), (x, 2, {2: -4}), (x, 3, {3: -2}), (x, 4, {2: -1, 4: -3}),
           (1, y, {1: 1}), (3, y, {3: 1}), (4, y, {2: -2, 4: 2}),
           (y, 1, {1: -1}), (y, 2, {2: -2})]
    for i in range(5, n + 1):
        out += [(i, x, {i: i - 1}), (x, i, {i: 1 - i}), (i, y, {i: i - 2})]
    for j in range(3, n + 1):
        out.append((y, j, {j: 2 - j}))
    return out


_L62_E5 = [(1, 5, {1: 1}), (3, 5, {3: 1}), (4, 5, {2: -2, 4: 2}),
           (5, 1, {1: -1}), (5, 2, {2: -2}), (5, 3, {3: -1}), (5, 4, {4: -2})]


def _l_6_2(n, p):
    b = p["b"]
    return _L62_E5 + [
        (1, 6, {1: 1, 3: b}), (3, 6, {1: 1, 3: b}), (4, 6, {2: -(b + 1), 4: b + 1}),
        (6, 1, {1: -1, 3: -b}), (6, 2, {2: -2 * (b + 1)}), (6, 3, {1: -1, 3: -b}),
        (6, 4, {2: -(b + 1), 4: -(b + 1)})]


def _l_6_3(n, p):
    c = p["c"]
    return [
        (1, 5, {1: 1, 3: c + 1}), (3, 5, {1: c, 3: 2}), (4, 5, {2: -3, 4: 3}),
        (5, 1, {1: -1, 3: -(c + 1)}), (5, 2, {2: -2 * (c + 2)}), (5, 3, {1: -c, 3: -2}),
        (5, 4, {2: -2 * c - 1, 4: -3}),
        (1, 6, {1: 1}), (3, 6, {3: 1}), (4, 6, {2: -2, 4: 2}),
        (6, 1, {1: -1}), (6, 2, {2: -2}), (6, 3, {3: -1}), (6, 4, {4: -2})]


def _l_6_4(n, p):
    b = p["b"]
    return _L62_E5 + [
        (1, 6, {1: b, 3: 1 - b}), (3, 6, {1: 1}), (4, 6, {2: -b, 4: b}),
        (6, 1, {1: -b, 3: b - 1}), (6, 2, {2: -2}), (6, 3, {1: -1}), (6, 4, {2: b - 2, 4: -b})]


# registry ----------------------------------------------------------------

_EPS = Param("eps", "flag")
_DF_COND = ("if eps=0, then d^2+f^2 != 0", lambda p, n: p["eps"] != 0 or p["d"] ** 2 + p["f"] ** 2 != 0)
_EPS_N4 = ("if n=4, then eps=0", lambda p, n: n != 4 or p["eps"] == 0)
_A_NE_1 = ("a != 1", lambda x: x != 1)

_ENTRIES = [
    CatalogEntry("g_{n+1,1}", "g_n1_1", "right", 1, (Param("a"),), (), _g_n1_1,
                 other_side=lambda p: p["a"] == 0),
    CatalogEntry("g_{n+1,2}", "g_n1_2", "right", 1, (), (), _g_n1_2),
    CatalogEntry("g_{n+1,3}", "g_n1_3", "right", 1, (_EPS, Param("b", "tail")), (_EPS_N4,), _g_n1_3),
    CatalogEntry("g_{n+1,4}", "g_n1_4", "both", 1, (Param("d"), Param("f"), _EPS), (_DF_COND,), _g_n1_4),
    CatalogEntry("g_{5,5}", "g_5_5", "right", 1, (Param("a"), Param("b")),
                 (("if b=-1, then a != 1", lambda p, n: p["b"] != -1 or p["a"] != 1),), _g_5_5,
                 fixed_n=4, other_side=lambda p: p["b"] == -1),
    CatalogEntry("g_{5,6}", "g_5_6", "right", 1, (Param("a", condition=_A_NE_1),), (), _g_5_6, fixed_n=4),
    CatalogEntry("g_{5,7}", "g_5_7", "both", 1,
                 (Param("a", condition=_A_NE_1), Param("d"), Param("f"), _EPS), (_DF_COND,), _g_5_7, fixed_n=4),
    CatalogEntry("g_{5,8}", "g_5_8", "both", 1,
                 (Param("c", condition=("c != 0", _nonzero)), Param("d"), _EPS), (), _g_5_8, fixed_n=4),
    CatalogEntry("g_{n+2,1}", "g_n2_1", "right", 2, (), (), _g_n2_1, min_n=5),
    CatalogEntry("g_{6,2}", "g_6_2", "right", 2, (Param("b", condition=("b != -1", lambda x: x != -1)),), (),
                 _g_6_2, fixed_n=4),
    CatalogEntry("g_{6,3}", "g_6_3", "right", 2, (Param("c", condition=("c != -2", lambda x: x != -2)),), (),
                 _g_6_3, fixed_n=4),
    CatalogEntry("g_{6,4}", "g_6_4", "right", 2, (Param("b", condition=("b != 0", _nonzero)),), (),
                 _g_6_4, fixed_n=4),
    CatalogEntry("l_{n+1,1}", "l_n1_1", "left", 1, (Param("a"),), (), _l_n1_1,
                 other_side=lambda p: p["a"] == 0),
    CatalogEntry("l_{n+1,2}", "l_n1_2", "left", 1, (), (), _l_n1_2),
    CatalogEntry("l_{n+1,3}", "l_n1_3", "left", 1, (_EPS, Param("b", "tail")), (_EPS_N4,), _l_n1_3),
    CatalogEntry("l_{5,5}", "l_5_5", "left", 1, (Param("a"), Param("b")),
                 (("if b=-1, then a != 1", lambda p, n: p["b"] != -1 or p["a"] != 1),), _l_5_5,
                 fixed_n=4, other_side=lambda p: p["b"] == -1),
    CatalogEntry("l_{5,6}", "l_5_6", "left", 1, (Param("a", condition=_A_NE_1),), (), _l_5_6, fixed_n=4),
    CatalogEntry("l_{n+2,1}", "l_n2_1", "left", 2, (), (), _l_n2_1, min_n=5),
    CatalogEntry("l_{6,2}", "l_6_2", "left", 2, (Param("b", condition=("b != -1", lambda x: x != -1)),), (),
                 _l_6_2, fixed_n=4),
    CatalogEntry("l_{6,3}", "l_6_3", "left", 2, (Param("c", condition=("c != -2", lambda x: x != -2)),), (),
                 _l_6_3, fixed_n=4),
    CatalogEntry("l_{6,4}", "l_6_4", "left", 2, (Param("b", condition=("b != 0", _nonzero)),), (),
                 _l_6_4, fixed_n=4),
]

REGISTRY: dict[str, CatalogEntry] = {}
for _e in _ENTRIES:
    REGISTRY[_e.id] = _e
    REGISTRY[_e.cli_id] = _e

# order of the codimension-one lists as the two classifications give them
_LISTS = {
    ("right", 1): ["g_n1_1", "g_n1_2", "g_n1_3", "g_n1_4", "g_5_5", "g_5_6", "g_5_7", "g_5_8"],
    ("left", 1): ["l_n1_1", "l_n1_2", "l_n1_3", "g_n1_4", "l_5_5", "l_5_6", "g_5_7", "g_5_8"],
    ("right", 2): ["g_n2_1", "g_6_2", "g_6_3", "g_6_4"],
    ("left", 2): ["l_n2_1", "l_6_2", "l_6_3", "l_6_4"],
}

CODIM3_NOTE = ("no solvable extension of L4(n) with codimension three exists: any three "
               "candidate outer derivations are nil-dependent (see the codim3 suite)")


def all_entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def get_entry(name: str) -> CatalogEntry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown catalog id {name!r}") from None


def enumerate_families(side: str, codim: int, n: Optional[int] = None) -> list[CatalogEntry]:
    """Families listed for a (side, codim) cell, applicable at nilradical dim n.

    Codimension three has no families; the empty list is accompanied by
    ``CODIM3_NOTE``.  Families with a fixed nilradical dimension are always
    listed; n only removes families whose minimum n is not reached.
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    if codim == 3:
        return []
    if codim not in (1, 2):
        raise ValueError(f"unsupported codimension {codim}")
    out = []
    for cid in _LISTS[(side, codim)]:
        e = REGISTRY[cid]
        if n is not None and e.fixed_n is None and n < e.min_n:
            continue
        out.append(e)
    return out


# public alias with the name used throughout the documentation
enumerate = enumerate_families  # noqa: A001


# --------------------------------------------------------------------------
# Parameters
# --------------------------------------------------------------------------

def normalize_params(entry: CatalogEntry, n: int, params: Mapping) -> dict:
    """Coerce values, fill defaults and check every side condition."""
    params = dict(params)
    aliases = {"epsilon": "eps", "ε": "eps"}
    for old, new in aliases.items():
        if old in params:
            params[new] = params.pop(old)
    known = {p.name for p in entry.params}
    unknown = set(params) - known
    if unknown:
        raise InadmissibleParameters(f"{entry.id} has no parameter(s) {sorted(unknown)}")
    out = {}
    for p in entry.params:
        if p.kind == "tail":
            raw = params.get(p.name, ())
            if isinstance(raw, (str, int, Fraction)):
                raw = [raw]
            tail = tuple(as_rational(x) for x in raw)
            limit = max(n - 5, 0)
            if len(tail) > limit:
                raise InadmissibleParameters(f"{entry.id}: tail b has at most n-5 = {limit} entries")
            out[p.name] = tail + (F(0),) * (limit - len(tail))
            continue
        if p.name not in params:
            raise InadmissibleParameters(f"{entry.id}: missing parameter {p.name}")
        v = as_rational(params[p.name])
        if p.kind == "flag" and v not in (0, 1):
            raise InadmissibleParameters(f"{entry.id}: {p.name} must be 0 or 1")
        if p.condition and not p.condition[1](v):
            raise InadmissibleParameters(f"{entry.id}: violates ({p.condition[0]})")
        out[p.name] = v
    for text, pred in entry.conditions:
        if not pred(out, n):
            raise InadmissibleParameters(f"{entry.id}: violates ({text})")
    return out


def is_admissible(entry: CatalogEntry, n: int, params: Mapping) -> bool:
    try:
        normalize_params(entry, n, params)
    except InadmissibleParameters:
        return False
    return True


def build(name: str, n: int, params: Optional[Mapping] = None) -> AlgebraTable:
    """Full table of a catalog family at nilradical dimension n."""
    entry = get_entry(name)
    if not isinstance(n, int) or not entry.valid_n(n):
        need = f"n = {entry.fixed_n}" if entry.fixed_n is not None else f"n >= {entry.min_n}"
        raise ValueError(f"{entry.id} needs {need}, got n={n}")
    p = normalize_params(entry, n, params or {})
    entries = l4_brackets(n) + list(entry.brackets(n, p))
    return AlgebraTable.from_brackets(entry.dim(n), entries)


DEFAULT_SAMPLES = (F(-2), F(-1, 2), F(1, 3), F(2), F(5))


def _sample_values() -> tuple:
    seed = os.environ.get("LEIBNIZ_SAMPLE_SEED")
    if not seed:
        return DEFAULT_SAMPLES
    rng = random.Random(seed)
    vals = []
    while len(vals) < 5:
        q = F(rng.randint(-9, 9), rng.randint(1, 5))
        if q not in vals:
            vals.append(q)
    return tuple(vals)


def sample_params(entry: CatalogEntry, n: int, count: int = 3, extra: Sequence[Mapping] = ()) -> list[dict]:
    """Deterministic admissible parameter points.

    Each rational slot takes the first ``count`` survivors of its own
    condition from the sample set; flags cycle through 0, 1.  Points are
    formed by zipping the slots, skipping any point that fails a joint
    condition.  ``extra`` points are appended when admissible.
    """
    values = _sample_values()
    slots = []
    for p in entry.params:
        if p.kind == "tail":
            continue
        if p.kind == "flag":
            slots.append((p.name, [F(k % 2) for k in range(len(values))]))
            continue
        ok = [v for v in values if not p.condition or p.condition[1](v)]
        slots.append((p.name, ok))
    points = []
    if not slots:
        points.append({})
    else:
        k = 0
        longest = max(len(v) for _, v in slots)
        while len(points) < count and k < longest:
            point = {name: vals[k % len(vals)] for name, vals in slots}
            if is_admissible(entry, n, point):
                points.append(point)
            k += 1
    for point in extra:
        if is_admissible(entry, n, point) and point not in points:
            points.append(dict(point))
    return points


def special_points(entry: CatalogEntry, n: int) -> list[dict]:
    """Extra points at the parameter values where a documented side switch happens."""
    base = sample_params(entry, n, count=1)
    if not base:
        return []
    out = []
    if entry.cli_id in ("g_n1_1", "l_n1_1"):
        out.append({**base[0], "a": F(0)})
    if entry.cli_id in ("g_5_5", "l_5_5"):
        out.append({**base[0], "b": F(-1)})
    return [p for p in out if is_admissible(entry, n, p)]


def format_params(params: Mapping) -> str:
    parts = []
    for k, v in params.items():
        if isinstance(v, tuple):
            if any(v):
                parts.append(f"{k}=({','.join(format_rational(x) for x in v)})")
        else:
            parts.append(f"{k}={format_rational(v)}")
    return ",".join(parts)


# --------------------------------------------------------------------------
# Fingerprints
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantFingerprint:
    ds: tuple
    ls: tuple
    center_dim: int
    derivation_dim: int
    squares_ideal_dim: int
    side_flags: tuple  # (passes_right, passes_left)

    def as_dict(self) -> dict:
        return {
            "ds": list(self.ds),
            "ls": list(self.ls),
            "center_dim": self.center_dim,
            "derivation_dim": self.derivation_dim,
            "squares_ideal_dim": self.squares_ideal_dim,
            "passes_right": self.side_flags[0],
            "passes_left": self.side_flags[1],
        }


def fingerprint(t: AlgebraTable) -> InvariantFingerprint:
    return InvariantFingerprint(
        ds=derived_series(t).dims,
        ls=lower_central_series(t).dims,
        center_dim=center(t).dim,
        derivation_dim=derivation_space(t).dim,
        squares_ideal_dim=squares_ideal(t).dim,
        side_flags=(check_right_leibniz(t, stop_at_first=True).holds,
                    check_left_leibniz(t, stop_at_first=True).holds),
    )
