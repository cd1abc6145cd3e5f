"""Lower central and derived series, nilpotency and solvability indices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import AlgebraTable, Subspace, subspace_product


@dataclass(frozen=True)
class SeriesResult:
    terms: tuple  # of Subspace, term 0 is the whole algebra
    dims: tuple
    stabilized: bool
    index: Optional[int]  # first k with term_k = 0

    def signature(self) -> str:
        return "[" + ",".join(str(d) for d in self.dims) + "]"


def _iterate(t: AlgebraTable, step) -> SeriesResult:
    term = Subspace.whole(t.dim)
    terms = [term]
    while not term.is_zero():
        nxt = step(term)
        if nxt.dim == term.dim:
            # products of a fixed subspace with itself or L can only repeat
            return SeriesResult(tuple(terms), tuple(s.dim for s in terms), True, None)
        terms.append(nxt)
        term = nxt
    return SeriesResult(tuple(terms), tuple(s.dim for s in terms), False, len(terms) - 1)


def lower_central_series(t: AlgebraTable) -> SeriesResult:
    """L^0 = L, L^{k+1} = [L^k, L]."""
    whole = Subspace.whole(t.dim)
    return _iterate(t, lambda s: subspace_product(t, s, whole))


def derived_series(t: AlgebraTable) -> SeriesResult:
    """L^(0) = L, L^(k+1) = [L^(k), L^(k)]."""
    return _iterate(t, lambda s: subspace_product(t, s, s))


def _index(res: SeriesResult) -> tuple[bool, Optional[int]]:
    if res.index is None:
        return False, None
    # the zero algebra has L^0 = 0, but the index counts from 1
    return True, max(res.index, 1)


def is_nilpotent(t: AlgebraTable) -> tuple[bool, Optional[int]]:
    return _index(lower_central_series(t))


def is_solvable(t: AlgebraTable) -> tuple[bool, Optional[int]]:
    return _index(derived_series(t))


def lower_central_term(res: SeriesResult, k: int) -> Subspace:
    """L^k, padding with zero past the end of a terminating series."""
    if k < len(res.terms):
        return res.terms[k]
    if res.stabilized:
        return res.terms[-1]
    return Subspace.zero(res.terms[0].ambient_dim)


def is_quasi_filiform(t: AlgebraTable) -> bool:
    """L^{n-3} != 0 and L^{n-2} = 0, with L^0 = L."""
    n = t.dim
    if n < 4:
        raise ValueError("quasi-filiform is only defined for dim >= 4")
    res = lower_central_series(t)
    return (not lower_central_term(res, n - 3).is_zero()) and lower_central_term(res, n - 2).is_zero()


def format_signatures(t: AlgebraTable) -> str:
    return f"DS={derived_series(t).signature()} LS={lower_central_series(t).signature()}"
