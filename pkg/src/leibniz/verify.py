"""Reproduction suites for the checkable claims of the classification.

Each suite returns a ``SuiteResult`` holding one ``Claim`` per checked
statement and sample.  Claims marked ``informational`` record probes of
points the classification leaves open; they never affect the verdict.
"""
from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import AlgebraTable, Subspace, left_op, right_op
from .catalog import (
    CatalogEntry,
    all_entries,
    build,
    build_L4,
    enumerate_families,
    format_params,
    sample_params,
    special_points,
)
from .derivations import (
    NilKind,
    all_combinations_nilpotent,
    derivation_space,
    pair_nil_independent,
    restrict_operator,
)
from .extensions import (
    BasisChange,
    ExtensionData,
    apply_basis_change,
    assemble,
    check_left_conditions,
    check_right_conditions,
    perturb,
    table_diff,
    verify_nilradical,
    verify_transformation,
)
from .identity import (
    check_left_leibniz,
    check_mult_homomorphisms,
    check_right_leibniz,
    center,
    is_associative,
    is_derivation,
    quotient_is_lie,
)
from .ratmat import Matrix, charpoly, det, inverse, is_nilpotent_matrix, nullspace, rank
from .replays import all_replays, codim2_coincidence, codim3_samples
from .series import derived_series, is_nilpotent, is_quasi_filiform, is_solvable, lower_central_series

F = Fraction


@dataclass
class Claim:
    suite: str
    claim: str
    subject: str
    passed: bool
    detail: str = ""
    informational: bool = False

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "claim": self.claim,
            "subject": self.subject,
            "passed": self.passed,
            "detail": self.detail,
            "informational": self.informational,
        }


@dataclass
class SuiteResult:
    name: str
    claims: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims if not c.informational)

    def failures(self) -> list:
        return [c for c in self.claims if not c.passed and not c.informational]

    def add(self, claim: str, subject: str, passed: bool, detail: str = "", informational: bool = False) -> bool:
        self.claims.append(Claim(self.name, claim, subject, bool(passed), detail, informational))
        return bool(passed)

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checked": len(self.claims),
            "failed": len(self.failures()),
            "claims": [c.as_dict() for c in self.claims],
        }


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    start = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - start
    return res


def expected_ls(n: int) -> list[int]:
    return [n, n - 2] + list(range(n - 4, -1, -1))


def _subject(entry: CatalogEntry, n: int, params) -> str:
    p = format_params(params)
    return f"{entry.id} n={n}" + (f" {p}" if p else "")


# --------------------------------------------------------------------------
# L4(n)
# --------------------------------------------------------------------------

def suite_l4(ns=range(4, 9)) -> SuiteResult:
    def body(res: SuiteResult):
        for n in ns:
            t = build_L4(n)
            subj = f"L4({n})"
            r, l = check_right_leibniz(t).holds, check_left_leibniz(t).holds
            res.add("L4(n) is right and left Leibniz", subj, r and l, f"right={r} left={l}")
            ds = list(derived_series(t).dims)
            res.add("DS = [n, n-2, 0]", subj, ds == [n, n - 2, 0], f"DS={ds}")
            ls = list(lower_central_series(t).dims)
            res.add("LS = [n, n-2, n-4, n-5, ..., 0]", subj, ls == expected_ls(n), f"LS={ls}")
            c = center(t)
            want = Subspace.span_of_basis(n, (2, n))
            res.add("center is span{e2, en}", subj, c == want, c.describe())
            res.add("L4(n) is quasi-filiform", subj, is_quasi_filiform(t))
            assoc = is_associative(t)
            res.add("associative exactly when n = 4", subj, assoc == (n == 4), f"associative={assoc}")
    return _timed("l4", body)


# --------------------------------------------------------------------------
# Codimension one
# --------------------------------------------------------------------------

def _codim1_points(entry: CatalogEntry, ns):
    for n in entry.n_values(ns):
        for p in sample_params(entry, n) + special_points(entry, n):
            yield n, p


def suite_codim1(side: str, ns=(4, 5, 7)) -> SuiteResult:
    def body(res: SuiteResult):
        for entry in enumerate_families(side, 1):
            for n, p in _codim1_points(entry, ns):
                t = build(entry.cli_id, n, p)
                subj = _subject(entry, n, p)
                expect = entry.expected_identities(p)
                got = {"right": check_right_leibniz(t, stop_at_first=True).holds,
                       "left": check_left_leibniz(t, stop_at_first=True).holds}
                res.add(f"satisfies the {side} Leibniz identity", subj, got[side])
                other = "left" if side == "right" else "right"
                res.add(f"{other} identity holds exactly as documented", subj, got[other] == expect[other],
                        f"{other}={got[other]}, documented {expect[other]}")
                solv, _ = is_solvable(t)
                nil, _ = is_nilpotent(t)
                res.add("solvable and not nilpotent", subj, solv and not nil, f"solvable={solv} nilpotent={nil}")
                res.add("restriction to e1..en equals L4(n)", subj, t.restrict(n) == build_L4(n))
                op = right_op if side == "right" else left_op
                d = restrict_operator(op(t, n + 1), n)
                der = is_derivation(build_L4(n), d)
                nilp = is_nilpotent_matrix(d)
                res.add("generator operator on N is a non-nilpotent derivation", subj, der and not nilp,
                        f"derivation={der} nilpotent={nilp}")
        if side == "right":
            _g55_probe(res)
    return _timed(f"{side}-codim1", body)


def _g55_probe(res: SuiteResult) -> None:
    """g_{5,5} at points excluded by the stricter condition of its derivation
    (b = -a, a = 0, b = -1) but allowed by the final list."""
    for a, b in ((F(2), F(-2)), (F(0), F(3)), (F(2), F(-1))):
        p = {"a": a, "b": b}
        t = build("g_5_5", 4, p)
        ok = check_right_leibniz(t).holds and verify_nilradical(t, 4, side="right").passed
        res.add("g_{5,5} admits this point (stricter derivation condition probe)",
                f"g_{{5,5}} n=4 {format_params(p)}", ok,
                "right Leibniz with L4 nilradical evidence" if ok else "fails", informational=True)


# --------------------------------------------------------------------------
# Codimension two
# --------------------------------------------------------------------------

# Parameter values where a nontrivial combination of the two outer
# derivations is nilpotent although the side conditions allow them.
SIDE_CONDITION_PROBES = (("g_6_3", {"c": F(-1, 2)}), ("g_6_4", {"b": F(2)}),
                 ("l_6_3", {"c": F(-1, 2)}), ("l_6_4", {"b": F(2)}))


def suite_codim2(side: str, ns=(5, 6)) -> SuiteResult:
    def body(res: SuiteResult):
        other = "left" if side == "right" else "right"
        for entry in enumerate_families(side, 2):
            for n in entry.n_values(ns):
                for p in sample_params(entry, n):
                    t = build(entry.cli_id, n, p)
                    subj = _subject(entry, n, p)
                    own = check_right_leibniz if side == "right" else check_left_leibniz
                    opp = check_left_leibniz if side == "right" else check_right_leibniz
                    res.add(f"satisfies the {side} Leibniz identity", subj, own(t).holds)
                    res.add(f"fails the {other} Leibniz identity", subj, not opp(t, stop_at_first=True).holds)
                    op = right_op if side == "right" else left_op
                    nil = t.restrict(n)
                    d1, d2 = (restrict_operator(op(t, a), n) for a in (n + 1, n + 2))
                    res.add("both generator operators are derivations of N", subj,
                            is_derivation(nil, d1) and is_derivation(nil, d2))
                    v = pair_nil_independent(d1, d2)
                    detail = v.kind.value + (f" witness={_fmt_witness(v.witness)}" if v.witness else "")
                    res.add("generator operators are nil-independent", subj,
                            v.kind is NilKind.NONE_NILPOTENT, detail)
                    rep = verify_nilradical(t, n, side=side)
                    bad = [f"({it.number}) {it.detail}" for it in rep.items if it.passed is False]
                    res.add("nilradical evidence items all pass", subj, rep.passed, "; ".join(bad))
        for cid, p in SIDE_CONDITION_PROBES:
            entry = enumerate_families(side, 2)
            if cid not in {e.cli_id for e in entry}:
                continue
            t = build(cid, 4, p)
            op = right_op if side == "right" else left_op
            d1, d2 = (restrict_operator(op(t, a), 4) for a in (5, 6))
            v = pair_nil_independent(d1, d2)
            res.add("side condition probe: admitted point with a nil-dependent pair",
                    f"{cid} n=4 {format_params(p)}", v.kind is NilKind.SOME_NILPOTENT,
                    f"{v.kind.value} witness={_fmt_witness(v.witness)}", informational=True)
        rp = codim2_coincidence(side)
        res.add("coincidence probe: two listed families share a member", rp.claim,
                verify_transformation(rp.source, rp.change, rp.target),
                "explicit basis change maps one table onto the other", informational=True)
    return _timed(f"{side}-codim2", body)


def _fmt_witness(w) -> str:
    if w is None:
        return "none"
    return "(" + ",".join(str(x) for x in w) + ")"


# --------------------------------------------------------------------------
# Condition systems versus the full identity check
# --------------------------------------------------------------------------

def catalog_tables(ns=(4, 5)):
    """(entry, n, params, table) for every family and default sample point."""
    for entry in all_entries():
        for n in entry.n_values(ns if entry.codim == 1 else tuple(max(k, 5) for k in ns)):
            for p in sample_params(entry, n) + special_points(entry, n):
                yield entry, n, p, build(entry.cli_id, n, p)


def suite_conditions(perturbations: int = 200, seed: int = 7) -> SuiteResult:
    def body(res: SuiteResult):
        exts = []
        for entry, n, p, t in catalog_tables():
            ext = ExtensionData.from_table(t, n)
            exts.append((entry, n, p, ext))
            _compare_conditions(res, _subject(entry, n, p), ext, t)
        rng = random.Random(os.environ.get("LEIBNIZ_SAMPLE_SEED") or seed)
        for k in range(perturbations):
            entry, n, p, ext = rng.choice(exts)
            bumped = perturb(ext, rng)
            _compare_conditions(res, f"perturbation {k} of {_subject(entry, n, p)}", bumped, assemble(bumped))
    return _timed("conditions", body)


def _compare_conditions(res: SuiteResult, subj: str, ext: ExtensionData, t: AlgebraTable) -> None:
    for side, cond, full in (("right", check_right_conditions, check_right_leibniz),
                             ("left", check_left_conditions, check_left_leibniz)):
        c, f = cond(ext).holds, full(t, stop_at_first=True).holds
        res.add(f"{side} condition system agrees with the full identity check", subj, c == f,
                f"conditions={c} full={f}")


# --------------------------------------------------------------------------
# Transformations
# --------------------------------------------------------------------------

def suite_transforms() -> SuiteResult:
    def body(res: SuiteResult):
        for r in all_replays():
            ok = verify_transformation(r.source, r.change, r.target)
            detail = ""
            if not ok:
                detail = "; ".join(table_diff(apply_basis_change(r.source, r.change), r.target)[:3])
            res.add(r.claim, r.name + " " + format_params(r.params), ok, detail)
        # negative control: shift one coefficient of the absorbing change
        r = all_replays()[0]
        rows = r.change.matrix.tolist()
        rows[4][0] += 1
        wrong = BasisChange(Matrix(rows))
        res.add("a perturbed change of basis is rejected", r.name + " (negative control)",
                not verify_transformation(r.source, wrong, r.target))
    return _timed("transforms", body)


# --------------------------------------------------------------------------
# Codimension three
# --------------------------------------------------------------------------

def suite_codim3(count: int = 10) -> SuiteResult:
    def body(res: SuiteResult):
        nil = build_L4(4)
        for k, s in enumerate(codim3_samples(count)):
            subj = f"sample {k}: " + " ".join(f"({a},{b},{c})" for a, b, c in s.coeffs)
            coeffs = Matrix(s.coeffs)
            res.add("candidate operators are derivations of L4(4)", subj,
                    all(is_derivation(nil, d) for d in s.operators))
            res.add("coefficient vectors (a_i, b_i, c_i) are linearly dependent", subj, det(coeffs) == 0,
                    f"det={det(coeffs)}")
            kernel = nullspace(coeffs.transpose())
            if kernel.rows == 0:
                res.add("a nontrivial combination of the three operators is nilpotent", subj, False, "no null vector")
                continue
            lam = kernel.row(0)
            combo = Matrix.zeros(4)
            for c, d in zip(lam, s.operators):
                combo = combo + d * c
            nilp = is_nilpotent_matrix(combo) and all_combinations_nilpotent([combo])
            res.add("a nontrivial combination of the three operators is nilpotent", subj, nilp,
                    "coefficients " + _fmt_witness(lam))
    return _timed("codim3", body)


# --------------------------------------------------------------------------
# Structural properties over the catalog
# --------------------------------------------------------------------------

def _closed_under_commutator(t: AlgebraTable) -> bool:
    basis = derivation_space(t)
    span = basis.span()
    mats = basis.basis
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            c = mats[i] @ mats[j] - mats[j] @ mats[i]
            if not span.contains(c.flatten()):
                return False
    return True


def suite_structure(ns=(4, 5)) -> SuiteResult:
    def body(res: SuiteResult):
        tables = [("L4", n, {}, build_L4(n)) for n in ns]
        tables += [(e.id, n, p, t) for e, n, p, t in catalog_tables(ns)]
        seen = set()
        for name, n, p, t in tables:
            if t in seen:
                continue
            seen.add(t)
            subj = f"{name} n={n}" + (f" {format_params(p)}" if p else "")
            res.add("derivations are closed under the commutator", subj, _closed_under_commutator(t))
            for side, check in (("right", check_right_leibniz), ("left", check_left_leibniz)):
                if check(t, stop_at_first=True).holds:
                    rep = check_mult_homomorphisms(t, side)
                    res.add(f"{side} operators satisfy {rep.relation}", subj, rep.holds,
                            f"failing pairs {rep.failures[:3]}" if rep.failures else "")
            res.add("quotient by the squares ideal is Lie", subj, quotient_is_lie(t))
            ls, dsr = lower_central_series(t), derived_series(t)
            ok = True
            for k, term in enumerate(dsr.terms):
                lk = ls.terms[min(k, len(ls.terms) - 1)]
                if not lk.contains_subspace(term):
                    ok = False
            res.add("derived series terms lie in the lower central series terms", subj, ok)
    return _timed("structure", body)


# --------------------------------------------------------------------------
# Linear algebra oracles
# --------------------------------------------------------------------------

def cofactor_det(rows) -> Fraction:
    """Laplace expansion along the first row; exponential, for small oracles only."""
    n = len(rows)
    if n == 0:
        return F(1)
    if n == 1:
        return F(rows[0][0])
    total = F(0)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def random_matrix(rng: random.Random, rows: int, cols: int, density: float = 0.7) -> Matrix:
    return Matrix([[F(rng.randint(-5, 5), rng.randint(1, 3)) if rng.random() < density else F(0)
                    for _ in range(cols)] for _ in range(rows)], cols)


def random_nilpotent(rng: random.Random, n: int) -> Matrix:
    """A strictly upper triangular matrix conjugated by a random invertible one."""
    u = Matrix([[F(rng.randint(-3, 3)) if j > i else F(0) for j in range(n)] for i in range(n)], n)
    while True:
        p = random_matrix(rng, n, n, 1.0)
        if det(p) != 0:
            break
    return p @ u @ inverse(p)


def suite_oracles(seed: int = 11) -> SuiteResult:
    def body(res: SuiteResult):
        rng = random.Random(seed)
        for k in range(50):
            n = rng.randint(1, 5)
            m = random_matrix(rng, n, n)
            p = charpoly(m)
            ok = all(p(F(x)) == cofactor_det((Matrix.identity(n) * x - m).tolist()) for x in range(n + 1))
            res.add("charpoly agrees with the cofactor determinant of tI - M", f"random {n}x{n} #{k}", ok)
        for k in range(100):
            r, c = rng.randint(1, 6), rng.randint(1, 6)
            m = random_matrix(rng, r, c, rng.choice([0.3, 0.6, 1.0]))
            ker = nullspace(m)
            ok = rank(m) + ker.rows == c and all(not any(m @ ker.row(i)) for i in range(ker.rows))
            res.add("rank + nullity = columns and kernel vectors are annihilated", f"random {r}x{c} #{k}", ok)
        for k in range(50):
            n = rng.randint(1, 5)
            m = random_nilpotent(rng, n) if k % 2 == 0 else random_matrix(rng, n, n, 0.4)
            brute = (m ** n).is_zero()
            res.add("is_nilpotent_matrix agrees with M^n = 0", f"random {n}x{n} #{k}",
                    is_nilpotent_matrix(m) == brute, f"nilpotent={brute}")
    return _timed("oracles", body)


SUITES = {
    "l4": suite_l4,
    "right-codim1": lambda: suite_codim1("right"),
    "left-codim1": lambda: suite_codim1("left"),
    "right-codim2": lambda: suite_codim2("right"),
    "left-codim2": lambda: suite_codim2("left"),
    "conditions": suite_conditions,
    "transforms": suite_transforms,
    "codim3": suite_codim3,
    "structure": suite_structure,
    "oracles": suite_oracles,
}


def run_suites(name: str) -> list[SuiteResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    return [SUITES[name]()]
