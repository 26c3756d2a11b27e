"""Exact rational linear programming over clump graphs.

The weight-maximization program puts one variable per clump, caps every
closed-neighborhood sum at 1, and maximizes delta times the total: its
optimum lower-bounds the order of any blow-up with minimum degree delta.
The order-minimization program asks for the cheapest fractional blow-up
weights meeting the degree demand.  Because derived adjacency is
symmetric, the two programs are formal LP duals of each other.

The solver is a two-phase tableau simplex over Fractions with Bland's
anti-cycling rule, so it terminates on every instance.  Every verdict is
re-verified independently of the pivot path: optima against a dual
certificate, unbounded verdicts against an improving ray, infeasible
verdicts against a Farkas vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .clumps import ClumpGraph, ClumpError, validate_strongly_canonical
from .weighting import expected_total


class LPError(ValueError):
    """Malformed program or failed certificate verification."""


@dataclass(frozen=True)
class LPInstance:
    sense: str  # "max" | "min"
    objective: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    senses: tuple[str, ...]  # "<=" | ">=" per row; variables are >= 0

    def __post_init__(self):
        if self.sense not in ("max", "min"):
            raise LPError(f"bad sense {self.sense!r}")
        n = len(self.objective)
        if len(self.rows) != len(self.rhs) or len(self.rows) != len(self.senses):
            raise LPError("row/rhs/sense counts differ")
        for row in self.rows:
            if len(row) != n:
                raise LPError("row width does not match objective")
        for s in self.senses:
            if s not in ("<=", ">="):
                raise LPError(f"bad row sense {s!r}")

    @property
    def n_vars(self) -> int:
        return len(self.objective)

    @property
    def n_rows(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class LPSolution:
    status: str  # "optimal" | "unbounded" | "infeasible"
    value: Fraction | None = None
    assignment: tuple[Fraction, ...] | None = None
    basis: tuple[int, ...] | None = None
    dual: tuple[Fraction, ...] | None = None
    ray: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


class _Tableau:
    """Dense simplex tableau; columns = structural, extras, artificials."""

    def __init__(self, lp: LPInstance):
        self.n = lp.n_vars
        self.m = lp.n_rows
        # normalize rows to nonnegative rhs, remembering sign flips
        self.flip = []
        rows, rhs, senses = [], [], []
        for row, b, s in zip(lp.rows, lp.rhs, lp.senses):
            if b < 0:
                rows.append([-x for x in row])
                rhs.append(-b)
                senses.append("<=" if s == ">=" else ">=")
                self.flip.append(-1)
            else:
                rows.append(list(row))
                rhs.append(b)
                senses.append(s)
                self.flip.append(1)
        self.norm_senses = senses
        self.art_rows = [i for i, s in enumerate(senses) if s == ">="]
        n, m = self.n, self.m
        self.extra0 = n
        self.art0 = n + m
        self.width = n + m + len(self.art_rows)
        self.T: list[list[Fraction]] = []
        art_seen = 0
        self.basis: list[int] = []
        self.row_ids = list(range(m))  # original row behind each tableau row
        for i in range(m):
            row = rows[i] + [Fraction(0)] * (m + len(self.art_rows)) + [rhs[i]]
            row[self.extra0 + i] = Fraction(1 if senses[i] == "<=" else -1)
            if senses[i] == "<=":
                self.basis.append(self.extra0 + i)
            else:
                row[self.art0 + art_seen] = Fraction(1)
                self.basis.append(self.art0 + art_seen)
                art_seen += 1
            self.T.append(row)

    def _pivot(self, r: int, col: int) -> None:
        T = self.T
        piv = T[r][col]
        T[r] = [x / piv for x in T[r]]
        for i in range(len(T)):
            if i != r and T[i][col] != 0:
                f = T[i][col]
                T[i] = [a - f * b for a, b in zip(T[i], T[r])]
        if self.obj[col] != 0:
            f = self.obj[col]
            self.obj = [a - f * b for a, b in zip(self.obj, T[r])]
        self.basis[r] = col

    def _run(self, allowed: int) -> str:
        """Bland pivoting over columns < allowed; returns 'optimal'|'unbounded'."""
        T, basis = self.T, self.basis
        while True:
            enter = -1
            for j in range(allowed):
                if self.obj[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave, best, best_var = -1, None, None
            for i in range(self.m):
                a = T[i][enter]
                if a > 0:
                    ratio = T[i][-1] / a
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < best_var
                    ):
                        leave, best, best_var = i, ratio, basis[i]
            if leave < 0:
                self.ray_col = enter
                return "unbounded"
            self._pivot(leave, enter)

    def set_objective(self, c: list[Fraction]) -> None:
        """Load reduced costs for objective c over structural columns."""
        obj = list(c) + [Fraction(0)] * (self.width - len(c) + 1)
        # price out the current basis
        for i, bv in enumerate(self.basis):
            if obj[bv] != 0:
                f = obj[bv]
                obj = [a - f * b for a, b in zip(obj, self.T[i])]
        self.obj = obj

    def solution(self) -> list[Fraction]:
        x = [Fraction(0)] * self.n
        for i, bv in enumerate(self.basis):
            if bv < self.n:
                x[bv] = self.T[i][-1]
        return x

    def duals(self, m_original: int) -> list[Fraction]:
        """Row multipliers for the ORIGINAL rows, max convention.

        Each original row's multiplier is read off the reduced cost of its
        slack/surplus column, which stays meaningful even for rows dropped
        as dependent during phase 1."""
        y = []
        for r in range(m_original):
            col = self.extra0 + r
            coef = 1 if self.norm_senses[r] == "<=" else -1
            y.append(-self.obj[col] * coef * self.flip[r])
        return y

    def structural_ray(self) -> list[Fraction]:
        col = self.ray_col
        d = [Fraction(0)] * self.n
        if col < self.n:
            d[col] = Fraction(1)
        for i, bv in enumerate(self.basis):
            if bv < self.n:
                d[bv] = -self.T[i][col]
        return d


def simplex_solve(lp: LPInstance) -> LPSolution:
    """Certified exact simplex; the returned verdict has been re-verified."""
    maximize = lp.sense == "max"
    m_orig = lp.n_rows
    c = [x if maximize else -x for x in lp.objective]
    tab = _Tableau(lp)
    if tab.art_rows:
        phase1 = [Fraction(0)] * tab.art0 + [Fraction(-1)] * len(tab.art_rows)
        tab.set_objective(phase1)
        status = tab._run(tab.art0)  # artificials never re-enter
        assert status == "optimal", "phase-1 objective is bounded by 0"
        if tab.obj[-1] != 0:  # leftover artificial infeasibility
            y = tab.duals(m_orig)
            sol = LPSolution(status="infeasible", farkas=tuple(y))
            check_solution(lp, sol)
            return sol
        # pivot artificials out of the basis, dropping dependent rows
        for i in range(tab.m - 1, -1, -1):
            if tab.basis[i] >= tab.art0:
                piv = next(
                    (j for j in range(tab.art0) if tab.T[i][j] != 0), None
                )
                if piv is None:
                    del tab.T[i], tab.basis[i], tab.row_ids[i]
                    tab.m -= 1
                else:
                    tab._pivot(i, piv)
    tab.set_objective(c)
    status = tab._run(tab.art0)
    if status == "unbounded":
        x = tab.solution()
        ray = tab.structural_ray()
        sol = LPSolution(
            status="unbounded", assignment=tuple(x), ray=tuple(ray)
        )
        check_solution(lp, sol)
        return sol
    x = tab.solution()
    val = _dot(c, x)
    y = tab.duals(m_orig)
    if not maximize:
        val = -val
        y = [-v for v in y]
    sol = LPSolution(
        status="optimal",
        value=val,
        assignment=tuple(x),
        basis=tuple(sorted(tab.basis)),
        dual=tuple(y),
    )
    check_solution(lp, sol)
    return sol


def check_solution(lp: LPInstance, sol: LPSolution) -> None:
    """Verify a solution against the instance, independent of how it was
    found.  Optima need a matching dual certificate, unbounded verdicts an
    improving ray from a feasible point, infeasible verdicts a Farkas
    vector.  Raises LPError on any discrepancy."""
    maximize = lp.sense == "max"

    def feasible(x: Sequence[Fraction]) -> bool:
        if len(x) != lp.n_vars or any(v < 0 for v in x):
            return False
        for row, b, s in zip(lp.rows, lp.rhs, lp.senses):
            lhs = _dot(row, x)
            if s == "<=" and lhs > b:
                return False
            if s == ">=" and lhs < b:
                return False
        return True

    if sol.status == "optimal":
        if sol.assignment is None or sol.dual is None or sol.value is None:
            raise LPError("optimal verdict lacks certificate data")
        if not feasible(sol.assignment):
            raise LPError("claimed optimum is not feasible")
        if _dot(lp.objective, sol.assignment) != sol.value:
            raise LPError("objective value mismatch")
        y = sol.dual
        if len(y) != lp.n_rows:
            raise LPError("dual certificate has wrong length")
        for yi, s in zip(y, lp.senses):
            want_nonneg = (s == "<=") == maximize
            if want_nonneg and yi < 0 or not want_nonneg and yi > 0:
                raise LPError("dual certificate violates sign conventions")
        for j in range(lp.n_vars):
            col = sum((lp.rows[i][j] * y[i] for i in range(lp.n_rows)), Fraction(0))
            if maximize and col < lp.objective[j]:
                raise LPError(f"dual constraint violated at variable {j}")
            if not maximize and col > lp.objective[j]:
                raise LPError(f"dual constraint violated at variable {j}")
        if _dot(lp.rhs, y) != sol.value:
            raise LPError("dual objective does not match the claimed optimum")
    elif sol.status == "unbounded":
        if sol.assignment is None or sol.ray is None:
            raise LPError("unbounded verdict lacks a feasible point or ray")
        if not feasible(sol.assignment):
            raise LPError("unbounded verdict from an infeasible point")
        d = sol.ray
        if any(v < 0 for v in d):
            raise LPError("ray leaves the nonnegative orthant")
        for row, s in zip(lp.rows, lp.senses):
            move = _dot(row, d)
            if s == "<=" and move > 0 or s == ">=" and move < 0:
                raise LPError("ray violates a row direction")
        gain = _dot(lp.objective, d)
        if maximize and gain <= 0 or not maximize and gain >= 0:
            raise LPError("ray does not improve the objective")
    elif sol.status == "infeasible":
        if sol.farkas is None:
            raise LPError("infeasible verdict lacks a Farkas vector")
        y = sol.farkas
        if len(y) != lp.n_rows:
            raise LPError("Farkas vector has wrong length")
        for yi, s in zip(y, lp.senses):
            if s == "<=" and yi < 0 or s == ">=" and yi > 0:
                raise LPError("Farkas vector violates sign conventions")
        for j in range(lp.n_vars):
            col = sum((lp.rows[i][j] * y[i] for i in range(lp.n_rows)), Fraction(0))
            if col < 0:
                raise LPError("Farkas combination has a negative column")
        if _dot(lp.rhs, y) >= 0:
            raise LPError("Farkas combination does not witness infeasibility")
    else:
        raise LPError(f"unknown status {sol.status!r}")


# --- programs over clump graphs ---------------------------------------------


def _adjacency_rows(h: ClumpGraph) -> list[list[Fraction]]:
    order = list(h.clumps())
    index = {cl: i for i, cl in enumerate(order)}
    rows = []
    for cl in order:
        row = [Fraction(0)] * len(order)
        for nb in h.neighbors(*cl):
            row[index[nb]] = Fraction(1)
        rows.append(row)
    return rows


def build_dual_lp(h: ClumpGraph, delta: int) -> LPInstance:
    """Maximize delta * total clump weight with neighborhood sums <= 1."""
    if delta < 1:
        raise LPError("delta must be >= 1")
    rows = _adjacency_rows(h)
    n = len(rows)
    return LPInstance(
        sense="max",
        objective=tuple(Fraction(delta) for _ in range(n)),
        rows=tuple(tuple(r) for r in rows),
        rhs=tuple(Fraction(1) for _ in range(n)),
        senses=tuple("<=" for _ in range(n)),
    )


def build_primal_lp(h: ClumpGraph, delta: int) -> LPInstance:
    """Minimize total blow-up weight with neighborhood sums >= delta
    (continuous relaxation of integer blow-up weights)."""
    if delta < 1:
        raise LPError("delta must be >= 1")
    rows = _adjacency_rows(h)
    n = len(rows)
    return LPInstance(
        sense="min",
        objective=tuple(Fraction(1) for _ in range(n)),
        rows=tuple(tuple(r) for r in rows),
        rhs=tuple(Fraction(delta) for _ in range(n)),
        senses=tuple(">=" for _ in range(n)),
    )


@dataclass(frozen=True)
class DualityRecord:
    primal: Fraction
    dual: Fraction
    scheme_value: Fraction | None


def duality_report(h: ClumpGraph, delta: int) -> DualityRecord:
    """Solve both programs, assert strong duality, and compare against the
    scheme total delta * (depth+1) * k/(3k-2) when it applies.

    Requires a strongly canonical graph: the scheme comparison is only
    meaningful there."""
    report = validate_strongly_canonical(h.unweighted())
    if not report.verdict:
        raise LPError(f"not strongly canonical: {report.violations[0].detail}")
    primal = simplex_solve(build_primal_lp(h, delta))
    dual = simplex_solve(build_dual_lp(h, delta))
    if primal.status != "optimal" or dual.status != "optimal":
        raise LPError(
            f"degenerate instance: primal {primal.status}, dual {dual.status}"
        )
    assert primal.value == dual.value, "strong duality must hold"
    scheme = None
    if h.k in (3, 4):
        scheme = delta * expected_total(h.k, h.depth)
        assert dual.value >= scheme, "scheme must be dominated by the optimum"
    return DualityRecord(primal.value, dual.value, scheme)


# --- text formats ------------------------------------------------------------


def format_lp(lp: LPInstance) -> str:
    lines = [f"sense {lp.sense}", f"vars {lp.n_vars}"]
    lines.append("obj " + " ".join(str(x) for x in lp.objective))
    for row, b, s in zip(lp.rows, lp.rhs, lp.senses):
        lines.append("row " + " ".join(str(x) for x in row) + f" {s} {b}")
    return "\n".join(lines) + "\n"


def parse_lp(text: str) -> LPInstance:
    sense = None
    nvars = None
    obj = None
    rows, rhs, senses = [], [], []
    for ln in text.splitlines():
        parts = ln.split()
        if not parts:
            continue
        if parts[0] == "sense":
            sense = parts[1]
        elif parts[0] == "vars":
            nvars = int(parts[1])
        elif parts[0] == "obj":
            obj = tuple(Fraction(x) for x in parts[1:])
        elif parts[0] == "row":
            if parts[-2] not in ("<=", ">="):
                raise LPError(f"bad row line {ln!r}")
            rows.append(tuple(Fraction(x) for x in parts[1:-2]))
            senses.append(parts[-2])
            rhs.append(Fraction(parts[-1]))
        else:
            raise LPError(f"unrecognized line {ln!r}")
    if sense is None or obj is None:
        raise LPError("missing sense or objective")
    if nvars is not None and len(obj) != nvars:
        raise LPError("vars count does not match objective")
    return LPInstance(sense, obj, tuple(rows), tuple(rhs), tuple(senses))


def solution_json(sol: LPSolution) -> dict:
    out: dict = {"status": sol.status}
    if sol.value is not None:
        out["value"] = str(sol.value)
    if sol.assignment is not None:
        out["assignment"] = [str(x) for x in sol.assignment]
    if sol.dual is not None:
        out["dual"] = [str(x) for x in sol.dual]
    if sol.ray is not None:
        out["ray"] = [str(x) for x in sol.ray]
    if sol.farkas is not None:
        out["farkas"] = [str(x) for x in sol.farkas]
    return out
