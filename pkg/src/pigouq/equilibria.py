"""Equilibrium search over small cost bimatrices.

Costs are minimized throughout: a profile is a weak pure equilibrium
when no unilateral deviation strictly lowers the deviator's cost, and a
strict one when every deviation strictly raises it. Three views are
exposed because they genuinely differ on these games:

* :func:`pure_nash` scans every cell;
* :func:`dominance_select` iteratively removes weakly dominated
  strategies and reports the surviving cell when it is unique -- the
  selection the narrative "the equilibrium is X" claims of small
  congestion games rely on, since those cells are often only weak
  equilibria;
* :func:`mixed_nash` runs exact support enumeration, solving each
  cost-indifference system in rational arithmetic.

Everything is deterministic: cells in row-major order, supports in
size-then-index order, results sorted by support and probabilities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .games import CostBimatrix

__all__ = [
    "EquilibriumResult",
    "MixedProfile",
    "PureProfile",
    "dominance_select",
    "mixed_nash",
    "optimal_outcome",
    "pure_nash",
    "solve",
]

#: Support enumeration is only exhaustive-and-auditable at tiny sizes.
MAX_MIXED_SIZE = 3


@dataclass(frozen=True)
class PureProfile:
    """One cell of a bimatrix: row/column indices plus their labels."""

    row: int
    col: int
    row_label: str
    col_label: str

    def to_json_obj(self) -> dict:
        return {"row": self.row_label, "col": self.col_label}


@dataclass(frozen=True)
class MixedProfile:
    """Mixed strategies for both players with their expected costs.

    Probability vectors are exact rationals over the full strategy list
    (zeros outside the support) and sum to one.
    """

    alice_probs: tuple[Fraction, ...]
    bob_probs: tuple[Fraction, ...]
    expected_cost_alice: Fraction
    expected_cost_bob: Fraction

    def support(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (
            tuple(i for i, p in enumerate(self.alice_probs) if p > 0),
            tuple(j for j, q in enumerate(self.bob_probs) if q > 0),
        )

    def is_pure(self) -> bool:
        sup_a, sup_b = self.support()
        return len(sup_a) == 1 and len(sup_b) == 1

    def to_json_obj(self) -> dict:
        from .games import value_to_json

        return {
            "alice_probs": [value_to_json(p) for p in self.alice_probs],
            "bob_probs": [value_to_json(q) for q in self.bob_probs],
            "expected_cost_alice": value_to_json(self.expected_cost_alice),
            "expected_cost_bob": value_to_json(self.expected_cost_bob),
        }


@dataclass(frozen=True)
class EquilibriumResult:
    """Everything the solvers found for one bimatrix."""

    strict_pure: tuple[PureProfile, ...]
    weak_pure: tuple[PureProfile, ...]
    mixed: tuple[MixedProfile, ...]
    selected: "PureProfile | MixedProfile | None"
    selected_by: str | None
    diagnostics: tuple[str, ...]

    def to_json_obj(self) -> dict:
        selected = None
        if self.selected is not None:
            selected = self.selected.to_json_obj()
        return {
            "strict_pure": [p.to_json_obj() for p in self.strict_pure],
            "weak_pure": [p.to_json_obj() for p in self.weak_pure],
            "mixed": [m.to_json_obj() for m in self.mixed],
            "selected": selected,
            "selected_by": self.selected_by,
            "diagnostics": list(self.diagnostics),
        }


def _profile(matrix: CostBimatrix, i: int, j: int) -> PureProfile:
    return PureProfile(i, j, matrix.row_labels[i], matrix.col_labels[j])


def pure_nash(matrix: CostBimatrix, mode: str = "weak") -> list[PureProfile]:
    """All pure equilibria, scanned cell by cell in row-major order.

    ``mode="weak"``: no unilateral deviation strictly lowers the
    deviator's cost. ``mode="strict"``: every deviation strictly raises it.
    """
    if mode not in ("weak", "strict"):
        raise DomainError(f"mode must be 'weak' or 'strict', got {mode!r}")
    size = matrix.size
    found = []
    for i in range(size):
        for j in range(size):
            a = matrix.cost_a(i, j)
            b = matrix.cost_b(i, j)
            if mode == "weak":
                ok_a = all(matrix.cost_a(r, j) >= a for r in range(size))
                ok_b = all(matrix.cost_b(i, c) >= b for c in range(size))
            else:
                ok_a = all(matrix.cost_a(r, j) > a for r in range(size) if r != i)
                ok_b = all(matrix.cost_b(i, c) > b for c in range(size) if c != j)
            if ok_a and ok_b:
                found.append(_profile(matrix, i, j))
    return found


def _weakly_dominates_row(matrix, r_new, r_old, cols) -> bool:
    le = all(matrix.cost_a(r_new, c) <= matrix.cost_a(r_old, c) for c in cols)
    lt = any(matrix.cost_a(r_new, c) < matrix.cost_a(r_old, c) for c in cols)
    return le and lt


def _weakly_dominates_col(matrix, c_new, c_old, rows) -> bool:
    le = all(matrix.cost_b(r, c_new) <= matrix.cost_b(r, c_old) for r in rows)
    lt = any(matrix.cost_b(r, c_new) < matrix.cost_b(r, c_old) for r in rows)
    return le and lt


def dominance_select(matrix: CostBimatrix) -> PureProfile | None:
    """Iterated elimination of weakly dominated strategies.

    Each round judges every row and every column against the matrix as
    it stood at the start of the round (rows first, then columns, both
    players simultaneously) and removes all strategies found weakly
    dominated. Returns the unique surviving cell, or ``None`` when more
    than one cell survives.
    """
    rows = list(range(matrix.size))
    cols = list(range(matrix.size))
    while True:
        dead_rows = [
            r
            for r in rows
            if any(r2 != r and _weakly_dominates_row(matrix, r2, r, cols) for r2 in rows)
        ]
        dead_cols = [
            c
            for c in cols
            if any(c2 != c and _weakly_dominates_col(matrix, c2, c, rows) for c2 in cols)
        ]
        if not dead_rows and not dead_cols:
            break
        rows = [r for r in rows if r not in dead_rows]
        cols = [c for c in cols if c not in dead_cols]
    if len(rows) == 1 and len(cols) == 1:
        return _profile(matrix, rows[0], cols[0])
    return None


def _as_fraction(x) -> Fraction:
    # Fraction(float) is the float's exact binary value: no rounding is
    # introduced, so the downstream solve stays exact and deterministic.
    return x if isinstance(x, Fraction) else Fraction(x)


def _solve_unique(rows: list[list[Fraction]]):
    """Gauss-Jordan on exact augmented rows.

    Returns ``("unique", solution)``, ``("inconsistent", None)`` or
    ``("singular", None)`` (non-unique solution set).
    """
    m = [row[:] for row in rows]
    n_unknowns = len(m[0]) - 1
    pivot_cols = []
    r = 0
    for c in range(n_unknowns):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][-1] != 0:
            return "inconsistent", None
    if len(pivot_cols) < n_unknowns:
        return "singular", None
    solution = [Fraction(0)] * n_unknowns
    for row_idx, c in enumerate(pivot_cols):
        solution[c] = m[row_idx][-1]
    return "unique", solution


def _indifference_mix(costs, chooser_support, mixer_support):
    """Opponent mix making ``chooser_support`` strategies equally costly.

    ``costs[i][j]`` is the chooser's cost when the chooser plays i and
    the mixer plays j. Unknowns: one probability per mixer-support
    strategy plus the common cost value. Returns (status, probs, value).
    """
    n_mix = len(mixer_support)
    rows = []
    for i in chooser_support:
        # sum_j costs[i][j] * q_j - v = 0
        rows.append([costs[i][j] for j in mixer_support] + [Fraction(-1), Fraction(0)])
    rows.append([Fraction(1)] * n_mix + [Fraction(0), Fraction(1)])  # probabilities sum to 1
    status, sol = _solve_unique(rows)
    if status != "unique":
        return status, None, None
    return "unique", sol[:n_mix], sol[n_mix]


def mixed_nash(matrix: CostBimatrix) -> list[MixedProfile]:
    """All mixed equilibria found by exact support enumeration."""
    profiles, _ = support_enumeration(matrix)
    return profiles


def support_enumeration(matrix: CostBimatrix):
    """Support enumeration with diagnostics.

    Iterates every pair of nonempty supports; on each, solves the two
    cost-indifference systems exactly, keeps solutions with nonnegative
    probabilities where no strategy outside the support achieves a
    strictly lower expected cost, merges duplicates, and sorts the
    result by support then probabilities. Supports whose indifference
    system has no unique solution are skipped and recorded in the
    returned diagnostics list.
    """
    size = matrix.size
    if size > MAX_MIXED_SIZE:
        raise DomainError(f"support enumeration is limited to {MAX_MIXED_SIZE}x{MAX_MIXED_SIZE} games")
    a = [[_as_fraction(matrix.cost_a(i, j)) for j in range(size)] for i in range(size)]
    b = [[_as_fraction(matrix.cost_b(i, j)) for j in range(size)] for i in range(size)]
    # Bob chooses columns; his cost as chooser is indexed [col][row].
    b_t = [[b[i][j] for i in range(size)] for j in range(size)]

    supports = [
        combo
        for r in range(1, size + 1)
        for combo in itertools.combinations(range(size), r)
    ]
    found = {}
    diagnostics = []
    for sup_a, sup_b in itertools.product(supports, supports):
        status_q, q, value_a = _indifference_mix(a, sup_a, sup_b)
        if status_q == "singular":
            diagnostics.append(_support_note(matrix, sup_a, sup_b, "column"))
            continue
        if status_q != "unique":
            continue
        status_p, p, value_b = _indifference_mix(b_t, sup_b, sup_a)
        if status_p == "singular":
            diagnostics.append(_support_note(matrix, sup_a, sup_b, "row"))
            continue
        if status_p != "unique":
            continue
        if any(x < 0 for x in p) or any(x < 0 for x in q):
            continue
        p_full = [Fraction(0)] * size
        q_full = [Fraction(0)] * size
        for idx, i in enumerate(sup_a):
            p_full[i] = p[idx]
        for idx, j in enumerate(sup_b):
            q_full[j] = q[idx]
        # No unsupported strategy may beat the support's common cost.
        if any(
            sum(a[r][j] * q_full[j] for j in range(size)) < value_a
            for r in range(size)
            if r not in sup_a
        ):
            continue
        if any(
            sum(b[i][c] * p_full[i] for i in range(size)) < value_b
            for c in range(size)
            if c not in sup_b
        ):
            continue
        profile = MixedProfile(tuple(p_full), tuple(q_full), value_a, value_b)
        found.setdefault((profile.alice_probs, profile.bob_probs), profile)

    ordered = sorted(
        found.values(),
        key=lambda pr: (pr.support(), pr.alice_probs, pr.bob_probs),
    )
    return ordered, diagnostics


def _support_note(matrix, sup_a, sup_b, side) -> str:
    rows = ",".join(matrix.row_labels[i] for i in sup_a)
    cols = ",".join(matrix.col_labels[j] for j in sup_b)
    return f"support ({{{rows}}},{{{cols}}}): singular {side}-mix indifference system, skipped"


def optimal_outcome(matrix: CostBimatrix):
    """Cells minimizing the two players' combined cost, with that minimum."""
    totals = [
        [matrix.cost_a(i, j) + matrix.cost_b(i, j) for j in range(matrix.size)]
        for i in range(matrix.size)
    ]
    best = min(t for row in totals for t in row)
    cells = [
        _profile(matrix, i, j)
        for i in range(matrix.size)
        for j in range(matrix.size)
        if totals[i][j] == best
    ]
    return cells, best


def solve(matrix: CostBimatrix) -> EquilibriumResult:
    """Run every solver and apply the selection convention.

    Selection order: the dominance-surviving cell when unique, else the
    unique strict pure equilibrium, else the unique mixed equilibrium,
    else nothing.
    """
    strict = tuple(pure_nash(matrix, "strict"))
    weak = tuple(pure_nash(matrix, "weak"))
    mixed, diagnostics = support_enumeration(matrix)
    mixed = tuple(mixed)

    selected = dominance_select(matrix)
    selected_by = "dominance" if selected is not None else None
    if selected is None and len(strict) == 1:
        selected, selected_by = strict[0], "unique_strict_pure"
    if selected is None and len(mixed) == 1:
        selected, selected_by = mixed[0], "unique_mixed"
    return EquilibriumResult(strict, weak, mixed, selected, selected_by, tuple(diagnostics))
