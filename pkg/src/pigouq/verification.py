"""Self-contained reproduction checks for the library's reference numbers.

Every check rebuilds its game through public APIs and compares against
frozen expected values: the two-person cost grids, the n-traveler grids
in closed form, the protocol's outcome vectors, the mixed-equilibrium
closed form, the three k-sweep series, a batch of structural
properties, and sweep determinism. :func:`run_all` powers the CLI
``verify`` subcommand; the acceptance test suite asserts the same
checks one by one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .equilibria import dominance_select, mixed_nash, optimal_outcome, solve
from .ewl import GAMMA_MAX, ewl_outcomes
from .games import GameSpec, bimatrix, classical_bimatrix, quantum_bimatrix
from .linalg import is_unitary
from .metrics import (
    SocialCostModel,
    analyze,
    classical_cost_ne,
    classical_pos_poa,
    total_cost,
)
from .strategies import resolve, unitary_from_angles
from .sweeps import sweep_k

__all__ = ["CheckResult", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), "" if passed else detail)


F = Fraction
HALF = F(1, 2)
ONE = F(1)


def check_two_person_classical_grid() -> CheckResult:
    # Expected grid: sharing the lower edge costs 1 each, a lone lower-edge
    # user pays 1/2.
    expected = (((ONE, ONE), (ONE, HALF)), ((HALF, ONE), (ONE, ONE)))
    m = classical_bimatrix(GameSpec.classical_two_person())
    ok = m.cells == expected and m.row_labels == ("P1", "P2")
    return _result("two-person classical cost grid", ok, f"got {m.cells}")


def check_two_person_phase_strategy_game() -> CheckResult:
    # Maximal entanglement, strategy set (P1, P2, Q).
    spec = GameSpec.quantum_two_person(("P1", "P2", "Q"))
    expected = (
        ((ONE, ONE), (ONE, HALF), (ONE, ONE)),
        ((HALF, ONE), (ONE, ONE), (ONE, HALF)),
        ((ONE, ONE), (HALF, ONE), (ONE, ONE)),
    )
    matrix, eq, metrics = analyze(spec)
    problems = []
    if matrix.cells != expected:
        problems.append(f"cells {matrix.cells}")
    opt_cells, opt_total = optimal_outcome(matrix)
    opt_set = {(c.row_label, c.col_label) for c in opt_cells}
    if opt_set != {("P1", "P2"), ("P2", "P1"), ("P2", "Q"), ("Q", "P2")} or opt_total != F(3, 2):
        problems.append(f"optimal {opt_set} total {opt_total}")
    chosen = dominance_select(matrix)
    if chosen is None or (chosen.row_label, chosen.col_label) != ("Q", "Q"):
        problems.append(f"dominance {chosen}")
    if (metrics.cost_ne, metrics.cost_opt, metrics.pos, metrics.poa) != (F(2), F(3, 2), F(4, 3), F(4, 3)):
        problems.append(f"metrics {metrics}")
    return _result("two-person entangled grid, phase strategy", not problems, "; ".join(problems))


def check_two_person_miracle_strategy_game() -> CheckResult:
    spec = GameSpec.quantum_two_person(("P1", "P2", "M"))
    q34 = F(3, 4)
    expected = (
        ((ONE, ONE), (ONE, HALF), (ONE, q34)),
        ((HALF, ONE), (ONE, ONE), (ONE, q34)),
        ((q34, ONE), (q34, ONE), (F(7, 8), F(7, 8))),
    )
    matrix, eq, metrics = analyze(spec)
    problems = []
    if matrix.cells != expected:
        problems.append(f"cells {matrix.cells}")
    strict = [(p.row_label, p.col_label) for p in eq.strict_pure]
    if strict != [("M", "M")]:
        problems.append(f"strict {strict}")
    if (metrics.cost_ne, metrics.cost_opt, metrics.pos, metrics.poa) != (F(7, 4), F(3, 2), F(7, 6), F(7, 6)):
        problems.append(f"metrics {metrics}")
    opt_cells, opt_total = optimal_outcome(matrix)
    opt_set = {(c.row_label, c.col_label) for c in opt_cells}
    if opt_set != {("P1", "P2"), ("P2", "P1")} or opt_total != F(3, 2):
        problems.append(f"optimal {opt_set} total {opt_total}")
    return _result("two-person entangled grid, miracle strategy", not problems, "; ".join(problems))


def _expected_k_grid_phase(n: int, k: int):
    lone = F(k + 1, n)
    shared = F(k + 2, n)
    return (
        ((ONE, ONE), (ONE, lone), (shared, shared)),
        ((lone, ONE), (shared, shared), (ONE, lone)),
        ((shared, shared), (lone, ONE), (ONE, ONE)),
    )


def _expected_k_grid_miracle(n: int, k: int):
    lone = F(k + 1, n)
    shared = F(k + 2, n)
    mixed_hi = F(n + k + 2, 2 * n)
    mixed_lo = F(2 * k + 3, 2 * n)
    both = F(2 * n + 2 * k + 3, 4 * n)
    return (
        ((ONE, ONE), (ONE, lone), (mixed_hi, mixed_lo)),
        ((lone, ONE), (shared, shared), (mixed_hi, mixed_lo)),
        ((mixed_lo, mixed_hi), (mixed_lo, mixed_hi), (both, both)),
    )


def check_k_person_grids_closed_form(n: int = 10, k_values=range(1, 8)) -> CheckResult:
    problems = []
    for k in k_values:
        mq = quantum_bimatrix(GameSpec.quantum_k_person(n, k, ("P1", "P2", "Q")))
        if mq.cells != _expected_k_grid_phase(n, k):
            problems.append(f"phase grid k={k}")
        mm = quantum_bimatrix(GameSpec.quantum_k_person(n, k, ("P1", "P2", "M")))
        if mm.cells != _expected_k_grid_miracle(n, k):
            problems.append(f"miracle grid k={k}")
    return _result(
        f"n-traveler entangled grids match closed forms (n={n}, k=1..7)",
        not problems,
        "; ".join(problems),
    )


def check_protocol_outcome_vectors() -> CheckResult:
    problems = []
    d_id = ewl_outcomes(resolve("P1"), resolve("P1"), GAMMA_MAX)
    if any(abs(p - e) > 1e-12 for p, e in zip(d_id.as_tuple(), (1, 0, 0, 0))):
        problems.append(f"identity pair {d_id.as_tuple()}")
    d_mm = ewl_outcomes(resolve("M"), resolve("M"), GAMMA_MAX)
    if any(abs(p - 0.25) > 1e-12 for p in d_mm.as_tuple()):
        problems.append(f"miracle pair {d_mm.as_tuple()}")
    # The same pair inside the n=10, k=1 game: per-player cost 5/8,
    # total 8.35, ratio against the over-k optimum near 1.17.
    spec = GameSpec.quantum_k_person(10, 1, ("P1", "P2", "M"))
    matrix = quantum_bimatrix(spec)
    cell = matrix.cell(2, 2)
    if cell != (F(5, 8), F(5, 8)):
        problems.append(f"miracle-pair costs {cell}")
    total = total_cost(cell, SocialCostModel(10, 1))
    if total != F(167, 20):
        problems.append(f"total {total}")
    _, _, metrics = analyze(spec)
    if metrics.pos is None or abs(float(metrics.pos) - 1.17) > 0.005:
        problems.append(f"ratio {metrics.pos}")
    return _result("protocol outcome vectors and the n=10, k=1 miracle totals", not problems, "; ".join(problems))


def check_mixed_equilibrium_closed_form() -> CheckResult:
    problems = []
    n = 10
    spec = GameSpec.quantum_k_person(n, 1, ("P1", "P2", "Q"))
    matrix = bimatrix(spec)
    profiles = mixed_nash(matrix)
    full = [p for p in profiles if len(p.support()[0]) == 3 and len(p.support()[1]) == 3]
    expected = (F(7, 29), F(7, 29), F(15, 29))
    if len(full) != 1 or full[0].alice_probs != expected or full[0].bob_probs != expected:
        problems.append(f"full-support profiles {full}")
    elif full[0].expected_cost_alice != F(37, 58) or full[0].expected_cost_bob != F(37, 58):
        problems.append(f"expected cost {full[0].expected_cost_alice}")
    _, _, metrics = analyze(spec)
    if metrics.cost_ne != F(2429, 290):
        problems.append(f"total {metrics.cost_ne}")
    if metrics.cost_ne is None or abs(float(metrics.cost_ne) - 8.38) > 0.005:
        problems.append(f"total vs 8.38: {metrics.cost_ne}")
    # Closed form across k: the two path probabilities are both
    # m/(4m+1) with m = n-k-2, the phase strategy takes the rest.
    for k in range(1, 8):
        m = n - k - 2
        share = F(m, 4 * m + 1)
        expected_k = (share, share, 1 - 2 * share)
        profiles_k = mixed_nash(bimatrix(GameSpec.quantum_k_person(n, k, ("P1", "P2", "Q"))))
        if len(profiles_k) != 1 or profiles_k[0].alice_probs != expected_k:
            problems.append(f"k={k}: {profiles_k}")
    return _result("mixed equilibrium closed form across k", not problems, "; ".join(problems))


def check_classical_sweep_series() -> CheckResult:
    problems = []
    series = sweep_k("classical", ("P1", "P2"), 10, range(1, 8))
    costs = [r.cost_ne for r in series.reports]
    expected = [F(79, 10), F(38, 5), F(15, 2), F(38, 5), F(79, 10), F(42, 5), F(91, 10)]
    if costs != expected:
        problems.append(f"series {[float(c) for c in costs]}")
    argmin = {k for k, c in zip(series.values, costs) if c == min(costs)}
    if argmin != {3}:
        problems.append(f"argmin {argmin}")
    at3 = series.reports[list(series.values).index(3)]
    if at3.pos != ONE or at3.poa != ONE:
        problems.append(f"ratios at k=3: {at3.pos}, {at3.poa}")
    return _result("classical k-sweep series (n=10)", not problems, "; ".join(problems))


def check_phase_strategy_sweep_series() -> CheckResult:
    problems = []
    series = sweep_k("quantum", ("P1", "P2", "Q"), 10, range(1, 8), gamma=GAMMA_MAX)
    costs = [r.cost_ne for r in series.reports]
    printed = [8.38, 7.78, 7.38, 7.176, 7.177, 7.38, 7.78]
    for k, got, want in zip(series.values, costs, printed):
        if got is None or abs(float(got) - want) > 5e-3:
            problems.append(f"k={k}: {got} vs {want}")
    argmin = {k for k, c in zip(series.values, costs) if c == min(costs)}
    if argmin != {4}:
        problems.append(f"argmin {argmin}")
    profiles = mixed_nash(bimatrix(GameSpec.quantum_k_person(10, 4, ("P1", "P2", "Q"))))
    expected = (F(4, 17), F(4, 17), F(9, 17))
    if len(profiles) != 1 or profiles[0].alice_probs != expected:
        problems.append(f"k=4 profile {profiles}")
    return _result("entangled k-sweep series, phase strategy (n=10)", not problems, "; ".join(problems))


def check_miracle_strategy_sweep_series() -> CheckResult:
    problems = []
    series = sweep_k("quantum", ("P1", "P2", "M"), 10, range(1, 8), gamma=GAMMA_MAX)
    costs = [r.cost_ne for r in series.reports]
    expected = [F(167, 20), F(31, 4), F(147, 20), F(143, 20), F(143, 20), F(147, 20), F(31, 4)]
    if costs != expected:
        problems.append(f"series {costs}")
    for k in series.values:
        eq = solve(bimatrix(GameSpec.quantum_k_person(10, k, ("P1", "P2", "M"))))
        strict = [(p.row_label, p.col_label) for p in eq.strict_pure]
        if strict != [("M", "M")]:
            problems.append(f"k={k} strict {strict}")
    argmin = {k for k, c in zip(series.values, costs) if c == min(costs)}
    if argmin != {4, 5}:
        problems.append(f"argmin {argmin}")
    for k in (4, 5):
        rep = series.reports[list(series.values).index(k)]
        if rep.pos != ONE or rep.poa != ONE:
            problems.append(f"k={k} ratios {rep.pos}, {rep.poa}")
    return _result("entangled k-sweep series, miracle strategy (n=10)", not problems, "; ".join(problems))


def check_random_unitarity_and_normalization(draws: int = 1000) -> CheckResult:
    rng = np.random.default_rng(20250811)
    problems = []
    for _ in range(draws):
        theta_a, theta_b = rng.uniform(0, math.pi, size=2)
        phi_a, phi_b = rng.uniform(0, math.pi / 2, size=2)
        gamma = rng.uniform(0, GAMMA_MAX)
        ua = unitary_from_angles(theta_a, phi_a)
        ub = unitary_from_angles(theta_b, phi_b)
        if not is_unitary(ua, 1e-12) or not is_unitary(ub, 1e-12):
            problems.append(f"non-unitary at ({theta_a}, {phi_a})")
            break
        total = sum(ewl_outcomes(ua, ub, gamma).as_tuple())
        if abs(total - 1.0) > 1e-12:
            problems.append(f"normalization {total!r}")
            break
    return _result(f"unitarity and outcome normalization over {draws} random draws", not problems, "; ".join(problems))


def check_classical_limit() -> CheckResult:
    quantum = quantum_bimatrix(
        GameSpec(variant="two_person", mode="quantum", n=2, gamma=0.0, strategies=("P1", "P2"))
    )
    classical = classical_bimatrix(GameSpec.classical_two_person())
    ok = quantum.cells == classical.cells
    detail = f"{quantum.cells} vs {classical.cells}"
    if ok:
        for n, k in ((10, 1), (10, 4), (7, 2)):
            q = quantum_bimatrix(
                GameSpec(variant="k_person", mode="quantum", n=n, k=k, gamma=0.0, strategies=("P1", "P2"))
            )
            c = classical_bimatrix(GameSpec.classical_k_person(n, k))
            if q.cells != c.cells:
                ok, detail = False, f"n={n}, k={k}"
                break
    return _result("zero-entanglement grids equal the classical ones exactly", ok, detail)


def _all_reference_specs():
    yield GameSpec.classical_two_person()
    yield GameSpec.quantum_two_person(("P1", "P2", "Q"))
    yield GameSpec.quantum_two_person(("P1", "P2", "M"))
    for k in range(1, 8):
        yield GameSpec.classical_k_person(10, k)
        yield GameSpec.quantum_k_person(10, k, ("P1", "P2", "Q"))
        yield GameSpec.quantum_k_person(10, k, ("P1", "P2", "M"))
    yield GameSpec.quantum_two_person(("P1", "P2", "M"), gamma=0.3)


def check_bimatrix_symmetry() -> CheckResult:
    problems = []
    for spec in _all_reference_specs():
        m = bimatrix(spec)
        for i, j in product(range(m.size), repeat=2):
            ca, cb = m.cost_a(i, j), m.cost_b(j, i)
            if isinstance(ca, Fraction) and isinstance(cb, Fraction):
                bad = ca != cb
            else:
                bad = abs(float(ca) - float(cb)) > 1e-12
            if bad:
                problems.append(f"{spec.describe()} at ({i},{j})")
    return _result("cost grids are exchange-symmetric", not problems, "; ".join(problems[:4]))


def _grid_deviation_gap(matrix, profile, step: int = 200) -> float:
    """Largest cost saving any 1/step-grid deviation offers either player."""
    size = matrix.size
    a = np.array([[float(matrix.cost_a(i, j)) for j in range(size)] for i in range(size)])
    b = np.array([[float(matrix.cost_b(i, j)) for j in range(size)] for i in range(size)])
    p = np.array([float(x) for x in profile.alice_probs])
    q = np.array([float(x) for x in profile.bob_probs])

    if size == 2:
        grid = np.array([[i / step, 1 - i / step] for i in range(step + 1)])
    else:
        grid = np.array(
            [
                [i / step, j / step, (step - i - j) / step]
                for i in range(step + 1)
                for j in range(step + 1 - i)
            ]
        )
    row_costs = a @ q  # Alice's pure-strategy costs against Bob's mix
    col_costs = b.T @ p  # Bob's pure-strategy costs against Alice's mix
    gap_a = float(p @ row_costs - np.min(grid @ row_costs))
    gap_b = float(q @ col_costs - np.min(grid @ col_costs))
    return max(gap_a, gap_b)


def check_mixed_profiles_against_grid_oracle() -> CheckResult:
    problems = []
    specs = [
        GameSpec.classical_two_person(),
        GameSpec.quantum_two_person(("P1", "P2", "Q")),
        GameSpec.quantum_two_person(("P1", "P2", "M")),
    ]
    for k in range(1, 8):
        specs.append(GameSpec.quantum_k_person(10, k, ("P1", "P2", "Q")))
        specs.append(GameSpec.quantum_k_person(10, k, ("P1", "P2", "M")))
    for spec in specs:
        matrix = bimatrix(spec)
        for profile in mixed_nash(matrix):
            gap = _grid_deviation_gap(matrix, profile)
            if gap > 1e-9:
                problems.append(f"{spec.describe()}: gap {gap}")
    return _result("every mixed profile survives the 1/200-grid deviation oracle", not problems, "; ".join(problems))


def check_ratio_identity() -> CheckResult:
    problems = []
    for n in (5, 10, 20):
        opt = F(3 * n, 4)
        for k in range(0, n - 2):
            if classical_pos_poa(n, k) != classical_cost_ne(n, k) / opt:
                problems.append(f"n={n}, k={k}")
    return _result("closed-form ratio equals equilibrium total over 3n/4 exactly", not problems, "; ".join(problems))


def check_property_batch() -> CheckResult:
    # Bundles the structural properties into one verify line.
    parts = [
        check_random_unitarity_and_normalization(),
        check_classical_limit(),
        check_bimatrix_symmetry(),
        check_mixed_profiles_against_grid_oracle(),
        check_ratio_identity(),
    ]
    bad = [p for p in parts if not p.passed]
    return _result(
        "property batch: normalization, classical limit, symmetry, grid oracle, ratio identity",
        not bad,
        "; ".join(f"{p.name}: {p.detail}" for p in bad),
    )


def check_sweep_determinism() -> CheckResult:
    first = sweep_k("quantum", ("P1", "P2", "Q"), 10, range(1, 8), gamma=GAMMA_MAX).to_csv()
    second = sweep_k("quantum", ("P1", "P2", "Q"), 10, range(1, 8), gamma=GAMMA_MAX).to_csv()
    return _result("repeated sweeps produce byte-identical CSV", first == second)


def run_all() -> list[CheckResult]:
    checks = [
        check_two_person_classical_grid,
        check_two_person_phase_strategy_game,
        check_two_person_miracle_strategy_game,
        check_k_person_grids_closed_form,
        check_protocol_outcome_vectors,
        check_mixed_equilibrium_closed_form,
        check_classical_sweep_series,
        check_phase_strategy_sweep_series,
        check_miracle_strategy_sweep_series,
        check_property_batch,
        check_sweep_determinism,
    ]
    results = []
    for check in checks:
        try:
            results.append(check())
        except Exception as exc:  # a crash is a failed check, not a crash of verify
            results.append(CheckResult(check.__name__, False, f"raised {exc!r}"))
    return results
