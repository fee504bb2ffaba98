"""Social-cost accounting: equilibrium cost, optimal cost, stability and anarchy ratios.

Totals follow the conventions under which the reference numbers of this
model are defined, and the two game modes genuinely differ:

* classical n-traveler games charge every lower-edge user the realized
  load, so with both free players there the k pinned users pay (k+2)/n
  each and the equilibrium total is (k+2)^2/n + (n-k-2);
* quantum n-traveler games add the two entangled players' expected
  costs to a profile-independent pinned-player total
  cl = k*(k/n) + (n-k-2)*1, i.e. the pinned lower-edge users are billed
  as if the entangled pair were absent.

Price of Stability = best equilibrium total / optimal total; Price of
Anarchy uses the worst equilibrium. Under the selection convention the
equilibrium-cost set has a single element, so the two ratios coincide
whenever they are defined.

Two optimal-cost conventions exist because the headline claims use
both: ``per_game`` takes the cheapest cell of the matrix at hand, and
``global_over_k`` takes the cheapest equilibrium total across the whole
admissible range of k for the same strategy set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .equilibria import EquilibriumResult, MixedProfile, PureProfile, solve
from .errors import DomainError
from .games import CostBimatrix, GameSpec, bimatrix, format_value, value_to_json

__all__ = [
    "GLOBAL_OVER_K",
    "PER_GAME",
    "MetricsReport",
    "SocialCostModel",
    "analyze",
    "classical_cost_ne",
    "classical_opt",
    "classical_pos_poa",
    "format_equilibrium_label",
    "profile_total",
    "report",
    "split_cost",
    "total_cost",
]

PER_GAME = "per_game"
GLOBAL_OVER_K = "global_over_k"


def _check_k_bounds(n: int, k: int) -> None:
    if n < 3 or not (0 <= k < n - 2):
        raise DomainError(f"need 0 <= k < n-2, got k={k}, n={n}")


@dataclass(frozen=True)
class SocialCostModel:
    """Pinned players' cost total for the quantum n-traveler convention."""

    n: int
    k: int

    def __post_init__(self):
        _check_k_bounds(self.n, self.k)

    @property
    def fixed_cost(self) -> Fraction:
        """k lower-edge users at k/n each plus (n-k-2) upper-edge users at 1."""
        return Fraction(self.k * self.k, self.n) + (self.n - self.k - 2)


def total_cost(profile_costs, model: SocialCostModel | None = None):
    """Both free players' costs plus the pinned players' total (0 without a model)."""
    a, b = profile_costs
    fixed = model.fixed_cost if model is not None else Fraction(0)
    return a + b + fixed


def classical_cost_ne(n: int, k: int) -> Fraction:
    """Equilibrium total of the classical n-traveler game: (k+2)^2/n + (n-k-2).

    Both free players join the k pinned users on the lower edge, so all
    k+2 of them pay (k+2)/n while n-k-2 stay on the upper edge at 1.
    """
    _check_k_bounds(n, k)
    return Fraction((k + 2) ** 2, n) + (n - k - 2)


def classical_pos_poa(n: int, k: int) -> Fraction:
    """Stability/anarchy ratio of the classical game, in closed form.

    Equals ``classical_cost_ne(n, k) / (3n/4)`` exactly; the equilibrium
    is unique so both ratios coincide.
    """
    _check_k_bounds(n, k)
    return Fraction(4 * (k * k - (n - 4) * k + n * n - 2 * n + 4), 3 * n * n)


def split_cost(n: int, upper_count) -> Fraction:
    """Total cost when ``upper_count`` travelers use the constant edge.

    The remaining n - upper_count share the load-dependent edge:
    f(p) = p + (n-p)^2 / n. Accepts fractional counts for plotting.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    p = Fraction(upper_count) if not isinstance(upper_count, float) else upper_count
    return p + (n - p) * (n - p) / Fraction(n)


def classical_opt(n: int) -> tuple[Fraction, Fraction]:
    """Optimal split and its total: half the traffic on each edge, cost 3n/4."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    half = Fraction(n, 2)
    return half, split_cost(n, half)


@dataclass(frozen=True)
class MetricsReport:
    """Cost of the selected equilibrium, the optimal cost, and their ratios."""

    cost_ne: "Fraction | float | None"
    cost_opt: "Fraction | float | None"
    pos: "Fraction | float | None"
    poa: "Fraction | float | None"
    k: int | None
    equilibrium: str | None

    def to_json_obj(self) -> dict:
        return {
            "cost_ne": value_to_json(self.cost_ne),
            "cost_opt": value_to_json(self.cost_opt),
            "pos": value_to_json(self.pos),
            "poa": value_to_json(self.poa),
            "k": self.k,
            "equilibrium": self.equilibrium,
        }

    def csv_row(self, axis: str, value) -> str:
        """One line of the sweep CSV schema (no header)."""

        def num(x):
            return "" if x is None else repr(float(x))

        label = "" if self.equilibrium is None else self.equilibrium
        return ",".join(
            [axis, _axis_value_text(value), num(self.cost_ne), num(self.cost_opt),
             num(self.pos), num(self.poa), label]
        )


def _axis_value_text(value) -> str:
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def format_equilibrium_label(profile) -> str | None:
    """Compact label: ``pure:(M,M)`` or ``mixed:(7/29,7/29,15/29)``."""
    if profile is None:
        return None
    if isinstance(profile, PureProfile):
        return f"pure:({profile.row_label},{profile.col_label})"
    probs = []
    for p in profile.alice_probs:
        # Exact fractions read well while their denominators are small;
        # float-derived monsters fall back to decimal.
        probs.append(str(p) if p.denominator <= 10**9 else repr(float(p)))
    return "mixed:(" + ",".join(probs) + ")"


def _social_model(spec: GameSpec) -> SocialCostModel | None:
    if spec.variant == "k_person" and spec.mode == "quantum":
        return SocialCostModel(spec.n, spec.k)
    return None


def _classical_cell_total(spec: GameSpec, profile: PureProfile):
    lower = (profile.row_label, profile.col_label).count("P2")
    k = spec.k or 0
    return split_cost(spec.n, spec.n - k - lower)


def profile_total(spec: GameSpec, matrix: CostBimatrix, profile):
    """Social cost of a profile under the spec's accounting convention."""
    if isinstance(profile, PureProfile):
        if spec.mode == "classical":
            return _classical_cell_total(spec, profile)
        costs = matrix.cell(profile.row, profile.col)
        return total_cost(costs, _social_model(spec))
    if isinstance(profile, MixedProfile):
        if spec.mode == "classical":
            # Expected realized total over the joint pure outcomes.
            return sum(
                pa * qb * _classical_cell_total(spec, PureProfile(i, j, matrix.row_labels[i], matrix.col_labels[j]))
                for i, pa in enumerate(profile.alice_probs)
                for j, qb in enumerate(profile.bob_probs)
                if pa and qb
            )
        costs = (profile.expected_cost_alice, profile.expected_cost_bob)
        return total_cost(costs, _social_model(spec))
    raise DomainError(f"cannot cost a profile of type {type(profile).__name__}")


def _per_game_opt(spec: GameSpec, matrix: CostBimatrix):
    totals = [
        profile_total(spec, matrix, PureProfile(i, j, matrix.row_labels[i], matrix.col_labels[j]))
        for i in range(matrix.size)
        for j in range(matrix.size)
    ]
    return min(totals)


def selected_equilibrium_total(spec: GameSpec):
    """Total cost of the selected equilibrium for ``spec`` (None if unselectable)."""
    matrix = bimatrix(spec)
    eq = solve(matrix)
    if eq.selected is None:
        return None
    return profile_total(spec, matrix, eq.selected)


def global_opt_over_k(spec: GameSpec, k_values: Iterable[int] | None = None):
    """Cheapest selected-equilibrium total across k for the same strategy set."""
    if spec.variant != "k_person":
        raise DomainError("the over-k optimum applies to the k-person variant only")
    ks = list(range(0, spec.n - 2)) if k_values is None else sorted(set(k_values))
    if not ks:
        raise DomainError("empty k range")
    totals = []
    for k in ks:
        variant = GameSpec(
            variant="k_person",
            mode=spec.mode,
            n=spec.n,
            k=k,
            gamma=spec.gamma,
            strategies=spec.strategies,
        )
        total = selected_equilibrium_total(variant)
        if total is not None:
            totals.append(total)
    if not totals:
        raise DomainError("no k in the range yields a selected equilibrium")
    return min(totals)


def report(
    spec: GameSpec,
    eq: EquilibriumResult,
    opt_convention: str | None = None,
    matrix: CostBimatrix | None = None,
) -> MetricsReport:
    """Assemble the metrics for a solved game.

    ``opt_convention`` defaults to ``per_game`` for the two-person
    variant and ``global_over_k`` for the k-person one, matching the
    context each headline number is quoted in.
    """
    if matrix is None:
        matrix = bimatrix(spec)
    if opt_convention is None:
        opt_convention = PER_GAME if spec.variant == "two_person" else GLOBAL_OVER_K
    if opt_convention not in (PER_GAME, GLOBAL_OVER_K):
        raise DomainError(f"unknown optimal-cost convention {opt_convention!r}")
    if opt_convention == GLOBAL_OVER_K and spec.variant != "k_person":
        raise DomainError("the over-k optimum applies to the k-person variant only")

    if opt_convention == PER_GAME:
        cost_opt = _per_game_opt(spec, matrix)
    else:
        cost_opt = global_opt_over_k(spec)

    if eq.selected is None:
        return MetricsReport(None, cost_opt, None, None, spec.k, None)
    cost_ne = profile_total(spec, matrix, eq.selected)
    ratio = cost_ne / cost_opt
    return MetricsReport(
        cost_ne=cost_ne,
        cost_opt=cost_opt,
        pos=ratio,
        poa=ratio,
        k=spec.k,
        equilibrium=format_equilibrium_label(eq.selected),
    )


def analyze(spec: GameSpec, opt_convention: str | None = None):
    """Convenience bundle: (bimatrix, equilibria, metrics) for a spec."""
    matrix = bimatrix(spec)
    eq = solve(matrix)
    metrics = report(spec, eq, opt_convention, matrix=matrix)
    return matrix, eq, metrics


def describe_metrics(metrics: MetricsReport) -> str:
    """One human-readable line: totals and ratios with exact values."""

    def text(x):
        return "-" if x is None else format_value(x)

    return (
        f"cost(NE) = {text(metrics.cost_ne)}, cost(OPT) = {text(metrics.cost_opt)}, "
        f"PoS = {text(metrics.pos)}, PoA = {text(metrics.poa)}"
    )
