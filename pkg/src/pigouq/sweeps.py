"""Parameter sweeps over the pinned-player count k and the entanglement angle.

Sweeps emit figure-ready data, not figures: CSV with the fixed header

    axis,value,cost_ne,cost_opt,pos,poa,equilibrium

and a JSON mirror that keeps full-precision rationals. Points are
independent pure computations, so reruns are byte-identical; a k-sweep's
optimal cost is the cheapest equilibrium total across the requested
range (the over-k convention), while a gamma-sweep prices each matrix
against its own cheapest cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .equilibria import solve
from .errors import DomainError
from .ewl import validate_gamma
from .games import GameSpec, bimatrix, value_to_json
from .metrics import (
    MetricsReport,
    PER_GAME,
    format_equilibrium_label,
    profile_total,
    report,
)

__all__ = [
    "CSV_HEADER",
    "SweepSeries",
    "series_to_csv",
    "series_to_json_obj",
    "sweep_gamma",
    "sweep_k",
]

CSV_HEADER = "axis,value,cost_ne,cost_opt,pos,poa,equilibrium"


@dataclass(frozen=True)
class SweepSeries:
    """One report per axis value, plus the game context that produced them."""

    axis: str
    values: tuple
    reports: tuple[MetricsReport, ...]
    meta: tuple  # ordered (key, value) pairs describing the game

    def __post_init__(self):
        if len(self.values) != len(self.reports):
            raise DomainError("one report per axis value required")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise DomainError("axis values must be strictly increasing")

    def to_csv(self) -> str:
        return series_to_csv(self)

    def to_json_obj(self) -> dict:
        return series_to_json_obj(self)


def sweep_k(
    mode: str,
    strategies,
    n: int,
    k_values: Iterable[int] | None = None,
    gamma: float | None = None,
) -> SweepSeries:
    """Solve the n-traveler game for every requested k.

    ``k_values`` defaults to 1..n-3 inclusive; 0 is accepted when asked
    for. The per-point optimal cost is shared: the minimum equilibrium
    total over the requested range. ``gamma`` is required for quantum
    mode and forbidden for classical.
    """
    if k_values is None:
        k_values = range(1, n - 2)
    ks = sorted(set(int(k) for k in k_values))
    if not ks:
        raise DomainError("empty k range")
    if any(not (0 <= k < n - 2) for k in ks):
        raise DomainError(f"k range must lie within 0..{n - 3} for n={n}")

    specs = [
        GameSpec(
            variant="k_person",
            mode=mode,
            n=n,
            k=k,
            gamma=gamma,
            strategies=tuple(strategies),
        )
        for k in ks
    ]
    solved = []
    for spec in specs:
        matrix = bimatrix(spec)
        eq = solve(matrix)
        total = (
            profile_total(spec, matrix, eq.selected) if eq.selected is not None else None
        )
        solved.append((spec, eq, total))

    totals = [total for _, _, total in solved if total is not None]
    if not totals:
        raise DomainError("no k in the range yields a selected equilibrium")
    opt = min(totals)

    reports = []
    for spec, eq, total in solved:
        if total is None:
            reports.append(MetricsReport(None, opt, None, None, spec.k, None))
            continue
        ratio = total / opt
        reports.append(
            MetricsReport(total, opt, ratio, ratio, spec.k, format_equilibrium_label(eq.selected))
        )
    meta = _meta(mode=mode, variant="k_person", n=n, gamma=gamma, strategies=specs[0].strategy_labels())
    return SweepSeries("k", tuple(ks), tuple(reports), meta)


def sweep_gamma(
    strategies,
    gamma_values: Iterable[float],
    n: int = 2,
    k: int | None = None,
) -> SweepSeries:
    """Solve the quantum game across entanglement angles.

    ``n=2`` with ``k=None`` runs the two-person game; otherwise the
    n-traveler game at the given k. Each point is priced against its own
    matrix (per-game optimum).
    """
    gammas = sorted(set(float(g) for g in gamma_values))
    if not gammas:
        raise DomainError("empty gamma range")
    for g in gammas:
        validate_gamma(g)

    variant = "two_person" if k is None else "k_person"
    reports = []
    for g in gammas:
        spec = GameSpec(
            variant=variant,
            mode="quantum",
            n=n,
            k=k,
            gamma=g,
            strategies=tuple(strategies),
        )
        matrix = bimatrix(spec)
        eq = solve(matrix)
        reports.append(report(spec, eq, PER_GAME, matrix=matrix))
    labels = GameSpec(
        variant=variant, mode="quantum", n=n, k=k, gamma=gammas[0], strategies=tuple(strategies)
    ).strategy_labels()
    meta = _meta(mode="quantum", variant=variant, n=n, k=k, strategies=labels)
    return SweepSeries("gamma", tuple(gammas), tuple(reports), meta)


def _meta(**kwargs) -> tuple:
    items = []
    for key, value in kwargs.items():
        if value is None:
            continue
        if key == "strategies":
            value = ",".join(value)
        items.append((key, value))
    return tuple(items)


def series_to_csv(series: SweepSeries) -> str:
    lines = [CSV_HEADER]
    for value, rep in zip(series.values, series.reports):
        lines.append(rep.csv_row(series.axis, value))
    return "\n".join(lines) + "\n"


def series_to_json_obj(series: SweepSeries) -> dict:
    return {
        "axis": series.axis,
        "meta": {key: value for key, value in series.meta},
        "points": [
            {"value": value_to_json(value) if not isinstance(value, int) else value, **rep.to_json_obj()}
            for value, rep in zip(series.values, series.reports)
        ],
    }
