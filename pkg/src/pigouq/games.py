"""Cost model of the two-edge congestion network and its strategy-form matrices.

The network routes ``n`` travelers from a source to a sink over two
parallel edges: the upper edge costs 1 regardless of load, the lower
edge costs x/n when x travelers use it. Two free players (row = Alice,
column = Bob) choose edges. In the n-traveler variant the behaviour of
the other n-2 players is pinned: k of them (k < n-2) sit on the lower
edge and the rest on the upper one, which shifts the free players'
marginal costs -- a lone free player on the lower edge pays (k+1)/n,
both together pay (k+2)/n each.

Quantum games weight those same per-outcome costs by the protocol's
outcome distribution. Cell costs are exact ``fractions.Fraction``
values whenever every outcome probability snaps to a dyadic value
(which covers all named-strategy games at gamma in {0, pi/2}); otherwise
cells degrade to floats.

A quirk worth knowing about the phase strategy Q: under maximal
entanglement, Q against P1 lands both players on the lower edge while
Q against P2 sends the Q player to the upper edge, so its row and
column are not mirror images of the P2 ones. That is what the protocol
produces; "a path choice with a phase" is an interpretation, not a
derivation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import DomainError
from .ewl import GAMMA_MAX, ewl_outcomes, validate_gamma
from .strategies import resolve, strategy_label

__all__ = [
    "CostAssignment",
    "CostBimatrix",
    "GameSpec",
    "PigouNetwork",
    "bimatrix",
    "classical_bimatrix",
    "cost_assignment",
    "quantum_bimatrix",
    "snap_probability",
    "value_to_json",
]

#: Probabilities the protocol produces exactly for named-strategy games.
PROB_SNAP_TARGETS = (
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(1),
)

PROB_SNAP_TOL = 1e-10


def snap_probability(p: float, tol: float = PROB_SNAP_TOL):
    """Replace ``p`` by the exact rational it is within ``tol`` of, if any.

    Returns a :class:`Fraction` on a hit and the float unchanged otherwise.
    """
    for target in PROB_SNAP_TARGETS:
        if abs(p - target) <= tol:
            return target
    return p


@dataclass(frozen=True)
class PigouNetwork:
    """The two-edge network: upper edge cost 1, lower edge cost x/n."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"network needs at least 2 travelers, got {self.n}")

    def upper_cost(self, load: int) -> Fraction:
        return Fraction(1)

    def lower_cost(self, load: int) -> Fraction:
        return Fraction(load, self.n)


@dataclass(frozen=True)
class CostAssignment:
    """One player's cost for each joint path outcome (00, 01, 10, 11)."""

    c00: Fraction
    c01: Fraction
    c10: Fraction
    c11: Fraction

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c00, self.c01, self.c10, self.c11)


@dataclass(frozen=True)
class GameSpec:
    """Which game to build: variant, population, entanglement, strategy set."""

    variant: Literal["two_person", "k_person"]
    mode: Literal["classical", "quantum"]
    n: int
    k: int | None = None
    gamma: float | None = None
    strategies: tuple = ("P1", "P2")

    def __post_init__(self):
        if self.variant not in ("two_person", "k_person"):
            raise DomainError(f"unknown variant {self.variant!r}")
        if self.mode not in ("classical", "quantum"):
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.variant == "two_person":
            if self.n != 2:
                raise DomainError("the two-person game fixes n = 2")
            if self.k is not None:
                raise DomainError("the two-person game takes no pinned-player count k")
        else:
            if self.k is None:
                raise DomainError("the k-person game requires k")
            if self.n < 3:
                raise DomainError("the k-person game requires n >= 3")
            if not (0 <= self.k < self.n - 2):
                raise DomainError(
                    f"pinned lower-edge count must satisfy 0 <= k < n-2, got k={self.k}, n={self.n}"
                )
        if not self.strategies:
            raise DomainError("strategy list must be nonempty")
        labels = [strategy_label(s) for s in self.strategies]
        if len(set(labels)) != len(labels):
            raise DomainError(f"duplicate strategies in {labels}")
        if self.mode == "classical":
            if self.gamma is not None:
                raise DomainError("classical games take no entanglement angle")
            if not set(labels) <= {"P1", "P2"}:
                raise DomainError("classical strategies are limited to P1 and P2")
        else:
            if self.gamma is None:
                raise DomainError("quantum games require an entanglement angle")
            validate_gamma(self.gamma)

    @classmethod
    def classical_two_person(cls) -> "GameSpec":
        return cls(variant="two_person", mode="classical", n=2)

    @classmethod
    def classical_k_person(cls, n: int, k: int) -> "GameSpec":
        return cls(variant="k_person", mode="classical", n=n, k=k)

    @classmethod
    def quantum_two_person(cls, strategies=("P1", "P2", "Q"), gamma: float = GAMMA_MAX) -> "GameSpec":
        return cls(variant="two_person", mode="quantum", n=2, gamma=gamma, strategies=tuple(strategies))

    @classmethod
    def quantum_k_person(
        cls, n: int, k: int, strategies=("P1", "P2", "Q"), gamma: float = GAMMA_MAX
    ) -> "GameSpec":
        return cls(
            variant="k_person", mode="quantum", n=n, k=k, gamma=gamma, strategies=tuple(strategies)
        )

    def strategy_labels(self) -> tuple[str, ...]:
        return tuple(strategy_label(s) for s in self.strategies)

    def describe(self) -> str:
        bits = [self.mode, self.variant.replace("_", "-")]
        bits.append(f"n={self.n}")
        if self.k is not None:
            bits.append(f"k={self.k}")
        if self.gamma is not None:
            bits.append(f"gamma={self.gamma:.6g}")
        bits.append("strategies=" + ",".join(self.strategy_labels()))
        return " ".join(bits)


@dataclass(frozen=True)
class CostBimatrix:
    """Square grid of (row cost, column cost) pairs over a strategy list.

    Entries are Fractions where exact, floats otherwise; all positive.
    """

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    cells: tuple  # cells[i][j] = (cost_row, cost_col)

    def __post_init__(self):
        if len(self.row_labels) != len(self.col_labels):
            raise DomainError("cost bimatrix must be square")
        if len(self.cells) != len(self.row_labels) or any(
            len(row) != len(self.col_labels) for row in self.cells
        ):
            raise DomainError("cell grid does not match strategy labels")
        for row in self.cells:
            for a, b in row:
                if not (a > 0 and b > 0):
                    raise DomainError(f"cost entries must be positive, got ({a}, {b})")

    @property
    def size(self) -> int:
        return len(self.row_labels)

    def cell(self, i: int, j: int):
        return self.cells[i][j]

    def cost_a(self, i: int, j: int):
        return self.cells[i][j][0]

    def cost_b(self, i: int, j: int):
        return self.cells[i][j][1]

    def to_json_obj(self) -> dict:
        return {
            "rows": list(self.row_labels),
            "cols": list(self.col_labels),
            "cells": [
                [{"a": value_to_json(a), "b": value_to_json(b)} for a, b in row]
                for row in self.cells
            ],
        }

    def to_text_table(self) -> str:
        """Aligned text rendering with exact entries."""
        body = [[f"({format_value(a)}, {format_value(b)})" for a, b in row] for row in self.cells]
        headers = [""] + list(self.col_labels)
        table = [headers] + [[label] + line for label, line in zip(self.row_labels, body)]
        widths = [max(len(r[c]) for r in table) for c in range(len(headers))]
        return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in table)


def format_value(x) -> str:
    """Exact text for a Fraction, shortest round-trip for a float."""
    if isinstance(x, Fraction):
        return str(x)
    return repr(float(x))


def value_to_json(x):
    """JSON encoding: Fractions become {"num": ..., "den": ...}, floats stay floats."""
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    if x is None:
        return None
    return float(x)


def cost_assignment(spec: GameSpec) -> tuple[CostAssignment, CostAssignment]:
    """Per-outcome costs (Alice's, Bob's) for the spec's network variant.

    Outcome bits: Alice's path first. With k pinned lower-edge users out
    of n, a lone free user there faces load k+1 and a shared lower edge
    load k+2; the two-person game is the k=0, n=2 instance (a lone
    lower-edge user pays 1/2, everything else costs 1).
    """
    net = PigouNetwork(spec.n)
    k = spec.k if spec.variant == "k_person" else 0
    one = net.upper_cost(1)
    lone = net.lower_cost(k + 1)
    shared = net.lower_cost(k + 2)
    alice = CostAssignment(one, one, lone, shared)
    bob = CostAssignment(one, lone, one, shared)
    return alice, bob


def classical_bimatrix(spec: GameSpec) -> CostBimatrix:
    """The 2x2 cost grid over {P1, P2} for a classical spec."""
    if spec.mode != "classical":
        raise DomainError("classical_bimatrix requires a classical game spec")
    alice, bob = cost_assignment(spec)
    a, b = alice.as_tuple(), bob.as_tuple()
    # Outcome index = 2*row_bit + col_bit with P1 -> 0, P2 -> 1.
    cells = tuple(
        tuple((a[2 * i + j], b[2 * i + j]) for j in range(2)) for i in range(2)
    )
    return CostBimatrix(("P1", "P2"), ("P1", "P2"), cells)


def quantum_bimatrix(spec: GameSpec) -> CostBimatrix:
    """Expected-cost grid over the spec's strategy set under the protocol.

    Each cell runs the entangling protocol for that strategy pair and
    weights the per-outcome costs by the resulting distribution.
    Probabilities within 1e-10 of {0, 1/4, 1/2, 3/4, 1} are snapped to
    those exact rationals first, so named-strategy games at gamma in
    {0, pi/2} produce exact Fraction cells.
    """
    if spec.mode != "quantum":
        raise DomainError("quantum_bimatrix requires a quantum game spec")
    alice, bob = cost_assignment(spec)
    labels = spec.strategy_labels()
    matrices = [resolve(s) for s in spec.strategies]
    rows = []
    for ua in matrices:
        row = []
        for ub in matrices:
            dist = ewl_outcomes(ua, ub, spec.gamma)
            probs = [snap_probability(p) for p in dist.as_tuple()]
            ca = sum(p * c for p, c in zip(probs, alice.as_tuple()))
            cb = sum(p * c for p, c in zip(probs, bob.as_tuple()))
            row.append((ca, cb))
        rows.append(tuple(row))
    return CostBimatrix(labels, labels, tuple(rows))


def bimatrix(spec: GameSpec) -> CostBimatrix:
    """Build the spec's cost bimatrix, classical or quantum."""
    if spec.mode == "classical":
        return classical_bimatrix(spec)
    return quantum_bimatrix(spec)
