"""Worked application families: antenna placement and cluster co-tilers.

Antenna problems ask for {0,1} configurations whose broadcast counts are
exactly b on antenna cells and a elsewhere; such configurations are
periodized by the range polynomial minus (b - a), so its line-factor
structure classifies all solutions. Cluster co-tilers are exact covers of
the grid by translates of a finite tile; they form a low-complexity SFT
with one allowed pattern per tile cell.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LaurentPoly, ZZ
from .configuration import Pattern, Shape, TorusConfig, apply_poly
from .errors import InvalidAlphabet
from .linestructure import PeriodicityVerdict, classify
from .sft import Budget, Decision, NONEMPTY, SftSpec, decide


@dataclass(frozen=True)
class AntennaProblem:
    """Broadcast range D; a broadcasts received at non-antenna cells and b
    at antenna cells."""

    shape: Shape
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("broadcast counts must be non-negative")


@dataclass(frozen=True)
class ClusterTile:
    shape: Shape


def antenna_polynomial(problem: AntennaProblem) -> LaurentPoly:
    """Range-sum polynomial minus (b - a), over Z."""
    terms = {cell: 1 for cell in problem.shape.cells}
    f = LaurentPoly(ZZ, terms)
    return f - LaurentPoly.constant(ZZ, problem.b - problem.a)


def antenna_classify(problem: AntennaProblem) -> PeriodicityVerdict:
    """Periodicity forced on every solution of the antenna problem.

    The range polynomial minus (b - a) maps any solution to the constant-a
    configuration, so it periodizes every solution and its line-factor
    structure applies.
    """
    return classify(antenna_polynomial(problem), role="periodizes")


def antenna_verify(config: TorusConfig, problem: AntennaProblem) -> bool:
    """Exact check that the torus solves the antenna problem: the range
    sum at every cell equals (b - a) * c + a."""
    if not config.alphabet <= {0, 1}:
        raise InvalidAlphabet("antenna configurations are over {0, 1}")
    range_sum = LaurentPoly(ZZ, {cell: 1 for cell in problem.shape.cells})
    product = apply_poly(range_sum, config)
    d = problem.b - problem.a
    for cell in config.fundamental_cells():
        if product.value_at(cell) != d * config.value_at(cell) + problem.a:
            return False
    return True


def cotiler_sft(tile: ClusterTile, alphabet=(0, 1)) -> SftSpec:
    """Co-tiler SFT of a cluster tile: over the reflected shape, the
    allowed patterns are exactly those containing a single 1."""
    shape = tile.shape.negate()
    allowed = set()
    for i in range(len(shape)):
        values = [0] * len(shape)
        values[i] = 1
        allowed.add(Pattern(shape, tuple(values)))
    return SftSpec(shape, alphabet, allowed)


def exact_cover_on_torus(tile: ClusterTile, config: TorusConfig) -> bool:
    """Every cell covered exactly once by tile translates placed at the
    1-cells of the torus configuration."""
    if not config.alphabet <= {0, 1}:
        raise InvalidAlphabet("co-tiler configurations are over {0, 1}")
    for u in config.fundamental_cells():
        covers = sum(
            1 for d in tile.shape.cells if config.value_at((u[0] - d[0], u[1] - d[1])) == 1
        )
        if covers != 1:
            return False
    return True


def find_periodic_cotiler(tile: ClusterTile, budget: Budget = Budget()) -> TorusConfig | None:
    """Search for a periodic co-tiler of the tile; the witness additionally
    passes an exact-cover re-check."""
    decision = decide(cotiler_sft(tile), budget)
    if decision.kind != NONEMPTY:
        return None
    witness = decision.witness
    if not exact_cover_on_torus(tile, witness):
        raise AssertionError("co-tiler witness failed the exact-cover re-check")
    return witness


def cotiler_decision(tile: ClusterTile, budget: Budget = Budget()) -> Decision:
    """Full decision object for the co-tiler SFT (used by the CLI)."""
    return decide(cotiler_sft(tile), budget)
