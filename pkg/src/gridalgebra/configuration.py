"""Finite representations of grid colorings and their pattern statistics.

Two finite carriers are provided. A ``Patch`` is a rectangular sample of
an unknown configuration: everything computed from it is a statement about
the observed region only. A ``TorusConfig`` is a fully two-periodic
configuration given by one fundamental domain, so checks on it are exact
statements about the corresponding infinite configuration.

The convolution convention is (f c)_u = sum_v f_v c_{u-v}, matching the
translation convention tau^t(c)_u = c_{u-t}; pattern-vector inner products
therefore pair cell d with coefficient f_{-d}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ExponentVector, LaurentPoly
from .errors import EmptyValidRegion, ShapeTooLarge, ZeroPolynomial


class Shape:
    """Finite non-empty set of cells, stored in canonical (u2, u1) order."""

    __slots__ = ("cells",)

    def __init__(self, cells):
        uniq = sorted({(int(c[0]), int(c[1])) for c in cells}, key=lambda c: (c[1], c[0]))
        if not uniq:
            raise ValueError("a shape needs at least one cell")
        object.__setattr__(self, "cells", tuple(uniq))

    def __setattr__(self, name, value):
        raise AttributeError("Shape is immutable")

    @classmethod
    def rectangle(cls, n: int, m: int) -> "Shape":
        if n < 1 or m < 1:
            raise ValueError("rectangle sides must be positive")
        return cls((i, j) for i in range(n) for j in range(m))

    @classmethod
    def plus(cls) -> "Shape":
        return cls([(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)])

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __contains__(self, cell) -> bool:
        return tuple(cell) in set(self.cells)

    def __eq__(self, other) -> bool:
        return isinstance(other, Shape) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Shape({list(self.cells)})"

    def bounding_box(self) -> tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y) of the cell set."""
        xs = [c[0] for c in self.cells]
        ys = [c[1] for c in self.cells]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def extent(self) -> int:
        x0, y0, x1, y1 = self.bounding_box()
        return max(x1 - x0 + 1, y1 - y0 + 1)

    def translate(self, t: ExponentVector) -> "Shape":
        return Shape((c[0] + t[0], c[1] + t[1]) for c in self.cells)

    def negate(self) -> "Shape":
        return Shape((-c[0], -c[1]) for c in self.cells)


class Pattern:
    """Assignment of symbols on a shape, values aligned with cell order."""

    __slots__ = ("shape", "values")

    def __init__(self, shape: Shape, values):
        if isinstance(values, dict):
            missing = [c for c in shape.cells if c not in values]
            if missing or len(values) != len(shape):
                raise ValueError("values must be defined on exactly the shape cells")
            vals = tuple(values[c] for c in shape.cells)
        else:
            vals = tuple(values)
            if len(vals) != len(shape):
                raise ValueError("value tuple length must match the shape size")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("Pattern is immutable")

    def value_at(self, cell) -> int:
        return self.values[self.shape.cells.index(tuple(cell))]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Pattern)
            and self.shape == other.shape
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.values))

    def __repr__(self) -> str:
        return f"Pattern({self.values})"


def _canon_value(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class Patch:
    """Rectangular sample of a configuration; rows[j][i] holds the symbol
    at cell (origin_x + i, origin_y + j)."""

    __slots__ = ("origin", "width", "height", "rows", "alphabet")

    def __init__(self, origin: ExponentVector, rows):
        rows = tuple(tuple(_canon_value(v) for v in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("patch must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "origin", (int(origin[0]), int(origin[1])))
        object.__setattr__(self, "width", len(rows[0]))
        object.__setattr__(self, "height", len(rows))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "alphabet", frozenset(v for row in rows for v in row))

    def __setattr__(self, name, value):
        raise AttributeError("Patch is immutable")

    def __contains__(self, cell) -> bool:
        x, y = cell
        ox, oy = self.origin
        return ox <= x < ox + self.width and oy <= y < oy + self.height

    def value_at(self, cell):
        x, y = cell
        ox, oy = self.origin
        if not (ox <= x < ox + self.width and oy <= y < oy + self.height):
            raise KeyError(f"cell {cell} outside the patch")
        return self.rows[y - oy][x - ox]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Patch)
            and self.origin == other.origin
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.origin, self.rows))

    def __repr__(self) -> str:
        return f"Patch(origin={self.origin}, {self.width}x{self.height})"


class TorusConfig:
    """Fully two-periodic configuration with periods (k,0) and (0,l);
    rows[j][i] is the symbol at (i, j) for 0 <= i < k, 0 <= j < l."""

    __slots__ = ("k", "l", "rows", "alphabet")

    def __init__(self, rows):
        rows = tuple(tuple(_canon_value(v) for v in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("torus must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "k", len(rows[0]))
        object.__setattr__(self, "l", len(rows))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "alphabet", frozenset(v for row in rows for v in row))

    def __setattr__(self, name, value):
        raise AttributeError("TorusConfig is immutable")

    @classmethod
    def constant(cls, value, k: int = 1, l: int = 1) -> "TorusConfig":
        return cls([[value] * k for _ in range(l)])

    @classmethod
    def checkerboard(cls) -> "TorusConfig":
        return cls([[0, 1], [1, 0]])

    def value_at(self, cell):
        x, y = cell
        return self.rows[y % self.l][x % self.k]

    def fundamental_cells(self):
        for j in range(self.l):
            for i in range(self.k):
                yield (i, j)

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusConfig) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"TorusConfig({self.k}x{self.l})"


Source = Patch | TorusConfig


# -- pattern extraction and complexity -----------------------------------


def _patch_positions(patch: Patch, shape: Shape):
    x0, y0, x1, y1 = shape.bounding_box()
    ox, oy = patch.origin
    tx_lo, tx_hi = ox - x0, ox + patch.width - 1 - x1
    ty_lo, ty_hi = oy - y0, oy + patch.height - 1 - y1
    if tx_lo > tx_hi or ty_lo > ty_hi:
        raise ShapeTooLarge(
            f"no translate of the shape fits inside the {patch.width}x{patch.height} patch"
        )
    for ty in range(ty_lo, ty_hi + 1):
        for tx in range(tx_lo, tx_hi + 1):
            yield (tx, ty)


def extract_patterns(source: Source, shape: Shape) -> set[Pattern]:
    """All shape-patterns appearing in the source.

    For a torus this equals the pattern set of the infinite configuration;
    for a patch it covers exactly the fully contained translates.
    """
    out = set()
    if isinstance(source, TorusConfig):
        positions = source.fundamental_cells()
    else:
        positions = _patch_positions(source, shape)
    for t in positions:
        out.add(
            Pattern(shape, tuple(source.value_at((t[0] + c[0], t[1] + c[1])) for c in shape.cells))
        )
    return out


def complexity(source: Source, shape: Shape) -> tuple[int, bool]:
    """Number of distinct shape-patterns and the low-complexity flag
    (count <= number of cells)."""
    count = len(extract_patterns(source, shape))
    return count, count <= len(shape)


def rectangle_complexity_profile(
    source: Source, nmax: int, mmax: int
) -> dict[tuple[int, int], tuple[int, bool]]:
    """Complexity of every n x m rectangle with n <= nmax, m <= mmax."""
    if nmax < 1 or mmax < 1:
        raise ValueError("rectangle bounds must be positive")
    if isinstance(source, Patch) and (nmax > source.width or mmax > source.height):
        raise ShapeTooLarge("requested rectangles exceed the patch")
    table = {}
    for n in range(1, nmax + 1):
        for m in range(1, mmax + 1):
            count, low = complexity(source, Shape.rectangle(n, m))
            table[(n, m)] = (count, low)
    return table


# -- polynomial action ----------------------------------------------------


def _convolve_at(f: LaurentPoly, source: Source, u: ExponentVector):
    dom = f.domain
    acc = dom.coerce(0)
    for v, c in f.terms.items():
        acc = dom.add(acc, dom.mul(c, dom.coerce(source.value_at((u[0] - v[0], u[1] - v[1])))))
    return acc


def apply_poly(f: LaurentPoly, source: Source) -> Source:
    """Multiply the configuration by f: value at u is sum_v f_v c_{u-v}.

    A torus maps to a torus with the same periods (exact everywhere). A
    patch maps to the patch of values on the valid region, the original
    region eroded by the support of f.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot apply the zero polynomial")
    if isinstance(source, TorusConfig):
        rows = [
            [_convolve_at(f, source, (i, j)) for i in range(source.k)] for j in range(source.l)
        ]
        return TorusConfig(rows)
    vx0, vy0 = f.min_exponents()
    vx1, vy1 = f.max_exponents()
    ox, oy = source.origin
    rx_lo, rx_hi = ox + vx1, ox + source.width - 1 + vx0
    ry_lo, ry_hi = oy + vy1, oy + source.height - 1 + vy0
    if rx_lo > rx_hi or ry_lo > ry_hi:
        raise EmptyValidRegion("support of the polynomial exceeds the patch")
    rows = [
        [_convolve_at(f, source, (x, y)) for x in range(rx_lo, rx_hi + 1)]
        for y in range(ry_lo, ry_hi + 1)
    ]
    return Patch((rx_lo, ry_lo), rows)


@dataclass(frozen=True)
class AnnihilationCheck:
    """Outcome of an annihilation test.

    ``yes`` is an exact global verdict (torus only); ``yes_on_region`` says
    the product vanishes on the whole observed valid region of a patch
    (evidence, not proof); ``no`` carries a witness cell.
    """

    kind: str  # "yes" | "yes_on_region" | "no"
    witness: ExponentVector | None = None
    region: tuple[int, int, int, int] | None = None  # (x0, y0, x1, y1)

    @property
    def annihilated(self) -> bool:
        return self.kind != "no"


def is_annihilated(source: Source, f: LaurentPoly) -> AnnihilationCheck:
    """Test whether f annihilates the source configuration."""
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial annihilates everything")
    product = apply_poly(f, source)
    if isinstance(product, TorusConfig):
        for cell in product.fundamental_cells():
            if product.value_at(cell) != 0:
                return AnnihilationCheck("no", witness=cell)
        return AnnihilationCheck("yes")
    ox, oy = product.origin
    for j in range(product.height):
        for i in range(product.width):
            if product.rows[j][i] != 0:
                return AnnihilationCheck("no", witness=(ox + i, oy + j))
    region = (ox, oy, ox + product.width - 1, oy + product.height - 1)
    return AnnihilationCheck("yes_on_region", region=region)


# -- periodicity ----------------------------------------------------------


def _is_period(torus: TorusConfig, t: ExponentVector) -> bool:
    tx, ty = t
    for j in range(torus.l):
        for i in range(torus.k):
            if torus.rows[j][i] != torus.value_at((i + tx, j + ty)):
                return False
    return True


def detect_periods(torus: TorusConfig) -> dict[ExponentVector, int]:
    """Minimal multiple n per primitive direction u such that n*u is a
    period, for every direction with max-norm at most max(k, l)."""
    bound = max(torus.k, torus.l)
    out: dict[ExponentVector, int] = {}
    dirs = set()
    for a in range(0, bound + 1):
        for b in range(-bound, bound + 1):
            if (a, b) == (0, 0) or (a == 0 and b < 0):
                continue
            if math.gcd(a, abs(b)) == 1:
                dirs.add((a, b))
    for u in sorted(dirs):
        for n in range(1, torus.k * torus.l + 1):
            if _is_period(torus, (n * u[0], n * u[1])):
                out[u] = n
                break
    return out


def period_lattice_index(torus: TorusConfig) -> int:
    """Index in Z^2 of the full period lattice of the configuration."""
    count = sum(1 for cell in torus.fundamental_cells() if _is_period(torus, cell))
    return torus.k * torus.l // count


__all__ = [
    "Shape",
    "Pattern",
    "Patch",
    "TorusConfig",
    "AnnihilationCheck",
    "extract_patterns",
    "complexity",
    "rectangle_complexity_profile",
    "apply_poly",
    "is_annihilated",
    "detect_periods",
    "period_lattice_index",
]
