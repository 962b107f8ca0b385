"""Budgeted emptiness decision for low-complexity SFTs, with certificates.

Two search kernels are dovetailed: exhaustive window filling (an
unfillable n x n window certifies emptiness by compactness) and exhaustive
two-periodic point search over torus fundamental domains (a valid torus
certifies non-emptiness). For a low-complexity spec over a discrete convex
shape one of the two must eventually fire, so Unknown only ever reports an
exhausted budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import convex_hull, _cross
from .configuration import Pattern, Shape, TorusConfig
from .errors import WindowSmallerThanShape

EMPTY = "empty"
NONEMPTY = "nonempty"
UNKNOWN = "unknown"


class SftSpec:
    """Shape, alphabet and the set of allowed patterns on the shape."""

    __slots__ = ("shape", "alphabet", "allowed")

    def __init__(self, shape: Shape, alphabet, allowed):
        alphabet = frozenset(int(a) for a in alphabet)
        if not alphabet:
            raise ValueError("alphabet must be non-empty")
        allowed = frozenset(allowed)
        for p in allowed:
            if p.shape != shape:
                raise ValueError("allowed patterns must live on the spec shape")
            if any(v not in alphabet for v in p.values):
                raise ValueError("pattern symbol outside the alphabet")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "allowed", allowed)

    def __setattr__(self, name, value):
        raise AttributeError("SftSpec is immutable")

    @property
    def low_complexity(self) -> bool:
        return len(self.allowed) <= len(self.shape)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SftSpec)
            and self.shape == other.shape
            and self.alphabet == other.alphabet
            and self.allowed == other.allowed
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.alphabet, self.allowed))


@dataclass(frozen=True)
class Budget:
    max_window: int = 8
    max_torus: int = 6
    max_nodes: int = 5_000_000


@dataclass(frozen=True)
class BudgetSpent:
    nodes: int
    windows_tried: tuple[int, ...]
    tori_tried: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Decision:
    kind: str  # EMPTY | NONEMPTY | UNKNOWN
    window: int | None = None
    witness: TorusConfig | None = None
    budget_spent: BudgetSpent | None = None


class _BudgetExhausted(Exception):
    pass


class _NodeCounter:
    __slots__ = ("used", "limit")

    def __init__(self, limit: int | None):
        self.used = 0
        self.limit = limit

    def spend(self):
        if self.limit is not None and self.used >= self.limit:
            raise _BudgetExhausted
        self.used += 1


def _sorted_allowed(spec: SftSpec) -> list[tuple[int, ...]]:
    return sorted(p.values for p in spec.allowed)


def _search(
    num_cells: int,
    values: list[int],
    translates: list[list[int]],
    allowed: list[tuple[int, ...]],
    counter: _NodeCounter,
) -> list[int] | None:
    """Backtracking fill of ``num_cells`` cells with forward checking.

    ``translates[t]`` lists, per shape-cell position, the flat cell index
    it touches; a translate stays viable while some allowed pattern agrees
    with every assigned cell it covers. Deterministic: cells in flat
    order, values in sorted order, first solution returned.
    """
    touching: list[list[tuple[int, int]]] = [[] for _ in range(num_cells)]
    for t, cells in enumerate(translates):
        for pos, cell in enumerate(cells):
            touching[cell].append((t, pos))
    remaining: list[list[tuple[int, ...]]] = [list(allowed) for _ in translates]
    if translates and not allowed:
        return None
    assignment: list[int | None] = [None] * num_cells

    def fill(idx: int) -> bool:
        if idx == num_cells:
            return True
        for v in values:
            counter.spend()
            assignment[idx] = v
            changed = []
            ok = True
            for t, pos in touching[idx]:
                kept = [p for p in remaining[t] if p[pos] == v]
                changed.append((t, remaining[t]))
                remaining[t] = kept
                if not kept:
                    ok = False
                    break
            if ok and fill(idx + 1):
                return True
            for t, old in reversed(changed):
                remaining[t] = old
            assignment[idx] = None
        return False

    return assignment if fill(0) else None  # type: ignore[return-value]


def window_fillable(
    spec: SftSpec, n: int, _counter: _NodeCounter | None = None
) -> list[list[int]] | None:
    """Fill an n x n window so every fully contained translate of the
    shape carries an allowed pattern; None certifies no filling exists."""
    if n < spec.shape.extent:
        raise WindowSmallerThanShape(f"window {n} < shape extent {spec.shape.extent}")
    counter = _counter or _NodeCounter(None)
    x0, y0, x1, y1 = spec.shape.bounding_box()
    translates = []
    for ty in range(-y0, n - y1):
        for tx in range(-x0, n - x1):
            translates.append(
                [(ty + cy) * n + (tx + cx) for (cx, cy) in spec.shape.cells]
            )
    flat = _search(n * n, sorted(spec.alphabet), translates, _sorted_allowed(spec), counter)
    if flat is None:
        return None
    return [[flat[j * n + i] for i in range(n)] for j in range(n)]


def find_periodic_point(
    spec: SftSpec, k: int, l: int, _counter: _NodeCounter | None = None
) -> TorusConfig | None:
    """Exhaustive search for a k x l torus all of whose wraparound
    shape-patterns are allowed."""
    if k < 1 or l < 1:
        raise ValueError("torus periods must be positive")
    counter = _counter or _NodeCounter(None)
    translates = []
    for ty in range(l):
        for tx in range(k):
            translates.append(
                [((ty + cy) % l) * k + ((tx + cx) % k) for (cx, cy) in spec.shape.cells]
            )
    flat = _search(k * l, sorted(spec.alphabet), translates, _sorted_allowed(spec), counter)
    if flat is None:
        return None
    return TorusConfig([[flat[j * k + i] for i in range(k)] for j in range(l)])


def decide(spec: SftSpec, budget: Budget = Budget()) -> Decision:
    """Dovetail window emptiness checks and torus witness search.

    Alternates one window size and one torus diagonal (k + l constant)
    per round and returns the first certificate under that fixed schedule,
    so the outcome is deterministic. Unknown reports the spent budget.
    """
    counter = _NodeCounter(budget.max_nodes)
    windows_tried: list[int] = []
    tori_tried: list[tuple[int, int]] = []
    n = spec.shape.extent
    s = 2
    try:
        while n <= budget.max_window or s <= 2 * budget.max_torus:
            if n <= budget.max_window:
                windows_tried.append(n)
                if window_fillable(spec, n, _counter=counter) is None:
                    return Decision(
                        kind=EMPTY,
                        window=n,
                        budget_spent=_spent(counter, windows_tried, tori_tried),
                    )
                n += 1
            if s <= 2 * budget.max_torus:
                for k in range(max(1, s - budget.max_torus), min(s - 1, budget.max_torus) + 1):
                    l = s - k
                    tori_tried.append((k, l))
                    witness = find_periodic_point(spec, k, l, _counter=counter)
                    if witness is not None:
                        return Decision(
                            kind=NONEMPTY,
                            witness=witness,
                            budget_spent=_spent(counter, windows_tried, tori_tried),
                        )
                s += 1
    except _BudgetExhausted:
        pass
    return Decision(kind=UNKNOWN, budget_spent=_spent(counter, windows_tried, tori_tried))


def _spent(counter: _NodeCounter, windows, tori) -> BudgetSpent:
    return BudgetSpent(nodes=counter.used, windows_tried=tuple(windows), tori_tried=tuple(tori))


def verify_witness(spec: SftSpec, torus: TorusConfig) -> bool:
    """Independent full-pattern check of a non-emptiness certificate."""
    for ty in range(torus.l):
        for tx in range(torus.k):
            values = tuple(torus.value_at((tx + cx, ty + cy)) for (cx, cy) in spec.shape.cells)
            if Pattern(spec.shape, values) not in spec.allowed:
                return False
    return True


def reconfirm_empty(spec: SftSpec, n: int, seed: int = 0) -> bool:
    """Re-confirm an emptiness certificate by an independent exhaustive
    search at size n with randomized cell and value order."""
    import random

    rng = random.Random(seed)
    if n < spec.shape.extent:
        raise WindowSmallerThanShape(f"window {n} < shape extent {spec.shape.extent}")
    x0, y0, x1, y1 = spec.shape.bounding_box()
    translates = []
    for ty in range(-y0, n - y1):
        for tx in range(-x0, n - x1):
            translates.append([((ty + cy) * n + (tx + cx)) for (cx, cy) in spec.shape.cells])
    order = list(range(n * n))
    rng.shuffle(order)
    position = {cell: slot for slot, cell in enumerate(order)}
    # remap cells through the shuffled order so the search explores a
    # genuinely different tree, then solve the same constraints
    remapped = [[position[c] for c in cells] for cells in translates]
    values = sorted(spec.alphabet)
    rng.shuffle(values)
    allowed = _sorted_allowed(spec)
    rng.shuffle(allowed)
    flat = _search(n * n, values, remapped, allowed, _NodeCounter(None))
    return flat is None


def is_discrete_convex(shape: Shape) -> bool:
    """True iff the shape equals the integer points of its convex hull."""
    cells = set(shape.cells)
    hull = convex_hull(cells)
    if len(hull) == 1:
        return len(cells) == 1
    if len(hull) == 2:
        (ax, ay), (bx, by) = hull
        import math

        g = math.gcd(abs(bx - ax), abs(by - ay))
        segment = {(ax + i * (bx - ax) // g, ay + i * (by - ay) // g) for i in range(g + 1)}
        return cells == segment
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    inside = set()
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if all(
                _cross(hull[i], hull[(i + 1) % len(hull)], (x, y)) >= 0
                for i in range(len(hull))
            ):
                inside.add((x, y))
    return cells == inside
