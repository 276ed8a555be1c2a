"""Web diagrams, the triangular lattice of half-integer points, and
Berenstein-Zelevinsky patterns.

Points of the plane are written in barycentric coordinates
``(alpha, beta, gamma)`` with zero sum, stored doubled so that half-integer
geometry stays exact.  Lines come in three types, one per fixed coordinate.
A scattering event between a falling left particle (type-1 trajectory) and
a falling right particle (type-2 trajectory) occupies a horizontal type-3
segment at the interaction level, ending in a left fork and a right fork.

The BZ lattice is the set of half-integer points that are not integer
points; restricting an integral diagram to the triangle ``T_N`` counts the
diagram elements through each lattice point and yields a pattern that
satisfies the hexagon condition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .oracles import strip_zeros, to_column_word
from .scattering import BasisTuple, ParamCollection, scattering_collections

Point = tuple[int, int, int]  # doubled (2*alpha, 2*beta, 2*gamma), sum zero

LEFT_FORK = "left"
RIGHT_FORK = "right"

# doubled steps that raise gamma by one half along each line type
_UP_TYPE1 = (0, -1, 1)
_UP_TYPE2 = (-1, 0, 1)


def _scale(v: Point, k: int) -> Point:
    return (k * v[0], k * v[1], k * v[2])


@dataclass(frozen=True, order=True)
class Segment:
    axis: int  # coordinate held constant: 0, 1, or 2
    a: Point
    b: Point


@dataclass(frozen=True, order=True)
class Ray:
    axis: int
    origin: Point
    direction: Point  # doubled step, nonzero


@dataclass(frozen=True, order=True)
class Node:
    point: Point
    kind: str  # LEFT_FORK or RIGHT_FORK


@dataclass(frozen=True)
class WebDiagram:
    """Support of a web function: typed segments and boundary rays with
    multiplicities, plus the fork nodes."""

    segments: tuple[tuple[Segment, int], ...]
    rays: tuple[tuple[Ray, int], ...]
    nodes: tuple[tuple[Node, int], ...]

    def multiplicity_through(self, point: Point) -> int:
        """Total multiplicity of segments and rays through a point."""
        total = 0
        for seg, mult in self.segments:
            if _on_segment(point, seg):
                total += mult
        for ray, mult in self.rays:
            if _on_ray(point, ray):
                total += mult
        return total

    def line_constants(self) -> set[tuple[int, int]]:
        consts = {(s.axis, s.a[s.axis]) for s, _ in self.segments}
        consts |= {(r.axis, r.origin[r.axis]) for r, _ in self.rays}
        return consts

    def is_integral(self) -> bool:
        return all(c % 2 == 0 for _, c in self.line_constants())


def _on_segment(p: Point, seg: Segment) -> bool:
    if p[seg.axis] != seg.a[seg.axis]:
        return False
    w = (seg.axis + 1) % 3
    lo, hi = sorted((seg.a[w], seg.b[w]))
    return lo <= p[w] <= hi


def _on_ray(p: Point, ray: Ray) -> bool:
    if p[ray.axis] != ray.origin[ray.axis]:
        return False
    w = (ray.axis + 1) % 3
    if ray.direction[w] == 0:
        w = (ray.axis + 2) % 3
    delta = p[w] - ray.origin[w]
    return delta == 0 or (delta > 0) == (ray.direction[w] > 0)


def web_from_scattering(
    x: BasisTuple, y: BasisTuple, params: ParamCollection
) -> Optional[WebDiagram]:
    """Replay the two-block scattering of left energies ``x`` against right
    energies ``y`` with interaction levels ``params`` and draw its diagram;
    ``None`` when the scattering kills the state.

    Left trajectories fall south-east on type-1 lines ``(-energy, *, *)``,
    right trajectories fall south-west on type-2 lines ``(*, energy, *)``,
    and the interaction of left ``i`` with right ``j`` is a type-3 segment
    at level ``params[(i, m+j)]``.
    """
    m, n = len(x), len(y)
    if m < 1 or n < 1:
        raise ValueError("both particle groups must be nonempty")
    if any(e < 0 for e in x) or any(e < 0 for e in y):
        raise ValueError("energies must be nonnegative")
    grid = {(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)}
    if set(params) != grid:
        raise ValueError("parameters must be keyed by the two-block grid")
    if any(v < 0 for v in params.values()):
        raise ValueError("interaction levels must be nonnegative")
    for i, j in grid:
        for k, l in ((i + 1, j), (i, j - 1)):
            if (k, l) in grid and params[(i, j)] > params[(k, l)]:
                raise ValueError("interaction levels must form a plane partition")

    slots = list(x) + list(y)
    segments: Counter[Segment] = Counter()
    rays: Counter[Ray] = Counter()
    nodes: Counter[Node] = Counter()
    last_event: dict[int, Point] = {}  # slot -> point the trajectory left off

    # Collisions in operator order: left m with right 1 first.
    events = [
        (i, m + j)
        for level in range(m + n - 1)
        for i in range(m, 0, -1)
        for j in range(1, n + 1)
        if (m - i) + (j - 1) == level
    ]
    for i, j in events:
        c = params[(i, j)]
        u, v = slots[i - 1], slots[j - 1]
        if c < u - v:
            return None
        left_node = (-2 * u, 2 * (u - c), 2 * c)
        right_node = (-2 * (v + c), 2 * v, 2 * c)
        nodes[Node(left_node, LEFT_FORK)] += 1
        nodes[Node(right_node, RIGHT_FORK)] += 1
        if left_node != right_node:
            segments[Segment(2, left_node, right_node)] += 1
        if i - 1 in last_event:
            prev = last_event[i - 1]
            if prev != left_node:
                segments[Segment(0, prev, left_node)] += 1
        else:
            rays[Ray(0, left_node, _UP_TYPE1)] += 1
        if j - 1 in last_event:
            prev = last_event[j - 1]
            if prev != right_node:
                segments[Segment(1, prev, right_node)] += 1
        else:
            rays[Ray(1, right_node, _UP_TYPE2)] += 1
        last_event[i - 1] = right_node
        last_event[j - 1] = left_node
        slots[i - 1], slots[j - 1] = v + c, u - c

    if any(e < 0 for e in slots):
        return None
    for i in range(1, m + 1):
        rays[Ray(0, last_event[i - 1], _scale(_UP_TYPE1, -1))] += 1
    for j in range(m + 1, m + n + 1):
        rays[Ray(1, last_event[j - 1], _scale(_UP_TYPE2, -1))] += 1
    return WebDiagram(
        segments=tuple(sorted(segments.items())),
        rays=tuple(sorted(rays.items())),
        nodes=tuple(sorted(nodes.items())),
    )


def lattice_points(rank: int) -> tuple[Point, ...]:
    """The half-integer non-integer points of the triangle ``T_rank``
    (``alpha > -rank``, ``beta > 0``, ``gamma > 0``), in rows of increasing
    height and left to right within a row as drawn (alpha decreasing).

    This ordering reads the pattern's lower row first.
    """
    if rank < 1:
        raise ValueError("rank must be positive")
    points = []
    for r in range(1, 2 * rank - 1):
        row = []
        for p in range(-2 * rank + 1, 0):
            q = -p - r
            if q <= 0:
                continue
            if p % 2 == 0 and q % 2 == 0 and r % 2 == 0:
                continue
            row.append((p, q, r))
        row.sort(key=lambda pt: -pt[0])
        points.extend(row)
    return tuple(points)


@dataclass
class BZPattern:
    """Nonnegative integers on the lattice points of ``T_rank``."""

    rank: int
    values: dict[Point, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        domain = set(lattice_points(self.rank))
        if set(self.values) != domain:
            raise ValueError("values must cover exactly the triangle lattice")
        if any(v < 0 for v in self.values.values()):
            raise ValueError("pattern values must be nonnegative")


def restrict_to_bz(diagram: WebDiagram, rank: int) -> BZPattern:
    """Count diagram elements through each lattice point of ``T_rank``."""
    if not diagram.is_integral():
        raise ValueError("diagram is not integral")
    return BZPattern(
        rank, {p: diagram.multiplicity_through(p) for p in lattice_points(rank)}
    )


_HEX_OFFSETS = {
    "A": (0, -1, 1),
    "B": (-1, 0, 1),
    "C": (-1, 1, 0),
    "D": (0, 1, -1),
    "E": (1, 0, -1),
    "F": (1, -1, 0),
}


def hexagon_centers(rank: int) -> tuple[Point, ...]:
    """Integer points whose six lattice neighbours all lie inside
    ``T_rank`` (doubled coordinates)."""
    centers = []
    for b in range(1, rank):
        for c in range(1, rank - b + 1):
            a = -b - c
            if a >= 1 - rank:
                centers.append((2 * a, 2 * b, 2 * c))
    return tuple(sorted(centers))


def _hex_values(pattern: BZPattern, center: Point) -> dict[str, int]:
    return {
        name: pattern.values[
            (center[0] + d[0], center[1] + d[1], center[2] + d[2])
        ]
        for name, d in _HEX_OFFSETS.items()
    }


def check_hexagon(pattern: BZPattern) -> bool:
    """Whether the three opposite-pair sum equalities hold around every
    interior hexagon of the pattern."""
    for center in hexagon_centers(pattern.rank):
        f = _hex_values(pattern, center)
        if f["A"] + f["B"] != f["D"] + f["E"]:
            return False
        if f["B"] + f["C"] != f["E"] + f["F"]:
            return False
        if f["C"] + f["D"] != f["F"] + f["A"]:
            return False
    return True


def bz_boundary(pattern: BZPattern) -> tuple[list[int], list[int], list[int]]:
    """The three boundary value sequences, each read left to right in the
    standard drawing: lower row, then the side of smallest beta (rising to
    the apex), then the side of smallest alpha (apex down)."""
    pts = lattice_points(pattern.rank)
    lower = [p for p in pts if p[2] == 1]
    left = sorted((p for p in pts if p[1] == 1), key=lambda p: p[2])
    right = sorted(
        (p for p in pts if p[0] == 1 - 2 * pattern.rank), key=lambda p: -p[2]
    )
    values = pattern.values
    return (
        [values[p] for p in lower],
        [values[p] for p in left],
        [values[p] for p in right],
    )


def fundamental_coefficients(weight, rank: int) -> tuple[int, ...]:
    """Multiplicities of each fundamental weight in a dominant weight."""
    w = strip_zeros(tuple(weight))
    if len(w) > rank:
        raise ValueError(f"weight {w!r} has more than {rank} parts")
    w = w + (0,) * (rank - len(w))
    return tuple(
        (w[i] - w[i + 1]) if i + 1 < rank else w[i] for i in range(rank)
    )


def _pair_sum_constraints(pattern_rank: int, lam, mu, nu):
    pts = lattice_points(pattern_rank)
    index = {p: k for k, p in enumerate(pts)}
    lower = [index[p] for p in pts if p[2] == 1]
    left = [index[p] for p in sorted((p for p in pts if p[1] == 1), key=lambda p: p[2])]
    right = [
        index[p]
        for p in sorted(
            (p for p in pts if p[0] == 1 - 2 * pattern_rank), key=lambda p: -p[2]
        )
    ]
    l = fundamental_coefficients(lam, pattern_rank)
    m = fundamental_coefficients(mu, pattern_rank)
    n = fundamental_coefficients(nu, pattern_rank)
    constraints = []
    for seq, coeffs in ((lower, n), (left, l), (right, m)):
        for i in range(pattern_rank - 1):
            constraints.append(
                (((seq[2 * i], 1), (seq[2 * i + 1], 1)), coeffs[i])
            )
    return pts, index, constraints


def count_bz_patterns(lam, mu, nu, rank: int) -> int:
    """Number of hexagon-valid patterns on ``T_rank`` whose boundary pair
    sums reproduce the fundamental-weight coefficients of the three
    weights.  Zero straight away on a degree mismatch.

    >>> count_bz_patterns((1, 0), (1, 0), (2, 0), 2)
    1
    >>> count_bz_patterns((2, 1, 0), (2, 1, 0), (3, 2, 1), 3)
    2
    """
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    pts, index, constraints = _pair_sum_constraints(rank, lam, mu, nu)
    for center in hexagon_centers(rank):
        offs = _HEX_OFFSETS
        neigh = {
            name: index[(center[0] + d[0], center[1] + d[1], center[2] + d[2])]
            for name, d in offs.items()
        }
        for lhs, rhs in ((("A", "B"), ("D", "E")),
                         (("B", "C"), ("E", "F")),
                         (("C", "D"), ("F", "A"))):
            vars_signs = tuple(
                [(neigh[nm], 1) for nm in lhs] + [(neigh[nm], -1) for nm in rhs]
            )
            constraints.append((vars_signs, 0))
    return _count_solutions(len(pts), constraints)


def _count_solutions(nvars: int, constraints) -> int:
    """Count nonnegative integer solutions of the given unit-coefficient
    equalities by DFS with unit propagation.  Branching is only ever done
    on variables capped by a constraint; desk-scale ranks never need more."""
    assignment: dict[int, int] = {}

    def caps_for(v: int) -> Optional[int]:
        # Upper bound for v from any constraint whose opposite side is fully
        # known; unknown same-side companions are nonnegative, so they only
        # tighten the bound further.
        best = None
        for vars_signs, const in constraints:
            pos = [var for var, sign in vars_signs if sign > 0]
            neg = [var for var, sign in vars_signs if sign < 0]
            for side, other in ((pos, neg), (neg, pos)):
                if v not in side:
                    continue
                if any(u not in assignment for u in other):
                    continue
                bound = const * (1 if side is pos else -1) + sum(
                    assignment[u] for u in other
                ) - sum(assignment[u] for u in side if u != v and u in assignment)
                best = bound if best is None else min(best, bound)
        return best

    def propagate(forced: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for vars_signs, const in constraints:
                unknown = [(u, s) for u, s in vars_signs if u not in assignment]
                total = sum(s * assignment[u] for u, s in vars_signs if u in assignment)
                if not unknown:
                    if total != const:
                        return False
                elif len(unknown) == 1:
                    u, s = unknown[0]
                    val = (const - total) * s
                    if val < 0:
                        return False
                    assignment[u] = val
                    forced.append(u)
                    changed = True
        return True

    total_count = 0

    def rec() -> None:
        nonlocal total_count
        forced: list[int] = []
        if propagate(forced):
            free = next((v for v in range(nvars) if v not in assignment), None)
            if free is None:
                total_count += 1
            else:
                cap = caps_for(free)
                if cap is None:
                    raise RuntimeError(
                        "pattern enumeration needs a branching cap; "
                        "rank too large for this enumerator"
                    )
                for val in range(max(cap, -1) + 1):
                    assignment[free] = val
                    rec()
                    del assignment[free]
        for v in forced:
            del assignment[v]

    rec()
    return total_count


def boundary_weight_sums(pattern: BZPattern) -> tuple[tuple[int, ...], ...]:
    """Pair sums of the three boundary sequences: the fundamental-weight
    coefficients of the weights a scattering diagram carries."""
    a, b, c = bz_boundary(pattern)
    pair = lambda seq: tuple(seq[2 * i] + seq[2 * i + 1] for i in range(len(seq) // 2))
    return pair(b), pair(c), pair(a)


def scattering_weights(x: BasisTuple, y: BasisTuple, out: BasisTuple, rank: int):
    """The three weights carried by a two-block scattering event, as
    fundamental-weight coefficient tuples truncated to the boundary length."""
    m = len(x)
    z = out[m:] + out[:m]
    lam = fundamental_coefficients(_columns_to_weight(x, rank), rank)
    mu = fundamental_coefficients(_columns_to_weight(y, rank), rank)
    nu = fundamental_coefficients(_columns_to_weight(z, rank), rank)
    return lam[: rank - 1], mu[: rank - 1], nu[: rank - 1]


def _columns_to_weight(columns, rank: int):
    cols = [c for c in columns if c]
    if any(c > rank for c in cols):
        raise ValueError("column exceeds rank")
    return tuple(sum(1 for c in cols if c > i) for i in range(rank))
