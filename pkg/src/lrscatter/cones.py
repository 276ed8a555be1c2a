"""Oriented wiring graphs, rigorous paths, and principal (string) cones.

Fixing a reduced word and an integer ``s`` orients the wiring diagram: the
``s`` pseudo-lines whose lower ends are leftmost run downward, the rest
upward.  Signed sums of parameters along *rigorous* paths between boundary
vertices cut out the cone of parameter collections; for words of the
longest element this is the string cone of the matching parametrization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Union

from .permutations import (
    Inversion,
    ReducedWord,
    _require_reduced,
    crossing_sequence,
    inversion_set,
    two_block_word,
)
from .scattering import ParamCollection

# Boundary vertices are ("U", i) / ("L", p); crossings are ("X", i, j).
Vertex = tuple


def upper_end(i: int) -> Vertex:
    return ("U", i)


def lower_end(p: int) -> Vertex:
    return ("L", p)


def crossing(i: int, j: int) -> Vertex:
    return ("X", i, j)


@dataclass(frozen=True)
class OrientedWiringGraph:
    word: ReducedWord
    s: int
    down_lines: frozenset[int]
    # per pseudo-line, its vertices listed bottom to top (lower end first)
    line_vertices: dict[int, tuple[Vertex, ...]]
    # directed adjacency: vertex -> ((neighbour, line), ...)
    edges: dict[Vertex, tuple[tuple[Vertex, int], ...]]

    def is_down(self, line: int) -> bool:
        return line in self.down_lines


def build_graph(word: ReducedWord, s: int) -> OrientedWiringGraph:
    """The oriented graph of the wiring diagram of ``word`` with the ``s``
    leftmost lower ends running downward."""
    perm = _require_reduced(word)
    n = word.n
    if not 0 <= s <= n:
        raise ValueError(f"orientation split {s} out of range 0..{n}")
    chains: dict[int, list[Vertex]] = {
        i: [lower_end(perm(i))] for i in range(1, n + 1)
    }
    for _, (i, j) in crossing_sequence(word):
        chains[i].append(crossing(i, j))
        chains[j].append(crossing(i, j))
    for i in range(1, n + 1):
        chains[i].append(upper_end(i))
    down = frozenset(i for i in range(1, n + 1) if perm(i) <= s)
    edges: dict[Vertex, list[tuple[Vertex, int]]] = {}
    for i, chain in chains.items():
        hops = zip(chain, chain[1:]) if i not in down else zip(chain[1:], chain)
        for a, b in hops:
            edges.setdefault(a, []).append((b, i))
    return OrientedWiringGraph(
        word=word,
        s=s,
        down_lines=down,
        line_vertices={i: tuple(c) for i, c in chains.items()},
        edges={v: tuple(ts) for v, ts in edges.items()},
    )


@dataclass(frozen=True)
class RigorousPath:
    """An oriented boundary-to-boundary path; ``lines[k]`` is the pseudo-line
    carrying the ``k``-th edge."""

    vertices: tuple[Vertex, ...]
    lines: tuple[int, ...]


def _straight_through_forbidden(g: OrientedWiringGraph, vertex: Vertex, line: int) -> bool:
    # Continuing along `line` straight through a crossing is forbidden when
    # the crossed line has the same orientation and the travelled line is
    # the smaller label (going up) or the larger one (going down).
    _, i, j = vertex
    other = j if line == i else i
    if g.is_down(line) != g.is_down(other):
        return False
    if g.is_down(line):
        return line > other
    return line < other


def iter_paths(
    g: OrientedWiringGraph, start: Vertex, end: Vertex, rigorous: bool = True
) -> Iterator[RigorousPath]:
    """All oriented ``start -> end`` paths, filtered by the rigorousness rule
    unless disabled.  The graph is acyclic, so the walk terminates."""
    if start == end:
        raise ValueError("start and end must differ")

    def walk(vertex: Vertex, in_line: Optional[int], vs, ls) -> Iterator[RigorousPath]:
        if vertex == end:
            yield RigorousPath(tuple(vs), tuple(ls))
            return
        if vertex != start and vertex[0] != "X":
            return  # boundary vertex other than the target: dead end
        for nxt, line in g.edges.get(vertex, ()):
            if (
                rigorous
                and in_line == line
                and vertex[0] == "X"
                and _straight_through_forbidden(g, vertex, line)
            ):
                continue
            vs.append(nxt)
            ls.append(line)
            yield from walk(nxt, line, vs, ls)
            vs.pop()
            ls.pop()

    yield from walk(start, None, [start], [])


@dataclass(frozen=True, order=True)
class LinearForm:
    """An integer functional in the parameters ``c_ij``; stored canonically
    as sorted ``(i, j, coeff)`` triples with ``i < j`` and no zero entries."""

    coeffs: tuple[tuple[int, int, int], ...]

    @staticmethod
    def from_dict(d: dict[Inversion, int]) -> "LinearForm":
        return LinearForm(tuple(sorted((i, j, c) for (i, j), c in d.items() if c)))

    def as_dict(self) -> dict[Inversion, int]:
        return {(i, j): c for i, j, c in self.coeffs}

    def evaluate(self, params: ParamCollection) -> int:
        return sum(c * params[(i, j)] for i, j, c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, j, c in self.coeffs:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = f"c{i}{j}" if mag == 1 else f"{mag}*c{i}{j}"
            parts.append((sign, term))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {t}" for s, t in parts[1:])


def path_form(path: RigorousPath) -> LinearForm:
    """The signed parameter sum along a path: each turn from line ``u`` onto
    line ``v`` contributes ``c_uv``, with ``c_vu = -c_uv`` and ``c_uu = 0``."""
    acc: dict[Inversion, int] = {}
    for u, v in zip(path.lines, path.lines[1:]):
        if u == v:
            continue
        key, sign = ((u, v), 1) if u < v else ((v, u), -1)
        acc[key] = acc.get(key, 0) + sign
    return LinearForm.from_dict(acc)


@dataclass(frozen=True)
class ConeDescription:
    word: ReducedWord
    inequalities: tuple[LinearForm, ...]  # each meaning `form >= 0`

    def __contains__(self, params: ParamCollection) -> bool:
        return all(form.evaluate(params) >= 0 for form in self.inequalities)


@lru_cache(maxsize=None)
def _principal_cone_cached(letters: tuple[int, ...], n: int) -> ConeDescription:
    word = ReducedWord(letters, n)
    _require_reduced(word)
    forms = set()
    for s in range(1, n):
        g = build_graph(word, s)
        for path in iter_paths(g, lower_end(s + 1), lower_end(s)):
            forms.add(path_form(path))
    return ConeDescription(word, tuple(sorted(forms)))


def principal_cone(word: ReducedWord) -> ConeDescription:
    """The raw rigorous-path inequality system of a reduced word: one form
    per rigorous path between consecutive lower ends, over every downward
    orientation split, deduplicated but not minimized.

    >>> [str(f) for f in principal_cone(ReducedWord((1, 2, 1), 3)).inequalities]
    ['c12', 'c13 - c23', 'c23']
    """
    return _principal_cone_cached(word.letters, word.n)


def min_path_value(
    word: ReducedWord,
    s: int,
    start: Vertex,
    end: Vertex,
    params: ParamCollection,
) -> Union[int, float]:
    """Minimum of the path forms over rigorous ``start -> end`` paths in the
    graph with split ``s``, evaluated at ``params``; ``+inf`` when no
    rigorous path exists.  Invariant under the transition maps."""
    perm = _require_reduced(word)
    if set(params) != set(inversion_set(perm)):
        raise ValueError("parameter keys do not match the word's inversions")
    g = build_graph(word, s)
    best: Union[int, float] = float("inf")
    for path in iter_paths(g, start, end):
        best = min(best, path_form(path).evaluate(params))
    return best


def cone_contains(word: ReducedWord, params: ParamCollection) -> bool:
    """Membership of a parameter collection in the principal cone.

    >>> cone_contains(ReducedWord((1, 2, 1), 3), {(1, 2): 0, (1, 3): 5, (2, 3): 3})
    True
    >>> cone_contains(ReducedWord((1, 2, 1), 3), {(1, 2): 1, (1, 3): 1, (2, 3): 2})
    False
    """
    perm = _require_reduced(word)
    if set(params) != set(inversion_set(perm)):
        raise ValueError("parameter keys do not match the word's inversions")
    return params in principal_cone(word)


def product_cone(m: int, n: int) -> ConeDescription:
    """Principal cone of the two-block shuffle word; its lattice points are
    exactly the rectangular plane partitions indexing the star product."""
    return principal_cone(two_block_word(m, n))
