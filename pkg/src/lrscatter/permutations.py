"""Permutations, reduced words, reflection orderings, and the move graph.

Conventions used throughout the package:

* permutations act on ``{1, ..., n}`` and are stored in one-line notation;
* a word ``(a_1, ..., a_l)`` denotes the product ``s_{a_1} s_{a_2} ... s_{a_l}``
  composed right-to-left, i.e. ``s_{a_l}`` is applied to the argument first;
* read left-to-right, a word lists the crossings of its wiring diagram from
  bottom to top, and pseudo-line ``i`` is the one whose *upper* end sits at
  position ``i``; its lower end then sits at position ``w(i)``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

Inversion = tuple[int, int]

DEFAULT_RANK_CAP = 6
RANK_CAP_ENV = "LRSCATTER_MAX_RANK"


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``{1..n}``; ``images[k-1] == w(k)``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images!r}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """Return ``self o other`` (``other`` applied first)."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Permutation(tuple(self.images[v - 1] for v in other.images))

    def length(self) -> int:
        return len(inversion_set(self))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def longest(n: int) -> "Permutation":
        """The order-reversing permutation ``i -> n + 1 - i``."""
        return Permutation(tuple(range(n, 0, -1)))

    @staticmethod
    def two_block(m: int, n: int) -> "Permutation":
        """The shuffle sending ``i -> i + n (mod m + n)``, one-line
        ``(n+1, ..., n+m, 1, ..., n)``."""
        if m < 1 or n < 1:
            raise ValueError("block sizes must be positive")
        return Permutation(tuple(range(n + 1, n + m + 1)) + tuple(range(1, n + 1)))


@dataclass(frozen=True, order=True)
class ReducedWord:
    """A word in the adjacent transpositions of ``S_n``.

    Reducedness is *not* enforced at construction time; operations that
    require it check and raise ``ValueError``.
    """

    letters: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        for a in self.letters:
            if not 1 <= a <= self.n - 1:
                raise ValueError(f"letter {a} out of range 1..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.letters)


def word(letters, n: int) -> ReducedWord:
    return ReducedWord(tuple(letters), n)


def evaluate_word(w: ReducedWord) -> tuple[Permutation, bool]:
    """Multiply out a word; also report whether it is reduced.

    >>> evaluate_word(word([1, 2, 1], 3))
    (Permutation(images=(3, 2, 1)), True)
    >>> evaluate_word(word([1, 1], 2))
    (Permutation(images=(1, 2)), False)
    """
    images = list(range(1, w.n + 1))
    # Right multiplication by s_a swaps positions a, a+1; running over the
    # letters left to right builds s_{a_1} o ... o s_{a_l}.
    for a in w.letters:
        images[a - 1], images[a] = images[a], images[a - 1]
    perm = Permutation(tuple(images))
    return perm, perm.length() == len(w.letters)


def inversion_set(w: Permutation) -> frozenset[Inversion]:
    """All pairs ``(i, j)``, ``i < j``, with ``w(i) > w(j)``."""
    im = w.images
    return frozenset(
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(i + 1, w.n + 1)
        if im[i - 1] > im[j - 1]
    )


def _require_reduced(w: ReducedWord) -> Permutation:
    perm, reduced = evaluate_word(w)
    if not reduced:
        raise ValueError(f"word {w.letters!r} is not reduced")
    return perm


def crossing_sequence(w: ReducedWord) -> list[tuple[int, Inversion]]:
    """Crossings of the wiring diagram, bottom to top.

    Returns one ``(position, (i, j))`` entry per letter: the letter acts at
    ``position``, crossing pseudo-lines ``i < j``.  Simulates the diagram
    starting from the bottom arrangement ``w^{-1}``.
    """
    perm = _require_reduced(w)
    arrangement = list(perm.inverse().images)
    out: list[tuple[int, Inversion]] = []
    for a in w.letters:
        u, v = arrangement[a - 1], arrangement[a]
        out.append((a, (min(u, v), max(u, v))))
        arrangement[a - 1], arrangement[a] = v, u
    return out


def reflection_ordering(w: ReducedWord) -> tuple[Inversion, ...]:
    """The inversions of ``evaluate_word(w)`` ordered bottom to top along the
    wiring diagram.

    >>> reflection_ordering(word([3, 2, 1, 2], 4))
    ((1, 4), (1, 2), (1, 3), (2, 3))
    >>> reflection_ordering(word([1, 2, 1], 3))
    ((2, 3), (1, 3), (1, 2))
    """
    return tuple(pair for _, pair in crossing_sequence(w))


def lowest_crossing(w: ReducedWord) -> Inversion:
    """The pair of pseudo-lines crossing at the lowest node of the diagram."""
    if not w.letters:
        raise ValueError("empty word has no crossings")
    return reflection_ordering(w)[0]


TWO_MOVE = "two"
THREE_MOVE = "three"
FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class Move:
    """A local rewrite of a word.

    ``position`` is the 0-based index of the first letter of the pattern.
    A forward three-move rewrites ``(a, a+1, a) -> (a+1, a, a+1)``; backward
    is its inverse.  Two-moves swap distant commuting letters and carry no
    direction.
    """

    kind: str
    position: int
    direction: Optional[str] = None

    def __post_init__(self) -> None:
        if self.kind not in (TWO_MOVE, THREE_MOVE):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.kind == THREE_MOVE and self.direction not in (FORWARD, BACKWARD):
            raise ValueError("three-moves need a direction")


def available_moves(w: ReducedWord) -> list[Move]:
    ls = w.letters
    moves = []
    for p in range(len(ls) - 1):
        if abs(ls[p] - ls[p + 1]) >= 2:
            moves.append(Move(TWO_MOVE, p))
    for p in range(len(ls) - 2):
        a, b, c = ls[p : p + 3]
        if a == c and b == a + 1:
            moves.append(Move(THREE_MOVE, p, FORWARD))
        elif a == c and b == a - 1:
            moves.append(Move(THREE_MOVE, p, BACKWARD))
    return moves


def apply_move(
    w: ReducedWord, move: Move
) -> tuple[ReducedWord, Optional[tuple[int, int, int]]]:
    """Apply a move; for a three-move also return the label triple ``i<j<k``
    of the pseudo-lines whose crossings get reordered.

    The triple is read off the reflection ordering (the three entries at the
    move site involve exactly three lines), not off the letter values.
    """
    ls = list(w.letters)
    p = move.position
    if move.kind == TWO_MOVE:
        if not (0 <= p < len(ls) - 1 and abs(ls[p] - ls[p + 1]) >= 2):
            raise ValueError(f"no two-move at position {p} of {w.letters!r}")
        ls[p], ls[p + 1] = ls[p + 1], ls[p]
        return ReducedWord(tuple(ls), w.n), None
    if not 0 <= p < len(ls) - 2:
        raise ValueError(f"no three-move at position {p} of {w.letters!r}")
    a, b, c = ls[p : p + 3]
    expected_b = a + 1 if move.direction == FORWARD else a - 1
    if not (a == c and b == expected_b):
        raise ValueError(
            f"{move.direction} three-move pattern mismatch at {p} of {w.letters!r}"
        )
    ordering = reflection_ordering(w)
    labels = sorted(set(ordering[p]) | set(ordering[p + 1]) | set(ordering[p + 2]))
    ls[p], ls[p + 1], ls[p + 2] = b, a, b
    return ReducedWord(tuple(ls), w.n), (labels[0], labels[1], labels[2])


def find_move_chain(a: ReducedWord, b: ReducedWord) -> list[Move]:
    """A shortest chain of moves rewriting ``a`` into ``b`` (BFS)."""
    perm_a = _require_reduced(a)
    perm_b = _require_reduced(b)
    if a.n != b.n or perm_a != perm_b:
        raise ValueError("words evaluate to different permutations")
    if a.letters == b.letters:
        return []
    seen: dict[tuple[int, ...], tuple[tuple[int, ...], Move]] = {a.letters: None}
    queue = deque([a.letters])
    while queue:
        cur = queue.popleft()
        cur_word = ReducedWord(cur, a.n)
        for move in available_moves(cur_word):
            nxt = apply_move(cur_word, move)[0].letters
            if nxt in seen:
                continue
            seen[nxt] = (cur, move)
            if nxt == b.letters:
                chain = []
                node = nxt
                while seen[node] is not None:
                    node, move = seen[node]
                    chain.append(move)
                return list(reversed(chain))
            queue.append(nxt)
    raise ValueError("words are not connected by moves")  # unreachable if reduced


def _rank_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(RANK_CAP_ENV, DEFAULT_RANK_CAP))


def some_reduced_word(w: Permutation) -> ReducedWord:
    """One reduced word for ``w``, peeled off right-to-left via descents."""
    images = list(w.images)
    rev_letters = []
    changed = True
    while changed:
        changed = False
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                rev_letters.append(i + 1)
                changed = True
                break
    return ReducedWord(tuple(reversed(rev_letters)), w.n)


def enumerate_reduced_words(
    w: Permutation, rank_cap: Optional[int] = None
) -> list[ReducedWord]:
    """All reduced words of ``w``, via BFS over 2- and 3-moves.

    Exhaustive enumeration grows super-exponentially with rank, so ranks
    above the cap (default 6, override with ``rank_cap`` or the
    ``LRSCATTER_MAX_RANK`` environment variable) are rejected.
    """
    cap = _rank_cap(rank_cap)
    if w.n > cap:
        raise ValueError(f"rank {w.n} exceeds enumeration cap {cap}")
    seed = some_reduced_word(w)
    seen = {seed.letters}
    queue = deque([seed.letters])
    while queue:
        cur = ReducedWord(queue.popleft(), w.n)
        for move in available_moves(cur):
            nxt = apply_move(cur, move)[0].letters
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return [ReducedWord(ls, w.n) for ls in sorted(seen)]


def two_block_word(m: int, n: int) -> ReducedWord:
    """A reduced word for the two-block shuffle ``Permutation.two_block(m, n)``
    (unique up to two-moves): ``(s_n .. s_{n+m-1})(s_{n-1} .. s_{n+m-2}) ...
    (s_1 .. s_m)``."""
    if m < 1 or n < 1:
        raise ValueError("block sizes must be positive")
    letters = []
    for start in range(n, 0, -1):
        letters.extend(range(start, start + m))
    return ReducedWord(tuple(letters), m + n)


def staircase_word(n: int) -> ReducedWord:
    """The lexicographically minimal reduced word for the longest element:
    ``(1, 2, 1, 3, 2, 1, ..., n-1, ..., 1)``."""
    if n < 1:
        raise ValueError("rank must be positive")
    letters = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return ReducedWord(tuple(letters), n)


def longest_word(n: int) -> ReducedWord:
    return staircase_word(n)


def _shift_word(w: ReducedWord, offset: int, n: int) -> tuple[int, ...]:
    return tuple(a + offset for a in w.letters)


def assoc_word_left(m: int, n: int, k: int) -> ReducedWord:
    """Reduced word for the three-block shuffle obtained by concatenating a
    word for the ``(m+n, k)`` shuffle with one for the ``(m, n)`` shuffle on
    the first ``m + n`` strands."""
    if min(m, n, k) < 1:
        raise ValueError("block sizes must be positive")
    total = m + n + k
    outer = two_block_word(m + n, k)
    inner = two_block_word(m, n)
    return ReducedWord(outer.letters + _shift_word(inner, 0, total), total)


def assoc_word_right(m: int, n: int, k: int) -> ReducedWord:
    """Reduced word for the same three-block shuffle, concatenating a word for
    the ``(m, n+k)`` shuffle with one for the ``(n, k)`` shuffle on the last
    ``n + k`` strands."""
    if min(m, n, k) < 1:
        raise ValueError("block sizes must be positive")
    total = m + n + k
    outer = two_block_word(m, n + k)
    inner = two_block_word(n, k)
    return ReducedWord(outer.letters + _shift_word(inner, m, total), total)


@lru_cache(maxsize=None)
def _cached_ordering(letters: tuple[int, ...], n: int) -> tuple[Inversion, ...]:
    return reflection_ordering(ReducedWord(letters, n))


def cached_reflection_ordering(w: ReducedWord) -> tuple[Inversion, ...]:
    return _cached_ordering(w.letters, w.n)
