"""Scattering operators on energy tuples and the product they induce.

The basic operator ``R(c)`` sends a pair of energies ``(x, y)`` to
``(y + c, x - c)`` when ``c >= x - y`` and kills the state otherwise.
Words in adjacent transpositions compose such operators, one per crossing
of the wiring diagram, applied top crossing first.  Summing the two-block
composition over all rectangular plane partitions of parameters yields an
associative product on tuples whose structure constants are the
Littlewood-Richardson coefficients.

Compositions are evaluated over the full integer energy lattice and a
result with a negative entry is identified with the zero vector only at
the end.  Truncating at every intermediate step instead would break the
braid relation for some negative parameters (an intermediate negative
entry can recover on one side but not the other); on nonnegative
parameter collections, where the product and the coefficient count live,
the two conventions agree because a negative entry can never recover when
every ``c`` is nonnegative.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, Optional

from .oracles import (
    check_partition,
    strip_zeros,
    to_column_word,
    weight_from_columns,
    weight_size,
)
from .permutations import (
    Inversion,
    ReducedWord,
    cached_reflection_ordering,
    evaluate_word,
    inversion_set,
    two_block_word,
)

BasisTuple = tuple[int, ...]
ParamCollection = dict[Inversion, int]
WeightedTupleSum = Counter


def scatter(c: int, x: int, y: int) -> Optional[tuple[int, int]]:
    """Apply ``R(c)`` to a pair of energies; ``None`` is the zero vector.

    >>> scatter(0, 2, 5)
    (5, 2)
    >>> scatter(1, 3, 1) is None
    True
    """
    if x < 0 or y < 0:
        raise ValueError("energies must be nonnegative")
    if c < x - y:
        return None
    nx, ny = y + c, x - c
    if nx < 0 or ny < 0:
        return None
    return nx, ny


@lru_cache(maxsize=None)
def _application_ops(letters: tuple[int, ...], n: int) -> tuple[tuple[int, int, Inversion], ...]:
    """0-based slot pairs in the order the operators act (top crossing first)."""
    ordering = cached_reflection_ordering(ReducedWord(letters, n))
    return tuple((i - 1, j - 1, (i, j)) for (i, j) in reversed(ordering))


def apply_scattering(
    word: ReducedWord, params: ParamCollection, state: BasisTuple
) -> Optional[BasisTuple]:
    """Compose one scattering operator per crossing of ``word`` and apply the
    result to ``state``; ``None`` when the image is the zero vector.

    The operator for the topmost crossing acts first.  Intermediate
    energies may dip below zero; only a final tuple with a negative entry
    is identified with zero.  Entry sums are conserved whenever the result
    is a tuple.

    >>> apply_scattering(ReducedWord((1,), 2), {(1, 2): 0}, (2, 5))
    (5, 2)
    """
    if len(state) != word.n:
        raise ValueError(f"state has length {len(state)}, expected {word.n}")
    if any(e < 0 for e in state):
        raise ValueError("state entries must be nonnegative")
    perm, reduced = evaluate_word(word)
    if not reduced:
        raise ValueError("word is not reduced")
    if set(params) != set(inversion_set(perm)):
        raise ValueError("parameter keys do not match the word's inversions")
    slots = list(state)
    for i0, j0, inv in _application_ops(word.letters, word.n):
        c = params[inv]
        x, y = slots[i0], slots[j0]
        if c < x - y:
            return None
        slots[i0], slots[j0] = y + c, x - c
    if any(e < 0 for e in slots):
        return None
    return tuple(slots)


def _two_block_ops(m: int, n: int) -> tuple[tuple[int, int, Inversion], ...]:
    w = two_block_word(m, n)
    return _application_ops(w.letters, w.n)


def scattering_collections(
    x: BasisTuple, y: BasisTuple, target: Optional[BasisTuple] = None
) -> Iterator[tuple[ParamCollection, BasisTuple]]:
    """All rectangular plane partitions of parameters whose two-block
    scattering does not kill ``x ++ y``, with the resulting slot tuple.

    Parameters are keyed by ``(i, m+j)`` for ``1 <= i <= m``, ``1 <= j <= n``
    and weakly decrease down the wiring diagram.  ``target`` (a slot tuple)
    restricts the search to collections producing exactly that output; the
    last operator touching a slot then has its parameter forced, which
    prunes hard.
    """
    m, n = len(x), len(y)
    if any(e < 0 for e in x) or any(e < 0 for e in y):
        raise ValueError("energies must be nonnegative")
    start = tuple(x) + tuple(y)
    if m == 0 or n == 0:
        if target is None or target == start:
            yield {}, start
        return
    ops = _two_block_ops(m, n)
    total = len(ops)
    last_touch_i = {}
    last_touch_j = {}
    for idx, (i0, j0, _) in enumerate(ops):
        last_touch_i[i0] = idx
        last_touch_j[j0] = idx
    slots = list(start)
    params: ParamCollection = {}

    def rec(k: int) -> Iterator[tuple[ParamCollection, BasisTuple]]:
        if k == total:
            yield dict(params), tuple(slots)
            return
        i0, j0, (i, j) = ops[k]
        u, v = slots[i0], slots[j0]
        lo = max(0, u - v)
        hi = u
        dominator = params.get((i + 1, j))
        if dominator is not None:
            hi = min(hi, dominator)
        dominator = params.get((i, j - 1))
        if dominator is not None:
            hi = min(hi, dominator)
        if target is not None:
            if last_touch_i[i0] == k:
                forced = target[i0] - v
                lo, hi = max(lo, forced), min(hi, forced)
            if last_touch_j[j0] == k:
                forced = u - target[j0]
                lo, hi = max(lo, forced), min(hi, forced)
        for c in range(lo, hi + 1):
            params[(i, j)] = c
            slots[i0], slots[j0] = v + c, u - c
            yield from rec(k + 1)
            slots[i0], slots[j0] = u, v
        params.pop((i, j), None)

    yield from rec(0)


def _rotate_output(out: BasisTuple, m: int) -> BasisTuple:
    """Reorder a two-block slot tuple by bottom position of the diagram: the
    first ``m`` slots exit on the right, the rest on the left."""
    return out[m:] + out[:m]


def star_product(a: BasisTuple, b: BasisTuple) -> WeightedTupleSum:
    """The bilinear product of two basis tuples, as a multiset of tuples.

    >>> sorted(star_product((1,), (1,)).items())
    [((0, 2), 1), ((1, 1), 1)]
    >>> star_product((2, 1), (1,))
    Counter()
    """
    a, b = tuple(a), tuple(b)
    terms: WeightedTupleSum = Counter()
    for _, out in scattering_collections(a, b):
        terms[_rotate_output(out, len(a))] += 1
    return terms


def star_product_sums(a: WeightedTupleSum, b: WeightedTupleSum) -> WeightedTupleSum:
    """Bilinear extension of :func:`star_product` to weighted sums."""
    total: WeightedTupleSum = Counter()
    for ta, ma in a.items():
        for tb, mb in b.items():
            for tc, mc in star_product(ta, tb).items():
                total[tc] += ma * mb * mc
    return total


def pieri_product(x: int, t: BasisTuple) -> WeightedTupleSum:
    """Product of a single energy with a weakly increasing tuple, by direct
    interlacing: all ``(y_1, ..., y_{m+1})`` with
    ``0 <= y_1 <= t_1 <= y_2 <= ... <= t_m <= y_{m+1}`` adding up to
    ``sum(t) + x``.

    >>> sorted(pieri_product(1, (1,)))
    [(0, 2), (1, 1)]
    """
    t = tuple(t)
    if any(t[i] > t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"tuple must be weakly increasing: {t!r}")
    if x < 0 or any(e < 0 for e in t):
        raise ValueError("energies must be nonnegative")
    m = len(t)
    terms: WeightedTupleSum = Counter()

    def extend(pos: int, y_top: int, ys: tuple[int, ...]) -> None:
        if pos == m:
            if not m or t[m - 1] <= y_top:
                terms[ys + (y_top,)] += 1
            return
        lo = t[pos - 1] if pos else 0
        for yv in range(lo, t[pos] + 1):
            extend(pos + 1, y_top + (t[pos] - yv), ys + (yv,))

    extend(0, x, ())
    return terms


def project_to_weight(t: BasisTuple, rank: int) -> Optional[tuple[int, ...]]:
    """Interpret a weakly increasing tuple with entries in ``0..rank`` as a
    dominant weight (sum of fundamental weights); ``None`` otherwise.

    >>> project_to_weight((1, 2), 2)
    (2, 1)
    >>> project_to_weight((2, 1), 2) is None
    True
    """
    if rank < 1:
        raise ValueError("rank must be positive")
    if any(t[i] > t[i + 1] for i in range(len(t) - 1)):
        return None
    if any(not 0 <= e <= rank for e in t):
        return None
    return weight_from_columns(t, rank)


def project_sum(terms: WeightedTupleSum, rank: int) -> dict[tuple[int, ...], int]:
    """Push a weighted tuple sum through :func:`project_to_weight`."""
    out: Counter = Counter()
    for t, mult in terms.items():
        w = project_to_weight(t, rank)
        if w is not None:
            out[w] += mult
    return dict(out)


def lr_coefficient(lam, mu, nu, rank: int) -> int:
    """Littlewood-Richardson coefficient at the given rank, counted as the
    number of parameter collections whose two-block scattering carries the
    column words of ``lam`` and ``mu`` to the column word of ``nu``.

    >>> lr_coefficient((1, 0), (1, 0), (1, 1), 2)
    1
    >>> lr_coefficient((2, 1, 0), (2, 1, 0), (3, 2, 1), 3)
    2
    """
    lam, mu, nu = (_check_rank(w, rank) for w in (lam, mu, nu))
    if weight_size(lam) + weight_size(mu) != weight_size(nu):
        return 0
    x = to_column_word(lam)
    y = to_column_word(mu)
    z = to_column_word(nu)
    m, n = len(x), len(y)
    if len(z) > m + n:
        return 0
    z = (0,) * (m + n - len(z)) + z
    target = z[n:] + z[:n]
    return sum(1 for _ in scattering_collections(x, y, target=target))


def _check_rank(weight, rank: int) -> tuple[int, ...]:
    w = check_partition(weight)
    if len(strip_zeros(w)) > rank:
        raise ValueError(f"weight {w!r} has more than {rank} parts")
    return w
