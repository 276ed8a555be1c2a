"""Classical cross-checks for the scattering pipeline.

Two independent routes to tensor-product multiplicities live here: the
textbook Littlewood-Richardson skew-tableau count, and a decomposition that
only ever uses Pieri steps (multiplication by one exterior power at a time).
A bug in one cannot silently confirm the other.
"""

from __future__ import annotations

from collections import Counter
from functools import cache

Partition = tuple[int, ...]
Weight = tuple[int, ...]


def check_partition(p) -> Partition:
    p = tuple(int(x) for x in p)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not weakly decreasing and nonnegative: {p!r}")
    return p


def strip_zeros(p: Partition) -> Partition:
    k = len(p)
    while k and p[k - 1] == 0:
        k -= 1
    return p[:k]


def conjugate(p) -> Partition:
    """Transpose of the Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    >>> conjugate(())
    ()
    """
    p = strip_zeros(check_partition(p))
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > i) for i in range(p[0]))


def to_column_word(weight) -> tuple[int, ...]:
    """Column heights of a dominant weight in weakly increasing order, zeros
    dropped: the unique ``x_1 <= ... <= x_m`` with
    ``weight = omega_{x_1} + ... + omega_{x_m}``.

    >>> to_column_word((2, 1, 0))
    (1, 2)
    >>> to_column_word((0, 0))
    ()
    """
    return tuple(reversed(conjugate(weight)))


def weight_from_columns(columns, rank: int) -> Weight:
    """Inverse of :func:`to_column_word` at a fixed rank."""
    cols = sorted((c for c in columns if c != 0), reverse=True)
    if cols and cols[0] > rank:
        raise ValueError(f"column height {cols[0]} exceeds rank {rank}")
    return tuple(sum(1 for c in cols if c > i) for i in range(rank))


def weight_size(weight) -> int:
    return sum(weight)


def partitions_up_to(max_size: int, max_rows: int) -> list[Partition]:
    """All partitions of every size up to ``max_size`` with at most
    ``max_rows`` parts, sorted."""
    found = {()}

    def rec(remaining: int, largest: int, acc: list[int]) -> None:
        if not remaining:
            found.add(tuple(acc))
            return
        if len(acc) == max_rows:
            return
        for part in range(min(remaining, largest), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    for size in range(1, max_size + 1):
        rec(size, size, [])
    return sorted(found)


def pieri_terms(k: int, weight: Weight, rank: int) -> list[Weight]:
    """Expand the product of the ``k``-th exterior power with ``weight``:
    all weights whose column word interlaces the given one and adds ``k``
    boxes in a vertical strip."""
    if not 0 <= k <= rank:
        raise ValueError(f"column height {k} out of range 0..{rank}")
    x = to_column_word(weight)
    m = len(x)
    out: list[Weight] = []

    def extend(pos: int, y_top: int, ys: list[int]) -> None:
        # y_top carries k plus the deficits accumulated so far; it is the
        # forced value of the new tallest column, so it only ever grows.
        if y_top > rank:
            return
        if pos == m:
            if (x[m - 1] if m else 0) <= y_top:
                out.append(weight_from_columns(ys + [y_top], rank))
            return
        lo = x[pos - 1] if pos else 0
        for y in range(lo, x[pos] + 1):
            extend(pos + 1, y_top + (x[pos] - y), ys + [y])

    extend(0, k, [])
    return out


@cache
def _pieri_tensor_cached(lam: Weight, mu: Weight, rank: int) -> tuple[tuple[Weight, int], ...]:
    if weight_size(lam) == 0:
        return ((mu, 1),)
    x = to_column_word(lam)
    tallest = x[-1]
    rest = weight_from_columns(x[:-1], rank)
    total: Counter[Weight] = Counter()
    for tau, mult in _pieri_tensor_cached(rest, mu, rank):
        for sigma in pieri_terms(tallest, tau, rank):
            total[sigma] += mult
    # The Pieri step on `rest` produced lam plus strictly dominance-smaller
    # siblings; peel their contributions off recursively.
    for sibling in pieri_terms(tallest, rest, rank):
        if sibling == lam:
            continue
        for nu, mult in _pieri_tensor_cached(sibling, mu, rank):
            total[nu] -= mult
    result = tuple(sorted((w, m) for w, m in total.items() if m != 0))
    if any(m < 0 for _, m in result):
        raise AssertionError("pieri recursion produced a negative multiplicity")
    return result


def pieri_tensor(lam, mu, rank: int) -> dict[Weight, int]:
    """Decompose the tensor product of two irreducibles at the given rank
    using only Pieri steps.

    >>> pieri_tensor((1, 0), (1, 0), 2)
    {(1, 1): 1, (2, 0): 1}
    """
    lam = pad_weight(lam, rank)
    mu = pad_weight(mu, rank)
    return dict(_pieri_tensor_cached(lam, mu, rank))


def pad_weight(weight, rank: int) -> Weight:
    w = check_partition(weight)
    if len(strip_zeros(w)) > rank:
        raise ValueError(f"weight {w!r} has more than {rank} parts")
    return strip_zeros(w) + (0,) * (rank - len(strip_zeros(w)))


def lr_tableau_count(lam, mu, nu) -> int:
    """Number of Littlewood-Richardson skew tableaux of shape ``nu/lam`` and
    content ``mu``: semistandard, with lattice reverse reading word.

    Returns 0 (rather than raising) when the shapes are incompatible.

    >>> lr_tableau_count((1,), (1,), (2,))
    1
    >>> lr_tableau_count((2, 1), (2, 1), (3, 2, 1))
    2
    """
    lam = strip_zeros(check_partition(lam))
    mu = strip_zeros(check_partition(mu))
    nu = strip_zeros(check_partition(nu))
    if weight_size(lam) + weight_size(mu) != weight_size(nu):
        return 0
    if len(lam) > len(nu) or any(l > n for l, n in zip(lam, nu)):
        return 0
    rows = len(nu)
    inner = lam + (0,) * (rows - len(lam))
    # Cells in reverse reading order: rows top to bottom, right to left.
    cells = [
        (r, c) for r in range(rows) for c in range(nu[r] - 1, inner[r] - 1, -1)
    ]
    nvals = len(mu)
    grid = [[0] * nu[r] for r in range(rows)]
    counts = [0] * (nvals + 1)
    total = 0

    def fill(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        hi = nvals
        if c + 1 < nu[r] and grid[r][c + 1]:
            hi = min(hi, grid[r][c + 1])
        lo = 1
        if r > 0 and inner[r - 1] <= c < nu[r - 1]:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            grid[r][c] = v
            fill(idx + 1)
            grid[r][c] = 0
            counts[v] -= 1

    fill(0)
    return total
