"""Piecewise-linear transition maps between scattering parametrizations.

A braid move on a reduced word reorders three inversions; the matching
change of parameters is the min/plus/max map below.  Chaining local maps
along any move path between two words gives the same global transition,
which is what the tetrahedron identity packages for the longest element of
rank four.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Optional

from .permutations import (
    FORWARD,
    THREE_MOVE,
    Inversion,
    ReducedWord,
    apply_move,
    evaluate_word,
    find_move_chain,
    inversion_set,
)
from .scattering import ParamCollection, apply_scattering

S4_PAIRS: tuple[Inversion, ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def _require_keys(params: ParamCollection, keys) -> None:
    missing = [k for k in keys if k not in params]
    if missing:
        raise ValueError(f"parameter collection is missing keys {missing}")


def local_transition(params: ParamCollection, i: int, j: int, k: int) -> ParamCollection:
    """The braid-move map on the three parameters labelled by ``i < j < k``:
    ``c_ij' = min(c_ij, c_ik - c_jk)``, ``c_ik' = c_ij + c_jk``,
    ``c_jk' = max(c_jk, c_ik - c_ij)``.  Other entries are untouched.

    >>> local_transition({(1, 2): 0, (1, 3): 3, (2, 3): 1}, 1, 2, 3)
    {(1, 2): 0, (1, 3): 1, (2, 3): 3}
    """
    if not i < j < k:
        raise ValueError("labels must satisfy i < j < k")
    _require_keys(params, [(i, j), (i, k), (j, k)])
    cij, cik, cjk = params[(i, j)], params[(i, k)], params[(j, k)]
    out = dict(params)
    out[(i, j)] = min(cij, cik - cjk)
    out[(i, k)] = cij + cjk
    out[(j, k)] = max(cjk, cik - cij)
    return out


def local_transition_inverse(params: ParamCollection, i: int, j: int, k: int) -> ParamCollection:
    """Inverse of :func:`local_transition`; the round trip is the identity on
    all integer collections."""
    if not i < j < k:
        raise ValueError("labels must satisfy i < j < k")
    _require_keys(params, [(i, j), (i, k), (j, k)])
    cij, cik, cjk = params[(i, j)], params[(i, k)], params[(j, k)]
    out = dict(params)
    out[(i, j)] = max(cij, cik - cjk)
    out[(i, k)] = cij + cjk
    out[(j, k)] = min(cjk, cik - cij)
    return out


@lru_cache(maxsize=None)
def _compiled_chain(
    a_letters: tuple[int, ...], b_letters: tuple[int, ...], n: int
) -> tuple[tuple[bool, int, int, int], ...]:
    """Braid steps of one move chain from ``a`` to ``b``: (forward?, i, j, k)
    per three-move, two-moves dropped.  Cached; transition maps are applied
    far more often than chains are discovered."""
    a = ReducedWord(a_letters, n)
    b = ReducedWord(b_letters, n)
    steps = []
    current = a
    for move in find_move_chain(a, b):
        current, triple = apply_move(current, move)
        if move.kind == THREE_MOVE:
            steps.append((move.direction == FORWARD, *triple))
    return tuple(steps)


def transition(a: ReducedWord, b: ReducedWord, params: ParamCollection) -> ParamCollection:
    """Carry a parameter collection for word ``a`` to one for word ``b`` by
    composing local maps along a move chain (two-moves act as the identity).
    The result does not depend on the chain chosen.

    >>> transition(ReducedWord((1, 2, 1), 3), ReducedWord((2, 1, 2), 3),
    ...            {(1, 2): 0, (1, 3): 3, (2, 3): 1})
    {(1, 2): 0, (1, 3): 1, (2, 3): 3}
    """
    perm_a, reduced = evaluate_word(a)
    if not reduced:
        raise ValueError("word is not reduced")
    if set(params) != set(inversion_set(perm_a)):
        raise ValueError("parameter keys do not match the word's inversions")
    out = dict(params)
    for forward, i, j, k in _compiled_chain(a.letters, b.letters, a.n):
        cij, cik, cjk = out[(i, j)], out[(i, k)], out[(j, k)]
        if forward:
            out[(i, j)] = min(cij, cik - cjk)
            out[(i, k)] = cij + cjk
            out[(j, k)] = max(cjk, cik - cij)
        else:
            out[(i, j)] = max(cij, cik - cjk)
            out[(i, k)] = cij + cjk
            out[(j, k)] = min(cjk, cik - cij)
    return out


def _yang_baxter_sides(c12: int, c13: int, c23: int):
    primes = local_transition({(1, 2): c12, (1, 3): c13, (2, 3): c23}, 1, 2, 3)
    lhs = ReducedWord((1, 2, 1), 3)
    rhs = ReducedWord((2, 1, 2), 3)
    plain = {(1, 2): c12, (1, 3): c13, (2, 3): c23}
    return lhs, plain, rhs, primes


def yang_baxter_counterexample(
    c12: int, c13: int, c23: int, bound: int, primes: Optional[ParamCollection] = None
) -> Optional[tuple[int, int, int]]:
    """First energy triple (entries up to ``bound``) on which the two braid
    compositions disagree; ``None`` when they agree everywhere on the box.

    ``primes`` overrides the transformed parameters, which is how the
    uniqueness claim is probed: any perturbation must break the identity.
    """
    lhs_word, plain, rhs_word, computed = _yang_baxter_sides(c12, c13, c23)
    rhs_params = computed if primes is None else primes
    for state in product(range(bound + 1), repeat=3):
        lhs = apply_scattering(lhs_word, plain, state)
        rhs = apply_scattering(rhs_word, rhs_params, state)
        if lhs != rhs:
            return state
    return None


def verify_yang_baxter(c12: int, c13: int, c23: int, bound: int) -> bool:
    """Exhaustively check the braid relation for the scattering operators on
    all basis states with entries up to ``bound``.

    >>> verify_yang_baxter(1, 3, 1, 6)
    True
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return yang_baxter_counterexample(c12, c13, c23, bound) is None


_TETRA_ORDER = ((2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 3))


def verify_tetrahedron(params: ParamCollection) -> bool:
    """Check the tetrahedron identity on one parameter collection over all
    six inversions of the rank-4 longest element: applying the four local
    maps in one nested order agrees with the reversed order.

    >>> verify_tetrahedron({p: 0 for p in S4_PAIRS})
    True
    """
    if set(params) != set(S4_PAIRS):
        raise ValueError("expected parameters keyed by all six pairs in rank 4")
    lhs = dict(params)
    for i, j, k in _TETRA_ORDER:
        lhs = local_transition(lhs, i, j, k)
    rhs = dict(params)
    for i, j, k in reversed(_TETRA_ORDER):
        rhs = local_transition(rhs, i, j, k)
    return lhs == rhs
