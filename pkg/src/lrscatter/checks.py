"""Reusable property suites behind both ``lrscatter verify`` and the
acceptance tests.

Each suite returns ``{"ok": bool, "checks": int, ...}`` with a
``counterexample`` entry on failure rather than raising, so callers can
report precisely what broke.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import product

from . import oracles
from .cones import principal_cone
from .permutations import (
    Permutation,
    ReducedWord,
    enumerate_reduced_words,
    lowest_crossing,
)
from .scattering import (
    apply_scattering,
    lr_coefficient,
    pieri_product,
    star_product,
    star_product_sums,
)
from .transitions import (
    S4_PAIRS,
    local_transition,
    transition,
    verify_tetrahedron,
    yang_baxter_counterexample,
)
from .web import (
    boundary_weight_sums,
    check_hexagon,
    count_bz_patterns,
    restrict_to_bz,
    scattering_weights,
    web_from_scattering,
)
from .scattering import scattering_collections

DEFAULT_SEED = 20240901

UNIQUENESS_BASE = (1, 3, 1)
UNIQUENESS_ENTRIES = 6


def _params_json(params: dict) -> list[dict]:
    return [{"i": i, "j": j, "c": params[(i, j)]} for (i, j) in sorted(params)]


def check_yang_baxter(half: int = 3, entries: int = 5) -> dict:
    """Exhaustive braid-relation check on the parameter box ``[-half, half]^3``
    and all states with entries up to ``entries``, plus the uniqueness probe:
    perturbing any transformed parameter must break the identity."""
    checks = 0
    for c in product(range(-half, half + 1), repeat=3):
        checks += 1
        bad = yang_baxter_counterexample(*c, entries)
        if bad is not None:
            return {
                "ok": False,
                "checks": checks,
                "counterexample": {"c": list(c), "state": list(bad)},
            }
    primes = local_transition(
        {(1, 2): UNIQUENESS_BASE[0], (1, 3): UNIQUENESS_BASE[1], (2, 3): UNIQUENESS_BASE[2]},
        1,
        2,
        3,
    )
    for key in sorted(primes):
        for delta in (1, -1):
            perturbed = dict(primes)
            perturbed[key] += delta
            checks += 1
            if (
                yang_baxter_counterexample(
                    *UNIQUENESS_BASE, UNIQUENESS_ENTRIES, primes=perturbed
                )
                is None
            ):
                return {
                    "ok": False,
                    "checks": checks,
                    "counterexample": {"uniqueness_key": list(key), "delta": delta},
                }
    return {"ok": True, "checks": checks}


def check_tetrahedron(half: int = 3) -> dict:
    """Exhaustive tetrahedron-identity check over ``[-half, half]^6``."""
    checks = 0
    for values in product(range(-half, half + 1), repeat=6):
        checks += 1
        params = dict(zip(S4_PAIRS, values))
        if not verify_tetrahedron(params):
            return {
                "ok": False,
                "checks": checks,
                "counterexample": {"params": _params_json(params)},
            }
    return {"ok": True, "checks": checks}


def check_transport(trials_per_pair: int = 200, half: int = 5, entry_cap: int = 3,
                    seed: int = DEFAULT_SEED) -> dict:
    """For every ordered pair of reduced words of the rank-4 longest element,
    random parameter collections must scatter identically after transition."""
    words = enumerate_reduced_words(Permutation.longest(4))
    states = [tuple(t) for t in product(range(entry_cap + 1), repeat=4)]
    rng = random.Random(seed)
    samples = [
        {p: rng.randint(-half, half) for p in S4_PAIRS}
        for _ in range(trials_per_pair)
    ]
    checks = 0
    lhs_cache: dict = {}
    for a in words:
        lhs_cache.clear()
        for idx, params in enumerate(samples):
            lhs_cache[idx] = [apply_scattering(a, params, t) for t in states]
        for b in words:
            if a.letters == b.letters:
                continue
            for idx, params in enumerate(samples):
                moved = transition(a, b, params)
                lhs = lhs_cache[idx]
                for t, expected in zip(states, lhs):
                    checks += 1
                    if apply_scattering(b, moved, t) != expected:
                        return {
                            "ok": False,
                            "checks": checks,
                            "counterexample": {
                                "word_a": list(a.letters),
                                "word_b": list(b.letters),
                                "params": _params_json(params),
                                "state": list(t),
                            },
                        }
    return {"ok": True, "checks": checks}


def check_cone_theorems(box: int = 4, ranks=(3, 4)) -> dict:
    """On the lattice box ``[0, box]^I(w_o)`` for each rank: transition maps
    carry cone points bijectively between cones (with inverse returning
    them), membership equals all-entries-nonnegative under every transported
    word, and equals the weaker lowest-entry test."""
    checks = 0
    for n in ranks:
        words = enumerate_reduced_words(Permutation.longest(n))
        lows = {w.letters: lowest_crossing(w) for w in words}
        cones = {w.letters: principal_cone(w) for w in words}
        pairs = sorted((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
        points = [
            dict(zip(pairs, values))
            for values in product(range(box + 1), repeat=len(pairs))
        ]
        membership = {}
        for w in words:
            cone = cones[w.letters]
            membership[w.letters] = [
                all(f.evaluate(p) >= 0 for f in cone.inequalities) for p in points
            ]
        for a in words:
            members = [p for p, inside in zip(points, membership[a.letters]) if inside]
            for b in words:
                cone_b = cones[b.letters]
                seen = set()
                for p in members:
                    checks += 1
                    q = transition(a, b, p)
                    key = tuple(q[pair] for pair in pairs)
                    if key in seen:
                        return _cone_fail(n, a, b, p, "image collision")
                    seen.add(key)
                    if not all(f.evaluate(q) >= 0 for f in cone_b.inequalities):
                        return _cone_fail(n, a, b, p, "image leaves cone")
                    if transition(b, a, q) != p:
                        return _cone_fail(n, a, b, p, "inverse mismatch")
            for p, inside in zip(points, membership[a.letters]):
                checks += 1
                if inside:
                    for b in words:
                        q = transition(a, b, p)
                        if any(v < 0 for v in q.values()):
                            return _cone_fail(n, a, b, p, "member turned negative")
                else:
                    if not any(
                        transition(a, b, p)[lows[b.letters]] < 0 for b in words
                    ):
                        return _cone_fail(n, a, None, p, "no negative lowest entry")
    return {"ok": True, "checks": checks}


def _cone_fail(n, a, b, params, reason) -> dict:
    return {
        "ok": False,
        "counterexample": {
            "n": n,
            "word_a": list(a.letters),
            "word_b": list(b.letters) if b is not None else None,
            "params": _params_json(params),
            "reason": reason,
        },
    }


def check_min_invariance(half: int = 4, trials: int = 40, seed: int = DEFAULT_SEED) -> dict:
    """Minimal rigorous-path values between any two boundary vertices are
    invariant under the transition maps (sampled parameters, ranks 3 and 4)."""
    from .cones import lower_end, min_path_value, upper_end

    rng = random.Random(seed)
    checks = 0
    for n in (3, 4):
        words = enumerate_reduced_words(Permutation.longest(n))
        pairs = sorted((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
        boundary = [upper_end(i) for i in range(1, n + 1)] + [
            lower_end(p) for p in range(1, n + 1)
        ]
        for _ in range(trials):
            params = {p: rng.randint(-half, half) for p in pairs}
            a, b = rng.choice(words), rng.choice(words)
            moved = transition(a, b, params)
            for s in range(n + 1):
                for start in boundary:
                    for end in boundary:
                        if start == end:
                            continue
                        checks += 1
                        if min_path_value(a, s, start, end, params) != min_path_value(
                            b, s, start, end, moved
                        ):
                            return {
                                "ok": False,
                                "counterexample": {
                                    "n": n,
                                    "word_a": list(a.letters),
                                    "word_b": list(b.letters),
                                    "s": s,
                                    "start": list(start),
                                    "end": list(end),
                                    "params": _params_json(params),
                                },
                            }
    return {"ok": True, "checks": checks}


def check_associativity(entry_cap: int = 3, length_cap: int = 2) -> dict:
    """Star-product associativity on all tuple triples up to the caps."""
    tuples = [()]
    for length in range(1, length_cap + 1):
        tuples += list(product(range(entry_cap + 1), repeat=length))
    checks = 0
    for a in tuples:
        for b in tuples:
            ab = star_product(a, b)
            for c in tuples:
                checks += 1
                left = star_product_sums(ab, Counter({c: 1}))
                right = star_product_sums(Counter({a: 1}), star_product(b, c))
                if left != right:
                    return {
                        "ok": False,
                        "checks": checks,
                        "counterexample": {"a": list(a), "b": list(b), "c": list(c)},
                    }
    return {"ok": True, "checks": checks}


def check_pieri_agreement(energy_cap: int = 4, entry_cap: int = 4, length_cap: int = 3) -> dict:
    """Single-energy star products against the direct interlacing rule."""
    checks = 0
    increasing = [()]
    for length in range(1, length_cap + 1):
        increasing += [
            t
            for t in product(range(entry_cap + 1), repeat=length)
            if all(t[i] <= t[i + 1] for i in range(length - 1))
        ]
    for x in range(energy_cap + 1):
        for t in increasing:
            checks += 1
            if star_product((x,), t) != pieri_product(x, t):
                return {
                    "ok": False,
                    "checks": checks,
                    "counterexample": {"x": x, "t": list(t)},
                }
    return {"ok": True, "checks": checks}


def check_duality(seed: int = DEFAULT_SEED, trials: int = 60, rank: int = 3,
                  size_cap: int = 4) -> dict:
    """Sampled symmetry and conjugation-duality checks against the tableau
    count."""
    rng = random.Random(seed)
    shapes = oracles.partitions_up_to(size_cap, rank)
    checks = 0
    for _ in range(trials):
        lam = rng.choice(shapes)
        mu = rng.choice(shapes)
        total = sum(lam) + sum(mu)
        candidates = [s for s in oracles.partitions_up_to(total, rank) if sum(s) == total]
        if not candidates:
            continue
        nu = rng.choice(candidates)
        checks += 1
        direct = lr_coefficient(lam, mu, nu, rank)
        swapped = lr_coefficient(mu, lam, nu, rank)
        conj_rank = max([1] + [s[0] for s in (lam, mu, nu) if s])
        dual = lr_coefficient(
            oracles.conjugate(lam),
            oracles.conjugate(mu),
            oracles.conjugate(nu),
            conj_rank,
        )
        reference = oracles.lr_tableau_count(lam, mu, nu)
        if not direct == swapped == dual == reference:
            return {
                "ok": False,
                "checks": checks,
                "counterexample": {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "nu": list(nu),
                    "values": [direct, swapped, dual, reference],
                },
            }
    return {"ok": True, "checks": checks}


def check_web_pipeline(rank: int = 3, size_cap: int = 4) -> dict:
    """Every surviving scattering collection on the grid draws a web diagram
    whose lattice restriction is hexagon-valid; whenever the output tuple
    fits the rank, the boundary pair sums match the three weights."""
    checks = 0
    for lam in oracles.partitions_up_to(size_cap, rank):
        for mu in oracles.partitions_up_to(size_cap, rank):
            x = oracles.to_column_word(oracles.pad_weight(lam, rank))
            y = oracles.to_column_word(oracles.pad_weight(mu, rank))
            if not x or not y:
                continue
            for params, out in scattering_collections(x, y):
                checks += 1
                diagram = web_from_scattering(x, y, params)
                if diagram is None:
                    return _web_fail(x, y, params, "diagram vanished")
                pattern = restrict_to_bz(diagram, rank)
                if not check_hexagon(pattern):
                    return _web_fail(x, y, params, "hexagon condition failed")
                if max(out) <= rank:
                    if boundary_weight_sums(pattern) != scattering_weights(
                        x, y, out, rank
                    ):
                        return _web_fail(x, y, params, "boundary sums mismatch")
    return {"ok": True, "checks": checks}


def _web_fail(x, y, params, reason) -> dict:
    return {
        "ok": False,
        "counterexample": {
            "x": list(x),
            "y": list(y),
            "params": _params_json(params),
            "reason": reason,
        },
    }


def check_lr_agreement(rank: int = 3, size_cap: int = 4, include_bz: bool = True) -> dict:
    """Scattering count == tableau count == Pieri recursion (== pattern
    count when requested) over the full grid."""
    checks = 0
    shapes = oracles.partitions_up_to(size_cap, rank)
    for lam in shapes:
        for mu in shapes:
            total = sum(lam) + sum(mu)
            tensor = oracles.pieri_tensor(lam, mu, rank)
            for nu in oracles.partitions_up_to(total, rank):
                if sum(nu) != total:
                    continue
                checks += 1
                values = {
                    "scattering": lr_coefficient(lam, mu, nu, rank),
                    "tableau": oracles.lr_tableau_count(lam, mu, nu),
                    "pieri": tensor.get(oracles.pad_weight(nu, rank), 0),
                }
                if include_bz:
                    values["bz"] = count_bz_patterns(lam, mu, nu, rank)
                if len(set(values.values())) != 1:
                    return {
                        "ok": False,
                        "checks": checks,
                        "counterexample": {
                            "lambda": list(lam),
                            "mu": list(mu),
                            "nu": list(nu),
                            "values": values,
                        },
                    }
    return {"ok": True, "checks": checks}
