"""Command-line interface: coefficient queries, cone inspection, transition
maps, verification suites, and rendering.

All structured output is JSON on stdout with sorted keys, so identical
invocations produce identical bytes.  Malformed input exits 2 with an error
object on stderr; a failed verification exits 1 and includes a
counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks, oracles
from .cones import LinearForm, cone_contains, principal_cone
from .permutations import ReducedWord
from .render import render
from .scattering import lr_coefficient, star_product
from .transitions import transition
from .web import (
    BZPattern,
    count_bz_patterns,
    lattice_points,
    restrict_to_bz,
    web_from_scattering,
)

DEFAULT_SEED = 20240901


class InputError(ValueError):
    pass


def _load_json(text: str):
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {text[1:]}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def _parse_word(payload) -> ReducedWord:
    data = _load_json(payload) if isinstance(payload, str) else payload
    if isinstance(data, dict):
        letters, n = data.get("letters"), data.get("n")
        if not isinstance(letters, list) or not isinstance(n, int):
            raise InputError('word object needs "letters" and "n"')
    elif isinstance(data, list):
        letters = data
        n = max(letters) + 1 if letters else 1
    else:
        raise InputError("word must be a JSON array or object")
    try:
        return ReducedWord(tuple(int(a) for a in letters), int(n))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _parse_params(payload) -> dict:
    data = _load_json(payload) if isinstance(payload, str) else payload
    if not isinstance(data, list):
        raise InputError("parameters must be a JSON array of {i, j, c}")
    out = {}
    for item in data:
        try:
            i, j, c = int(item["i"]), int(item["j"]), int(item["c"])
        except (TypeError, KeyError, ValueError) as exc:
            raise InputError(f"bad parameter entry {item!r}") from exc
        if not i < j:
            raise InputError(f"parameter indices must satisfy i < j: {item!r}")
        if (i, j) in out:
            raise InputError(f"duplicate parameter for ({i}, {j})")
        out[(i, j)] = c
    return out


def _parse_tuple(payload) -> tuple[int, ...]:
    data = _load_json(payload) if isinstance(payload, str) else payload
    if not isinstance(data, list):
        raise InputError("expected a JSON array of integers")
    return tuple(int(v) for v in data)


def _params_json(params: dict) -> list[dict]:
    return [{"i": i, "j": j, "c": params[(i, j)]} for (i, j) in sorted(params)]


def _form_json(form: LinearForm) -> list[dict]:
    return [{"i": i, "j": j, "coeff": c} for i, j, c in form.coeffs]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _fail(message: str) -> int:
    print(json.dumps({"error": message}, sort_keys=True), file=sys.stderr)
    return 2


# -- subcommands -------------------------------------------------------------


def _cmd_lr(args) -> int:
    lam = _parse_tuple(args.lam)
    mu = _parse_tuple(args.mu)
    nu = _parse_tuple(args.nu)
    rank = args.rank
    result = {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "N": rank}
    coefficient = lr_coefficient(lam, mu, nu, rank)
    result["coefficient"] = coefficient
    wanted = args.oracle
    oracle_values = {}
    if wanted in ("tableau", "all"):
        oracle_values["tableau"] = oracles.lr_tableau_count(lam, mu, nu)
    if wanted in ("pieri", "all"):
        oracle_values["pieri"] = oracles.pieri_tensor(lam, mu, rank).get(
            oracles.pad_weight(nu, rank), 0
        )
    if wanted in ("bz", "all"):
        oracle_values["bz"] = count_bz_patterns(lam, mu, nu, rank)
    if oracle_values:
        result["oracles"] = oracle_values
        result["agree"] = all(v == coefficient for v in oracle_values.values())
    _emit(result)
    if oracle_values and not result["agree"]:
        return 1
    return 0


def _cmd_star(args) -> int:
    a = _parse_tuple(args.a)
    b = _parse_tuple(args.b)
    terms = star_product(a, b)
    _emit(
        {
            "a": list(a),
            "b": list(b),
            "terms": [
                {"tuple": list(t), "multiplicity": m}
                for t, m in sorted(terms.items())
            ],
        }
    )
    return 0


def _cmd_cone(args) -> int:
    word = _parse_word(args.word)
    if args.cone_action == "describe":
        cone = principal_cone(word)
        _emit(
            {
                "word": list(word.letters),
                "n": word.n,
                "inequalities": [_form_json(f) for f in cone.inequalities],
                "pretty": [f"{f} >= 0" for f in cone.inequalities],
            }
        )
        return 0
    params = _parse_params(args.params)
    _emit(
        {
            "word": list(word.letters),
            "n": word.n,
            "params": _params_json(params),
            "contains": cone_contains(word, params),
        }
    )
    return 0


def _cmd_transition(args) -> int:
    source = _parse_word(args.source)
    target = _parse_word(args.target)
    params = _parse_params(args.params)
    moved = transition(source, target, params)
    _emit(
        {
            "from": list(source.letters),
            "to": list(target.letters),
            "params": _params_json(moved),
        }
    )
    return 0


def _cmd_render(args) -> int:
    data = _load_json(args.input)
    kind = args.object
    if kind == "wiring":
        if isinstance(data, dict) and "word" in data:
            data = data["word"]
        obj = _parse_word(data)
    elif kind == "web":
        obj = _build_web(data)
        if obj is None:
            return _fail("scattering vanishes on this input; nothing to draw")
    else:
        obj = _build_bz(data)
    text = render(obj, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _build_web(data):
    if not isinstance(data, dict):
        raise InputError('web input needs {"x", "y", "params"}')
    x = _parse_tuple(data.get("x", []))
    y = _parse_tuple(data.get("y", []))
    params = _parse_params(data.get("params", []))
    return web_from_scattering(x, y, params)


def _build_bz(data):
    if not isinstance(data, dict):
        raise InputError("bz input must be an object")
    rank = data.get("N")
    if not isinstance(rank, int):
        raise InputError('bz input needs an integer "N"')
    if "values" in data:
        values = data["values"]
        pts = lattice_points(rank)
        if not isinstance(values, list) or len(values) != len(pts):
            raise InputError(
                f"expected {len(pts)} values in canonical lattice order"
            )
        return BZPattern(rank, dict(zip(pts, (int(v) for v in values))))
    diagram = _build_web(data)
    if diagram is None:
        raise InputError("scattering vanishes on this input")
    return restrict_to_bz(diagram, rank)


# -- verification suites -----------------------------------------------------


def _verify_yb(args):
    half = args.bound if args.bound is not None else 3
    return checks.check_yang_baxter(half=half)


def _verify_tetra(args):
    half = args.bound if args.bound is not None else 3
    return checks.check_tetrahedron(half=half)


def _verify_assoc(args):
    cap = args.bound if args.bound is not None else 3
    return checks.check_associativity(entry_cap=cap)


def _verify_cones(args):
    box = args.bound if args.bound is not None else 4
    return checks.check_cone_theorems(box=box)


def _verify_duality(args):
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    trials = args.trials if args.trials is not None else 60
    return checks.check_duality(seed=seed, trials=trials)


_VERIFY_SUITES = {
    "yb": _verify_yb,
    "tetra": _verify_tetra,
    "assoc": _verify_assoc,
    "cones": _verify_cones,
    "duality": _verify_duality,
}


def _cmd_verify(args) -> int:
    result = _VERIFY_SUITES[args.suite](args)
    result["suite"] = args.suite
    _emit(result)
    return 0 if result["ok"] else 1


# -- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrscatter",
        description="Tensor-product multiplicities via scattering combinatorics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--lambda", dest="lam", required=True, help="JSON weight")
    p.add_argument("--mu", required=True, help="JSON weight")
    p.add_argument("--nu", required=True, help="JSON weight")
    p.add_argument("--N", dest="rank", type=int, required=True)
    p.add_argument(
        "--oracle",
        choices=["tableau", "pieri", "bz", "all", "none"],
        default="none",
    )
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("star", help="product of two basis tuples")
    p.add_argument("--a", required=True, help="JSON tuple")
    p.add_argument("--b", required=True, help="JSON tuple")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("cone", help="principal cone operations")
    cone_sub = p.add_subparsers(dest="cone_action", required=True)
    d = cone_sub.add_parser("describe")
    d.add_argument("--word", required=True, help="JSON word")
    d.set_defaults(func=_cmd_cone)
    c = cone_sub.add_parser("check")
    c.add_argument("--word", required=True, help="JSON word")
    c.add_argument("--params", required=True, help="JSON parameter list")
    c.set_defaults(func=_cmd_cone)

    p = sub.add_parser("transition", help="carry parameters between words")
    p.add_argument("--from", dest="source", required=True, help="JSON word")
    p.add_argument("--to", dest="target", required=True, help="JSON word")
    p.add_argument("--params", required=True, help="JSON parameter list")
    p.set_defaults(func=_cmd_transition)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=sorted(_VERIFY_SUITES))
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="draw a diagram")
    p.add_argument("object", choices=["wiring", "web", "bz"])
    p.add_argument("--input", required=True, help="JSON input (or @file)")
    p.add_argument("--format", choices=["svg", "ascii"], default="ascii")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
