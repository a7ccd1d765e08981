"""File formats shared by the library and the command line.

Payoff matrices are small integers and travel as plain JSON numbers.
Everything that can grow -- numerators, denominators, complexity values --
travels as decimal strings so downstream consumers cannot silently round.
The game writer is deliberately byte-stable: one matrix row per line,
fixed key order, trailing newline.  Golden files depend on that.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import ParseError
from .exact import IntMatrix
from .games import Game, MixedStrategy, Profile, strategy_from_json, strategy_to_json


def dumps_game(game: Game) -> str:
    lines = ["{"]
    lines.append(f'  "n": {game.n},')
    for name, matrix in (("A", game.A), ("B", game.B)):
        lines.append(f'  "{name}": [')
        for r, row in enumerate(matrix.rows):
            comma = "," if r < matrix.n - 1 else ""
            lines.append("    [" + ", ".join(str(v) for v in row) + "]" + comma)
        lines.append("  ],")
    tag = json.dumps(game.family_tag)
    lines.append(f'  "family_tag": {tag},')
    cs = json.dumps(game.constant_sum)
    lines.append(f'  "constant_sum": {cs}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _int_matrix(obj: Any, field: str, n: int) -> IntMatrix:
    if not isinstance(obj, list) or len(obj) != n:
        raise ParseError(f"field {field!r}: expected {n} rows")
    for r, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"field {field!r}, row {r + 1}: expected {n} entries")
        for c, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(
                    f"field {field!r}, row {r + 1}, column {c + 1}: "
                    f"payoffs must be integers, got {v!r}"
                )
    return IntMatrix(obj)


def parse_game(text: str) -> Game:
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    try:
        n = obj["n"]
    except KeyError:
        raise ParseError("field 'n' is missing")
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"field 'n': expected a positive integer, got {n!r}")
    if "A" not in obj or "B" not in obj:
        raise ParseError("fields 'A' and 'B' are required")
    a = _int_matrix(obj["A"], "A", n)
    b = _int_matrix(obj["B"], "B", n)
    tag = obj.get("family_tag")
    if tag is not None and not isinstance(tag, str):
        raise ParseError("field 'family_tag': expected a string or null")
    cs = obj.get("constant_sum")
    if cs is not None and (not isinstance(cs, int) or isinstance(cs, bool)):
        raise ParseError("field 'constant_sum': expected an integer or null")
    try:
        return Game(a, b, family_tag=tag, constant_sum=cs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load_game(path: str) -> Game:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_game(fh.read())


def dumps_distribution(x: MixedStrategy) -> str:
    return json.dumps(strategy_to_json(x), indent=2) + "\n"


def parse_distribution(text: str) -> MixedStrategy:
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    return strategy_from_json(obj)


def load_distribution(path: str) -> MixedStrategy:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_distribution(fh.read())


def profile_to_jsonable(profile: Profile) -> dict:
    return {"x": strategy_to_json(profile.x), "y": strategy_to_json(profile.y)}


def dumps_profile(profile: Profile) -> str:
    return json.dumps(profile_to_jsonable(profile), indent=2) + "\n"


def parse_profile(text: str) -> Profile:
    obj = _loads(text)
    if not isinstance(obj, dict) or "x" not in obj or "y" not in obj:
        raise ParseError("profile object needs fields 'x' and 'y'")
    return Profile(strategy_from_json(obj["x"]), strategy_from_json(obj["y"]))


def load_profile(path: str) -> Profile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_profile(fh.read())


def fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)
