"""Instance files, rational strings, and seeded random instances.

An instance file is one JSON document::

    {"d": 2, "a": "1/3", "vectors": [["1", "0"], ["0", "1"]]}

Rationals are strings: an integer ``"7"``, a fraction ``"3/4"`` or a finite
decimal ``"0.25"``.  Decimals convert exactly.  Indices everywhere are 0-based.
"""
from __future__ import annotations

import json
import random
import re
from fractions import Fraction
from typing import Tuple

from .exceptions import ParseError, ValidationError
from .selector import Instance, TargetRatio

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+|\.\d+)?")
# longest prefix that could still grow into a valid rational
_PREFIX = re.compile(r"[+-]?(?:\d+(?:/\d*|\.\d*)?)?")


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}", repr(text), 0)
    if _RATIONAL.fullmatch(text):
        num, slash, den = text.partition("/")
        if slash and int(den) == 0:
            raise ParseError("zero denominator", text, len(num) + 1)
        return Fraction(text)
    pos = _PREFIX.match(text).end()
    if pos == len(text):
        raise ParseError("unexpected end of input", text, pos)
    raise ParseError(f"unexpected character {text[pos]!r}", text, pos)


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def instance_to_dict(inst: Instance, ratio) -> dict:
    return {
        "d": inst.d,
        "a": format_rational(TargetRatio.of(ratio).value),
        "vectors": [[format_rational(x) for x in v] for v in inst.vectors],
    }


def emit_instance(inst: Instance, ratio) -> str:
    return json.dumps(instance_to_dict(inst, ratio), indent=2) + "\n"


def instance_from_dict(doc) -> Tuple[Instance, TargetRatio]:
    if not isinstance(doc, dict):
        raise ValidationError("instance document must be a JSON object")
    missing = [k for k in ("d", "a", "vectors") if k not in doc]
    if missing:
        raise ValidationError(f"instance document is missing {', '.join(missing)}")
    d = doc["d"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValidationError(f"d must be a positive integer, got {d!r}")
    try:
        a = parse_rational(doc["a"])
    except ParseError as exc:
        raise ParseError(f"field a: {exc.args[0]}", exc.text, exc.position) from None
    if not 0 <= a <= 1:
        raise ValidationError(f"a = {format_rational(a)} is outside [0, 1]")
    raw = doc["vectors"]
    if not isinstance(raw, list) or not raw:
        raise ValidationError("vectors must be a non-empty list")
    vectors = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != d:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise ValidationError(f"vectors[{i}] has dimension {got}, expected {d}")
        vec = []
        for j, cell in enumerate(row):
            try:
                x = parse_rational(cell)
            except ParseError as exc:
                raise ParseError(f"vectors[{i}][{j}]: {exc.args[0]}", exc.text, exc.position) from None
            if x < 0:
                raise ValidationError(f"vectors[{i}][{j}] is negative ({cell})")
            vec.append(x)
        vectors.append(tuple(vec))
    return Instance(tuple(vectors), d), TargetRatio.of(a)


def parse_instance(document) -> Tuple[Instance, TargetRatio]:
    """Parse JSON text (or an already-decoded dict) into an instance and ratio."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.doc, exc.pos) from None
    return instance_from_dict(document)


def random_instance(seed: int, n: int, d: int, max_denominator: int = 10, zero_density=0) -> Instance:
    """Deterministic random instance.

    Each coordinate is zero with probability ``zero_density`` (an exact
    rational, sampled exactly), otherwise ``num/den`` with both drawn
    uniformly from ``[1, max_denominator]``.
    """
    zero_density = Fraction(zero_density)
    if n < 1 or d < 1 or max_denominator < 1:
        raise ValidationError(f"n, d and max_denominator must be positive, got {n}, {d}, {max_denominator}")
    if not 0 <= zero_density <= 1:
        raise ValidationError(f"zero_density must lie in [0, 1], got {zero_density}")
    rng = random.Random(seed)
    zn, zd = zero_density.numerator, zero_density.denominator
    vectors = []
    for _ in range(n):
        vec = []
        for _ in range(d):
            if rng.randrange(zd) < zn:
                vec.append(Fraction(0))
            else:
                vec.append(Fraction(rng.randint(1, max_denominator), rng.randint(1, max_denominator)))
        vectors.append(tuple(vec))
    return Instance(tuple(vectors), d)
