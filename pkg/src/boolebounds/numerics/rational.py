"""Exact rationals.

``fractions.Fraction`` already keeps numerator and denominator in lowest
terms with a positive denominator, so it serves as the rational type
directly; this module only adds strict text parsing and formatting.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from ..errors import FormatError

Rat = Fraction

_RAT_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*")


def rat_parse(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a reduced rational.

    Integers and Fractions are accepted as-is. Floats and decimal
    strings are refused: a value like ``0.1`` has no exact binary form
    and the whole library is exact.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise FormatError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise FormatError(f"not a rational: {text!r}")
    m = _RAT_RE.fullmatch(text)
    if m is None:
        raise FormatError(f"malformed rational {text!r}; expected 'p/q' or 'p'")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise FormatError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def rat_str(value: Fraction) -> str:
    return str(Fraction(value))


def rat_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(rat_parse(v) for v in values)
