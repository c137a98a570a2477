"""Feasible instances from 0/1 data: empirical frequencies and Apriori."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError, ValidationError
from .instance import MAX_N, BooleInstance, SetFamily, is_subset


@dataclass(frozen=True)
class BinaryMatrix:
    cols: int
    row_masks: tuple[int, ...]  # bit j - 1 set iff column j holds a 1

    def __post_init__(self):
        if not self.row_masks:
            raise ValidationError("matrix needs at least one row")
        if not 1 <= self.cols <= MAX_N:
            raise ValidationError(f"column count must be in [1, {MAX_N}]")

    @property
    def rows(self) -> int:
        return len(self.row_masks)

    def support(self, s: int) -> int:
        return sum(1 for r in self.row_masks if is_subset(s, r))

    def frequency(self, s: int) -> Fraction:
        return Fraction(self.support(s), self.rows)


_SPLIT = re.compile(r"[,\s]+")


def load_matrix(text: str, header: bool = False) -> BinaryMatrix:
    """Rows of 0/1 cells separated by commas and/or whitespace."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if header and lines:
        lines = lines[1:]
    if not lines:
        raise FormatError("matrix has no rows")
    masks, width = [], None
    for lineno, ln in enumerate(lines, 1):
        cells = [c for c in _SPLIT.split(ln) if c]
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise FormatError(f"row {lineno} has {len(cells)} cells, expected {width}")
        m = 0
        for j, c in enumerate(cells):
            if c not in ("0", "1"):
                raise FormatError(f"row {lineno} has non-binary entry {c!r}")
            if c == "1":
                m |= 1 << j
        masks.append(m)
    if width > MAX_N:
        raise ValidationError(f"{width} columns exceed the cap of {MAX_N}")
    return BinaryMatrix(width, tuple(masks))


def empirical_b(data: BinaryMatrix, fam: SetFamily) -> BooleInstance:
    if fam.n != data.cols:
        raise ValidationError(f"family is over {fam.n} events but the matrix has {data.cols} columns")
    return BooleInstance(fam, tuple(data.frequency(s) for s in fam))


def apriori(data: BinaryMatrix, eps: Fraction, max_size: int) -> SetFamily:
    """All column sets of size ``<= max_size`` with frequency ``>= eps``.

    Level-wise: two frequent k-sets sharing their first k - 1 columns are
    joined, and the join survives only if all its k-subsets are frequent.
    Output is ordered by size, then lexicographically.
    """
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise ValidationError("threshold must lie in (0, 1]")
    need = eps * data.rows

    level = [(j,) for j in range(data.cols) if data.support(1 << j) >= need]
    found = list(level)
    size = 1
    while level and size < max_size:
        frequent = set(level)
        candidates = []
        for a in range(len(level)):
            for b in range(a + 1, len(level)):
                x, y = level[a], level[b]
                if x[:-1] != y[:-1]:
                    break  # level is sorted, so no later y shares the prefix
                cand = x + (y[-1],)
                if all(cand[:i] + cand[i + 1:] in frequent for i in range(len(cand))):
                    candidates.append(cand)
        level = [c for c in candidates if data.support(_mask(c)) >= need]
        found += level
        size += 1
    if max_size < 1:
        found = []
    return SetFamily(data.cols, tuple(_mask(c) for c in found))


def _mask(cols: tuple[int, ...]) -> int:
    m = 0
    for j in cols:
        m |= 1 << j
    return m
