"""Set families, Boole instances and atom distributions.

Subsets of ``[n] = {1, ..., n}`` are plain ints used as bit masks: element
``i`` is bit ``i - 1``. Atom ``T`` of the ``2**n`` Venn atoms is therefore
indexed by the integer ``T`` itself, and increasing mask order is the
canonical variable order everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import FormatError, ValidationError
from .numerics.rational import rat_parse, rat_str

MAX_N = 20


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for i in elements:
        m |= 1 << (i - 1)
    return m


def elements_of(mask: int) -> list[int]:
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def set_label(mask: int) -> str:
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


def is_subset(s: int, t: int) -> bool:
    return s & t == s


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError(f"ground-set size must be a positive integer, got {n!r}")
    if n > MAX_N:
        raise ValidationError(f"n = {n} exceeds the cap of {MAX_N} events")


@dataclass(frozen=True)
class SetFamily:
    """Ordered, duplicate-free nonempty subsets of ``[n]``.

    An empty member list is allowed here (Apriori can return one); the
    nonemptiness the bounds problem needs is enforced by ``BooleInstance``.
    """

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        check_n(self.n)
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        full = (1 << self.n) - 1
        seen = set()
        for s in members:
            if s == 0:
                raise FormatError("the empty set is not allowed in a family")
            if s & ~full:
                raise FormatError(f"set {set_label(s)} is not a subset of [{self.n}]")
            if s in seen:
                raise FormatError(f"duplicate set {set_label(s)}")
            seen.add(s)

    @classmethod
    def from_lists(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        masks = []
        for s in sets:
            s = list(s)
            if any(not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= n for i in s):
                raise FormatError(f"set {s} has elements outside [1, {n}]")
            if len(set(s)) != len(s):
                raise FormatError(f"set {s} repeats an element")
            masks.append(mask_of(s))
        return cls(n, tuple(masks))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s):
        return s in self.members

    def index(self, s: int) -> int:
        return self.members.index(s)

    def has_all_singletons(self) -> bool:
        return all(1 << i in self.members for i in range(self.n))

    def is_complete(self) -> bool:
        return len(self.members) == (1 << self.n) - 1

    def covers_sizes_up_to(self, k: int) -> bool:
        present = set(self.members)
        return all(t in present for t in range(1, 1 << self.n) if popcount(t) <= k)


def full_family(n: int) -> SetFamily:
    return SetFamily(n, tuple(range(1, 1 << n)))


def singletons(n: int) -> SetFamily:
    return SetFamily(n, tuple(1 << i for i in range(n)))


@dataclass(frozen=True)
class BooleInstance:
    family: SetFamily
    b: tuple[Fraction, ...]  # b[k] belongs to family.members[k]

    def __post_init__(self):
        if len(self.family) == 0:
            raise ValidationError("the set family must be nonempty")
        b = tuple(Fraction(v) for v in self.b)
        object.__setattr__(self, "b", b)
        if len(b) != len(self.family):
            raise ValidationError("one probability per family member is required")
        for s, p in zip(self.family, b):
            if not 0 <= p <= 1:
                raise ValidationError(f"probability {p} for {set_label(s)} is outside [0, 1]")

    @classmethod
    def from_mapping(cls, n: int, b: Mapping[int, Fraction]) -> "BooleInstance":
        fam = SetFamily(n, tuple(b))
        return cls(fam, tuple(b[s] for s in fam))

    @property
    def n(self) -> int:
        return self.family.n

    def prob(self, s: int) -> Fraction:
        return self.b[self.family.index(s)]

    def items(self):
        return zip(self.family.members, self.b)


@dataclass(frozen=True)
class AtomDistribution:
    """Sparse atom weights; absent atoms carry zero mass."""

    n: int
    weights: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        check_n(self.n)
        w = {}
        full = (1 << self.n) - 1
        for t, x in self.weights:
            x = Fraction(x)
            if t & ~full or t < 0:
                raise ValidationError(f"atom {t} is not a subset of [{self.n}]")
            if t in w:
                raise ValidationError(f"atom {set_label(t)} listed twice")
            if x < 0:
                raise ValidationError(f"negative weight {x} on atom {set_label(t)}")
            if x:
                w[t] = x
        if sum(w.values(), Fraction(0)) != 1:
            raise ValidationError("atom weights must sum to 1")
        object.__setattr__(self, "weights", tuple(sorted(w.items())))

    @classmethod
    def from_dense(cls, n: int, x: Sequence[Fraction]) -> "AtomDistribution":
        return cls(n, tuple((t, v) for t, v in enumerate(x) if v))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.weights)

    def weight(self, t: int) -> Fraction:
        return self.as_dict().get(t, Fraction(0))

    @property
    def union_probability(self) -> Fraction:
        return 1 - self.weight(0)

    def support_size(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi <= 1:
            raise ValidationError(f"invalid interval [{self.lo}, {self.hi}]")

    def __contains__(self, u):
        return self.lo <= u <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def marginal_of(x: AtomDistribution, s: int) -> Fraction:
    """Probability of the intersection event: total weight of atoms ``T ⊇ S``."""
    return sum((w for t, w in x.weights if is_subset(s, t)), Fraction(0))


def realizes(x: AtomDistribution, inst: BooleInstance) -> bool:
    return x.n == inst.n and all(marginal_of(x, s) == p for s, p in inst.items())


def check_monotone(inst: BooleInstance) -> list[tuple[int, int]]:
    """Pairs ``(S, T)`` in the family with ``S ⊊ T`` but ``b_S < b_T``.

    Only a necessary condition for feasibility.
    """
    out = []
    for s, ps in inst.items():
        for t, pt in inst.items():
            if s != t and is_subset(s, t) and ps < pt:
                out.append((s, t))
    return out


# -- documents -------------------------------------------------------------


def _require(doc, key, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(f"key {key!r} has the wrong type")
    return value


def _load(document):
    if isinstance(document, (str, bytes)):
        try:
            return json.loads(document)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
    return document


def parse_instance(document) -> BooleInstance:
    """Build a validated instance from a JSON string or already-parsed dict."""
    doc = _load(document)
    n = _require(doc, "n", int)
    check_n(n)
    constraints = _require(doc, "constraints", list)
    sets, probs = [], []
    for c in constraints:
        sets.append(_require(c, "set", list))
        probs.append(rat_parse(_require(c, "p", (str, int))))
    return BooleInstance(SetFamily.from_lists(n, sets), tuple(probs))


def instance_to_doc(inst: BooleInstance) -> dict:
    return {
        "n": inst.n,
        "constraints": [{"set": elements_of(s), "p": rat_str(p)} for s, p in inst.items()],
    }


def parse_family(document) -> SetFamily:
    """Family document ``{"n", "sets"}``; an instance document also works."""
    doc = _load(document)
    n = _require(doc, "n", int)
    check_n(n)
    if isinstance(doc, dict) and "sets" in doc:
        sets = _require(doc, "sets", list)
    elif isinstance(doc, dict) and "constraints" in doc:
        sets = [_require(c, "set", list) for c in _require(doc, "constraints", list)]
    else:
        raise FormatError("family document needs 'sets' or 'constraints'")
    return SetFamily.from_lists(n, sets)


def family_to_doc(fam: SetFamily) -> dict:
    return {"n": fam.n, "sets": [elements_of(s) for s in fam]}


def parse_atoms(document) -> AtomDistribution:
    doc = _load(document)
    n = _require(doc, "n", int)
    check_n(n)
    weights = []
    for a in _require(doc, "atoms", list):
        elems = _require(a, "set", list)
        if any(not isinstance(i, int) or not 1 <= i <= n for i in elems):
            raise FormatError(f"atom {elems} has elements outside [1, {n}]")
        weights.append((mask_of(elems), rat_parse(_require(a, "x", (str, int)))))
    return AtomDistribution(n, tuple(weights))


def atoms_to_doc(x: AtomDistribution) -> dict:
    return {"n": x.n, "atoms": [{"set": elements_of(t), "x": rat_str(w)} for t, w in x.weights]}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
