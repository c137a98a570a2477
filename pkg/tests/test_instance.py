import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolebounds.errors import FormatError, ValidationError
from boolebounds.instance import (
    AtomDistribution,
    BooleInstance,
    SetFamily,
    atoms_to_doc,
    check_monotone,
    instance_to_doc,
    marginal_of,
    mask_of,
    parse_atoms,
    parse_instance,
)

FULL2 = {"n": 2, "constraints": [{"set": [1], "p": "1/2"}, {"set": [2], "p": "1/2"}, {"set": [1, 2], "p": "1/4"}]}


def test_parse_full_family_instance():
    inst = parse_instance(json.dumps(FULL2))
    assert inst.family.members == (0b01, 0b10, 0b11)
    assert inst.b == (F(1, 2), F(1, 2), F(1, 4))


def test_parse_singleton():
    inst = parse_instance({"n": 1, "constraints": [{"set": [1], "p": "1"}]})
    assert inst.b == (F(1),)


def test_probability_out_of_range():
    with pytest.raises(ValidationError):
        parse_instance({"n": 2, "constraints": [{"set": [1], "p": "3/2"}]})


@pytest.mark.parametrize(
    "doc",
    [
        "{not json",
        {"n": 2},
        {"n": 2, "constraints": [{"set": [], "p": "1/2"}]},
        {"n": 2, "constraints": [{"set": [1], "p": "1/2"}, {"set": [1], "p": "1/3"}]},
        {"n": 2, "constraints": [{"set": [3], "p": "1/2"}]},
        {"n": 2, "constraints": [{"set": [1], "p": 0.5}]},
    ],
)
def test_malformed_documents(doc):
    with pytest.raises(FormatError):
        parse_instance(doc if isinstance(doc, str) else json.dumps(doc))


def test_cap_and_empty_family():
    with pytest.raises(ValidationError):
        parse_instance({"n": 21, "constraints": [{"set": [1], "p": "0"}]})
    with pytest.raises(ValidationError):
        parse_instance({"n": 2, "constraints": []})


def test_round_trip_canonical():
    canonical = instance_to_doc(parse_instance(FULL2))
    assert instance_to_doc(parse_instance(json.dumps(canonical))) == canonical
    assert canonical == FULL2


def test_check_monotone():
    bad = BooleInstance(SetFamily(2, (0b01, 0b11)), (F(1, 10), F(1, 2)))
    assert check_monotone(bad) == [(0b01, 0b11)]
    assert check_monotone(parse_instance(FULL2)) == []
    flat = BooleInstance(SetFamily(3, (0b001, 0b110)), (F(0), F(1)))
    assert check_monotone(flat) == []


def test_marginals():
    n = 4
    uniform = AtomDistribution(n, tuple((1 << i, F(1, n)) for i in range(n)))
    assert marginal_of(uniform, 0b0100) == F(1, 4)
    assert marginal_of(uniform, 0) == 1
    point = AtomDistribution(3, ((0b011, F(1)),))
    assert marginal_of(point, 0b100) == 0
    assert marginal_of(point, 0b001) == 1


def test_atom_distribution_validation():
    with pytest.raises(ValidationError):
        AtomDistribution(2, ((0, F(1, 2)),))
    with pytest.raises(ValidationError):
        AtomDistribution(2, ((0, F(3, 2)), (1, F(-1, 2))))
    x = AtomDistribution(2, ((3, F(1, 2)), (0, F(1, 2)), (1, F(0))))
    assert x.weights == ((0, F(1, 2)), (3, F(1, 2)))
    assert parse_atoms(json.dumps(atoms_to_doc(x))) == x


@st.composite
def atom_distributions(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    raw = draw(st.lists(st.integers(0, 9), min_size=1 << n, max_size=1 << n).filter(any))
    total = sum(raw)
    return AtomDistribution.from_dense(n, [F(r, total) for r in raw])


@settings(max_examples=80, deadline=None)
@given(atom_distributions(), st.data())
def test_marginal_antitone(x, data):
    full = (1 << x.n) - 1
    s = data.draw(st.integers(0, full))
    extra = data.draw(st.integers(0, full))
    assert marginal_of(x, 0) == 1
    assert marginal_of(x, s) >= marginal_of(x, s | extra)


@settings(max_examples=50, deadline=None)
@given(atom_distributions(), st.data())
def test_instance_round_trip(x, data):
    members = data.draw(st.lists(st.integers(1, (1 << x.n) - 1), min_size=1, unique=True))
    inst = BooleInstance(SetFamily(x.n, tuple(members)), tuple(marginal_of(x, s) for s in members))
    doc = instance_to_doc(inst)
    assert parse_instance(json.dumps(doc)) == inst
    assert mask_of(doc["constraints"][0]["set"]) == members[0]
