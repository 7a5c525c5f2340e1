from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke_params.langlands import (
    BlockInput,
    Case,
    DescriptorError,
    DualNature,
    GapError,
    GroupType,
    HDescriptor,
    Irreducibility,
    JordEntry,
    LanglandsDescriptor,
    Nature,
    NotSelfDual,
    ParityError,
    RhoDescriptor,
    a_value,
    classify,
    classify_block,
    descriptor_from_dict,
    descriptor_to_dict,
    dual_nature,
    load_descriptor,
    parity_check,
    reducibility_point,
    validate_jord,
)


def jord(*pairs):
    return tuple(JordEntry(lab, a) for lab, a in pairs)


def rho(nature=Nature.ORTHOGONAL, k=1, t=1, label="rho"):
    return RhoDescriptor(label, k, t, nature)


# -- validate_jord -----------------------------------------------------------------


def test_gap_free_examples():
    validate_jord(jord(("rho", 1), ("rho", 3)))
    validate_jord(())
    with pytest.raises(GapError) as info:
        validate_jord(jord(("rho", 3)))
    assert (info.value.label, info.value.missing_a) == ("rho", 1)


def test_gap_is_per_label():
    with pytest.raises(GapError):
        validate_jord(jord(("sigma", 1), ("rho", 2), ("rho", 6), ("rho", 4), ("tau", 5)))


# -- a_value -----------------------------------------------------------------------


def test_a_value_examples():
    j = jord(("rho", 1), ("rho", 3))
    assert a_value(rho(), j, Nature.ORTHOGONAL) == 3
    assert a_value(rho(), (), Nature.ORTHOGONAL) == -1
    assert a_value(rho(Nature.SYMPLECTIC), (), Nature.ORTHOGONAL) == 0
    assert a_value(rho(), (), DualNature.ORTHOGONAL_ODD) == -1


def test_a_value_needs_self_dual():
    with pytest.raises(NotSelfDual):
        a_value(rho(Nature.NONE), (), Nature.ORTHOGONAL)


# -- parity ------------------------------------------------------------------------


def test_parity_examples():
    parity_check(1, 3, 1)
    for a in range(6):
        for am in range(6):
            parity_check(2, a, am)
    with pytest.raises(ParityError) as info:
        parity_check(1, 3, 0)
    assert info.value.products == (3, 0)


# -- dual nature -------------------------------------------------------------------


def test_dual_nature_examples():
    assert dual_nature(GroupType.SYMPLECTIC) is DualNature.ORTHOGONAL_ODD
    assert dual_nature(GroupType.ODD_ORTHOGONAL) is DualNature.SYMPLECTIC
    assert dual_nature(GroupType.EVEN_ORTHOGONAL_SPLIT) is DualNature.ORTHOGONAL_EVEN
    assert dual_nature(GroupType.EVEN_ORTHOGONAL_NONSPLIT) is DualNature.ORTHOGONAL_EVEN


# -- classification ----------------------------------------------------------------


def test_classify_examples():
    h = HDescriptor(False, jord(("rho", 1)))
    b = classify_block(GroupType.SYMPLECTIC, BlockInput(rho(), 2), h)
    assert b.case is Case.III
    for g in GroupType:
        b = classify_block(g, BlockInput(rho(Nature.NONE), 3), HDescriptor(True))
        assert b.case is Case.I and b.d_prime == 2
    b = classify_block(GroupType.EVEN_ORTHOGONAL_SPLIT, BlockInput(rho(), 2), HDescriptor(True))
    assert b.case is Case.IIb and b.d_prime == 2


def test_classify_swaps_to_base_point_convention():
    h = HDescriptor(False, jord(("rho-", 1), ("rho-", 3), ("rho", 1)))
    b = classify_block(GroupType.SYMPLECTIC, BlockInput(rho(), 1), h)
    assert (b.a, b.a_minus, b.swapped) == (3, 1, True)


def test_overrides_run_the_parity_gate():
    h = HDescriptor(False, jord(("rho", 1)))
    with pytest.raises(ParityError):
        classify_block(GroupType.SYMPLECTIC, BlockInput(rho(), 1, a_override=3, a_minus_override=0), h)
    b = classify_block(GroupType.SYMPLECTIC, BlockInput(rho(t=2), 1, a_override=3, a_minus_override=0), h)
    assert (b.a, b.a_minus) == (3, 0)


def test_explicit_minus_label():
    h = HDescriptor(False, jord(("rho", 1), ("rho", 3), ("pi", 1)))
    b = classify_block(GroupType.SYMPLECTIC, BlockInput(rho(), 1, minus_label="pi"), h)
    assert (b.a, b.a_minus) == (3, 1)


def test_overrides_forbidden_for_non_self_dual():
    with pytest.raises(DescriptorError):
        classify_block(GroupType.SYMPLECTIC, BlockInput(rho(Nature.NONE), 1, a_override=1), HDescriptor(True))


natures = st.sampled_from(list(Nature))
groups = st.sampled_from(list(GroupType))


@st.composite
def descriptors(draw):
    g = draw(groups)
    trivial = draw(st.booleans())
    n_blocks = draw(st.integers(1, 3))
    blocks = []
    entries = []
    for i in range(n_blocks):
        nat = draw(natures)
        label = f"r{i}"
        blocks.append(BlockInput(RhoDescriptor(label, draw(st.integers(1, 3)), draw(st.integers(1, 3)), nat), draw(st.integers(1, 4))))
        if not trivial and nat is not Nature.NONE and draw(st.booleans()):
            top = draw(st.integers(1, 5))
            entries += [JordEntry(label, a) for a in range(top % 2 or 2, top + 1, 2)]
    if not trivial and not entries:
        entries = [JordEntry("sigma", 1)]
    h = HDescriptor(trivial, tuple(entries), draw(st.booleans()))
    return LanglandsDescriptor(g, tuple(blocks), h)


@settings(max_examples=200, deadline=None)
@given(descriptors())
def test_classification_invariants(desc):
    try:
        blocks = classify(desc)
    except ParityError:
        return
    assert len(blocks) == len(desc.blocks)
    for b in blocks:
        assert (b.d_prime == b.d - 1) == (b.case is Case.I)
        if b.a is not None:
            assert b.a >= b.a_minus
            assert (b.t * (b.a + b.a_minus)) % 2 == 0
        point = reducibility_point(b, desc.group, desc.h)
        if point is Irreducibility.ALWAYS_IRREDUCIBLE:
            assert desc.group is GroupType.EVEN_ORTHOGONAL_SPLIT


# -- reducibility points -----------------------------------------------------------


def test_reducibility_examples():
    h = HDescriptor(False, jord(("rho", 1), ("rho", 3)))
    b = classify_block(GroupType.SYMPLECTIC, BlockInput(rho(), 1), h)
    assert reducibility_point(b, GroupType.SYMPLECTIC, h) == 2
    h2 = HDescriptor(False, jord(("sigma", 1)))
    b = classify_block(GroupType.SYMPLECTIC, BlockInput(rho(), 1), h2)
    assert b.a == -1 and reducibility_point(b, GroupType.SYMPLECTIC, h2) == 0
    g = GroupType.EVEN_ORTHOGONAL_SPLIT
    b = classify_block(g, BlockInput(rho(k=3), 1), HDescriptor(True))
    assert reducibility_point(b, g, HDescriptor(True)) is Irreducibility.ALWAYS_IRREDUCIBLE
    b = classify_block(g, BlockInput(rho(Nature.NONE), 1), HDescriptor(True))
    assert reducibility_point(b, g, HDescriptor(True)) is Irreducibility.NOT_APPLICABLE


def test_reducibility_is_half_integer():
    h = HDescriptor(False, jord(("rho", 2)))
    b = classify_block(GroupType.SYMPLECTIC, BlockInput(rho(t=2), 1), h)
    assert reducibility_point(b, GroupType.SYMPLECTIC, h) == Fraction(3, 2)


# -- descriptor JSON -------------------------------------------------------------


GOOD = {
    "group": "Sp",
    "blocks": [{"label": "rho", "k": 1, "d": 2, "t": 1, "self_dual": "orthogonal"}],
    "h": {"trivial": False, "jord": [["rho", 1], ["rho", 3]], "tau_outer_invariant": True},
}


def test_json_round_trip(tmp_path):
    desc = descriptor_from_dict(GOOD)
    assert descriptor_to_dict(desc) == GOOD
    path = tmp_path / "d.json"
    path.write_text(json.dumps(GOOD), encoding="utf-8")
    assert load_descriptor(path) == desc


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(extra=1),
        lambda d: d["blocks"][0].update(colour="red"),
        lambda d: d["blocks"][0].update(k=0),
        lambda d: d["blocks"][0].update(self_dual="both"),
        lambda d: d.update(group="GL"),
        lambda d: d["h"]["jord"].append(["rho", 0]),
        lambda d: d["h"]["jord"].append(["rho", 1, 2]),
        lambda d: d.update(blocks=[]),
        lambda d: d.pop("h"),
    ],
)
def test_schema_rejections(mutate):
    data = json.loads(json.dumps(GOOD))
    mutate(data)
    with pytest.raises(DescriptorError):
        descriptor_from_dict(data)


def test_structural_rejections():
    dup = json.loads(json.dumps(GOOD))
    dup["blocks"].append(dict(dup["blocks"][0]))
    with pytest.raises(DescriptorError):
        descriptor_from_dict(dup)
    bad = json.loads(json.dumps(GOOD))
    bad["blocks"][0]["self_dual"] = "none"
    with pytest.raises(DescriptorError):
        descriptor_from_dict(bad)
    with pytest.raises(DescriptorError):
        HDescriptor(True, jord(("rho", 1)))


def test_malformed_json_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(DescriptorError):
        load_descriptor(path)
