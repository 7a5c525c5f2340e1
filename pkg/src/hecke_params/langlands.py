"""
Combinatorial Langlands-parameter data of a cuspidal support.

A descriptor lists the inducing GL blocks (rho_i, multiplicity d_i, stabilizer
order t_i) together with the Jordan multiset of the cuspidal parameter on the
small classical group H. From it we read off the a-values, reducibility
points, the parity constraint between rho and rho_-, and the case label
(I, II, IIb, III) that fixes the Weyl type of each block.

>>> desc = descriptor_from_dict({
...     "group": "Sp",
...     "blocks": [{"label": "rho", "k": 1, "d": 2, "t": 1, "self_dual": "orthogonal"}],
...     "h": {"trivial": False, "jord": [["rho", 1], ["rho", 3]], "tau_outer_invariant": True},
... })
>>> [(b.case.value, b.a, b.a_minus) for b in classify(desc)]
[('III', 3, -1)]
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

import jsonschema

__all__ = [
    "GroupType",
    "Nature",
    "DualNature",
    "Case",
    "Irreducibility",
    "RhoDescriptor",
    "JordEntry",
    "HDescriptor",
    "BlockInput",
    "LanglandsDescriptor",
    "ClassifiedBlock",
    "LanglandsError",
    "GapError",
    "ParityError",
    "NotSelfDual",
    "DescriptorError",
    "dual_nature",
    "validate_jord",
    "a_value",
    "parity_check",
    "classify_block",
    "classify",
    "reducibility_point",
    "descriptor_from_dict",
    "descriptor_to_dict",
    "load_descriptor",
    "DESCRIPTOR_SCHEMA",
]


class GroupType(enum.Enum):
    SYMPLECTIC = "Sp"
    ODD_ORTHOGONAL = "SO_odd"
    EVEN_ORTHOGONAL_SPLIT = "SO_even_split"
    EVEN_ORTHOGONAL_NONSPLIT = "SO_even_nonsplit"

    @property
    def is_even_orthogonal(self) -> bool:
        return self in (GroupType.EVEN_ORTHOGONAL_SPLIT, GroupType.EVEN_ORTHOGONAL_NONSPLIT)


class Nature(enum.Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"
    NONE = "none"


class DualNature(enum.Enum):
    ORTHOGONAL_EVEN = "orthogonal(even)"
    SYMPLECTIC = "symplectic"
    ORTHOGONAL_ODD = "orthogonal(odd)"

    @property
    def nature(self) -> Nature:
        return Nature.SYMPLECTIC if self is DualNature.SYMPLECTIC else Nature.ORTHOGONAL


class Case(enum.Enum):
    I = "I"
    II = "II"
    IIb = "IIb"
    III = "III"


class Irreducibility(enum.Enum):
    ALWAYS_IRREDUCIBLE = "AlwaysIrreducible"
    NOT_APPLICABLE = "NotApplicable"


class LanglandsError(ValueError):
    pass


class GapError(LanglandsError):
    def __init__(self, label: str, missing_a: int):
        super().__init__(f"Jord is not gap-free: ({label}, {missing_a + 2}) present but ({label}, {missing_a}) missing")
        self.label = label
        self.missing_a = missing_a


class ParityError(LanglandsError):
    def __init__(self, t: int, a: int, a_minus: int):
        super().__init__(
            f"parity violation: t*a = {t * a} and t*a_minus = {t * a_minus} have different parity"
        )
        self.products = (t * a, t * a_minus)


class NotSelfDual(LanglandsError):
    pass


class DescriptorError(LanglandsError):
    """Malformed descriptor input (schema or structural)."""


@dataclass(frozen=True)
class RhoDescriptor:
    label: str
    k: int
    t: int
    self_dual: Nature

    def __post_init__(self):
        if self.k < 1 or self.t < 1:
            raise DescriptorError(f"{self.label}: k and t must be positive")


@dataclass(frozen=True)
class JordEntry:
    rho_label: str
    a: int

    def __post_init__(self):
        if self.a < 1:
            raise DescriptorError(f"Jord entry ({self.rho_label}, {self.a}) needs a >= 1")


@dataclass(frozen=True)
class HDescriptor:
    trivial: bool
    jord: tuple[JordEntry, ...] = ()
    tau_outer_invariant: bool = True

    def __post_init__(self):
        if self.trivial and self.jord:
            raise DescriptorError("trivial H carries an empty Jordan multiset")

    def labels(self) -> set[str]:
        return {e.rho_label for e in self.jord}


@dataclass(frozen=True)
class BlockInput:
    rho: RhoDescriptor
    d: int
    a_override: int | None = None
    a_minus_override: int | None = None
    minus_label: str | None = None
    minus_self_dual: Nature | None = None

    def __post_init__(self):
        if self.d < 1:
            raise DescriptorError(f"{self.rho.label}: multiplicity d must be positive")

    @property
    def rho_minus_label(self) -> str:
        return self.minus_label if self.minus_label is not None else self.rho.label + "-"


@dataclass(frozen=True)
class LanglandsDescriptor:
    group: GroupType
    blocks: tuple[BlockInput, ...]
    h: HDescriptor

    def __post_init__(self):
        labels = [b.rho.label for b in self.blocks]
        if len(set(labels)) != len(labels):
            raise DescriptorError(f"block labels must be distinct, got {labels}")
        if not self.blocks:
            raise DescriptorError("a descriptor needs at least one block")
        jord_labels = self.h.labels()
        for b in self.blocks:
            if b.rho.self_dual is Nature.NONE and b.rho.label in jord_labels:
                raise DescriptorError(f"{b.rho.label} is not self-dual and cannot occur in Jord")

    @property
    def rank(self) -> int:
        return sum(b.d for b in self.blocks)


@dataclass(frozen=True)
class ClassifiedBlock:
    label: str
    k: int
    d: int
    t: int
    case: Case
    self_dual: Nature
    a: int | None = None
    a_minus: int | None = None
    swapped: bool = False
    index: int = 1

    @property
    def d_prime(self) -> int:
        return self.d - 1 if self.case is Case.I else self.d

    @property
    def num_simple(self) -> int:
        """Number of simple reflections s_{i,j} actually defined for the block."""
        if self.case is Case.I:
            return self.d - 1
        if self.case is Case.III:
            return self.d
        return self.d if self.d > 1 else 0

    @property
    def weyl_type(self) -> str:
        return {Case.I: "A", Case.II: "D", Case.IIb: "D", Case.III: "B"}[self.case]


def dual_nature(g: GroupType) -> DualNature:
    """
    >>> dual_nature(GroupType.SYMPLECTIC)
    <DualNature.ORTHOGONAL_ODD: 'orthogonal(odd)'>
    """
    if g is GroupType.SYMPLECTIC:
        return DualNature.ORTHOGONAL_ODD
    if g is GroupType.ODD_ORTHOGONAL:
        return DualNature.SYMPLECTIC
    return DualNature.ORTHOGONAL_EVEN


def validate_jord(jord: Iterable[JordEntry]) -> None:
    """Raise GapError unless (rho, a) with a >= 3 always comes with (rho, a - 2)."""
    present = {(e.rho_label, e.a) for e in jord}
    for label, a in sorted(present):
        if a >= 3 and (label, a - 2) not in present:
            raise GapError(label, a - 2)


def a_value(rho: RhoDescriptor, jord: Iterable[JordEntry], dual: DualNature | Nature) -> int:
    """
    Largest a with (rho, a) in Jord; when absent, -1 if rho and the dual
    group have the same nature and 0 otherwise.
    """
    if rho.self_dual is Nature.NONE:
        raise NotSelfDual(f"{rho.label} is not self-dual; a-value undefined")
    dual = dual.nature if isinstance(dual, DualNature) else dual
    values = [e.a for e in jord if e.rho_label == rho.label]
    if values:
        return max(values)
    return -1 if rho.self_dual is dual else 0


def parity_check(t: int, a: int, a_minus: int) -> None:
    if t < 1:
        raise ValueError("t must be positive")
    if (t * a - t * a_minus) % 2:
        raise ParityError(t, a, a_minus)


def _even_split_exception(g: GroupType, k: int, h: HDescriptor) -> bool:
    # the always-irreducible configuration: split even orthogonal, k odd, and
    # either H = 1 with k != 1 or tau not stable under the outer automorphism
    if g is not GroupType.EVEN_ORTHOGONAL_SPLIT or k % 2 == 0:
        return False
    if h.trivial:
        return k != 1
    return not h.tau_outer_invariant


def classify_block(g: GroupType, block: BlockInput, h: HDescriptor, index: int = 1) -> ClassifiedBlock:
    rho = block.rho
    dual = dual_nature(g).nature
    base = dict(label=rho.label, k=rho.k, d=block.d, t=rho.t, self_dual=rho.self_dual, index=index)

    if rho.self_dual is Nature.NONE:
        if block.a_override is not None or block.a_minus_override is not None:
            raise DescriptorError(f"{rho.label}: a-values cannot be given for a non-self-dual rho")
        return ClassifiedBlock(case=Case.I, **base)

    if _even_split_exception(g, rho.k, h):
        case = Case.I
    elif g is GroupType.EVEN_ORTHOGONAL_SPLIT and h.trivial and rho.k == 1:
        case = Case.IIb
    elif rho.label in h.labels() or rho.self_dual is not dual:
        case = Case.III
    else:
        case = Case.II

    a = block.a_override
    if a is None:
        a = a_value(rho, h.jord, dual)
    a_minus = block.a_minus_override
    if a_minus is None:
        rho_minus = RhoDescriptor(block.rho_minus_label, rho.k, rho.t, block.minus_self_dual or rho.self_dual)
        a_minus = a_value(rho_minus, h.jord, dual)
    swapped = a < a_minus
    if swapped:
        a, a_minus = a_minus, a
    parity_check(rho.t, a, a_minus)
    return ClassifiedBlock(case=case, a=a, a_minus=a_minus, swapped=swapped, **base)


def classify(desc: LanglandsDescriptor) -> list[ClassifiedBlock]:
    """Validate the descriptor and classify every block."""
    validate_jord(desc.h.jord)
    return [classify_block(desc.group, b, desc.h, index=i + 1) for i, b in enumerate(desc.blocks)]


def reducibility_point(block: ClassifiedBlock, g: GroupType, h: HDescriptor) -> Fraction | Irreducibility:
    """
    The unique x >= 0 where rho|.|^x x tau reduces, i.e. (a + 1)/2, or the
    always-irreducible marker for the even-orthogonal exception.
    """
    if block.self_dual is Nature.NONE:
        return Irreducibility.NOT_APPLICABLE
    if _even_split_exception(g, block.k, h):
        return Irreducibility.ALWAYS_IRREDUCIBLE
    return Fraction(block.a + 1, 2)


# -- JSON descriptors -----------------------------------------------------

DESCRIPTOR_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["group", "blocks", "h"],
    "properties": {
        "group": {"enum": [g.value for g in GroupType]},
        "blocks": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["label", "k", "d", "t", "self_dual"],
                "properties": {
                    "label": {"type": "string"},
                    "k": {"type": "integer", "minimum": 1},
                    "d": {"type": "integer", "minimum": 1},
                    "t": {"type": "integer", "minimum": 1},
                    "self_dual": {"enum": [n.value for n in Nature]},
                    "a": {"type": "integer", "minimum": -1},
                    "a_minus": {"type": "integer", "minimum": -1},
                    "minus_label": {"type": "string"},
                    "minus_self_dual": {"enum": ["orthogonal", "symplectic"]},
                },
            },
        },
        "h": {
            "type": "object",
            "additionalProperties": False,
            "required": ["trivial", "jord"],
            "properties": {
                "trivial": {"type": "boolean"},
                "jord": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "prefixItems": [{"type": "string"}, {"type": "integer", "minimum": 1}],
                        "items": False,
                        "minItems": 2,
                    },
                },
                "tau_outer_invariant": {"type": "boolean"},
            },
        },
    },
}


def descriptor_from_dict(data: dict) -> LanglandsDescriptor:
    validator = jsonschema.Draft202012Validator(DESCRIPTOR_SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        msgs = []
        for err in errors:
            where = "/".join(str(p) for p in err.absolute_path) or "<root>"
            msgs.append(f"{where}: {err.message}")
        raise DescriptorError("; ".join(msgs))
    h = data["h"]
    hdesc = HDescriptor(
        trivial=h["trivial"],
        jord=tuple(JordEntry(lab, a) for lab, a in h["jord"]),
        tau_outer_invariant=h.get("tau_outer_invariant", True),
    )
    blocks = []
    for b in data["blocks"]:
        rho = RhoDescriptor(b["label"], b["k"], b["t"], Nature(b["self_dual"]))
        blocks.append(
            BlockInput(
                rho=rho,
                d=b["d"],
                a_override=b.get("a"),
                a_minus_override=b.get("a_minus"),
                minus_label=b.get("minus_label"),
                minus_self_dual=Nature(b["minus_self_dual"]) if "minus_self_dual" in b else None,
            )
        )
    return LanglandsDescriptor(GroupType(data["group"]), tuple(blocks), hdesc)


def descriptor_to_dict(desc: LanglandsDescriptor) -> dict:
    blocks = []
    for b in desc.blocks:
        out = {"label": b.rho.label, "k": b.rho.k, "d": b.d, "t": b.rho.t, "self_dual": b.rho.self_dual.value}
        if b.a_override is not None:
            out["a"] = b.a_override
        if b.a_minus_override is not None:
            out["a_minus"] = b.a_minus_override
        if b.minus_label is not None:
            out["minus_label"] = b.minus_label
        if b.minus_self_dual is not None:
            out["minus_self_dual"] = b.minus_self_dual.value
        blocks.append(out)
    return {
        "group": desc.group.value,
        "blocks": blocks,
        "h": {
            "trivial": desc.h.trivial,
            "jord": [[e.rho_label, e.a] for e in desc.h.jord],
            "tau_outer_invariant": desc.h.tau_outer_invariant,
        },
    }


def load_descriptor(path: str | Path) -> LanglandsDescriptor:
    """Read a UTF-8 JSON descriptor; malformed input raises DescriptorError."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return descriptor_from_dict(data)
