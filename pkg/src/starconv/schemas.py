"""Pydantic models for the structure/function file formats and the service
request/response payloads, plus converters to and from domain objects.

Structure document:

    {"carrier": "bool|maxtimes|maxplus|nat",
     "objects": [...],
     "le": [[a, b], ...],
     "p": [[a, b, c, value], ...],     # omitted entries are bottom
     "j": [[a, value], ...],           # omitted entries are bottom;
                                       # no "j" key means no unit table
     "s": {"a": "Sa", ...}}            # optional duality map

Function document: {"values": [[object, value], ...]}, omitted objects
default to bottom.  Values are serialized per carrier: booleans, decimal
numbers, nonnegative integers, with infinities as the strings "inf" and
"-inf".
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, ValidationError

from .carriers import Carrier, DEFAULT_TOL
from .errors import ParseError
from .posets import FinitePoset
from .structures import CheckReport, Functor, PromonoidalStructure, Witness


class StructureDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    carrier: Literal["bool", "maxtimes", "maxplus", "nat"]
    objects: list[str]
    le: list[list[str]] = []
    p: list[list[Any]] = []
    j: list[list[Any]] | None = None
    s: dict[str, str] | None = None


class FunctionDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    values: list[list[Any]] = []


class WitnessModel(BaseModel):
    at: list[str]
    lhs: Any
    rhs: Any


class LawReport(BaseModel):
    law: str
    status: Literal["pass", "fail", "n/a"]
    witnesses: list[WitnessModel] = []


class CheckRequest(BaseModel):
    structure: str | StructureDoc
    carrier: str | None = None
    tol: float = DEFAULT_TOL


class CheckResponse(BaseModel):
    ok: bool
    reports: list[LawReport]


class ConvolveRequest(BaseModel):
    structure: str | StructureDoc
    f: FunctionDoc
    g: FunctionDoc
    mode: Literal["upper", "lower"]
    carrier: str | None = None


class ConvolveResponse(BaseModel):
    values: FunctionDoc


class MonoidRequest(BaseModel):
    structure: str | StructureDoc
    f: FunctionDoc
    mode: Literal["upper", "lower", "convex"]
    carrier: str | None = None
    tol: float = DEFAULT_TOL


class MonoidResponse(BaseModel):
    holds: bool
    witness: WitnessModel | None = None


# -- converters ---------------------------------------------------------------


def structure_from_doc(doc: StructureDoc) -> PromonoidalStructure:
    carrier = Carrier(doc.carrier)
    for pair in doc.le:
        if len(pair) != 2:
            raise ParseError(f"le entries must be pairs, got {pair!r}")
    poset = FinitePoset.from_pairs(doc.objects, [tuple(pair) for pair in doc.le])
    n = len(poset)
    index = poset.index
    bottom = carrier.bottom
    p = [[[bottom] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for entry in doc.p:
        if len(entry) != 4:
            raise ParseError(f"p entries must be [a, b, c, value], got {entry!r}")
        a, b, c, raw = entry
        key = (index(a), index(b), index(c))
        if key in seen:
            raise ParseError(f"duplicate p entry at ({a!r}, {b!r}, {c!r})")
        seen.add(key)
        p[key[0]][key[1]][key[2]] = carrier.from_json(raw)
    j = None
    if doc.j is not None:
        j = [bottom] * n
        seen_j = set()
        for entry in doc.j:
            if len(entry) != 2:
                raise ParseError(f"j entries must be [a, value], got {entry!r}")
            a, raw = entry
            if index(a) in seen_j:
                raise ParseError(f"duplicate j entry at {a!r}")
            seen_j.add(index(a))
            j[index(a)] = carrier.from_json(raw)
        j = tuple(j)
    s = None
    if doc.s is not None:
        if set(doc.s) != set(doc.objects):
            raise ParseError("s must map every object exactly once")
        s = tuple(index(doc.s[label]) for label in poset.objects)
    return PromonoidalStructure(
        poset,
        carrier,
        tuple(tuple(tuple(row) for row in plane) for plane in p),
        j,
        s,
    )


def structure_to_doc(structure: PromonoidalStructure) -> StructureDoc:
    """Canonical emission: entries in lexicographic index order, bottom
    entries omitted."""
    carrier = structure.carrier
    objects = structure.poset.objects
    n = len(objects)
    bottom = carrier.bottom
    le = [
        [objects[i], objects[k]] for i, k in structure.poset.strict_pairs()
    ]
    p = [
        [objects[a], objects[b], objects[c], carrier.to_json(structure.p[a][b][c])]
        for a in range(n)
        for b in range(n)
        for c in range(n)
        if structure.p[a][b][c] != bottom
    ]
    j = None
    if structure.j is not None:
        j = [
            [objects[a], carrier.to_json(structure.j[a])]
            for a in range(n)
            if structure.j[a] != bottom
        ]
    s = None
    if structure.s is not None:
        s = {objects[a]: objects[structure.s[a]] for a in range(n)}
    return StructureDoc(
        carrier=carrier.value, objects=list(objects), le=le, p=p, j=j, s=s
    )


def functor_from_doc(doc: FunctionDoc, structure: PromonoidalStructure) -> Functor:
    carrier = structure.carrier
    mapping = {}
    for entry in doc.values:
        if len(entry) != 2:
            raise ParseError(f"function entries must be [object, value], got {entry!r}")
        label, raw = entry
        if label in mapping:
            raise ParseError(f"duplicate function entry at {label!r}")
        mapping[label] = carrier.from_json(raw)
    return Functor.from_mapping(structure, mapping)


def functor_to_doc(functor: Functor) -> FunctionDoc:
    """Every object's value, in object order."""
    carrier = functor.structure.carrier
    objects = functor.structure.poset.objects
    return FunctionDoc(
        values=[
            [objects[i], carrier.to_json(functor.values[i])] for i in range(len(objects))
        ]
    )


def witness_model(witness: Witness, carrier: Carrier) -> WitnessModel:
    return WitnessModel(
        at=list(witness.at),
        lhs=carrier.to_json(witness.lhs),
        rhs=carrier.to_json(witness.rhs),
    )


def law_report(law: str, report: CheckReport | None, carrier: Carrier) -> LawReport:
    if report is None:
        return LawReport(law=law, status="n/a", witnesses=[])
    return LawReport(
        law=law,
        status="pass" if report.passed else "fail",
        witnesses=[witness_model(w, carrier) for w in report.witnesses],
    )


def parse_structure_doc(payload) -> StructureDoc:
    try:
        return StructureDoc.model_validate(payload)
    except ValidationError as exc:
        raise ParseError(f"bad structure document: {exc}") from exc


def parse_function_doc(payload) -> FunctionDoc:
    try:
        return FunctionDoc.model_validate(payload)
    except ValidationError as exc:
        raise ParseError(f"bad function document: {exc}") from exc
