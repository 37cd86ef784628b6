"""Fixture files: a self-describing JSON schema for bialgebroids.

All arrays are row-major lists; rationals are "p/q" strings, prime-field
elements plain integers, h-polynomials coefficient lists.  Serialisation is
canonical (sorted keys, fixed separators), so an emitted fixture re-loads and
re-emits byte-identically.
"""

from __future__ import annotations

import hashlib
import json

from .algebra import StructureAlgebra
from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .comodules import Comodule, UModule
from .scalars import ring_from_description
from .tensor import ShapeError
from .yd import YDAlgebra, YDModule

FORMAT = "bialgebroid-fixture/1"


def _dump_vec(ring, v):
    return [ring.dump(x) for x in v]

def _parse_vec(ring, v):
    return [ring.parse(x) for x in v]

def _dump_mat(ring, cols):
    return [_dump_vec(ring, c) for c in cols]

def _parse_mat(ring, cols):
    return [_parse_vec(ring, c) for c in cols]


def _dump_algebra(ring, alg: StructureAlgebra):
    return {
        "dim": alg.dim,
        "names": alg.names,
        "unit": _dump_vec(ring, alg.unit),
        "mul": [[_dump_vec(ring, v) for v in row] for row in alg.mul],
    }


def _parse_algebra(ring, obj):
    mul = [[_parse_vec(ring, v) for v in row] for row in obj["mul"]]
    return StructureAlgebra(ring, mul, _parse_vec(ring, obj["unit"]),
                            names=obj.get("names"), validate=False)


def bialgebroid_to_dict(B):
    ring = B.ring
    doc = {
        "format": FORMAT,
        "chirality": B.chirality,
        "scalars": ring.describe(),
        "base": _dump_algebra(ring, B.base),
        "total": _dump_algebra(ring, B.total),
        "source": _dump_mat(ring, B.s_cols),
        "target": _dump_mat(ring, B.t_cols),
        "coproduct": [_dump_vec(ring, v) for v in B.delta],
        "counit": _dump_mat(ring, B.counit_cols),
    }
    fb = getattr(B, "free_basis", None)
    if fb is not None:
        doc["abasis"] = _dump_mat(ring, fb)
    yd = getattr(B, "yd_blocks", None)
    if yd:
        doc["yd"] = {name: _dump_yd(ring, block) for name, block in yd.items()}
    quantum = getattr(B, "quantum", None)
    if quantum is not None:
        doc["quantum"] = {"trunc": quantum[0], "degrees": list(quantum[1])}
    return doc


def _dump_yd(ring, block: YDAlgebra):
    return {
        "flavour": block.flavour,
        "algebra": _dump_algebra(ring, block.algebra),
        "action": [_dump_mat(ring, m) for m in block.module.acts],
        "coaction": [_dump_vec(ring, v) for v in block.comodule.coaction],
        "left_action": [_dump_mat(ring, m) for m in block.comodule.left_mats]
        if block.comodule.left_mats is not None else None,
        "right_action": [_dump_mat(ring, m) for m in block.comodule.right_mats]
        if block.comodule.right_mats is not None else None,
    }


def _parse_yd(ring, B, obj):
    alg = _parse_algebra(ring, obj["algebra"])
    flavour = obj["flavour"]
    acts = [_parse_mat(ring, m) for m in obj["action"]]
    side = "left" if flavour.startswith("left") else "right"
    module = UModule(B, side, alg.dim, acts)
    lm = obj.get("left_action")
    rm = obj.get("right_action")
    como_side = "right" if flavour.endswith("right") else "left"
    como = Comodule(B, como_side, alg.dim,
                    [_parse_vec(ring, v) for v in obj["coaction"]],
                    left_mats=[_parse_mat(ring, m) for m in lm] if lm else None,
                    right_mats=[_parse_mat(ring, m) for m in rm] if rm else None)
    return YDAlgebra(YDModule(B, flavour, module, como), alg)


def bialgebroid_from_dict(doc):
    if doc.get("format") != FORMAT:
        raise ShapeError(f"unknown fixture format {doc.get('format')!r}")
    ring = ring_from_description(doc["scalars"])
    base = _parse_algebra(ring, doc["base"])
    total = _parse_algebra(ring, doc["total"])
    s_cols = _parse_mat(ring, doc["source"])
    t_cols = _parse_mat(ring, doc["target"])
    delta = [_parse_vec(ring, v) for v in doc["coproduct"]]
    counit = _parse_mat(ring, doc["counit"])
    cls = LeftBialgebroid if doc.get("chirality", "left") == "left" else RightBialgebroid
    B = cls(total, base, s_cols, t_cols, delta, counit)
    if "abasis" in doc:
        B.free_basis = _parse_mat(ring, doc["abasis"])
    if "yd" in doc:
        B.yd_blocks = {name: _parse_yd(ring, B, block)
                       for name, block in doc["yd"].items()}
    if "quantum" in doc:
        B.quantum = (int(doc["quantum"]["trunc"]),
                     [int(x) for x in doc["quantum"]["degrees"]])
    return B


def dumps(B):
    return json.dumps(bialgebroid_to_dict(B), sort_keys=True, indent=1,
                      separators=(",", ": ")) + "\n"


def save(B, path):
    data = dumps(B)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(data)
    return data


def load(path):
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return bialgebroid_from_dict(doc)


def digest(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()
