"""JSON encoding of the package's value types and the composition-expression
format the CLI builds pencils from.

Complex numbers are [re, im] pairs; matrices are row-major (a list of rows).
"""

from __future__ import annotations

import json

import numpy as np

from . import constructions
from .eigensolve import EigenReport
from .errors import StructuralError
from .matpoly import CallablePoly, BasisSpec, MatPoly, eval_at
from .pencil import Pencil, StandardTriple


def complex_to_json(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def complex_from_json(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    return complex(v[0], v[1])


def matrix_to_json(mat) -> list:
    return [[complex_to_json(x) for x in row] for row in np.asarray(mat, dtype=complex)]


def matrix_from_json(rows) -> np.ndarray:
    return np.array([[complex_from_json(x) for x in row] for row in rows], dtype=complex)


def vector_from_json(vals) -> np.ndarray:
    return np.array([complex_from_json(x) for x in vals], dtype=complex)


def matpoly_to_json(p: MatPoly) -> dict:
    if p.basis.kind == "lagrange":
        basis = {"lagrange": {"nodes": [complex_to_json(z) for z in p.basis.nodes],
                              "weights": [complex_to_json(z) for z in p.basis.weights]}}
    else:
        basis = p.basis.kind
    return {"basis": basis, "dim": p.dim, "grade": p.grade,
            "data": [matrix_to_json(m) for m in p.data]}


def matpoly_from_json(obj: dict) -> MatPoly:
    basis = obj["basis"]
    data = np.stack([matrix_from_json(m) for m in obj["data"]])
    if isinstance(basis, str):
        spec = BasisSpec(basis)
    elif "lagrange" in basis:
        spec = BasisSpec.lagrange(vector_from_json(basis["lagrange"]["nodes"]),
                                  vector_from_json(basis["lagrange"]["weights"]))
    else:
        raise StructuralError(f"unknown basis {basis!r}")
    return MatPoly(spec, int(obj["dim"]), int(obj["grade"]), data)


def pencil_to_json(p: Pencil) -> dict:
    out = {"D": matrix_to_json(p.D), "A": matrix_to_json(p.A), "N": p.N}
    if p.block_meta:
        out["block_meta"] = p.block_meta
    return out


def pencil_from_json(obj: dict) -> Pencil:
    return Pencil(matrix_from_json(obj["D"]), matrix_from_json(obj["A"]),
                  obj.get("block_meta"))


def triple_to_json(t: StandardTriple) -> dict:
    out = {"X": matrix_to_json(t.X), "pencil": pencil_to_json(t.pencil),
           "Y": matrix_to_json(t.Y), "weighted": bool(t.weighted)}
    if t.grade is not None:
        out["grade"] = t.grade
    return out


def triple_from_json(obj: dict) -> StandardTriple:
    return StandardTriple(matrix_from_json(obj["X"]), pencil_from_json(obj["pencil"]),
                          matrix_from_json(obj["Y"]), bool(obj["weighted"]),
                          obj.get("grade"))


def eigenreport_to_json(rep: EigenReport) -> dict:
    return {
        "finite": [complex_to_json(z) for z in rep.finite],
        "infinite_count": rep.infinite_count,
        "residuals": [] if rep.residuals is None else [float(x) for x in rep.residuals],
        "shift": complex_to_json(rep.shift_used),
        "backend": rep.backend,
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ----------------------------------------------------------------------------
# composition expressions
# ----------------------------------------------------------------------------

_LEAVES = {"frobenius": constructions.frobenius_triple,
           "lagrange": constructions.lagrange_triple,
           "chebyshev": constructions.chebyshev_triple}


def build_expression(node: dict):
    """Build (StandardTriple, polynomial) from a composition-expression node.

    Leaves are {"frobenius"|"lagrange"|"chebyshev": <matpoly>}; interior nodes
    carry "op" in {composite, product, shift_left, shift_right, add} with
    child expressions under "a"/"b" and constant matrices under "d0"/"c0"/"c".
    The returned polynomial evaluates the same composition pointwise for
    verification.
    """
    for name, builder in _LEAVES.items():
        if name in node:
            p = matpoly_from_json(node[name])
            return builder(p), p
    op = node.get("op")
    if op is None:
        raise StructuralError(f"expression node has no op or leaf: {list(node)}")
    ta, pa = build_expression(node["a"])
    if op in ("shift_left", "shift_right"):
        d0 = matrix_from_json(node["d0"])
        c0 = matrix_from_json(node["c0"])
        if op == "shift_left":
            t = constructions.scalar_shift_left(ta, d0, c0)
            fn = lambda z: z * (d0 @ eval_at(pa, z)) + c0
        else:
            t = constructions.scalar_shift_right(ta, d0, c0)
            fn = lambda z: z * (eval_at(pa, z) @ d0) + c0
        return t, CallablePoly(ta.r, pa.grade + 1, fn)
    if op == "add":
        c = matpoly_from_json(node["c"])
        t = constructions.add_lower_degree(ta, c)
        fn = lambda z: eval_at(pa, z) + eval_at(c, z)
        return t, CallablePoly(ta.r, pa.grade, fn)
    tb, pb = build_expression(node["b"])
    if op == "product":
        t = constructions.product(ta, tb, node.get("variant", "F2"))
        fn = lambda z: eval_at(pa, z) @ eval_at(pb, z)
        return t, CallablePoly(ta.r, pa.grade + pb.grade, fn)
    if op == "composite":
        d0 = matrix_from_json(node["d0"])
        c0 = matrix_from_json(node["c0"])
        t = constructions.composite(ta, tb, d0, c0)
        fn = lambda z: z * (eval_at(pa, z) @ d0 @ eval_at(pb, z)) + c0
        return t, CallablePoly(ta.r, pa.grade + pb.grade + 1, fn)
    raise StructuralError(f"unknown expression op {op!r}")
