"""JSON interchange for every value the toolkit exchanges.

Rationals travel as text "p/q" (or "p" when q = 1); sparse tensor
entries are 0-based, lexicographically sorted, and exploit the
antisymmetry conventions: brackets store i < j, cocycles store j < k,
3-vectors store i < j < k, bivectors store i < j.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .double import DoubleAlgebra
from .homogeneous import HomDatum
from .liealg import Cocycle, LieAlgebra, QuasiBialgebra, Verdict
from .subspace import Subspace
from .tensor import Tensor, as_rational


def frac_str(x) -> str:
    return str(as_rational(x))


def parse_frac(s) -> Fraction:
    if isinstance(s, (int, str)):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError("bad rational %r: %s" % (s, exc)) from None
    raise ValueError("bad rational literal: %r" % (s,))


def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def array_entries(arr) -> list:
    if isinstance(arr, Tensor):
        arr = arr.data
    arr = np.asarray(arr, dtype=object)
    return [[list(idx), frac_str(arr[idx])] for idx in np.ndindex(arr.shape) if arr[idx]]


def tensor_to_entries(t: Tensor) -> list:
    return [[list(idx), frac_str(v)] for idx, v in t.entries()]


def bivector_to_entries(t: Tensor) -> list:
    return [[i, j, frac_str(t.data[i, j])]
            for i in range(t.dim) for j in range(i + 1, t.dim) if t.data[i, j]]


def bivector_from_entries(dim: int, entries) -> Tensor:
    checked = []
    for e in entries:
        i, j, val = int(e[0]), int(e[1]), parse_frac(e[2])
        if not 0 <= i < j < dim:
            raise ValueError("bivector entry needs 0 <= i < j < dim, got (%d,%d)" % (i, j))
        checked.append(((i, j), val))
    return Tensor.from_alternating_entries(dim, 2, checked)


def _bracket_entries(c) -> list:
    n = c.shape[0]
    return [[i, j, k, frac_str(c[i, j, k])]
            for i in range(n) for j in range(i + 1, n) for k in range(n) if c[i, j, k]]


def _delta_entries(d) -> list:
    n = d.shape[0]
    return [[i, j, k, frac_str(d[i, j, k])]
            for i in range(n) for j in range(n) for k in range(j + 1, n) if d[i, j, k]]


def _phi_entries(phi) -> list:
    n = phi.shape[0]
    return [[i, j, k, frac_str(phi[i, j, k])]
            for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n)
            if phi[i, j, k]]


def qb_to_dict(qb: QuasiBialgebra) -> dict:
    return {
        "dim": qb.dim,
        "labels": list(qb.algebra.labels),
        "bracket": _bracket_entries(qb.algebra.c),
        "delta": _delta_entries(qb.delta.d),
        "phi": _phi_entries(qb.phi.data),
    }


def _int_triplet(entry, what):
    if not (isinstance(entry, (list, tuple)) and len(entry) == 4):
        raise ValueError("each %s entry must be [i, j, k, value]" % what)
    return int(entry[0]), int(entry[1]), int(entry[2]), parse_frac(entry[3])


def qb_from_dict(obj) -> QuasiBialgebra:
    if not isinstance(obj, dict) or "dim" not in obj:
        raise ValueError("algebra object needs a 'dim' field")
    n = int(obj["dim"])
    if n < 0:
        raise ValueError("dim must be nonnegative")
    labels = obj.get("labels")
    bracket = []
    for e in obj.get("bracket", []):
        i, j, k, val = _int_triplet(e, "bracket")
        if not (0 <= i < j < n and 0 <= k < n):
            raise ValueError("bracket entry out of range: %s" % (e,))
        bracket.append((i, j, k, val))
    g = LieAlgebra.from_brackets(n, bracket, labels=labels)
    delta = []
    for e in obj.get("delta", []):
        i, j, k, val = _int_triplet(e, "delta")
        if not (0 <= i < n and 0 <= j < k < n):
            raise ValueError("delta entry out of range: %s" % (e,))
        delta.append((i, j, k, val))
    phi = []
    for e in obj.get("phi", []):
        i, j, k, val = _int_triplet(e, "phi")
        if not 0 <= i < j < k < n:
            raise ValueError("phi entry out of range: %s" % (e,))
        phi.append(((i, j, k), val))
    return QuasiBialgebra(g, Cocycle.from_entries(g, delta),
                          Tensor.from_alternating_entries(n, 3, phi))


def subspace_to_rows(s: Subspace) -> list:
    return [[frac_str(x) for x in s.rows[i]] for i in range(s.dim)]


def subspace_from_rows(rows, ambient: int) -> Subspace:
    vecs = [[parse_frac(x) for x in row] for row in rows]
    for row in vecs:
        if len(row) != ambient:
            raise ValueError("subspace row has length %d, expected %d"
                             % (len(row), ambient))
    return Subspace(ambient, vecs) if vecs else Subspace.zero(ambient)


def double_to_dict(dbl: DoubleAlgebra) -> dict:
    return {
        "dim": dbl.dim,
        "labels": list(dbl.algebra.labels),
        "bracket": _bracket_entries(dbl.algebra.c),
        "q_matrix": [[frac_str(x) for x in dbl.q[i]] for i in range(dbl.dim)],
        "source": qb_to_dict(dbl.source),
    }


def datum_to_dict(d: HomDatum, inline_algebra: bool = True) -> dict:
    out = {
        "h": subspace_to_rows(d.h),
        "r": bivector_to_entries(d.r),
    }
    if inline_algebra:
        out["algebra"] = qb_to_dict(d.qb)
    return out


def datum_from_dict(obj, default_qb: QuasiBialgebra | None = None) -> HomDatum:
    if not isinstance(obj, dict):
        raise ValueError("datum object must be a JSON object")
    if "algebra" in obj and obj["algebra"] is not None:
        qb = qb_from_dict(obj["algebra"])
    elif default_qb is not None:
        qb = default_qb
    else:
        raise ValueError("datum needs an inline algebra or a default one")
    n = qb.dim
    h = subspace_from_rows(obj.get("h", []), n)
    r = bivector_from_entries(n, obj.get("r", []))
    return HomDatum(qb, h, r)


def rmatrix_from_dict(obj) -> Tensor:
    """Bivector file: {"dim": n, "r": [[i, j, "p/q"], ...]}; general (i, j)
    index pairs are accepted and checked for antisymmetric consistency."""
    if not isinstance(obj, dict) or "dim" not in obj:
        raise ValueError("bivector object needs a 'dim' field")
    n = int(obj["dim"])
    given = {}
    for e in obj.get("r", []):
        i, j, val = int(e[0]), int(e[1]), parse_frac(e[2])
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError("bivector entry out of range: %s" % (e,))
        if (i, j) in given:
            raise ValueError("duplicate bivector entry (%d,%d)" % (i, j))
        given[(i, j)] = val
    for (i, j), val in given.items():
        if i == j and val:
            raise ValueError("r not antisymmetric: diagonal entry (%d,%d)" % (i, j))
        if (j, i) in given and given[(j, i)] != -val:
            raise ValueError("r not antisymmetric: entries (%d,%d) and (%d,%d)"
                             % (i, j, j, i))
    entries = [((i, j), val) for (i, j), val in given.items() if i < j]
    entries += [((j, i), -val) for (i, j), val in given.items()
                if i > j and (j, i) not in given]
    return Tensor.from_alternating_entries(n, 2, entries)


def verdict_to_dict(v: Verdict) -> dict:
    out = {"ok": v.ok}
    out["witness"] = list(v.witness) if v.witness is not None else None
    if v.residual is None:
        out["residual"] = None
    else:
        out["residual"] = array_entries(v.residual)
    return out
