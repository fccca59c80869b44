"""Lie algebras by structure constants, cocycles, quasi-bialgebra axioms.

Conventions: [e_i, e_j] = sum_k c[i][j][k] e_k, and a cocycle stores
delta(e_i) = sum_{j,k} d[i][j][k] e_j (x) e_k with d[i] antisymmetric.
All verdicts carry the first failing witness so test failures point at
a concrete basis tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .tensor import Tensor, alt_components, as_rational, rzeros

HALF = Fraction(1, 2)


@dataclass
class Verdict:
    ok: bool
    witness: tuple | None = None
    residual: object = None

    def __bool__(self) -> bool:
        return self.ok


class LieAlgebra:
    __slots__ = ("dim", "c", "labels")

    def __init__(self, c, labels=None):
        c = np.asarray(c, dtype=object)
        n = c.shape[0]
        if c.shape != (n, n, n):
            raise ValueError("structure constants must be an n^3 cube")
        skew = c + np.transpose(c, (1, 0, 2))
        if skew.any():
            i, j, k = next(idx for idx in np.ndindex(c.shape) if skew[idx])
            raise ValueError("structure constants not antisymmetric at (%d,%d,%d)" % (i, j, k))
        self.dim = n
        self.c = c
        self.labels = list(labels) if labels is not None else ["e%d" % i for i in range(n)]

    @classmethod
    def from_brackets(cls, dim: int, entries, labels=None) -> "LieAlgebra":
        """entries: (i, j, k, value) with i < j; antisymmetric completion implied."""
        c = rzeros((dim, dim, dim))
        for i, j, k, val in entries:
            if not i < j:
                raise ValueError("bracket entries must have i < j")
            val = as_rational(val)
            c[i, j, k] += val
            c[j, i, k] -= val
        return cls(c, labels=labels)

    @classmethod
    def abelian(cls, dim: int, labels=None) -> "LieAlgebra":
        return cls(rzeros((dim, dim, dim)), labels=labels)

    def bracket(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=object)
        y = np.asarray(y, dtype=object)
        return np.tensordot(y, np.tensordot(x, self.c, axes=(0, 0)), axes=(0, 0))

    def ad_matrix(self, x) -> np.ndarray:
        """Matrix A with A @ y = [x, y]."""
        x = np.asarray(x, dtype=object)
        return np.tensordot(x, self.c, axes=(0, 0)).T

    def __eq__(self, other) -> bool:
        return (isinstance(other, LieAlgebra) and self.dim == other.dim
                and bool((self.c == other.c).all()))

    def __repr__(self):
        return "LieAlgebra(dim=%d, labels=%r)" % (self.dim, self.labels)


def check_jacobi(g: LieAlgebra) -> Verdict:
    """Cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0."""
    t1 = np.tensordot(g.c, g.c, axes=(2, 0))   # t1[i,j,k,l] = sum_m c[i,j,m] c[m,k,l]
    jac = t1 + np.transpose(t1, (1, 2, 0, 3)) + np.transpose(t1, (2, 0, 1, 3))
    if not jac.any():
        return Verdict(True)
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if jac[i, j, k].any():
                    return Verdict(False, witness=(i, j, k), residual=jac[i, j, k])
    # antisymmetry makes any remaining violation impossible
    raise AssertionError("jacobi residual without an i<j<k witness")


def closed_under_bracket(g: LieAlgebra, rows) -> Verdict:
    """Closure of a spanning set under the bracket, with membership taken
    against the span itself; bilinearity makes basis pairs sufficient."""
    from .subspace import Subspace
    sub = rows if isinstance(rows, Subspace) else Subspace(g.dim, rows)
    for i in range(sub.dim):
        for j in range(i + 1, sub.dim):
            rem = sub.reduce(g.bracket(sub.rows[i], sub.rows[j]))
            if rem.any():
                return Verdict(False, witness=(i, j), residual=rem)
    return Verdict(True)


def ad_tensor_components(c: np.ndarray, x, arr: np.ndarray) -> np.ndarray:
    """Leibniz action of ad_x on a degree-k component array."""
    x = np.asarray(x, dtype=object)
    a = np.tensordot(x, c, axes=(0, 0)).T
    out = None
    for axis in range(arr.ndim):
        term = np.moveaxis(np.tensordot(a, arr, axes=(1, axis)), 0, axis)
        out = term if out is None else out + term
    return out


def ad_multi(g: LieAlgebra, x, t: Tensor) -> Tensor:
    if t.degree < 1:
        raise ValueError("ad_multi needs degree >= 1")
    return Tensor(t.dim, ad_tensor_components(g.c, x, t.data),
                  antisymmetric=t.antisymmetric)


def coad_a(g: LieAlgebra, a, l) -> np.ndarray:
    """Covector with <coad_a l, b> = -<l, [a, b]>."""
    a = np.asarray(a, dtype=object)
    l = np.asarray(l, dtype=object)
    return -(np.tensordot(a, g.c, axes=(0, 0)) @ l)


class Cocycle:
    __slots__ = ("algebra", "d")

    def __init__(self, algebra: LieAlgebra, d):
        d = np.asarray(d, dtype=object)
        n = algebra.dim
        if d.shape != (n, n, n):
            raise ValueError("cocycle data must be an n^3 cube")
        skew = d + np.transpose(d, (0, 2, 1))
        if skew.any():
            idx = next(idx for idx in np.ndindex(d.shape) if skew[idx])
            raise ValueError("cocycle image not antisymmetric at %s" % (idx,))
        self.algebra = algebra
        self.d = d

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> "Cocycle":
        return cls(algebra, rzeros((algebra.dim,) * 3))

    @classmethod
    def from_entries(cls, algebra: LieAlgebra, entries) -> "Cocycle":
        """entries: (i, j, k, value) with j < k; antisymmetric completion implied."""
        n = algebra.dim
        d = rzeros((n, n, n))
        for i, j, k, val in entries:
            if not j < k:
                raise ValueError("cocycle entries must have j < k")
            val = as_rational(val)
            d[i, j, k] += val
            d[i, k, j] -= val
        return cls(algebra, d)

    @classmethod
    def coboundary(cls, algebra: LieAlgebra, r: Tensor) -> "Cocycle":
        """delta(x) = ad_x r for a bivector r."""
        n = algebra.dim
        d = rzeros((n, n, n))
        for i in range(n):
            d[i] = ad_tensor_components(algebra.c, Tensor.basis(n, i).data, r.data)
        return cls(algebra, d)

    def delta(self, x) -> Tensor:
        x = np.asarray(x, dtype=object)
        return Tensor(self.algebra.dim, np.tensordot(x, self.d, axes=(0, 0)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cocycle) and self.algebra == other.algebra
                and bool((self.d == other.d).all()))


def bracket_delta(delta: Cocycle, l, m) -> np.ndarray:
    """Covector with <[l,m]_delta, e_i> = <l (x) m, delta(e_i)>."""
    l = np.asarray(l, dtype=object)
    m = np.asarray(m, dtype=object)
    return np.tensordot(np.tensordot(delta.d, m, axes=(2, 0)), l, axes=(1, 0))


def coad_l(delta: Cocycle, l, a) -> np.ndarray:
    """Vector with <coad_l a, m> = -<[l,m]_delta, a>."""
    l = np.asarray(l, dtype=object)
    a = np.asarray(a, dtype=object)
    return -np.tensordot(l, np.tensordot(a, delta.d, axes=(0, 0)), axes=(0, 0))


class QuasiBialgebra:
    """(g, delta, phi) with phi a 3-vector; the axioms are checkable, not
    enforced, so deliberately broken structures can be built for negative
    tests."""

    __slots__ = ("algebra", "delta", "phi")

    def __init__(self, algebra: LieAlgebra, delta: Cocycle, phi: Tensor):
        if delta.algebra.dim != algebra.dim:
            raise ValueError("cocycle is over a different algebra")
        if phi.dim != algebra.dim or phi.degree != 3:
            raise ValueError("phi must be a degree-3 tensor over g")
        if not (phi.antisymmetric or phi.is_antisymmetric()):
            raise ValueError("phi must be antisymmetric")
        self.algebra = algebra
        self.delta = delta
        self.phi = Tensor(phi.dim, phi.data, antisymmetric=True)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuasiBialgebra)
                and self.algebra == other.algebra
                and self.delta == other.delta
                and self.phi == other.phi)


def check_cocycle(delta: Cocycle) -> Verdict:
    """delta([x,y]) = ad_x delta(y) - ad_y delta(x) at all basis pairs."""
    g = delta.algebra
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = np.tensordot(g.c[i, j], delta.d, axes=(0, 0))
            rhs = (ad_tensor_components(g.c, Tensor.basis(n, i).data, delta.d[j])
                   - ad_tensor_components(g.c, Tensor.basis(n, j).data, delta.d[i]))
            res = lhs - rhs
            if res.any():
                return Verdict(False, witness=(i, j), residual=res)
    return Verdict(True)


def check_quasi_cojacobi(qb: QuasiBialgebra) -> Verdict:
    """(1/2) Alt(delta (x) id) delta(x) = ad_x phi at every basis x."""
    g, d = qb.algebra, qb.delta.d
    n = g.dim
    for i in range(n):
        t = np.transpose(np.tensordot(d[i], d, axes=(0, 0)), (1, 2, 0))
        lhs = HALF * alt_components(t)
        rhs = ad_tensor_components(g.c, Tensor.basis(n, i).data, qb.phi.data)
        res = lhs - rhs
        if res.any():
            return Verdict(False, witness=(i,), residual=res)
    return Verdict(True)


def check_pentagon(qb: QuasiBialgebra) -> Verdict:
    """Alt(delta (x) id (x) id) phi = 0."""
    t = np.tensordot(qb.delta.d, qb.phi.data, axes=(0, 0))  # [a,b,j,k]
    res = alt_components(t)
    if res.any():
        idx = next(idx for idx in np.ndindex(res.shape) if res[idx])
        return Verdict(False, witness=idx, residual=res)
    return Verdict(True)


def axiom_report(qb: QuasiBialgebra) -> dict:
    """All four structural checks, never short-circuiting."""
    return {
        "jacobi": check_jacobi(qb.algebra),
        "cocycle": check_cocycle(qb.delta),
        "quasi_cojacobi": check_quasi_cojacobi(qb),
        "pentagon": check_pentagon(qb),
    }


def cyb_components(c: np.ndarray, r: np.ndarray) -> np.ndarray:
    """[r12,r13] + [r12,r23] + [r13,r23] expanded through the structure
    constants; works for any square scalar-ring matrix r."""
    # t1[a,b,c] = sum_{i,k} r[i,b] r[k,c] c[i,k,a]
    u = np.tensordot(r, c, axes=(0, 0))            # u[b,k,a]
    t1 = np.transpose(np.tensordot(r, u, axes=(0, 1)), (2, 1, 0))
    # t2[a,b,c] = sum_{j,k} r[a,j] r[k,c] c[j,k,b]
    u = np.tensordot(r, c, axes=(1, 0))            # u[a,k,b]
    t2 = np.transpose(np.tensordot(r, u, axes=(0, 1)), (1, 2, 0))
    # t3[a,b,c] = sum_{j,l} r[a,j] r[b,l] c[j,l,c]
    u = np.tensordot(r, c, axes=(1, 0))            # u[a,l,c]
    t3 = np.transpose(np.tensordot(r, u, axes=(1, 1)), (1, 0, 2))
    return t1 + t2 + t3


def cyb(g: LieAlgebra, r: Tensor) -> Tensor:
    """Classical Yang-Baxter expression of a bivector, as a 3-tensor."""
    if r.dim != g.dim or r.degree != 2:
        raise ValueError("cyb expects a degree-2 tensor over g")
    data = cyb_components(g.c, r.data)
    antisym = False
    if r.antisymmetric or r.is_antisymmetric():
        probe = Tensor(g.dim, data)
        assert probe.is_antisymmetric(), "cyb of an antisymmetric bivector must be antisymmetric"
        antisym = True
    return Tensor(g.dim, data, antisymmetric=antisym)


def half_alt_delta_components(d: np.ndarray, r: np.ndarray) -> np.ndarray:
    """(1/2) Alt((delta (x) id) r) at the array level."""
    t = np.transpose(np.tensordot(r, d, axes=(0, 0)), (1, 2, 0))
    return HALF * alt_components(t)


def half_alt_delta(delta: Cocycle, r: Tensor) -> Tensor:
    if r.dim != delta.algebra.dim or r.degree != 2:
        raise ValueError("expected a degree-2 tensor over g")
    return Tensor(r.dim, half_alt_delta_components(delta.d, r.data), antisymmetric=True)
