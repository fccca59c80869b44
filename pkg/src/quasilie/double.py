"""The double g + g* of a quasi-bialgebra: bracket, invariant form Q,
and the Lagrangian / subalgebra machinery on its subspaces.

Basis order in the double is (e_0..e_{n-1}, e^0..e^{n-1}); the dual
basis vector e^i sits at coordinate n+i, which makes Q the
block-antidiagonal identity pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .liealg import (LieAlgebra, QuasiBialgebra, Verdict, check_jacobi,
                     closed_under_bracket)
from .subspace import Subspace, solve_exact
from .tensor import Tensor, ONE, rzeros


class DoubleAlgebra:
    __slots__ = ("source", "algebra", "q")

    def __init__(self, source: QuasiBialgebra, algebra: LieAlgebra, q: np.ndarray):
        self.source = source
        self.algebra = algebra
        self.q = q

    @property
    def n(self) -> int:
        return self.source.dim

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def g_subspace(self) -> Subspace:
        rows = rzeros((self.n, self.dim))
        for i in range(self.n):
            rows[i, i] = ONE
        return Subspace(self.dim, rows)

    def dual_subspace(self) -> Subspace:
        rows = rzeros((self.n, self.dim))
        for i in range(self.n):
            rows[i, self.n + i] = ONE
        return Subspace(self.dim, rows)

    def embed_g(self, vector) -> np.ndarray:
        out = rzeros((self.dim,))
        out[:self.n] = np.asarray(vector, dtype=object)
        return out

    def embed_dual(self, covector) -> np.ndarray:
        out = rzeros((self.dim,))
        out[self.n:] = np.asarray(covector, dtype=object)
        return out


def build_double(qb: QuasiBialgebra) -> DoubleAlgebra:
    """Structure constants of the double from the three bracket rules:
    g x g is the given bracket, dual x dual is the delta-bracket minus the
    phi contraction, and mixed pairs are the two coadjoint actions.
    Invalid sources are accepted; axiom status is reported, not enforced."""
    n = qb.dim
    c, d, phi = qb.algebra.c, qb.delta.d, qb.phi.data
    full = rzeros((2 * n, 2 * n, 2 * n))
    full[:n, :n, :n] = c
    full[n:, n:, n:] = np.transpose(d, (1, 2, 0))       # [l,m]_delta component
    full[n:, n:, :n] = -phi                             # -(l (x) m (x) id) phi
    full[:n, n:, n:] = -np.transpose(c, (0, 2, 1))      # coad_a l
    full[:n, n:, :n] = d                                # -coad_l a
    full[n:, :n, :n] = -np.transpose(full[:n, n:, :n], (1, 0, 2))
    full[n:, :n, n:] = -np.transpose(full[:n, n:, n:], (1, 0, 2))
    q = rzeros((2 * n, 2 * n))
    for i in range(n):
        q[i, n + i] = ONE
        q[n + i, i] = ONE
    labels = list(qb.algebra.labels) + [lab + "*" for lab in qb.algebra.labels]
    return DoubleAlgebra(qb, LieAlgebra(full, labels=labels), q)


def q_form(dbl: DoubleAlgebra, u, v) -> Fraction:
    u = np.asarray(u, dtype=object)
    v = np.asarray(v, dtype=object)
    return np.tensordot(u, dbl.q @ v, axes=(0, 0))


@dataclass
class DoubleAxiomReport:
    jacobi: Verdict
    q_invariance: Verdict

    @property
    def ok(self) -> bool:
        return self.jacobi.ok and self.q_invariance.ok

    def __bool__(self) -> bool:
        return self.ok


def check_double_axioms(dbl: DoubleAlgebra) -> DoubleAxiomReport:
    """Jacobi plus Q([x,y],z) + Q(y,[x,z]) = 0 at every basis triple."""
    jac = check_jacobi(dbl.algebra)
    qc = np.tensordot(dbl.algebra.c, dbl.q, axes=(2, 0))   # Q([e_a,e_b], e_c)
    res = qc + np.transpose(qc, (0, 2, 1))
    if res.any():
        idx = next(idx for idx in np.ndindex(res.shape) if res[idx])
        qv = Verdict(False, witness=idx, residual=res[idx])
    else:
        qv = Verdict(True)
    return DoubleAxiomReport(jacobi=jac, q_invariance=qv)


def is_isotropic(dbl: DoubleAlgebra, sub: Subspace) -> bool:
    if sub.ambient != dbl.dim:
        raise ValueError("subspace lives in a different ambient space")
    gram = sub.rows @ dbl.q @ sub.rows.T
    return not gram.any()


def is_lagrangian(dbl: DoubleAlgebra, sub: Subspace) -> bool:
    return sub.dim == dbl.n and is_isotropic(dbl, sub)


def is_subalgebra(dbl: DoubleAlgebra, sub: Subspace) -> Verdict:
    """Closure of the echelon basis under the double bracket."""
    if sub.ambient != dbl.dim:
        raise ValueError("subspace lives in a different ambient space")
    return closed_under_bracket(dbl.algebra, sub)


def lagrangian_from_bivector(dbl: DoubleAlgebra, r: Tensor) -> Subspace:
    """Graph {(l (x) id) r + l : l in g*}; always Lagrangian and
    transversal to g."""
    n = dbl.n
    if r.dim != n or r.degree != 2:
        raise ValueError("expected a bivector over g")
    if not (r.antisymmetric or r.is_antisymmetric()):
        raise ValueError("bivector must be antisymmetric")
    rows = rzeros((n, 2 * n))
    for i in range(n):
        rows[i, :n] = r.data[i]          # (e^i (x) id) r
        rows[i, n + i] = ONE
    sub = Subspace(2 * n, rows)
    assert is_lagrangian(dbl, sub)
    assert intersect_with_g(dbl, sub).dim == 0
    return sub


def certify_bracket_map(src: LieAlgebra, dst: LieAlgebra, m: np.ndarray) -> Verdict:
    """m([x,y]_src) = [m x, m y]_dst at every basis pair."""
    lhs = np.tensordot(src.c, m, axes=(2, 1))
    u = np.tensordot(m, dst.c, axes=(0, 0))
    rhs = np.transpose(np.tensordot(m, u, axes=(0, 1)), (1, 0, 2))
    res = lhs - rhs
    if res.any():
        idx = next(i for i in np.ndindex(res.shape[:2]) if res[i].any())
        return Verdict(False, witness=idx, residual=res[idx])
    return Verdict(True)


def certify_form_map(q_src: np.ndarray, q_dst: np.ndarray, m: np.ndarray) -> Verdict:
    """q_dst(m u, m v) = q_src(u, v)."""
    res = m.T @ q_dst @ m - q_src
    if res.any():
        idx = next(i for i in np.ndindex(res.shape) if res[i])
        return Verdict(False, witness=idx, residual=res[idx])
    return Verdict(True)


def intersect_with_g(dbl: DoubleAlgebra, sub: Subspace) -> Subspace:
    """L intersect g, expressed as a subspace of g."""
    inter = sub.intersect(dbl.g_subspace())
    return Subspace(dbl.n, inter.rows[:, :dbl.n])


def bivector_from_lagrangian(dbl: DoubleAlgebra, sub: Subspace, h: Subspace) -> Tensor:
    """Inverse of the graph map: recover the bivector class over g/h from
    a Lagrangian subspace with L intersect g = h."""
    if not is_lagrangian(dbl, sub):
        raise ValueError("not Lagrangian")
    if intersect_with_g(dbl, sub) != h:
        raise ValueError("L intersect g differs from h")
    n = dbl.n
    m = h.quotient_matrix()
    free = [j for j in range(n) if j not in h.pivots]
    # each basis row (u | w) of L gives the equation wbar . v = (m u)
    wbar = rzeros((sub.dim, len(free)))
    ubar = rzeros((sub.dim, len(free)))
    for s in range(sub.dim):
        u, w = sub.rows[s, :n], sub.rows[s, n:]
        for a, f in enumerate(free):
            wbar[s, a] = w[f]
        ubar[s] = m @ u
    v = solve_exact(wbar, ubar) if free else rzeros((0, 0))
    t = Tensor(len(free), v)
    assert t.is_antisymmetric()
    return Tensor(len(free), v, antisymmetric=True)
