"""Exact multilinear algebra over a based rational vector space.

Tensors are dense numpy object arrays of `fractions.Fraction`; all
arithmetic is exact and every comparison is an exact equality.  The
antisymmetrization convention is the plain signed sum over permutations
(no 1/k! factor), and the wedge product of an m-tensor with an n-tensor
carries the 1/(m! n!) normalization.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError("not an exact rational: %r" % (x,))


def rzeros(shape) -> np.ndarray:
    a = np.empty(shape, dtype=object)
    a[...] = ZERO
    return a


def rarray(data) -> np.ndarray:
    a = np.array(data, dtype=object)
    flat = a.reshape(-1)
    for i, x in enumerate(flat):
        flat[i] = as_rational(x)
    return a


def basis_vector(dim: int, i: int) -> np.ndarray:
    v = rzeros((dim,))
    v[i] = ONE
    return v


def perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


class Tensor:
    """Degree-k tensor over an n-dimensional based space.

    Immutable by convention: no operation here mutates `data` after
    construction.  The `antisymmetric` flag certifies total antisymmetry
    of the components; constructors only set it when it is guaranteed.
    """

    __slots__ = ("dim", "degree", "data", "antisymmetric")

    def __init__(self, dim: int, data, antisymmetric: bool = False):
        data = np.asarray(data, dtype=object)
        if data.shape != (dim,) * data.ndim:
            raise ValueError("tensor data must be a dim^k cube, got shape %s for dim %d"
                             % (data.shape, dim))
        self.dim = dim
        self.degree = data.ndim
        self.data = data
        self.antisymmetric = antisymmetric

    @classmethod
    def zero(cls, dim: int, degree: int) -> "Tensor":
        return cls(dim, rzeros((dim,) * degree), antisymmetric=True)

    @classmethod
    def basis(cls, dim: int, i: int) -> "Tensor":
        return cls(dim, basis_vector(dim, i), antisymmetric=True)

    @classmethod
    def from_entries(cls, dim: int, degree: int, entries, antisymmetric: bool = False) -> "Tensor":
        data = rzeros((dim,) * degree)
        for idx, val in entries:
            data[tuple(idx)] = as_rational(val)
        return cls(dim, data, antisymmetric=antisymmetric)

    @classmethod
    def from_alternating_entries(cls, dim: int, degree: int, entries) -> "Tensor":
        """Build from coefficients on strictly increasing index tuples,
        filling all other components by sign (wedge-basis coordinates)."""
        data = rzeros((dim,) * degree)
        for idx, val in entries:
            idx = tuple(idx)
            if list(idx) != sorted(set(idx)):
                raise ValueError("expected strictly increasing indices, got %s" % (idx,))
            val = as_rational(val)
            for perm in permutations(range(degree)):
                data[tuple(idx[p] for p in perm)] = perm_sign(perm) * val
        return cls(dim, data, antisymmetric=True)

    def entries(self):
        """Nonzero components as (index tuple, value), lexicographic order."""
        for idx in np.ndindex(self.data.shape):
            v = self.data[idx]
            if v:
                yield idx, v

    def is_zero(self) -> bool:
        return not self.data.any()

    def is_antisymmetric(self) -> bool:
        for perm in permutations(range(self.degree)):
            if perm_sign(perm) == 1:
                if (self.data != np.transpose(self.data, perm)).any():
                    return False
            else:
                if (self.data != -np.transpose(self.data, perm)).any():
                    return False
        return True

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        return Tensor(self.dim, self.data + other.data,
                      antisymmetric=self.antisymmetric and other.antisymmetric)

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        return Tensor(self.dim, self.data - other.data,
                      antisymmetric=self.antisymmetric and other.antisymmetric)

    def __neg__(self) -> "Tensor":
        return Tensor(self.dim, -self.data, antisymmetric=self.antisymmetric)

    def __rmul__(self, scalar) -> "Tensor":
        return Tensor(self.dim, as_rational(scalar) * self.data,
                      antisymmetric=self.antisymmetric)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Tensor)
                and self.dim == other.dim
                and self.degree == other.degree
                and bool((self.data == other.data).all()))

    def __hash__(self):
        return hash((self.dim, self.degree, tuple(sorted(self.entries()))))

    def __repr__(self):
        terms = ", ".join("%s: %s" % (idx, v) for idx, v in self.entries())
        return "Tensor(dim=%d, degree=%d, {%s})" % (self.dim, self.degree, terms)

    def _check_compatible(self, other: "Tensor"):
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError("tensor dimension/degree mismatch")


def tensor_product(u: Tensor, v: Tensor) -> Tensor:
    if u.dim != v.dim:
        raise ValueError("tensor product needs a common ambient dimension")
    return Tensor(u.dim, np.multiply.outer(u.data, v.data))


def alt_components(arr: np.ndarray) -> np.ndarray:
    """Signed sum over all axis permutations (array level, any scalar ring)."""
    k = arr.ndim
    out = None
    for perm in permutations(range(k)):
        term = np.transpose(arr, perm)
        term = term if perm_sign(perm) == 1 else -term
        out = term.copy() if out is None else out + term
    return out


def alt(t: Tensor) -> Tensor:
    return Tensor(t.dim, alt_components(t.data), antisymmetric=True)


def _require_antisym(t: Tensor, op: str):
    if not (t.antisymmetric or t.is_antisymmetric()):
        raise ValueError("%s requires an antisymmetric tensor" % op)


def wedge(u: Tensor, v: Tensor) -> Tensor:
    """(1/(m! n!)) Alt(u ⊗ v) for antisymmetric u, v."""
    if u.dim != v.dim:
        raise ValueError("wedge needs a common ambient dimension")
    _require_antisym(u, "wedge")
    _require_antisym(v, "wedge")
    scale = Fraction(1, factorial(u.degree) * factorial(v.degree))
    return scale * alt(tensor_product(u, v))


def wedge_list(factors) -> Tensor:
    out = factors[0]
    for f in factors[1:]:
        out = wedge(out, f)
    return out


def contract(covectors, t: Tensor, slots) -> Tensor:
    """Pair covector j with tensor slot slots[j]; slots are positions in
    the uncontracted tensor."""
    covectors = [np.asarray(l, dtype=object) for l in covectors]
    slots = list(slots)
    if len(covectors) != len(slots):
        raise ValueError("need one covector per slot")
    if len(set(slots)) != len(slots):
        raise ValueError("slots must be distinct")
    for s in slots:
        if not 0 <= s < t.degree:
            raise ValueError("slot out of range: %d" % s)
    for l in covectors:
        if l.shape != (t.dim,):
            raise ValueError("covector has wrong dimension")
    cur = t.data
    # consume from the highest slot down so remaining positions keep meaning
    for s, l in sorted(zip(slots, covectors), key=lambda p: -p[0]):
        cur = np.tensordot(l, cur, axes=(0, s))
    return Tensor(t.dim, cur)


def apply_linear(matrix: np.ndarray, t: Tensor) -> Tensor:
    """Push every slot of t through the linear map given by matrix (rows
    index the target space).  Preserves antisymmetry."""
    matrix = np.asarray(matrix, dtype=object)
    new_dim = matrix.shape[0]
    if matrix.shape[1] != t.dim:
        raise ValueError("linear map does not match tensor dimension")
    cur = t.data
    for axis in range(t.degree):
        cur = np.moveaxis(np.tensordot(matrix, cur, axes=(1, axis)), 0, axis)
    if t.degree == 0:
        cur = cur.copy()
    return Tensor(new_dim, cur, antisymmetric=t.antisymmetric)
