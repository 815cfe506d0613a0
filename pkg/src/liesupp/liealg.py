"""Lie algebras over GF(p) given by structure constants.

An algebra is its dimension n plus the table c_{ij}^k for i < j, giving
[e_i, e_j] = sum_k c_{ij}^k e_k.  Antisymmetry is structural ([e_j, e_i] is
defined as -[e_i, e_j]); the Jacobi identity is validated at construction
and violations are rejected with the offending basis triple.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .gfp import PrimeField
from .subspace import Subspace

Vector = Tuple[int, ...]


class InvalidAlgebraError(ValueError):
    """Structure constant table does not define a Lie algebra."""


class JacobiError(InvalidAlgebraError):
    def __init__(self, triple, residual):
        self.triple = triple
        self.residual = residual
        super().__init__(
            f"Jacobi identity fails on basis triple {triple}: residual {residual}"
        )


class NotIdealError(ValueError):
    pass


class NotSubalgebraError(ValueError):
    pass


class LieAlgebra:
    """Immutable Lie algebra value.

    table is the full antisymmetrized numpy array of shape (n, n, n);
    table[i, j] is the coefficient vector of [e_i, e_j].
    """

    __slots__ = ("field", "dim", "table", "basis_names", "_key")

    def __init__(
        self,
        field: PrimeField,
        dim: int,
        brackets: Optional[Dict[Tuple[int, int], Sequence[int]]] = None,
        basis_names: Optional[Sequence[str]] = None,
        table: Optional[np.ndarray] = None,
    ):
        p = field.p
        n = dim
        if table is None:
            table = np.zeros((n, n, n), dtype=np.int64)
            for (i, j), coeffs in (brackets or {}).items():
                if not (0 <= i < j < n):
                    raise InvalidAlgebraError(
                        f"bracket key ({i},{j}) must satisfy 0 <= i < j < {n}"
                    )
                if len(coeffs) != n:
                    raise InvalidAlgebraError(
                        f"bracket ({i},{j}) has {len(coeffs)} coefficients, need {n}"
                    )
                table[i, j] = [c % p for c in coeffs]
                table[j, i] = [(-c) % p for c in coeffs]
        else:
            table = np.asarray(table, dtype=np.int64) % p
            if table.shape != (n, n, n):
                raise InvalidAlgebraError(f"table shape {table.shape} != {(n, n, n)}")
            if ((table + np.swapaxes(table, 0, 1)) % p).any():
                raise InvalidAlgebraError("table is not antisymmetric")
        self.field = field
        self.dim = n
        self.table = table
        self.table.setflags(write=False)
        self.basis_names = tuple(basis_names) if basis_names else None
        if self.basis_names and len(self.basis_names) != n:
            raise InvalidAlgebraError("basis_names length != dim")
        self._validate_jacobi()
        self._key = (p, n, self.table.tobytes())

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def key(self):
        """Hashable identity of the structure (modulus, dim, table bytes)."""
        return self._key

    def _validate_jacobi(self):
        n, p = self.dim, self.p
        if n < 3:
            return
        c = self.table
        t = np.einsum("ijm,mkl->ijkl", c, c)
        jac = (t + np.transpose(t, (1, 2, 0, 3)) + np.transpose(t, (2, 0, 1, 3))) % p
        if jac.any():
            idx = np.argwhere(jac.any(axis=3))
            for i, j, k in idx:
                if i < j < k:
                    raise JacobiError(
                        (int(i), int(j), int(k)), tuple(int(x) for x in jac[i, j, k])
                    )
            i, j, k = idx[0]
            raise JacobiError(
                (int(i), int(j), int(k)), tuple(int(x) for x in jac[i, j, k])
            )

    # -- basic bracket operations -------------------------------------------

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def bracket(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        p = self.p
        w = np.einsum(
            "i,j,ijk->k",
            np.asarray(u, dtype=np.int64),
            np.asarray(v, dtype=np.int64),
            self.table,
        )
        return tuple(int(x) for x in w % p)

    def product_space(self, u: Subspace, v: Subspace) -> Subspace:
        """Span of all [x, y] with x, y ranging over the two bases."""
        if u.n != self.dim or v.n != self.dim:
            raise ValueError("ambient mismatch")
        prods = [self.bracket(x, y) for x in u.rows for y in v.rows]
        return Subspace.span(prods, self.dim, self.p)

    def is_subalgebra(self, u: Subspace) -> bool:
        rows = u.rows
        for s in range(len(rows)):
            for t in range(s + 1, len(rows)):
                if not u.member(self.bracket(rows[s], rows[t])):
                    return False
        return True

    def is_ideal(self, u: Subspace) -> bool:
        for i in range(self.dim):
            e = self.basis_vector(i)
            for r in u.rows:
                if not u.member(self.bracket(e, r)):
                    return False
        return True

    def subalgebra_closure(self, u: Subspace) -> Subspace:
        cur = u
        while True:
            nxt = cur.sum(self.product_space(cur, cur))
            if nxt.dim == cur.dim:
                return nxt
            cur = nxt

    # -- derived constructions ----------------------------------------------

    def quotient(self, ideal: Subspace) -> Tuple["LieAlgebra", "QuotientMap"]:
        """Quotient by an ideal, on the coset basis given by the non-pivot
        coordinates of the ideal's RREF."""
        if not self.is_ideal(ideal):
            raise NotIdealError(f"{ideal!r} is not an ideal")
        n, p = self.dim, self.p
        comp = [j for j in range(n) if j not in ideal.pivots]
        m = len(comp)
        brackets = {}
        for a in range(m):
            for b in range(a + 1, m):
                w = ideal.reduce(
                    self.bracket(self.basis_vector(comp[a]), self.basis_vector(comp[b]))
                )
                brackets[(a, b)] = tuple(w[j] for j in comp)
        q = LieAlgebra(self.field, m, brackets)
        return q, QuotientMap(self, q, ideal, tuple(comp))

    def as_algebra(self, space: Subspace) -> Tuple["LieAlgebra", "Embedding"]:
        """The induced algebra on a bracket-closed subspace, in its RREF basis."""
        if not self.is_subalgebra(space):
            raise NotSubalgebraError(f"{space!r} is not bracket-closed")
        rows, piv = space.rows, space.pivots
        k = space.dim
        brackets = {}
        for s in range(k):
            for t in range(s + 1, k):
                w = self.bracket(rows[s], rows[t])
                # w lies in the span; its coordinates are the pivot entries
                brackets[(s, t)] = tuple(w[c] for c in piv)
        sub = LieAlgebra(self.field, k, brackets)
        return sub, Embedding(self, sub, space)

    def direct_sum(self, other: "LieAlgebra") -> "LieAlgebra":
        if self.field != other.field:
            raise ValueError("field mismatch in direct sum")
        na, nb = self.dim, other.dim
        n = na + nb
        table = np.zeros((n, n, n), dtype=np.int64)
        table[:na, :na, :na] = self.table
        table[na:, na:, na:] = other.table
        names = None
        if self.basis_names and other.basis_names:
            names = self.basis_names + other.basis_names
        return LieAlgebra(self.field, n, basis_names=names, table=table)

    # -- series and solvability ---------------------------------------------

    def derived_series(self) -> List[Subspace]:
        cur = Subspace.full(self.dim, self.p)
        series = [cur]
        while True:
            nxt = self.product_space(cur, cur)
            if nxt.dim == cur.dim:
                break
            series.append(nxt)
            cur = nxt
        return series

    def lower_central_series(self) -> List[Subspace]:
        full = Subspace.full(self.dim, self.p)
        cur = full
        series = [cur]
        while True:
            nxt = self.product_space(full, cur)
            if nxt.dim == cur.dim:
                break
            series.append(nxt)
            cur = nxt
        return series

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].dim == 0

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].dim == 0

    def is_abelian(self) -> bool:
        return not self.table.any()

    # -- serialization helpers ----------------------------------------------

    def sparse_brackets(self) -> Dict[Tuple[int, int], Vector]:
        out = {}
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                coeffs = tuple(int(x) for x in self.table[i, j])
                if any(coeffs):
                    out[(i, j)] = coeffs
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"LieAlgebra(GF({self.p}), dim={self.dim})"


class QuotientMap:
    """Projection/section pair for a quotient L -> L/I."""

    __slots__ = ("parent", "quotient", "ideal", "coords")

    def __init__(self, parent, quotient, ideal, coords):
        self.parent = parent
        self.quotient = quotient
        self.ideal = ideal
        self.coords = coords  # parent coordinates carrying the coset basis

    def project(self, v: Sequence[int]) -> Vector:
        r = self.ideal.reduce(v)
        return tuple(r[j] for j in self.coords)

    def section(self, w: Sequence[int]) -> Vector:
        v = [0] * self.parent.dim
        for a, j in enumerate(self.coords):
            v[j] = w[a] % self.parent.p
        return tuple(v)

    def project_space(self, u: Subspace) -> Subspace:
        return Subspace.span(
            [self.project(r) for r in u.rows], self.quotient.dim, self.parent.p
        )

    def lift_space(self, u: Subspace) -> Subspace:
        """Full preimage of a subspace of the quotient."""
        rows = [self.section(r) for r in u.rows]
        rows += list(self.ideal.rows)
        return Subspace.span(rows, self.parent.dim, self.parent.p)


class Embedding:
    """Coordinate maps between a bracket-closed subspace and its own algebra."""

    __slots__ = ("parent", "sub", "space")

    def __init__(self, parent, sub, space):
        self.parent = parent
        self.sub = sub
        self.space = space

    def lift(self, coords: Sequence[int]) -> Vector:
        p = self.parent.p
        v = [0] * self.parent.dim
        for a, row in zip(coords, self.space.rows):
            if a:
                v = [(x + a * y) % p for x, y in zip(v, row)]
        return tuple(v)

    def restrict(self, v: Sequence[int]) -> Vector:
        if not self.space.member(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] % self.parent.p for c in self.space.pivots)

    def lift_space(self, u: Subspace) -> Subspace:
        return Subspace.span(
            [self.lift(r) for r in u.rows], self.parent.dim, self.parent.p
        )

    def restrict_space(self, u: Subspace) -> Subspace:
        return Subspace.span(
            [self.restrict(r) for r in u.rows], self.sub.dim, self.parent.p
        )


# -- catalog of named algebras ----------------------------------------------


def abelian(p: int, n: int) -> LieAlgebra:
    return LieAlgebra(PrimeField(p), n)


def nonabelian2(p: int) -> LieAlgebra:
    """The unique nonabelian 2-dimensional algebra: [x, y] = y."""
    return LieAlgebra(PrimeField(p), 2, {(0, 1): (0, 1)}, basis_names=("x", "y"))


def heisenberg(p: int) -> LieAlgebra:
    """Three-dimensional Heisenberg algebra, [x, y] = z with z central."""
    return LieAlgebra(
        PrimeField(p), 3, {(0, 1): (0, 0, 1)}, basis_names=("x", "y", "z")
    )


def counterexample_L1(p: int) -> LieAlgebra:
    """Solvable 3-dimensional algebra with [x,y] = y+z, [x,z] = z."""
    return LieAlgebra(
        PrimeField(p),
        3,
        {(0, 1): (0, 1, 1), (0, 2): (0, 0, 1)},
        basis_names=("x", "y", "z"),
    )


def counterexample_double(p: int) -> LieAlgebra:
    """Direct sum of two copies of counterexample_L1 (basis x,y,z,a,b,c)."""
    a = counterexample_L1(p)
    out = a.direct_sum(a)
    return LieAlgebra(
        out.field, 6, table=out.table, basis_names=("x", "y", "z", "a", "b", "c")
    )


def L1_gamma(p: int, gamma0: int = 0) -> LieAlgebra:
    """One-parameter 3-dimensional family: basis (u-1, u0, u1) with
    [u-1,u0] = u-1 + gamma0*u1, [u-1,u1] = u0, [u0,u1] = u1."""
    return LieAlgebra(
        PrimeField(p),
        3,
        {(0, 1): (1, 0, gamma0 % p), (0, 2): (0, 1, 0), (1, 2): (0, 0, 1)},
        basis_names=("u-1", "u0", "u1"),
    )


def sl2(p: int) -> LieAlgebra:
    """sl2 on basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.

    Over p = 2 this table degenerates to a non-simple algebra; that is
    deliberate, characteristic-2 phenomena are exercised through L1_gamma.
    """
    return LieAlgebra(
        PrimeField(p),
        3,
        {(0, 1): ((-2) % p, 0, 0), (0, 2): (0, 1, 0), (1, 2): (0, 0, (-2) % p)},
        basis_names=("e", "h", "f"),
    )


CATALOG = {
    "abelian": abelian,
    "nonabelian2": nonabelian2,
    "heisenberg": heisenberg,
    "counterexample_L1": counterexample_L1,
    "counterexample_double": counterexample_double,
    "L1_gamma": L1_gamma,
    "sl2": sl2,
}


def catalog(name: str, p: int, **params) -> LieAlgebra:
    """Build a named algebra; these names are the stable public identifiers."""
    try:
        ctor = CATALOG[name]
    except KeyError:
        raise KeyError(
            f"unknown catalog algebra {name!r}; known: {sorted(CATALOG)}"
        ) from None
    return ctor(p, **params)
