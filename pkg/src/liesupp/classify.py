"""Structural predicates: c-supplementation, complete factorisability,
phi-free / elementary / E-algebra, small-dimension isomorphism testing, and
the semisimple-shape and main decomposition checks.

Supplement searches iterate candidates in (dim, lexicographic RREF) order
and return the first witness, so reports are reproducible across runs.
"""
from __future__ import annotations

import time
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .liealg import LieAlgebra
from .lattice import (
    LatticeCache,
    build_lattice,
    core,
    frattini,
    is_simple,
    is_supersolvable,
    minimal_ideals,
    radical,
)
from .subspace import DEFAULT_SUBSPACE_CAP, Subspace

ISO_DIM_LIMIT = 3
_ISO_CHUNK = 200_000


@dataclass
class SupplementWitness:
    """A pair (B, C) certifying that B is c-supplemented: B + C is the whole
    algebra and B intersect C lies in the core of B."""

    subalgebra: Subspace
    supplement: Subspace
    meets_in: Subspace
    core_of_subalgebra: Subspace


def c_supplement(
    L: LieAlgebra,
    lattice: LatticeCache,
    b: Subspace,
    core_b: Optional[Subspace] = None,
) -> Optional[SupplementWitness]:
    """First supplement of b in canonical search order, or None.

    Candidates of dimension exactly codim(b) meet b trivially whenever the
    sum is everything, so the core is only computed when larger supplements
    have to be considered.
    """
    n = L.dim
    d0 = n - b.dim
    for c_ in lattice.by_dim.get(d0, []):
        if b.sum(c_).dim == n:
            zero = Subspace.zero(n, L.p)
            if core_b is None:
                core_b = core(L, b)
            return SupplementWitness(b, c_, zero, core_b)
    if core_b is None:
        core_b = core(L, b)
    for d in range(d0 + 1, n + 1):
        for c_ in lattice.by_dim.get(d, []):
            if b.sum(c_).dim != n:
                continue
            meet = b.intersect(c_)
            if core_b.contains(meet):
                return SupplementWitness(b, c_, meet, core_b)
    return None


def complement_subalgebra(
    L: LieAlgebra, lattice: LatticeCache, b: Subspace
) -> Optional[Subspace]:
    """A subalgebra C with b + C everything and b meet C = 0, or None.
    Such a C necessarily has dimension exactly codim(b)."""
    n = L.dim
    for c_ in lattice.by_dim.get(n - b.dim, []):
        if b.sum(c_).dim == n:
            return c_
    return None


def is_c_supplemented_algebra(
    L: LieAlgebra, lattice: Optional[LatticeCache] = None
) -> Tuple[bool, Optional[Subspace]]:
    """Conjunction over every subalgebra; on failure reports the canonically
    first subalgebra without a supplement."""
    if lattice is None:
        lattice = build_lattice(L)
    n = L.dim
    for b in lattice.subalgebras:
        d0 = n - b.dim
        if any(b.sum(c_).dim == n for c_ in lattice.by_dim.get(d0, [])):
            continue
        core_b = core(L, b)
        found = False
        for d in range(d0 + 1, n + 1):
            for c_ in lattice.by_dim.get(d, []):
                if b.sum(c_).dim == n and core_b.contains(b.intersect(c_)):
                    found = True
                    break
            if found:
                break
        if not found:
            return False, b
    return True, None


def is_completely_factorisable(
    L: LieAlgebra, lattice: Optional[LatticeCache] = None
) -> Tuple[bool, Optional[Subspace]]:
    if lattice is None:
        lattice = build_lattice(L)
    for b in lattice.subalgebras:
        if complement_subalgebra(L, lattice, b) is None:
            return False, b
    return True, None


def is_phi_free(L: LieAlgebra, lattice: Optional[LatticeCache] = None) -> bool:
    return frattini(L, lattice)[1].dim == 0


def is_elementary(
    L: LieAlgebra,
    lattice: Optional[LatticeCache] = None,
    analyzer: Optional["Analyzer"] = None,
) -> Tuple[bool, Optional[Subspace]]:
    """phi(B) = 0 for every subalgebra B (phi computed inside B's own
    algebra).  Returns the first offending subalgebra otherwise."""
    if lattice is None:
        lattice = build_lattice(L)
    for b in lattice.subalgebras:
        if b.dim == 0:
            continue
        sub, _ = L.as_algebra(b)
        phi = analyzer.frattini(sub)[1] if analyzer else frattini(sub)[1]
        if phi.dim:
            return False, b
    return True, None


def is_E_algebra(
    L: LieAlgebra,
    lattice: Optional[LatticeCache] = None,
    analyzer: Optional["Analyzer"] = None,
) -> Tuple[bool, Optional[Subspace]]:
    """phi(B) <= phi(L) for every subalgebra B, with each phi(B) mapped back
    into the ambient coordinates through the embedding."""
    if lattice is None:
        lattice = build_lattice(L)
    phi_l = (analyzer.frattini(L) if analyzer else frattini(L, lattice))[1]
    for b in lattice.subalgebras:
        if b.dim == 0:
            continue
        sub, emb = L.as_algebra(b)
        phi_b = analyzer.frattini(sub)[1] if analyzer else frattini(sub)[1]
        if phi_b.dim and not phi_l.contains(emb.lift_space(phi_b)):
            return False, b
    return True, None


# -- brute-force isomorphism in dimension <= 3 ------------------------------


def _digit_matrices(start: int, stop: int, n: int, p: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((len(idx), n * n), dtype=np.int64)
    rem = idx.copy()
    for pos in range(n * n - 1, -1, -1):
        digits[:, pos] = rem % p
        rem //= p
    return digits.reshape(-1, n, n)


def _dets_mod(T: np.ndarray, p: int) -> np.ndarray:
    n = T.shape[1]
    if n == 1:
        return T[:, 0, 0] % p
    if n == 2:
        return (T[:, 0, 0] * T[:, 1, 1] - T[:, 0, 1] * T[:, 1, 0]) % p
    a, b, c = T[:, 0, 0], T[:, 0, 1], T[:, 0, 2]
    d, e, f = T[:, 1, 0], T[:, 1, 1], T[:, 1, 2]
    g, h, i = T[:, 2, 0], T[:, 2, 1], T[:, 2, 2]
    return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % p


def _inverses_mod(T: np.ndarray, det: np.ndarray, p: int) -> np.ndarray:
    """Adjugate-based inverse of a batch of invertible 1x1..3x3 matrices."""
    inv_table = np.array([0] + [pow(d, p - 2, p) for d in range(1, p)], dtype=np.int64)
    dinv = inv_table[det % p]
    n = T.shape[1]
    adj = np.empty_like(T)
    if n == 1:
        adj[:, 0, 0] = 1
    elif n == 2:
        adj[:, 0, 0] = T[:, 1, 1]
        adj[:, 0, 1] = -T[:, 0, 1]
        adj[:, 1, 0] = -T[:, 1, 0]
        adj[:, 1, 1] = T[:, 0, 0]
    else:
        for r in range(3):
            for s in range(3):
                r1, r2 = [x for x in range(3) if x != s]
                c1, c2 = [x for x in range(3) if x != r]
                adj[:, r, s] = (-1) ** (r + s) * (
                    T[:, r1, c1] * T[:, r2, c2] - T[:, r1, c2] * T[:, r2, c1]
                )
    return (adj * dinv[:, None, None]) % p


def is_isomorphic_small(
    A: LieAlgebra, B: LieAlgebra
) -> Optional[Tuple[Tuple[int, ...], ...]]:
    """Exhaustive basis-change search in dimension <= 3.

    Returns the first invertible T (rows = images of A's basis in B's
    coordinates) with [Tx, Ty]_B = T[x, y]_A for all basis pairs, or None.
    """
    if A.p != B.p:
        raise ValueError("field mismatch")
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")
    n, p = A.dim, A.p
    if n > ISO_DIM_LIMIT:
        raise ValueError(f"isomorphism search limited to dimension {ISO_DIM_LIMIT}")
    if n == 0:
        return ()
    # cheap invariants first
    for inv in (
        lambda x: tuple(s.dim for s in x.derived_series()),
        lambda x: tuple(s.dim for s in x.lower_central_series()),
    ):
        if inv(A) != inv(B):
            return None
    pairs_i = np.array([i for i in range(n) for _ in range(i + 1, n)], dtype=np.int64)
    pairs_j = np.array([j for i in range(n) for j in range(i + 1, n)], dtype=np.int64)
    c_a = A.table[pairs_i, pairs_j, :] if len(pairs_i) else None
    total = p ** (n * n)
    for start in range(0, total, _ISO_CHUNK):
        T = _digit_matrices(start, min(start + _ISO_CHUNK, total), n, p)
        if len(pairs_i):
            lhs = np.einsum("pk,ckm->cpm", c_a, T) % p
            rhs = (
                np.einsum("cpu,cpv,uvm->cpm", T[:, pairs_i, :], T[:, pairs_j, :], B.table)
                % p
            )
            ok = (lhs == rhs).all(axis=(1, 2))
        else:
            ok = np.ones(len(T), dtype=bool)
        ok &= _dets_mod(T, p) != 0
        hits = np.flatnonzero(ok)
        if len(hits):
            t = T[hits[0]]
            return tuple(tuple(int(x) for x in row) for row in t)
    return None


def canonical_form_small(L: LieAlgebra) -> LieAlgebra:
    """Lexicographically least structure-constant table reachable by any
    basis change; a true isomorphism-class invariant in dimension <= 3."""
    n, p = L.dim, L.p
    if n > ISO_DIM_LIMIT:
        raise ValueError(f"canonical form limited to dimension {ISO_DIM_LIMIT}")
    if n < 2:
        return LieAlgebra(L.field, n)
    pairs_i = np.array([i for i in range(n) for _ in range(i + 1, n)], dtype=np.int64)
    pairs_j = np.array([j for i in range(n) for j in range(i + 1, n)], dtype=np.int64)
    npairs = len(pairs_i)
    powers = p ** np.arange(npairs * n - 1, -1, -1, dtype=object)
    best = None
    total = p ** (n * n)
    for start in range(0, total, _ISO_CHUNK):
        T = _digit_matrices(start, min(start + _ISO_CHUNK, total), n, p)
        det = _dets_mod(T, p)
        T = T[det != 0]
        det = det[det != 0]
        if not len(T):
            continue
        tinv = _inverses_mod(T, det, p)
        w = (
            np.einsum("cpu,cpv,uvm->cpm", T[:, pairs_i, :], T[:, pairs_j, :], L.table)
            % p
        )
        new = np.einsum("cpm,cmk->cpk", w, tinv) % p
        flat = new.reshape(len(T), npairs * n)
        codes = flat.astype(object) @ powers
        i = int(np.argmin(codes))
        if best is None or codes[i] < best[0]:
            best = (codes[i], flat[i].copy())
    digits = best[1]
    brackets = {}
    for idx in range(npairs):
        coeffs = tuple(int(x) for x in digits[idx * n : (idx + 1) * n])
        brackets[(int(pairs_i[idx]), int(pairs_j[idx]))] = coeffs
    return LieAlgebra(L.field, n, brackets)


# -- structure-theorem shapes -----------------------------------------------


def check_semisimple_shape(
    L: LieAlgebra, lattice: Optional[LatticeCache] = None
) -> Tuple[bool, Dict]:
    """True iff p != 2, the radical is zero, and L is the direct sum of its
    minimal ideals, each 3-dimensional and isomorphic to sl2."""
    from .liealg import sl2

    n, p = L.dim, L.p
    if n == 0:
        return False, {"reason": "zero algebra"}
    if p == 2:
        return False, {"reason": "characteristic two"}
    if lattice is None:
        lattice = build_lattice(L)
    if radical(L, lattice).dim != 0:
        return False, {"reason": "nonzero radical"}
    mins = minimal_ideals(L, lattice)
    if sum(m.dim for m in mins) != n:
        return False, {"reason": "minimal ideals do not sum directly to L"}
    s = Subspace.zero(n, p)
    for m in mins:
        if s.intersect(m).dim:
            return False, {"reason": "minimal ideals overlap"}
        s = s.sum(m)
    if s.dim != n:
        return False, {"reason": "minimal ideals do not span"}
    reference = sl2(p)
    for m in mins:
        if m.dim != 3:
            return False, {"reason": f"summand of dimension {m.dim}"}
        sub, _ = L.as_algebra(m)
        if is_isomorphic_small(sub, reference) is None:
            return False, {"reason": "summand not isomorphic to sl2"}
    return True, {"summands": mins}


def check_main_decomposition(
    L: LieAlgebra,
    lattice: Optional[LatticeCache] = None,
    cap: int = DEFAULT_SUBSPACE_CAP,
) -> Tuple[bool, Dict]:
    """The full structural criterion: every bracket-closed subspace of phi(L)
    is an ideal of L, and L/phi(L) splits as R + S with R the (supersolvable,
    phi-free) radical and S zero or an sl2 direct sum."""
    if lattice is None:
        lattice = build_lattice(L, cap)
    _, phi = frattini(L, lattice)
    out: Dict = {"phi": phi}
    if phi.dim:
        phi_alg, emb = L.as_algebra(phi)
        for s in build_lattice(phi_alg, cap).subalgebras:
            lifted = emb.lift_space(s)
            if not L.is_ideal(lifted):
                out["reason"] = "phi_subalgebra_not_ideal"
                out["witness"] = lifted
                return False, out
    q, qmap = L.quotient(phi)
    out["quotient_dim"] = q.dim
    lat_q = build_lattice(q, cap)
    r = radical(q, lat_q)
    out["R"] = r
    if r.dim:
        r_alg, _ = q.as_algebra(r)
        if not is_supersolvable(r_alg):
            out["reason"] = "radical_not_supersolvable"
            return False, out
        if frattini(r_alg)[1].dim:
            out["reason"] = "radical_not_phi_free"
            return False, out
    for s in lat_q.ideals:
        if r.intersect(s).dim or r.sum(s).dim != q.dim:
            continue
        if q.product_space(r, s).dim:
            continue
        if s.dim == 0:
            out["S"] = s
            return True, out
        s_alg, _ = q.as_algebra(s)
        ok, _info = check_semisimple_shape(s_alg)
        if ok:
            out["S"] = s
            return True, out
    out["reason"] = "no_semisimple_complement"
    return False, out


# -- reports ----------------------------------------------------------------

ALL_PREDICATES = (
    "solvable",
    "nilpotent",
    "supersolvable",
    "simple",
    "semisimple",
    "phi_free",
    "c_supplemented",
    "completely_factorisable",
    "elementary",
    "E_algebra",
    "semisimple_shape",
    "main_decomposition",
)


@dataclass
class ClassificationReport:
    p: int
    dim: int
    predicates: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, object] = field(default_factory=dict)
    lattice_stats: Dict[str, int] = field(default_factory=dict)
    degenerate: bool = False
    elapsed_s: float = 0.0


def classify_algebra(
    L: LieAlgebra,
    predicates: Optional[Tuple[str, ...]] = None,
    cap: int = DEFAULT_SUBSPACE_CAP,
    analyzer: Optional["Analyzer"] = None,
) -> ClassificationReport:
    wanted = tuple(predicates) if predicates else ALL_PREDICATES
    unknown = set(wanted) - set(ALL_PREDICATES)
    if unknown:
        raise ValueError(f"unknown predicates: {sorted(unknown)}")
    start = time.monotonic()
    lattice = build_lattice(L, cap)
    rep = ClassificationReport(p=L.p, dim=L.dim, degenerate=L.dim <= 1)
    rep.lattice_stats = lattice.stats()
    _, phi = frattini(L, lattice)
    rep.witnesses["phi"] = phi
    for name in wanted:
        if name == "solvable":
            rep.predicates[name] = L.is_solvable()
        elif name == "nilpotent":
            rep.predicates[name] = L.is_nilpotent()
        elif name == "supersolvable":
            rep.predicates[name] = is_supersolvable(L)
        elif name == "simple":
            rep.predicates[name] = is_simple(L, lattice)
        elif name == "semisimple":
            rep.predicates[name] = radical(L, lattice).dim == 0 and L.dim > 0
        elif name == "phi_free":
            rep.predicates[name] = phi.dim == 0
        elif name == "c_supplemented":
            ok, failing = is_c_supplemented_algebra(L, lattice)
            rep.predicates[name] = ok
            if failing is not None:
                rep.witnesses["c_supplemented_failing"] = failing
        elif name == "completely_factorisable":
            ok, failing = is_completely_factorisable(L, lattice)
            rep.predicates[name] = ok
            if failing is not None:
                rep.witnesses["completely_factorisable_failing"] = failing
        elif name == "elementary":
            ok, failing = is_elementary(L, lattice, analyzer)
            rep.predicates[name] = ok
            if failing is not None:
                rep.witnesses["elementary_failing"] = failing
        elif name == "E_algebra":
            ok, failing = is_E_algebra(L, lattice, analyzer)
            rep.predicates[name] = ok
            if failing is not None:
                rep.witnesses["E_algebra_failing"] = failing
        elif name == "semisimple_shape":
            ok, info = check_semisimple_shape(L, lattice)
            rep.predicates[name] = ok
            rep.witnesses["semisimple_shape"] = info
        elif name == "main_decomposition":
            ok, info = check_main_decomposition(L, lattice, cap)
            rep.predicates[name] = ok
            rep.witnesses["main_decomposition"] = info
    rep.elapsed_s = time.monotonic() - start
    return rep


class Analyzer:
    """Memoized predicate evaluation keyed by structure-constant tables.

    Census campaigns hit the same subalgebra/quotient tables over and over;
    caching verdicts per table collapses that cost.  Lattices are kept in a
    bounded LRU because the large ones dominate memory.
    """

    def __init__(self, cap: int = DEFAULT_SUBSPACE_CAP, lattice_slots: int = 256):
        self.cap = cap
        self._lattices: OrderedDict = OrderedDict()
        self._lattice_slots = lattice_slots
        self._memo: Dict = {}
        self._ss_memo: Dict = {}

    def lattice(self, L: LieAlgebra) -> LatticeCache:
        got = self._lattices.get(L.key)
        if got is not None:
            self._lattices.move_to_end(L.key)
            return got
        lat = build_lattice(L, self.cap)
        self._lattices[L.key] = lat
        if len(self._lattices) > self._lattice_slots:
            self._lattices.popitem(last=False)
        return lat

    def _cached(self, name, L, fn):
        key = (name, L.key)
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def frattini(self, L):
        return self._cached("frattini", L, lambda: frattini(L, self.lattice(L)))

    def c_supplemented(self, L):
        return self._cached(
            "csupp", L, lambda: is_c_supplemented_algebra(L, self.lattice(L))
        )

    def completely_factorisable(self, L):
        return self._cached(
            "cf", L, lambda: is_completely_factorisable(L, self.lattice(L))
        )

    def supersolvable(self, L):
        return is_supersolvable(L, self._ss_memo)

    def elementary(self, L):
        return self._cached(
            "elem", L, lambda: is_elementary(L, self.lattice(L), self)
        )

    def e_algebra(self, L):
        return self._cached(
            "ealg", L, lambda: is_E_algebra(L, self.lattice(L), self)
        )

    def radical(self, L):
        return self._cached("radical", L, lambda: radical(L, self.lattice(L)))

    def simple(self, L):
        return self._cached("simple", L, lambda: is_simple(L, self.lattice(L)))

    def semisimple_shape(self, L):
        return self._cached(
            "ss_shape", L, lambda: check_semisimple_shape(L, self.lattice(L))
        )

    def main_decomposition(self, L):
        return self._cached(
            "main", L, lambda: check_main_decomposition(L, self.lattice(L), self.cap)
        )

    def canonical(self, L):
        return self._cached("canon", L, lambda: canonical_form_small(L))
