"""Lattice-level computations checked against independent brute-force oracles."""
import pytest

from liesupp.census import CensusSpec, generate
from liesupp.lattice import (
    abelian_socle,
    build_lattice,
    core,
    core_by_enumeration,
    frattini,
    is_semisimple,
    is_simple,
    is_supersolvable,
    minimal_ideals,
    radical,
)
from liesupp.liealg import (
    abelian,
    counterexample_L1,
    counterexample_double,
    heisenberg,
    sl2,
)
from liesupp.subspace import Subspace, enumerate_subspaces


def naive_subalgebras(L):
    """Oracle: filter the raw subspace enumeration with a direct bracket check."""
    out = []
    for s in enumerate_subspaces(L.dim, L.p):
        if all(s.member(L.bracket(a, b)) for a in s.rows for b in s.rows):
            out.append(s)
    return out


def test_heisenberg_lattice_counts_vs_oracle():
    h = heisenberg(2)
    lat = build_lattice(h)
    naive = naive_subalgebras(h)
    assert sorted(s.rows for s in lat.subalgebras) == sorted(s.rows for s in naive)
    assert len(lat.subalgebras) == 12
    assert len(lat.ideals) == 6
    assert len(lat.maximals) == 3


def test_abelian_everything_closed():
    lat = build_lattice(abelian(2, 2))
    assert len(lat.subalgebras) == 5  # all subspaces of GF(2)^2


def test_sl2_lines_are_subalgebras():
    lat = build_lattice(sl2(3))
    assert len(lat.by_dim[1]) == 13  # all lines: alternating product


def test_core_examples():
    h = heisenberg(2)
    assert core(h, Subspace.span([(1, 0, 0)], 3, 2)).dim == 0
    xz = Subspace.span([(1, 0, 0), (0, 0, 1)], 3, 2)
    assert core(h, xz) == xz  # already an ideal
    d = counterexample_double(2)
    zc = Subspace.span([(0, 0, 1, 0, 0, 1)], 6, 2)
    assert core(d, zc).dim == 0


def test_core_monotone_idempotent():
    h = heisenberg(2)
    lat = build_lattice(h)
    for b in lat.subalgebras:
        cb = core(h, b)
        assert core(h, cb) == cb
        for b2 in lat.subalgebras:
            if b2.contains(b):
                assert core(h, b2).contains(cb)


@pytest.mark.parametrize("p", [2])
def test_core_fixpoint_matches_enumeration_oracle(p):
    # every subalgebra of every algebra in the small exhaustive universe
    for entry in generate(CensusSpec(p, 3)):
        L = entry.algebra
        lat = build_lattice(L)
        for b in lat.subalgebras:
            assert core(L, b) == core_by_enumeration(L, b, lat)


def test_frattini_examples():
    for p in (2, 3, 5):
        h = heisenberg(p)
        _, phi = frattini(h)
        assert phi.rows == ((0, 0, 1),)  # phi = L^2 = span(z)
    _, phi1 = frattini(counterexample_L1(2))
    assert phi1.rows == ((0, 0, 1),)
    _, phid = frattini(counterexample_double(2))
    assert phid.rows == ((0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1))  # span(z, c)


def test_frattini_degenerate_dims():
    _, phi0 = frattini(abelian(2, 0))
    assert phi0.dim == 0
    _, phi1 = frattini(abelian(2, 1))
    assert phi1.dim == 0  # only maximal subalgebra is 0


def test_frattini_is_ideal_inside_all_maximals():
    for L in (heisenberg(3), counterexample_L1(3), sl2(3)):
        lat = build_lattice(L)
        _, phi = frattini(L, lat)
        assert L.is_ideal(phi)
        assert all(m.contains(phi) for m in lat.maximals)


def test_minimal_ideals_and_socle():
    h = heisenberg(2)
    mins = minimal_ideals(h)
    assert [m.rows for m in mins] == [((0, 0, 1),)]
    assert abelian_socle(h).rows == ((0, 0, 1),)
    s = sl2(3)
    assert [m.dim for m in minimal_ideals(s)] == [3]
    assert abelian_socle(s).dim == 0
    a = abelian(2, 2)
    assert abelian_socle(a).dim == 2


def test_radical_examples():
    assert radical(sl2(3)).dim == 0
    assert is_simple(sl2(3)) and is_semisimple(sl2(3))
    assert radical(heisenberg(3)).dim == 3
    mixed = sl2(3).direct_sum(abelian(3, 1))
    assert radical(mixed).rows == ((0, 0, 0, 1),)
    assert not is_simple(abelian(2, 1))  # 1-dim algebras are not simple


def test_radical_quotient_is_semisimple():
    for entry in generate(CensusSpec(2, 3)):
        L = entry.algebra
        lat = build_lattice(L)
        r = radical(L, lat)
        q, _ = L.quotient(r)
        if q.dim:
            assert radical(q).dim == 0


def test_supersolvable_examples():
    assert is_supersolvable(heisenberg(3))
    assert not is_supersolvable(sl2(3))
    assert is_supersolvable(abelian(5, 3))
    assert is_supersolvable(counterexample_L1(2))


def flag_search_supersolvable(L, lat):
    """Oracle: DFS for a chain of ideals of L with dims 0, 1, ..., n."""
    by_dim = {}
    for i in lat.ideals:
        by_dim.setdefault(i.dim, []).append(i)

    def extend(chain):
        d = chain[-1].dim
        if d == L.dim:
            return True
        return any(
            i.contains(chain[-1]) and extend(chain + [i])
            for i in by_dim.get(d + 1, [])
        )

    return extend([Subspace.zero(L.dim, L.p)])


def test_supersolvable_recursion_matches_flag_oracle():
    for entry in generate(CensusSpec(2, 3)):
        L = entry.algebra
        lat = build_lattice(L)
        assert is_supersolvable(L) == flag_search_supersolvable(L, lat)
        if is_supersolvable(L):
            assert L.is_solvable()
