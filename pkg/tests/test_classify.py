import pytest

from liesupp.census import CensusSpec, generate
from liesupp.classify import (
    Analyzer,
    c_supplement,
    canonical_form_small,
    check_main_decomposition,
    check_semisimple_shape,
    classify_algebra,
    complement_subalgebra,
    is_E_algebra,
    is_c_supplemented_algebra,
    is_completely_factorisable,
    is_elementary,
    is_isomorphic_small,
    is_phi_free,
)
from liesupp.gfp import PrimeField
from liesupp.lattice import build_lattice
from liesupp.liealg import (
    LieAlgebra,
    abelian,
    counterexample_L1,
    counterexample_double,
    heisenberg,
    L1_gamma,
    sl2,
)
from liesupp.subspace import Subspace


def test_ideal_always_supplemented():
    h = heisenberg(2)
    lat = build_lattice(h)
    z = Subspace.span([(0, 0, 1)], 3, 2)
    w = c_supplement(h, lat, z)
    assert w is not None
    assert z.sum(w.supplement).dim == 3
    assert w.core_of_subalgebra.contains(w.meets_in)


def test_line_supplement_in_heisenberg():
    h = heisenberg(2)
    lat = build_lattice(h)
    x = Subspace.span([(1, 0, 0)], 3, 2)
    w = c_supplement(h, lat, x)
    assert w is not None
    assert w.meets_in.dim == 0 and w.supplement.dim == 2


def test_no_supplement_for_diagonal_line():
    d = counterexample_double(2)
    lat = build_lattice(d)
    zc = Subspace.span([(0, 0, 1, 0, 0, 1)], 6, 2)
    assert c_supplement(d, lat, zc) is None


@pytest.mark.parametrize("p", [2, 3])
def test_c_supplemented_algebra_examples(p):
    assert is_c_supplemented_algebra(heisenberg(p))[0]
    ok, failing = is_c_supplemented_algebra(counterexample_double(p))
    assert not ok
    # canonically first failing subalgebra is the diagonal line span(z + c)
    assert failing.rows == ((0, 0, 1, 0, 0, 1),)


def test_char2_family_member_not_supplemented():
    ok, failing = is_c_supplemented_algebra(L1_gamma(2, gamma0=0))
    assert not ok
    # canonically first unsupplemented line
    assert failing.rows == ((0, 1, 0),)


@pytest.mark.parametrize("p", [3, 5])
def test_sl2_like_member_supplemented_odd_char(p):
    # gamma = 0, odd characteristic: the family member is c-supplemented
    assert is_c_supplemented_algebra(L1_gamma(p, gamma0=0))[0]


def test_completely_factorisable_examples():
    assert is_completely_factorisable(abelian(2, 3))[0]
    ok, failing = is_completely_factorisable(heisenberg(2))
    assert not ok
    assert failing.rows == ((0, 0, 1),)  # span(z): inside every maximal
    assert is_completely_factorisable(sl2(3))[0]


def test_cf_implies_c_supplemented_on_census():
    az = Analyzer()
    for entry in generate(CensusSpec(2, 3)):
        if az.completely_factorisable(entry.algebra)[0]:
            assert az.c_supplemented(entry.algebra)[0]


def test_heisenberg_c_supplemented_but_not_phi_free():
    h = heisenberg(2)
    assert is_c_supplemented_algebra(h)[0]
    assert not is_phi_free(h)


def test_elementary_and_E():
    for p in (2, 3):
        h = heisenberg(p)
        assert not is_phi_free(h)
        assert is_E_algebra(h)[0]
        assert not is_elementary(h)[0]
    assert is_elementary(abelian(3, 3))[0]
    l1 = counterexample_L1(2)
    assert not is_elementary(l1)[0]
    assert is_E_algebra(l1)[0]


def test_complement_search():
    h = heisenberg(2)
    lat = build_lattice(h)
    x = Subspace.span([(1, 0, 0)], 3, 2)
    c = complement_subalgebra(h, lat, x)
    assert c is not None and c.dim == 2 and x.intersect(c).dim == 0
    z = Subspace.span([(0, 0, 1)], 3, 2)
    assert complement_subalgebra(h, lat, z) is None


def test_isomorphism_witness():
    a = L1_gamma(3, gamma0=0)
    b = sl2(3)
    t = is_isomorphic_small(a, b)
    assert t is not None
    # check the witness honestly: T[x,y]_A = [Tx,Ty]_B on all basis pairs
    p = 3

    def apply(tmat, v):
        return tuple(
            sum(v[i] * tmat[i][k] for i in range(3)) % p for k in range(3)
        )

    for i in range(3):
        for j in range(3):
            lhs = apply(t, a.bracket(a.basis_vector(i), a.basis_vector(j)))
            rhs = b.bracket(apply(t, a.basis_vector(i)), apply(t, a.basis_vector(j)))
            assert lhs == rhs


def test_isomorphism_negative_and_permuted():
    assert is_isomorphic_small(heisenberg(2), abelian(2, 3)) is None
    h = heisenberg(2)
    permuted = LieAlgebra(PrimeField(2), 3, {(1, 2): (1, 0, 0)})  # [y, z] = x
    assert is_isomorphic_small(h, permuted) is not None


def test_isomorphism_guards():
    with pytest.raises(ValueError):
        is_isomorphic_small(heisenberg(2), heisenberg(3))
    with pytest.raises(ValueError):
        is_isomorphic_small(abelian(2, 2), abelian(2, 3))
    with pytest.raises(ValueError):
        is_isomorphic_small(abelian(2, 4), abelian(2, 4))


def test_canonical_form_is_class_invariant():
    h = heisenberg(2)
    permuted = LieAlgebra(PrimeField(2), 3, {(1, 2): (1, 0, 0)})
    assert canonical_form_small(h).key == canonical_form_small(permuted).key
    assert canonical_form_small(h).key != canonical_form_small(abelian(2, 3)).key
    assert is_isomorphic_small(canonical_form_small(h), h) is not None


def test_semisimple_shape():
    ok, info = check_semisimple_shape(sl2(3))
    assert ok and len(info["summands"]) == 1
    ok, info = check_semisimple_shape(heisenberg(3))
    assert not ok and info["reason"] == "nonzero radical"
    ok, info = check_semisimple_shape(sl2(5))
    assert ok
    # characteristic-2 policy: refused outright
    ok, info = check_semisimple_shape(L1_gamma(2, gamma0=0))
    assert not ok and info["reason"] == "characteristic two"


def test_main_decomposition():
    ok, info = check_main_decomposition(heisenberg(3))
    assert ok and info["R"].dim == 2 and info["S"].dim == 0
    ok, info = check_main_decomposition(sl2(3))
    assert ok and info["R"].dim == 0 and info["S"].dim == 3
    ok, info = check_main_decomposition(counterexample_double(2))
    assert not ok
    assert info["reason"] == "phi_subalgebra_not_ideal"
    assert info["witness"].rows == ((0, 0, 1, 0, 0, 1),)


def test_classification_report():
    rep = classify_algebra(heisenberg(2))
    assert rep.predicates["c_supplemented"]
    assert rep.predicates["E_algebra"]
    assert not rep.predicates["completely_factorisable"]
    assert not rep.predicates["phi_free"]
    assert rep.witnesses["phi"].dim == 1
    assert rep.lattice_stats["subalgebras"] == 12
    assert not rep.degenerate
    assert classify_algebra(abelian(2, 1)).degenerate


def test_classification_report_unknown_predicate():
    with pytest.raises(ValueError):
        classify_algebra(heisenberg(2), predicates=("bogus",))
