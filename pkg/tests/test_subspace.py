import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liesupp.subspace import (
    CapExceededError,
    Subspace,
    count_subspaces,
    echelon_arrays,
    enumerate_subspaces,
    gaussian_binomial,
)


def test_span_examples():
    u = Subspace.span([(1, 1, 0), (0, 1, 0)], 3, 2)
    assert u.rows == ((1, 0, 0), (0, 1, 0))
    assert Subspace.span([], 3, 2).dim == 0
    assert Subspace.span([(2, 4)], 2, 5).rows == ((1, 2),)


def test_sum_examples():
    e1 = Subspace.span([(1, 0, 0)], 3, 2)
    e2 = Subspace.span([(0, 1, 0)], 3, 2)
    assert e1.sum(e2).rows == ((1, 0, 0), (0, 1, 0))
    assert e1.sum(Subspace.zero(3, 2)) == e1
    assert e1.sum(e1) == e1


def test_intersect_examples():
    u = Subspace.span([(1, 0, 0), (0, 1, 0)], 3, 3)
    v = Subspace.span([(0, 1, 0), (0, 0, 1)], 3, 3)
    assert u.intersect(v).rows == ((0, 1, 0),)
    assert u.intersect(Subspace.full(3, 3)) == u
    a = Subspace.span([(1, 1)], 2, 3)
    b = Subspace.span([(1, 2)], 2, 3)
    assert a.intersect(b).dim == 0


def test_contains_member():
    full = Subspace.full(3, 2)
    e1 = Subspace.span([(1, 0, 0)], 3, 2)
    assert full.contains(e1)
    assert e1.contains(e1)
    assert not e1.member((0, 1, 0))
    assert e1.member((1, 0, 0))


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        Subspace.full(3, 2).sum(Subspace.full(2, 2))
    with pytest.raises(ValueError):
        Subspace.full(3, 2).intersect(Subspace.full(3, 3))


@st.composite
def random_subspace_pair(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(1, 5))
    vecs = st.lists(
        st.tuples(*[st.integers(0, p - 1)] * n), min_size=0, max_size=n
    )
    u = Subspace.span(draw(vecs), n, p)
    v = Subspace.span(draw(vecs), n, p)
    return u, v


@given(random_subspace_pair())
@settings(max_examples=200, deadline=None)
def test_modular_law_dimensions(pair):
    u, v = pair
    assert u.sum(v).dim + u.intersect(v).dim == u.dim + v.dim


@given(random_subspace_pair())
@settings(max_examples=100, deadline=None)
def test_canonicity_respan(pair):
    u, v = pair
    for s in (u, v, u.sum(v), u.intersect(v)):
        assert Subspace.span(s.rows, s.n, s.p) == s


def test_enumeration_counts_small():
    assert count_subspaces(3, 2) == 16  # 1 + 7 + 7 + 1
    assert count_subspaces(2, 3) == 6  # 1 + 4 + 1
    assert gaussian_binomial(6, 1, 3) == 364  # (3^6 - 1) / 2


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_no_duplicates_matches_gaussian(n, p):
    seen = set()
    per_dim = {}
    for s in enumerate_subspaces(n, p):
        assert s not in seen
        seen.add(s)
        per_dim[s.dim] = per_dim.get(s.dim, 0) + 1
    for k in range(n + 1):
        assert per_dim.get(k, 0) == gaussian_binomial(n, k, p)


@pytest.mark.parametrize("p,n", [(2, 5), (2, 6), (3, 5), (3, 6)])
def test_echelon_arrays_counts(n, p):
    for k in range(n + 1):
        bases, piv = echelon_arrays(n, p, k)
        assert bases.shape == (gaussian_binomial(n, k, p), k, n)
        # every basis really is in echelon form with unit pivots
        if k:
            idx = np.arange(bases.shape[0])
            for r in range(k):
                assert (bases[idx, r, piv[:, r]] == 1).all()


def test_dim_filter_line_count():
    lines = list(enumerate_subspaces(6, 3, dim_filter=1))
    assert len(lines) == 364


def test_cap_refusal():
    with pytest.raises(CapExceededError) as exc:
        list(enumerate_subspaces(6, 3, cap=1000))
    assert exc.value.needed == count_subspaces(6, 3)
    assert exc.value.cap == 1000
