"""Randomized invariants.  Example counts stay small; every case is exact."""
import random

from hypothesis import given, settings, strategies as st

from dgbr.brauer import (
    forget_descriptor,
    lambda_map,
    rho_map,
    verify_dg_iso,
    verify_equivalence,
)
from dgbr.catalog import (
    generators,
    mat2_inner,
    neutral,
    random_algebra,
    random_complex,
    split_pair,
    unit_equivalence_witness,
)
from dgbr.brauer import structure_realize
from dgbr.dg import KComplex, ksign, opposite, swap_map, tensor_product
from dgbr.fields import GF, QQ
from dgbr.formats import parse_algebra_text, serialize_algebra
from dgbr.homs import hom_differential, hom_of_complexes

FIELDS = [QQ, GF(2), GF(3), GF(5)]
fields = st.sampled_from(FIELDS)
seeds = st.integers(0, 10**6)

_POOLS = {f: [A for _, A in generators(f)] for f in FIELDS}
_SMALL = {f: [A for A in pool if A.dim <= 4] for f, pool in _POOLS.items()}


@given(m=st.integers(-30, 30), n=st.integers(-30, 30), k=st.integers(-30, 30))
def test_ksign_symmetric_and_biadditive(m, n, k):
    assert ksign(m, n) == ksign(n, m)
    assert ksign(m + k, n) == ksign(m, n) * ksign(k, n)
    assert ksign(m, n + k) == ksign(m, n) * ksign(m, k)


@given(field=fields, i=st.integers(0, 10**9), j=st.integers(0, 10**9))
@settings(max_examples=15, deadline=None)
def test_swap_is_an_isomorphism_of_tensor_factors(field, i, j):
    pool = _SMALL[field]
    A, B = pool[i % len(pool)], pool[j % len(pool)]
    w = verify_dg_iso(tensor_product(A, B), tensor_product(B, A), swap_map(A, B))
    assert w.verified, w.failure


@given(field=fields, i=st.integers(0, 10**9), a=st.integers(0, 10**9),
       b=st.integers(0, 10**9))
@settings(max_examples=25, deadline=None)
def test_left_and_right_actions_commute_up_to_parity(field, i, a, b):
    pool = _POOLS[field]
    A = pool[i % len(pool)]
    a %= A.dim
    b %= A.dim
    one = A.field.one
    la, rb = lambda_map(A, {a: one}), rho_map(A, {b: one})
    expected = la.compose(rb)
    if ksign(A.degree_of(a), A.degree_of(b)) < 0:
        expected = -expected
    assert rb.compose(la) == expected


@given(field=fields, i=st.integers(0, 10**9), a=st.integers(0, 10**9))
@settings(max_examples=25, deadline=None)
def test_action_maps_intertwine_the_differential(field, i, a):
    pool = _POOLS[field]
    A = pool[i % len(pool)]
    a %= A.dim
    H = hom_of_complexes(A.complex(), A.complex())
    u = {a: A.field.one}
    du = A.d_apply(u)
    assert lambda_map(A, du) == hom_differential(H, lambda_map(A, u))
    assert rho_map(A, du) == hom_differential(H, rho_map(A, u))


@given(field=fields, seed=seeds)
@settings(max_examples=20, deadline=None)
def test_double_opposite_restores_the_algebra(field, seed):
    A = random_algebra(random.Random(seed), field)
    assert opposite(opposite(A)) == A


@given(field=fields, seed=seeds)
@settings(max_examples=20, deadline=None)
def test_random_constructions_satisfy_all_axioms(field, seed):
    A = random_algebra(random.Random(seed), field)
    assert A.validate() == []


@given(field=fields, seed=seeds)
@settings(max_examples=20, deadline=None)
def test_serialization_roundtrip_on_random_algebras(field, seed):
    A = random_algebra(random.Random(seed), field)
    text = serialize_algebra(A)
    B = parse_algebra_text(text)
    assert B == A
    assert serialize_algebra(B) == text


@given(field=fields, seed=seeds)
@settings(max_examples=20, deadline=None)
def test_random_complex_differential_squares_to_zero(field, seed):
    C = random_complex(random.Random(seed), field, max_total=5)
    d = C.differential_map()
    for j in range(C.space.total_dim):
        assert d.apply_flat(d.apply_flat({j: field.one})) == {}


def test_equivalence_witness_is_symmetric():
    A = mat2_inner(QQ)
    sr = structure_realize(A)
    w = unit_equivalence_witness(A, sr)
    B = neutral(QQ)
    pt = KComplex.point(QQ)
    assert verify_equivalence(A, B, pt, sr.L, w.map).verified
    inv = w.map.inverse()
    assert inv is not None
    assert verify_equivalence(B, A, sr.L, pt, inv).verified


def test_forgetting_the_grading_of_a_split_pair():
    d = forget_descriptor(split_pair(QQ))
    assert (d.dimension, d.center_dimension, d.is_central_simple) == (2, 2, False)
