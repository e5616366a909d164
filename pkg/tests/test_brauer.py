"""Sandwich isomorphism, structure realization, equivalence witnesses, quaternions."""
import pytest

from dgbr.brauer import (
    _diagonal_candidates,
    choose_structure_idempotent,
    forget_descriptor,
    idempotent_containment,
    is_central_simple,
    kunneth_check,
    lambda_map,
    quaternion_algebra,
    rho_map,
    sandwich_iso,
    sandwich_map,
    structure_realize,
    verify_dg_iso,
    verify_equivalence,
)
from dgbr.catalog import (
    dual_numbers,
    mat2_inner,
    mat3_inner,
    neutral,
    split_pair,
    unit_equivalence_witness,
)
from dgbr.dg import (
    KComplex,
    ksign,
    opposite,
    regrade_trivial,
    swap_map,
    tensor_product,
    unsigned_swap_map,
)
from dgbr.errors import NoSuitableIdempotent, NotCentralSimple, ShapeMismatch
from dgbr.fields import GF, QQ
from dgbr.graded import HomogeneousMap
from dgbr.homs import end_dg_algebra
from dgbr.matrix_algebras import good_grading_matrix_algebra


def test_lambda_rho_commute_up_to_sign():
    A = mat2_inner(QQ)
    one = QQ.one
    for a in range(A.dim):
        for b in range(A.dim):
            la = lambda_map(A, {a: one})
            rb = rho_map(A, {b: one})
            lhs = rb.compose(la)
            rhs = la.compose(rb)
            if ksign(A.degree_of(a), A.degree_of(b)) < 0:
                rhs = -rhs
            assert lhs == rhs


def test_rho_is_multiplicative_for_opposite():
    A = mat2_inner(QQ)
    B = opposite(A)
    one = QQ.one
    for a in range(A.dim):
        for b in range(A.dim):
            prod_op = B.mul({a: one}, {b: one})
            direct = rho_map(A, prod_op)
            composed = rho_map(A, {a: one}).compose(rho_map(A, {b: one}))
            assert direct == composed


def test_central_simplicity_classifier():
    assert is_central_simple(mat2_inner(QQ))
    assert is_central_simple(good_grading_matrix_algebra(QQ, 3, (1, 0)))
    assert not is_central_simple(dual_numbers(QQ))
    assert not is_central_simple(split_pair(QQ))


def test_sandwich_mat2_walkthrough():
    w = sandwich_iso(mat2_inner(QQ))
    assert w.verified
    assert w.source.dim == 16 and w.target.dim == 16
    c = w.checks
    assert (c.is_algebra_hom, c.is_unital, c.commutes_with_d, c.is_bijective) == (
        True, True, True, True)


def test_sandwich_quaternions():
    Q = quaternion_algebra(QQ, QQ.neg(QQ.one), QQ.neg(QQ.one))
    w = sandwich_iso(Q)
    assert w.verified
    assert w.source.dim == 16


def test_sandwich_requires_central_simple():
    with pytest.raises(NotCentralSimple):
        sandwich_iso(dual_numbers(QQ))


def test_sandwich_map_alone_on_prime_field():
    A = good_grading_matrix_algebra(GF(3), 2, (1,))
    T = tensor_product(A, opposite(A))
    E = end_dg_algebra(KComplex.from_algebra(A))
    m = sandwich_map(A, T, E)
    w = verify_dg_iso(T, E, m)
    assert w.verified


def test_idempotent_certificates_frozen():
    A = mat2_inner(QQ)
    cert1, wit1 = idempotent_containment(A, 1)
    assert not cert1.contained
    assert cert1.ideal_dims == {-1: 1, 0: 1}
    assert cert1.span_dims == {0: 1, 1: 1}
    assert wit1 is not None
    cert2, wit2 = idempotent_containment(A, 2)
    assert cert2.contained
    assert cert2.ideal_dims == cert2.span_dims == {0: 1, 1: 1}
    assert wit2 is None
    choice = choose_structure_idempotent(A)
    assert choice.index == 1


def test_idempotent_search_falls_back_without_presentation():
    A = mat2_inner(QQ)
    rebuilt = regrade_trivial(A)
    assert rebuilt.presentation is None
    assert len(_diagonal_candidates(rebuilt)) == 2


def test_no_suitable_idempotent_carries_certificates():
    from dgbr.errors import ContainmentCertificate

    certs = [ContainmentCertificate(1, {0: 1}, {0: 1}, True),
             ContainmentCertificate(2, {0: 1}, {0: 1}, True)]
    err = NoSuitableIdempotent(certs)
    assert len(err.certificates) == 2
    assert "2" in str(err)


def test_containment_index_out_of_range():
    with pytest.raises(ShapeMismatch):
        idempotent_containment(mat2_inner(QQ), 3)


def test_structure_realize_walkthrough():
    A = mat2_inner(QQ)
    sr = structure_realize(A)
    assert dict(sr.L.space.dims) == {-1: 1, 0: 1}
    assert sr.witness.verified
    assert sr.idempotent.index == 1


def test_structure_target_orientation():
    # left multiplication composes covariantly, so the verified target is the
    # endomorphism algebra itself; against its opposite the same map fails
    # multiplicativity, and it verifies again between the two opposites
    A = mat2_inner(QQ)
    sr = structure_realize(A)
    E = sr.witness.target
    bad = verify_dg_iso(A, opposite(E), sr.witness.map)
    assert not bad.checks.is_algebra_hom
    assert bad.checks.failures
    good_op = verify_dg_iso(opposite(A), opposite(E), sr.witness.map)
    assert good_op.verified


def test_structure_realize_trivially_graded_mat3():
    A = good_grading_matrix_algebra(QQ, 3, (0, 0))
    sr = structure_realize(A)
    assert dict(sr.L.space.dims) == {0: 3}
    assert sr.witness.verified


def test_structure_realize_rejects_non_central_simple():
    with pytest.raises(NotCentralSimple):
        structure_realize(split_pair(QQ))


def test_unit_equivalence_from_structure_witness():
    A = mat2_inner(QQ)
    sr = structure_realize(A)
    w = unit_equivalence_witness(A, sr)
    assert w.verified


def test_verify_equivalence_rejects_dim_mismatch():
    A = mat2_inner(QQ)
    K = neutral(QQ)
    C1 = KComplex.point(QQ)
    m = HomogeneousMap.from_flat_columns(QQ, KComplex.point(QQ).space,
                                         KComplex.point(QQ).space, 0,
                                         {0: {0: QQ.one}})
    with pytest.raises(ShapeMismatch):
        verify_equivalence(A, K, C1, C1, m)


def test_verify_dg_iso_reports_failures_with_labels():
    A = dual_numbers(QQ)
    sw = HomogeneousMap.from_flat_columns(
        QQ, A.space, A.space, 0, {0: {0: QQ.coerce(2)}, 1: {1: QQ.one}}
    )
    w = verify_dg_iso(A, A, sw)
    assert not w.verified
    assert w.checks.commutes_with_d is False
    assert ("differential", "X") in w.checks.failures


def test_swap_iso_and_unsigned_failure():
    A = dual_numbers(QQ)
    B = mat2_inner(QQ)
    T1 = tensor_product(A, B)
    T2 = tensor_product(B, A)
    assert verify_dg_iso(T1, T2, swap_map(A, B)).verified
    bad = verify_dg_iso(T1, T2, unsigned_swap_map(A, B))
    assert not bad.checks.is_algebra_hom


def test_quaternion_table_and_descriptor():
    a = QQ.neg(QQ.one)
    b = QQ.neg(QQ.one)
    Q = quaternion_algebra(QQ, a, b)
    lbl = {Q.label_of(t): t for t in range(Q.dim)}
    one = QQ.one

    def mul(x, y):
        return {Q.label_of(t): QQ.format(c)
                for t, c in Q.mul({lbl[x]: one}, {lbl[y]: one}).items()}

    assert mul("i", "j") == {"k": "1"}
    assert mul("j", "i") == {"k": "-1"}
    assert mul("i", "i") == {"1": "-1"}
    assert mul("k", "k") == {"1": "-1"}
    assert is_central_simple(Q)
    d = forget_descriptor(Q)
    assert (d.dimension, d.center_dimension, d.is_central_simple) == (4, 1, True)


def test_quaternion_rejections():
    with pytest.raises(ShapeMismatch):
        quaternion_algebra(GF(2), 1, 1)
    with pytest.raises(ShapeMismatch):
        quaternion_algebra(QQ, QQ.zero, QQ.one)


def test_split_quaternions_still_central_simple():
    Q = quaternion_algebra(QQ, QQ.one, QQ.one)
    assert is_central_simple(Q)
    assert forget_descriptor(Q).is_central_simple


def test_forget_descriptor_ignores_grading():
    graded = good_grading_matrix_algebra(QQ, 3, (1, 0))
    flat = good_grading_matrix_algebra(QQ, 3, (0, 0))
    assert forget_descriptor(graded) == forget_descriptor(flat)
    assert forget_descriptor(regrade_trivial(graded)) == forget_descriptor(graded)


def test_kunneth_frozen_pairs():
    r = kunneth_check(mat2_inner(QQ), dual_numbers(QQ))
    assert r.matches and r.left == {} and r.right == {}
    r2 = kunneth_check(good_grading_matrix_algebra(QQ, 2, (1,)), split_pair(QQ))
    assert r2.matches
    assert r2.left == {-1: 2, 0: 4, 1: 2}


def test_kunneth_convolution_shifts_degrees():
    A = good_grading_matrix_algebra(QQ, 2, (1,))
    r = kunneth_check(A, A)
    assert r.matches
    assert r.left == {-2: 1, -1: 4, 0: 6, 1: 4, 2: 1}


def test_mat3_structure_with_inner_differential():
    A = mat3_inner(QQ)
    assert is_central_simple(A)
    sr = structure_realize(A)
    assert sr.witness.verified
    assert sr.L.space.total_dim * sr.L.space.total_dim == A.dim
