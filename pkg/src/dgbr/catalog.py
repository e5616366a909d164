"""Ready-made algebras, random desk-scale generators, and demo scenarios.

The scenario registry backs the command line's `catalog` subcommand; each
entry recomputes a full worked example from scratch and reports what it
checked, so a passing run is a live verification rather than a claim.
"""
from __future__ import annotations

import random

from .brauer import (
    forget_descriptor,
    idempotent_containment,
    is_central_simple,
    kunneth_check,
    sandwich_iso,
    structure_realize,
    verify_dg_iso,
    verify_equivalence,
)
from .dg import (
    DgAlgebra,
    KComplex,
    homology,
    is_tgr_semisimple,
    kernel_subalgebra,
    ksign,
    opposite,
    swap_map,
    tensor_product,
    trivial_dg,
    unsigned_swap_map,
)
from .errors import ShapeMismatch
from .fields import GF, QQ
from .graded import GradedVectorSpace, HomogeneousMap
from .homs import end_dg_algebra
from .linalg import Matrix
from .matrix_algebras import (
    enumerate_good_gradings,
    good_grading_matrix_algebra,
    inner_differential,
)


# -- named constructions --------------------------------------------------------


def neutral(field) -> DgAlgebra:
    """The base field as a one-dimensional dg-algebra in degree 0."""
    return good_grading_matrix_algebra(field, 1, ())


def dual_numbers(field) -> DgAlgebra:
    """Basis 1 and X with |X| = -1, X*X = 0, d(X) = 1; acyclic."""
    one = field.one
    space = GradedVectorSpace({-1: 1, 0: 1}, {-1: ("X",), 0: ("1",)})
    table = {(1, 1): {1: one}, (1, 0): {0: one}, (0, 1): {0: one}}
    return DgAlgebra.build(field, space, {1: one}, table, {0: {1: one}})


def mat2_inner(field=QQ) -> DgAlgebra:
    """2x2 matrices, superdiagonal degree 1, differential by z = e12."""
    A = good_grading_matrix_algebra(field, 2, (1,))
    return inner_differential(A, A.element({"e12": 1}))


def mat3_inner(field=QQ) -> DgAlgebra:
    """3x3 matrices, degrees (1,1), differential by the square-zero z = e12."""
    A = good_grading_matrix_algebra(field, 3, (1, 1))
    return inner_differential(A, A.element({"e12": 1}))


def split_pair(field) -> DgAlgebra:
    """K x K in degree 0: two orthogonal idempotents, center of dimension 2."""
    one = field.one
    return trivial_dg(field, ("p", "q"), {0: one, 1: one},
                      {(0, 0): {0: one}, (1, 1): {1: one}})


def generators(field):
    """Named small algebras used for pairwise property checks."""
    out = [
        ("neutral", neutral(field)),
        ("dual-numbers", dual_numbers(field)),
        ("mat2-graded", good_grading_matrix_algebra(field, 2, (1,))),
        ("mat2-inner", mat2_inner(field)),
        ("mat2-flat", good_grading_matrix_algebra(field, 2, (0,))),
        ("mat3-inner", mat3_inner(field)),
        ("split-pair", split_pair(field)),
    ]
    if field.characteristic() != 2:
        out.append(("quaternions", quaternion_algebra_cached(field)))
    return out


def quaternion_algebra_cached(field):
    from .brauer import quaternion_algebra

    return quaternion_algebra(field, field.neg(field.one), field.neg(field.one))


# -- randomized constructions ----------------------------------------------------


def random_complex(rng: random.Random, field, max_total: int = 3,
                   degree_window=(-2, 2)) -> KComplex:
    """A random bounded complex; d is sampled inside the kernel of the next d.

    Building columns of each differential block from the kernel of the block
    above keeps d squared exactly zero without rejection sampling.
    """
    total = rng.randint(1, max_total)
    lo, hi = degree_window
    degs = sorted(rng.randint(lo, hi) for _ in range(total))
    dims: dict = {}
    for d in degs:
        dims[d] = dims.get(d, 0) + 1
    labels = {k: tuple(f"v{k}_{t}" for t in range(m)) for k, m in dims.items()}
    space = GradedVectorSpace(dims, labels)

    blocks: dict = {}
    kernel_cols: dict = {}
    for k in sorted(dims, reverse=True):
        nk = dims[k]
        up = dims.get(k + 1, 0)
        if up == 0:
            kernel_cols[k] = [
                tuple(field.one if t == s else field.zero for t in range(nk))
                for s in range(nk)
            ]
            continue
        allowed = kernel_cols[k + 1]  # columns of V_{k+1} killed by d
        cols = []
        for _ in range(nk):
            acc = [field.zero] * up
            for kc in allowed:
                c = field.coerce(rng.randint(-1, 1))
                if field.is_zero(c):
                    continue
                acc = [field.add(x, field.mul(c, y)) for x, y in zip(acc, kc)]
            cols.append(tuple(acc))
        blk = Matrix.from_columns(field, cols, up)
        blocks[k] = blk
        kernel_cols[k] = blk.kernel_basis()
    dmap = HomogeneousMap(field, space, space, 1,
                          {k: b for k, b in blocks.items() if not b.is_zero()})
    return KComplex(field, space, dmap.flat_columns())


def random_square_zero_inner(rng: random.Random, field, n: int = None) -> DgAlgebra:
    """A good-graded matrix algebra with a random single-unit inner differential."""
    n = n or rng.choice([2, 3])
    f = tuple(rng.randint(-1, 1) for _ in range(n - 1))
    A = good_grading_matrix_algebra(field, n, f)
    deg1 = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j and A.degree_of(A.presentation.flat(i, j)) == 1
    ]
    if not deg1 or rng.random() < 0.25:
        return A
    i, j = rng.choice(deg1)
    # a single off-diagonal unit squares to zero, so d_z is always accepted
    return inner_differential(A, {A.presentation.flat(i, j): field.one})


def random_algebra(rng: random.Random, field) -> DgAlgebra:
    """One random desk-scale construction; used by the axiom-closure suite."""
    kind = rng.randrange(5)
    if kind == 0:
        return tensor_product(random_small(rng, field), random_small(rng, field))
    if kind == 1:
        return opposite(random_algebra(rng, field))
    if kind == 2:
        return end_dg_algebra(random_complex(rng, field))
    if kind == 3:
        return random_square_zero_inner(rng, field)
    return random_small(rng, field)


def random_small(rng: random.Random, field) -> DgAlgebra:
    pool = generators(field)
    return rng.choice(pool)[1]


# -- scenario registry for the command line ---------------------------------------


def _fmt_dims(dims: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(dims.items())) + "}"


def scenario_dual_numbers():
    A = dual_numbers(QQ)
    H = homology(A)
    ker = kernel_subalgebra(A)
    rep = is_tgr_semisimple(A)
    cs = is_central_simple(A)
    desc = forget_descriptor(A)
    ok = (
        H.space.is_zero()
        and dict(ker.algebra.space.dims) == {0: 1}
        and rep.verdict is True
        and cs is False
        and (desc.dimension, desc.center_dimension, desc.is_central_simple) == (2, 2, False)
    )
    lines = [
        f"homology dims: {_fmt_dims(dict(H.space.dims))} (expected empty)",
        f"kernel dims: {_fmt_dims(dict(ker.algebra.space.dims))}",
        f"acyclic with semisimple kernel: {rep.verdict}",
        f"central simple: {cs}",
        f"ungraded descriptor: dim {desc.dimension}, center {desc.center_dimension}, "
        f"central simple {desc.is_central_simple}",
    ]
    payload = {
        "homology_dims": dict(H.space.dims),
        "kernel_dims": dict(ker.algebra.space.dims),
        "tgr_semisimple": rep.verdict,
        "central_simple": cs,
        "descriptor": [desc.dimension, desc.center_dimension, desc.is_central_simple],
    }
    return ok, lines, payload


def scenario_dual_tensor_square():
    A = dual_numbers(GF(2))
    T = tensor_product(A, A)
    ker = kernel_subalgebra(T)
    from .dg import is_semisimple_ungraded

    krep = is_semisimple_ungraded(ker.algebra)
    repA = is_tgr_semisimple(A)
    repT = is_tgr_semisimple(T)
    ok = (
        dict(T.space.dims) == {0: 1, -1: 2, -2: 1}
        and dict(ker.algebra.space.dims) == {0: 1, -1: 1}
        and krep.verdict is False
        and repA.verdict is True
        and repT.verdict is False
    )
    lines = [
        f"tensor square dims: {_fmt_dims(dict(T.space.dims))}",
        f"kernel dims: {_fmt_dims(dict(ker.algebra.space.dims))}",
        f"kernel semisimple: {krep.verdict} ({krep.method})",
        f"factor semisimple: {repA.verdict}; tensor square semisimple: {repT.verdict}",
    ]
    payload = {
        "tensor_dims": dict(T.space.dims),
        "kernel_dims": dict(ker.algebra.space.dims),
        "kernel_semisimple": krep.verdict,
        "factor_tgr": repA.verdict,
        "square_tgr": repT.verdict,
    }
    return ok, lines, payload


def scenario_tensor_swap():
    A = dual_numbers(QQ)
    B = mat2_inner(QQ)
    T1 = tensor_product(A, B)
    T2 = tensor_product(B, A)
    good = verify_dg_iso(T1, T2, swap_map(A, B))
    bad = verify_dg_iso(T1, T2, unsigned_swap_map(A, B))
    ok = good.verified and not bad.checks.is_algebra_hom
    lines = [
        f"signed swap verified: {good.verified}",
        f"unsigned swap multiplicative: {bad.checks.is_algebra_hom} "
        f"(failing pairs: {list(bad.checks.failures[:2])})",
    ]
    payload = {
        "signed_verified": good.verified,
        "unsigned_multiplicative": bad.checks.is_algebra_hom,
    }
    return ok, lines, payload


def scenario_sandwich_mat2():
    A = mat2_inner(QQ)
    w = sandwich_iso(A)
    c = w.checks
    ok = w.verified and w.source.dim == 16
    lines = [
        f"source dim: {w.source.dim} (expected 16)",
        f"algebra hom: {c.is_algebra_hom}, unital: {c.is_unital}, "
        f"d-compatible: {c.commutes_with_d}, bijective: {c.is_bijective}",
    ]
    payload = {
        "dim": w.source.dim,
        "checks": [c.is_algebra_hom, c.is_unital, c.commutes_with_d, c.is_bijective],
    }
    return ok, lines, payload


def scenario_structure_mat2():
    A = mat2_inner(QQ)
    sr = structure_realize(A)
    cert2, _ = idempotent_containment(A, 2)
    ok = (
        dict(sr.L.space.dims) == {-1: 1, 0: 1}
        and sr.witness.verified
        and sr.idempotent.index == 1
        and cert2.contained
    )
    lines = [
        f"L dims: {_fmt_dims(dict(sr.L.space.dims))}",
        f"witness verified: {sr.witness.verified}",
        f"chosen idempotent: {sr.idempotent.index}; "
        f"index 2 contained: {cert2.contained} "
        f"(ideal dims {_fmt_dims(cert2.ideal_dims)} inside {_fmt_dims(cert2.span_dims)})",
    ]
    payload = {
        "L_dims": dict(sr.L.space.dims),
        "verified": sr.witness.verified,
        "idempotent": sr.idempotent.index,
        "index2_contained": cert2.contained,
    }
    return ok, lines, payload


def unit_equivalence_witness(A: DgAlgebra, sr) -> "IsoWitness":
    """A (x) End(point) -> K (x) End(L) assembled from a structure witness.

    Both unit identifications are index-faithful: tensoring with the
    one-dimensional factor keeps the flat order of the other side, so the
    realization map's columns transfer verbatim.
    """
    field = A.field
    K = neutral(field)
    C1 = KComplex.point(field)
    T1 = tensor_product(A, end_dg_algebra(C1))
    T2 = tensor_product(K, end_dg_algebra(sr.L))
    m = HomogeneousMap.from_flat_columns(
        field, T1.space, T2.space, 0, sr.witness.map.flat_columns()
    )
    return verify_equivalence(A, K, C1, sr.L, m)


def scenario_equivalence_unit():
    A = mat2_inner(QQ)
    sr = structure_realize(A)
    w = unit_equivalence_witness(A, sr)
    descs = []
    all_match = True
    Q = quaternion_algebra_cached(QQ)
    dq = forget_descriptor(Q)
    from .dg import regrade_trivial

    dq2 = forget_descriptor(regrade_trivial(Q))
    all_match &= dq == dq2
    descs.append(("quaternions", dq, dq2))
    for g in enumerate_good_gradings(3, 1):
        M = good_grading_matrix_algebra(QQ, 3, g.f)
        d1 = forget_descriptor(M)
        d2 = forget_descriptor(regrade_trivial(M))
        all_match &= d1 == d2 == forget_descriptor(good_grading_matrix_algebra(QQ, 3, (0, 0)))
    ok = w.verified and all_match
    lines = [
        f"tensor-unit equivalence verified: {w.verified}",
        "descriptors stable under regrading: " + str(all_match),
    ]
    payload = {"equivalence_verified": w.verified, "descriptors_stable": all_match}
    return ok, lines, payload


def scenario_kunneth():
    pairs = [
        (mat2_inner(QQ), dual_numbers(QQ)),
        (good_grading_matrix_algebra(QQ, 2, (1,)), good_grading_matrix_algebra(QQ, 2, (0,))),
        (dual_numbers(QQ), split_pair(QQ)),
    ]
    reports = [kunneth_check(a, b) for a, b in pairs]
    ok = all(r.matches for r in reports)
    lines = [
        f"pair {t}: homology dims {_fmt_dims(r.left)} == convolution {_fmt_dims(r.right)}: {r.matches}"
        for t, r in enumerate(reports)
    ]
    payload = {"matches": [r.matches for r in reports]}
    return ok, lines, payload


SCENARIOS = {
    "dual-numbers": scenario_dual_numbers,
    "dual-tensor-square-f2": scenario_dual_tensor_square,
    "tensor-swap": scenario_tensor_swap,
    "sandwich-mat2": scenario_sandwich_mat2,
    "structure-mat2": scenario_structure_mat2,
    "equivalence-unit": scenario_equivalence_unit,
    "kunneth": scenario_kunneth,
}


def run_scenario(name: str):
    if name not in SCENARIOS:
        raise ShapeMismatch(
            f"unknown catalog entry {name!r}; available: {', '.join(sorted(SCENARIOS))}"
        )
    return SCENARIOS[name]()
