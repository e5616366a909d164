"""Sandwich maps, central simplicity, the structure theorem, and equivalence.

Every isomorphism here is handled as an explicit witness: a degree-0 map that
the machine checks for multiplicativity, unitality, compatibility with the
differentials, and bijectivity.  Nothing is accepted on faith; failed checks
are recorded on the witness rather than silently dropped.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dg import (
    DgAlgebra,
    KComplex,
    _flat_to_dense,
    center,
    homology,
    ksign,
    opposite,
    tensor_product,
    trivial_dg,
)
from .errors import (
    AxiomViolation,
    ContainmentCertificate,
    NoSuitableIdempotent,
    NotCentralSimple,
    ShapeMismatch,
    ValidationError,
)
from .graded import GradedVector, HomogeneousMap, LinearMap, add_into
from .homs import end_dg_algebra
from .linalg import Matrix


@dataclass(frozen=True)
class IsoChecks:
    """The four machine-verified facts about a candidate isomorphism."""

    is_algebra_hom: bool
    is_unital: bool
    commutes_with_d: bool
    is_bijective: bool
    failures: tuple = ()

    @property
    def all_pass(self) -> bool:
        return (self.is_algebra_hom and self.is_unital
                and self.commutes_with_d and self.is_bijective)


@dataclass(frozen=True)
class IsoWitness:
    source: DgAlgebra
    target: DgAlgebra
    map: HomogeneousMap
    checks: IsoChecks

    @property
    def verified(self) -> bool:
        return self.checks.all_pass


def verify_dg_iso(A: DgAlgebra, B: DgAlgebra, m: HomogeneousMap) -> IsoWitness:
    """Check a degree-0 map on every basis pair; nothing is assumed.

    Failed checks are recorded on the returned witness (with up to eight
    failing basis pairs) instead of raising.
    """
    if A.field != B.field:
        raise ShapeMismatch("algebras over different fields")
    if m.source != A.space or m.target != B.space or m.degree != 0:
        raise ShapeMismatch("expected a degree-0 map between the two underlying spaces")
    f = A.field
    one = f.one
    cols = m.flat_columns()
    failures = []

    is_hom = True
    for i in range(A.dim):
        ci = cols.get(i, {})
        for j in range(A.dim):
            lhs = m.apply_flat(A.mul({i: one}, {j: one}))
            rhs = B.mul(ci, cols.get(j, {}))
            if lhs != rhs:
                is_hom = False
                if len(failures) < 8:
                    failures.append(("product", A.label_of(i), A.label_of(j)))

    is_unital = m.apply_flat(A.unit) == B.unit
    if not is_unital and len(failures) < 8:
        failures.append(("unit",))

    commutes = True
    for i in range(A.dim):
        if m.apply_flat(A.d_apply({i: one})) != B.d_apply(cols.get(i, {})):
            commutes = False
            if len(failures) < 8:
                failures.append(("differential", A.label_of(i)))

    bijective = m.inverse() is not None
    if not bijective and len(failures) < 8:
        failures.append(("bijectivity",))

    return IsoWitness(A, B, m, IsoChecks(is_hom, is_unital, commutes, bijective,
                                         tuple(failures)))


# -- left and right multiplication operators ----------------------------------


def _flat_of(A: DgAlgebra, a) -> dict:
    if isinstance(a, GradedVector):
        if a.space != A.space:
            raise ShapeMismatch("element lives in a different space")
        return a.flat()
    f = A.field
    out = {int(i): f.coerce(c) for i, c in dict(a).items()}
    return {i: c for i, c in out.items() if not f.is_zero(c)}


def lambda_map(A: DgAlgebra, a) -> LinearMap:
    """Left multiplication x -> a*x on the underlying complex of A."""
    aflat = _flat_of(A, a)
    f = A.field
    one = f.one
    cols = {}
    for x in range(A.dim):
        col = A.mul(aflat, {x: one})
        if col:
            cols[x] = col
    return LinearMap(f, A.space, A.space, cols)


def rho_map(A: DgAlgebra, a) -> LinearMap:
    """Signed right multiplication x -> (-1)^{|a||x|} x*a.

    This is left multiplication by a inside the opposite algebra, so
    a -> rho_a is multiplicative for the opposite product.
    """
    aflat = _flat_of(A, a)
    f = A.field
    one = f.one
    deg = A.space.flat_degrees()
    cols = {}
    for x in range(A.dim):
        acc: dict = {}
        for ai, c in aflat.items():
            term = A.mul({x: one}, {ai: c})
            if ksign(deg[ai], deg[x]) < 0:
                term = {t: f.neg(v) for t, v in term.items()}
            add_into(f, acc, term)
        if acc:
            cols[x] = acc
    return LinearMap(f, A.space, A.space, cols)


# -- central simplicity --------------------------------------------------------


def is_central_simple(A: DgAlgebra) -> bool:
    """Center of dimension 1 and bijective two-sided multiplication map.

    The second condition checks that (i, j) -> (x -> e_i x e_j) spans all of
    End(A) ungraded, i.e. the classical sandwich map A (x) A-ungraded-op ->
    End(A) is onto a space of matching dimension.  No signs are involved.
    """
    n = A.dim
    if n == 0:
        return False
    if center(A).space.total_dim != 1:
        return False
    f = A.field
    one = f.one
    cols = []
    right = {}
    for x in range(n):
        for j in range(n):
            right[(x, j)] = A.table.get((x, j), {})
    for i in range(n):
        for j in range(n):
            col = [f.zero] * (n * n)
            for x in range(n):
                out = A.mul({i: one}, right[(x, j)])
                for t, c in out.items():
                    col[x * n + t] = c
            cols.append(tuple(col))
    return Matrix.from_columns(f, cols, n * n).rank() == n * n


@dataclass(frozen=True)
class UngradedDescriptor:
    """What remains of a dg-algebra after dropping grading and differential."""

    dimension: int
    center_dimension: int
    is_central_simple: bool


def forget_descriptor(A: DgAlgebra) -> UngradedDescriptor:
    return UngradedDescriptor(A.dim, center(A).space.total_dim, is_central_simple(A))


# -- the sandwich isomorphism --------------------------------------------------


def sandwich_map(A: DgAlgebra, T: DgAlgebra, E: DgAlgebra) -> HomogeneousMap:
    """a (x) b -> lambda_a o rho_b, in the unit coordinates of E = End(A)."""
    from .graded import tensor_of_spaces

    f = A.field
    one = f.one
    # slot t of T corresponds to pairs[t]; the pair order is deterministic
    pairs = tensor_of_spaces(A.space, A.space).pairs
    lam = [lambda_map(A, {i: one}) for i in range(A.dim)]
    rho = [rho_map(A, {j: one}) for j in range(A.dim)]
    cols = {}
    for t, (i, j) in enumerate(pairs):
        coeffs = E.hom.from_map(lam[i].compose(rho[j]))
        if coeffs:
            cols[t] = coeffs
    return HomogeneousMap.from_flat_columns(f, T.space, E.space, 0, cols)


def sandwich_iso(A: DgAlgebra) -> IsoWitness:
    """Verified isomorphism A (x) A-op -> End(A as complex).

    Requires A central simple; without that the map can fail injectivity.
    """
    if not is_central_simple(A):
        raise NotCentralSimple(
            f"sandwich construction needs a central simple algebra; dim {A.dim}, "
            f"center dim {center(A).space.total_dim}"
        )
    T = tensor_product(A, opposite(A))
    E = end_dg_algebra(A.complex())
    w = verify_dg_iso(T, E, sandwich_map(A, T, E))
    return w


# -- structure theorem ---------------------------------------------------------


@dataclass(frozen=True)
class IdempotentChoice:
    """The chosen diagonal idempotent index plus rejection certificates."""

    index: int
    witness: GradedVector
    rejected: tuple


def _ideal_columns(A: DgAlgebra, gens) -> dict:
    """Per-degree dense columns spanning sum of A*g over the given elements."""
    f = A.field
    one = f.one
    by_deg: dict[int, list] = {}
    for g in gens:
        for k in range(A.dim):
            p = A.mul({k: one}, g)
            if not p:
                continue
            d = A.space.degree_of(next(iter(p)))
            by_deg.setdefault(d, []).append(_flat_to_dense(A.space, d, p, f))
    return by_deg


def _pivot_subspace(A: DgAlgebra, by_deg: dict, prefix: str):
    """Reduce spanning columns to an independent basis, as a graded subspace."""
    from .graded import GradedVectorSpace, Subspace

    f = A.field
    dims = {}
    blocks = {}
    labels = {}
    for d, cols in sorted(by_deg.items()):
        mat = Matrix.from_columns(f, cols, A.space.dim(d))
        pivots = mat.column_space_pivots()
        if not pivots:
            continue
        dims[d] = len(pivots)
        blocks[d] = Matrix.from_columns(f, [mat.column(p) for p in pivots], A.space.dim(d))
        labels[d] = tuple(f"{prefix}{d}_{t}" for t in range(len(pivots)))
    space = GradedVectorSpace(dims, labels)
    return Subspace(space, HomogeneousMap(f, space, A.space, 0, blocks))


def _diagonal_candidates(A: DgAlgebra):
    """Diagonal idempotents to try, in index order.

    With a matrix-unit presentation these are the e_{i,i}; otherwise every
    degree-0 basis element squaring to itself, in flat order.  On an algebra
    built by the matrix constructor the two lists coincide.
    """
    pres = A.presentation
    f = A.field
    if pres is not None:
        return [{pres.flat(i, i): f.one} for i in range(1, pres.n + 1)]
    out = []
    for i in range(A.dim):
        if A.degree_of(i) != 0:
            continue
        if A.mul({i: f.one}, {i: f.one}) == {i: f.one}:
            out.append({i: f.one})
    if not out:
        raise ShapeMismatch("no diagonal idempotents among the degree-0 basis")
    return out


def idempotent_containment(A: DgAlgebra, i: int):
    """Decide whether A*e_{i,i} sits inside A*d(e_{i,i}), by exact ranks.

    Returns (certificate, witness): the certificate holds per-degree span
    dimensions of both left ideals, and the witness is an element of the
    difference when containment fails (None otherwise).
    """
    cands = _diagonal_candidates(A)
    if not (1 <= i <= len(cands)):
        raise ShapeMismatch(f"diagonal index {i} out of range for {len(cands)} idempotents")
    f = A.field
    e = cands[i - 1]
    de = A.d_apply(e)
    ae = _ideal_columns(A, [e])
    ade = _ideal_columns(A, [de]) if de else {}
    contained = True
    witness_vec = None
    for d, cols in sorted(ae.items()):
        base = ade.get(d, [])
        r0 = Matrix.from_columns(f, base, A.space.dim(d)).rank()
        for col in cols:
            if Matrix.from_columns(f, base + [col], A.space.dim(d)).rank() > r0:
                contained = False
                witness_vec = (d, col)
                break
        if not contained:
            break
    ideal_dims = {d: Matrix.from_columns(f, c, A.space.dim(d)).rank()
                  for d, c in ae.items()}
    span_dims = {d: Matrix.from_columns(f, c, A.space.dim(d)).rank()
                 for d, c in ade.items()}
    cert = ContainmentCertificate(i, ideal_dims, span_dims, contained)
    witness = None
    if witness_vec is not None:
        d, col = witness_vec
        witness = GradedVector.from_flat(
            f, A.space,
            {A.space.flat_index(d, r): c for r, c in enumerate(col) if not f.is_zero(c)},
        )
    return cert, witness


def choose_structure_idempotent(A: DgAlgebra) -> IdempotentChoice:
    """Least diagonal idempotent e with A*e not inside A*d(e), certified.

    Each rejected index keeps its containment certificate; total failure
    raises with all of them.
    """
    rejected = []
    for i in range(1, len(_diagonal_candidates(A)) + 1):
        cert, witness = idempotent_containment(A, i)
        if cert.contained:
            rejected.append(cert)
        else:
            return IdempotentChoice(i, witness, tuple(rejected))
    raise NoSuitableIdempotent(rejected)


@dataclass(frozen=True)
class StructureRealization:
    L: KComplex
    witness: IsoWitness
    idempotent: IdempotentChoice


def _coords_in(sub_space, incl: HomogeneousMap, ambient, flat_vec, f):
    """Express an ambient flat vector in subspace coordinates; None if outside."""
    out: dict = {}
    by_deg: dict[int, dict] = {}
    for m, c in flat_vec.items():
        by_deg.setdefault(ambient.degree_of(m), {})[m] = c
    for d, part in by_deg.items():
        if sub_space.dim(d) == 0:
            return None
        sol = incl.block(d).solve(_flat_to_dense(ambient, d, part, f))
        if sol is None:
            return None
        base = sub_space.flat_index(d, 0)
        for t, c in enumerate(sol):
            if not f.is_zero(c):
                out[base + t] = c
    return out


def structure_realize(A: DgAlgebra) -> StructureRealization:
    """Split a central simple dg matrix algebra as endomorphisms of a complex.

    With e the chosen idempotent, M = A*e + A*d(e) and N = A*d(e) are
    d-stable left ideals and L = M/N inherits a differential; left
    multiplication on coset representatives gives the verified isomorphism
    onto End(L) under composition.  The same underlying map, read between the
    opposite algebras, is an isomorphism of those as well.
    """
    f = A.field
    one = f.one
    if not is_central_simple(A):
        raise NotCentralSimple("structure theorem applies to central simple algebras")
    choice = choose_structure_idempotent(A)
    e = _diagonal_candidates(A)[choice.index - 1]
    de = A.d_apply(e)

    M = _pivot_subspace(A, _ideal_columns(A, [e, de] if de else [e]), "m")
    N = _pivot_subspace(A, _ideal_columns(A, [de]) if de else {}, "n")

    # d restricted to M, in M coordinates; also certify d(N) <= N
    m_cols = M.inclusion.flat_columns()
    dM: dict = {}
    for s in range(M.space.total_dim):
        img = A.d_apply(m_cols.get(s, {}))
        if not img:
            continue
        coords = _coords_in(M.space, M.inclusion, A.space, img, f)
        if coords is None:
            raise ValidationError([AxiomViolation(
                "structure", (s,), "differential does not preserve M")])
        dM[s] = coords
    n_cols = N.inclusion.flat_columns()
    for s in range(N.space.total_dim):
        img = A.d_apply(n_cols.get(s, {}))
        if img and _coords_in(N.space, N.inclusion, A.space, img, f) is None:
            raise ValidationError([AxiomViolation(
                "structure", (s,), "differential does not preserve N")])

    # N in M coordinates, then the quotient L = M/N
    from .graded import quotient_by

    n_in_m_cols = {}
    for s in range(N.space.total_dim):
        coords = _coords_in(M.space, M.inclusion, A.space, n_cols.get(s, {}), f)
        if coords is None:
            raise ValidationError([AxiomViolation("structure", (s,), "N is not inside M")])
        n_in_m_cols[s] = coords
    n_in_m = HomogeneousMap.from_flat_columns(f, N.space, M.space, 0, n_in_m_cols)
    Q = quotient_by(M.space, n_in_m)

    dM_map = HomogeneousMap.from_flat_columns(f, M.space, M.space, 1, dM)
    dL_cols = {}
    for s in range(Q.space.total_dim):
        img = Q.projection.apply_flat(dM_map.apply_flat(Q.section.apply_flat({s: one})))
        if img:
            dL_cols[s] = img
    L = KComplex(f, Q.space, dL_cols)
    if L.space.is_zero():
        raise ValidationError([AxiomViolation("structure", (), "L collapsed to zero")])
    E = end_dg_algebra(L)

    cols = {}
    for a in range(A.dim):
        lcols = {}
        for s in range(Q.space.total_dim):
            v = M.inclusion.apply_flat(Q.section.apply_flat({s: one}))
            p = A.mul({a: one}, v)
            if not p:
                continue
            coords = _coords_in(M.space, M.inclusion, A.space, p, f)
            if coords is None:
                raise ValidationError([AxiomViolation(
                    "structure", (a, s), "left multiplication leaves M")])
            img = Q.projection.apply_flat(coords)
            if img:
                lcols[s] = img
        coeffs = E.hom.from_map(LinearMap(f, Q.space, Q.space, lcols))
        if coeffs:
            cols[a] = coeffs
    m = HomogeneousMap.from_flat_columns(f, A.space, E.space, 0, cols)
    w = verify_dg_iso(A, E, m)
    if not w.verified:
        raise ValidationError([AxiomViolation(
            "structure", (), f"realization map failed checks: {w.checks}")])
    return StructureRealization(L, w, choice)


# -- equivalence witnesses -----------------------------------------------------


def verify_equivalence(A: DgAlgebra, B: DgAlgebra, C1: KComplex, C2: KComplex,
                       m: HomogeneousMap) -> IsoWitness:
    """Verify A (x) End(C1) -> B (x) End(C2) as dg-algebras via the given map."""
    if not (A.field == B.field == C1.field == C2.field):
        raise ShapeMismatch("equivalence data over different fields")
    lhs = tensor_product(A, end_dg_algebra(C1))
    rhs = tensor_product(B, end_dg_algebra(C2))
    if lhs.dim != rhs.dim:
        raise ShapeMismatch(
            f"sides have different dimensions: {lhs.dim} vs {rhs.dim}")
    return verify_dg_iso(lhs, rhs, m)


@dataclass(frozen=True)
class KunnethReport:
    left: dict
    right: dict
    matches: bool


def kunneth_check(A: DgAlgebra, B: DgAlgebra) -> KunnethReport:
    """Compare homology dims of a tensor product with the graded convolution."""
    HA = dict(homology(A).space.dims)
    HB = dict(homology(B).space.dims)
    left = dict(homology(tensor_product(A, B)).space.dims)
    right: dict = {}
    for k, a in HA.items():
        for l, b in HB.items():
            right[k + l] = right.get(k + l, 0) + a * b
    right = {k: v for k, v in right.items() if v}
    return KunnethReport(left, right, left == right)


# -- concrete ungraded classes -------------------------------------------------


def quaternion_algebra(field, a, b) -> DgAlgebra:
    """Basis 1, i, j, k with i*i = a, j*j = b, i*j = k = -j*i; degree 0, d = 0."""
    if field.characteristic() == 2:
        raise ShapeMismatch("quaternion construction needs characteristic not 2")
    a = field.coerce(a)
    b = field.coerce(b)
    if field.is_zero(a) or field.is_zero(b):
        raise ShapeMismatch("parameters must be nonzero")
    one = field.one
    neg = field.neg
    mul = field.mul
    ab = mul(a, b)
    table = {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {3: one},
        (1, 0): {1: one}, (2, 0): {2: one}, (3, 0): {3: one},
        (1, 1): {0: a}, (1, 2): {3: one}, (1, 3): {2: a},
        (2, 1): {3: neg(one)}, (2, 2): {0: b}, (2, 3): {1: neg(b)},
        (3, 1): {2: neg(a)}, (3, 2): {1: b}, (3, 3): {0: neg(ab)},
    }
    return trivial_dg(field, ("1", "i", "j", "k"), {0: one}, table)
