"""Finite-dimensional differential graded algebras with exhaustive validation.

An algebra is stored as structure constants over the flat basis order of its
graded space: ``table[(i, j)]`` is the sparse product of basis elements i and
j, ``dcols[i]`` the sparse differential column.  Absent entries are zero.
Every constructor re-checks the axioms (degree additivity, unit laws,
associativity, d of degree +1, d squared zero, graded Leibniz); nothing is
trusted by construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import AxiomViolation, ShapeMismatch, ValidationError
from .fields import Field
from .graded import (
    GradedVector,
    GradedVectorSpace,
    HomogeneousMap,
    LinearMap,
    Subspace,
    add_into,
    clean_coeffs,
    kernel_of,
    tensor_of_spaces,
)
from .linalg import Matrix


def ksign(m: int, n: int) -> int:
    """The Koszul sign (-1)**(m*n) as an int, safe for negative degrees."""
    return -1 if (m * n) % 2 else 1


def scale_coeffs(field: Field, coeffs: dict, c) -> dict:
    if field.is_zero(c):
        return {}
    return {i: field.mul(c, x) for i, x in coeffs.items()}


def negate_coeffs(field: Field, coeffs: dict) -> dict:
    return {i: field.neg(x) for i, x in coeffs.items()}


@dataclass(frozen=True)
class MatrixPresentation:
    """Records that an algebra's basis is a family of matrix units.

    ``unit_index[(i, j)]`` is the flat basis slot of the unit sending column j
    to column i, with 1-based matrix indices.
    """

    n: int
    unit_index: dict

    def flat(self, i: int, j: int) -> int:
        return self.unit_index[(i, j)]


class DgAlgebra:
    """A validated dg-algebra over an exact field."""

    def __init__(self, field, space, unit, table, dcols, *, presentation=None, hom=None,
                 _validated=False):
        if not _validated:
            raise ShapeMismatch("use DgAlgebra.build so the axioms get checked")
        self.field = field
        self.space = space
        self.unit = unit
        self.table = table
        self.dcols = dcols
        self.presentation = presentation
        self.hom = hom
        self._dmap = None

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, field, space, unit, table, diff, *, presentation=None, hom=None):
        """Validate structure data and wrap it; raises ValidationError when bad."""
        n = space.total_dim
        unit = clean_coeffs(field, unit)
        tbl = {}
        for (i, j), out in table.items():
            i, j = int(i), int(j)
            if not (0 <= i < n and 0 <= j < n):
                raise ShapeMismatch(f"product entry ({i},{j}) outside the basis")
            out = clean_coeffs(field, out)
            if out:
                tbl[(i, j)] = out
        dc = {}
        for i, out in diff.items():
            i = int(i)
            if not (0 <= i < n):
                raise ShapeMismatch(f"differential entry {i} outside the basis")
            out = clean_coeffs(field, out)
            if out:
                dc[i] = out
        for vec, what in [(unit, "unit")]:
            for i in vec:
                if not (0 <= i < n):
                    raise ShapeMismatch(f"{what} index {i} outside the basis")
        violations = validate_structure(field, space, unit, tbl, dc)
        if violations:
            raise ValidationError(violations)
        return cls(field, space, unit, tbl, dc, presentation=presentation, hom=hom,
                   _validated=True)

    @classmethod
    def zero_algebra(cls, field):
        return cls(field, GradedVectorSpace.zero(), {}, {}, {}, _validated=True)

    # -- basic queries -----------------------------------------------------

    @property
    def dim(self) -> int:
        return self.space.total_dim

    def degree_of(self, i: int) -> int:
        return self.space.degree_of(i)

    def label_of(self, i: int) -> str:
        return self.space.label_of(i)

    def basis_coeffs(self, i: int) -> dict:
        return {i: self.field.one}

    def element(self, terms) -> dict:
        """Sparse element from {label: coefficient}; labels must be unique."""
        labels = {self.label_of(i): i for i in range(self.dim)}
        out = {}
        for lbl, c in terms.items():
            if lbl not in labels:
                raise ShapeMismatch(f"no basis label {lbl!r}")
            out[labels[lbl]] = self.field.coerce(c)
        return clean_coeffs(self.field, out)

    def vector(self, coeffs) -> GradedVector:
        return GradedVector.from_flat(self.field, self.space, coeffs)

    # -- arithmetic on sparse elements --------------------------------------

    def mul(self, u: dict, v: dict) -> dict:
        f = self.field
        table = self.table
        acc: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                out = table.get((i, j))
                if out:
                    add_into(f, acc, out, scale=f.mul(a, b))
        return acc

    def d_apply(self, u: dict) -> dict:
        f = self.field
        acc: dict = {}
        for i, c in u.items():
            col = self.dcols.get(i)
            if col:
                add_into(f, acc, col, scale=c)
        return acc

    def differential_map(self) -> HomogeneousMap:
        if self._dmap is None:
            self._dmap = HomogeneousMap.from_flat_columns(
                self.field, self.space, self.space, 1, self.dcols
            )
        return self._dmap

    def complex(self) -> "KComplex":
        return KComplex(self.field, self.space, self.dcols)

    def validate(self):
        return validate_structure(self.field, self.space, self.unit, self.table, self.dcols)

    def __eq__(self, other):
        return (
            isinstance(other, DgAlgebra)
            and self.field == other.field
            and self.space == other.space
            and self.unit == other.unit
            and self.table == other.table
            and self.dcols == other.dcols
        )

    def __repr__(self):
        return f"DgAlgebra(dim={self.dim}, degrees={dict(self.space.dims)})"


def validate_structure(field, space, unit, table, dcols):
    """Exhaustive axiom check; returns every violation found."""
    v: list[AxiomViolation] = []
    n = space.total_dim
    deg = space.flat_degrees()
    fmt = field.format

    def show(vec):
        return " + ".join(f"{fmt(c)}*{space.label_of(i)}" for i, c in sorted(vec.items())) or "0"

    # degree additivity of the product
    for (i, j), out in sorted(table.items()):
        want = deg[i] + deg[j]
        for k in out:
            if deg[k] != want:
                v.append(AxiomViolation(
                    "degree-additivity", (i, j),
                    f"product hits degree {deg[k]}, expected {want}",
                ))
                break

    # unit: homogeneous of degree 0, two-sided neutral
    if n == 0:
        if unit:
            v.append(AxiomViolation("unit-degree", (), "nonzero unit in the zero algebra"))
    else:
        if not unit:
            v.append(AxiomViolation("unit-law", (), "unit is zero"))
        for i in unit:
            if deg[i] != 0:
                v.append(AxiomViolation("unit-degree", (i,), f"unit has a degree-{deg[i]} component"))
                break

    def mulvec(u, w):
        acc: dict = {}
        for i, a in u.items():
            for j, b in w.items():
                out = table.get((i, j))
                if out:
                    add_into(field, acc, out, scale=field.mul(a, b))
        return acc

    one = field.one
    if unit:
        for i in range(n):
            e = {i: one}
            if mulvec(unit, e) != e:
                v.append(AxiomViolation("unit-law", (i,), "1*e differs from e"))
            if mulvec(e, unit) != e:
                v.append(AxiomViolation("unit-law", (i,), "e*1 differs from e"))

    # associativity on every basis triple
    for i in range(n):
        for j in range(n):
            tij = table.get((i, j))
            for k in range(n):
                tjk = table.get((j, k))
                if tij is None and tjk is None:
                    continue
                left: dict = {}
                if tij:
                    for m, c in tij.items():
                        out = table.get((m, k))
                        if out:
                            add_into(field, left, out, scale=c)
                right: dict = {}
                if tjk:
                    for m, c in tjk.items():
                        out = table.get((i, m))
                        if out:
                            add_into(field, right, out, scale=c)
                if left != right:
                    v.append(AxiomViolation(
                        "associativity", (i, j, k),
                        f"(e{i}*e{j})*e{k} = {show(left)} but e{i}*(e{j}*e{k}) = {show(right)}",
                    ))

    # differential: degree +1, squares to zero
    for i, out in sorted(dcols.items()):
        for k in out:
            if deg[k] != deg[i] + 1:
                v.append(AxiomViolation(
                    "d-degree", (i,),
                    f"d hits degree {deg[k]} from degree {deg[i]}",
                ))
                break
    for i in range(n):
        col = dcols.get(i)
        if not col:
            continue
        acc: dict = {}
        for m, c in col.items():
            out = dcols.get(m)
            if out:
                add_into(field, acc, out, scale=c)
        if acc:
            v.append(AxiomViolation("d-squared", (i,), f"d(d(e{i})) = {show(acc)}"))

    # graded Leibniz rule on every basis pair
    def dvec(u):
        acc: dict = {}
        for m, c in u.items():
            out = dcols.get(m)
            if out:
                add_into(field, acc, out, scale=c)
        return acc

    for i in range(n):
        di = dcols.get(i, {})
        sign = ksign(deg[i], 1)
        for j in range(n):
            lhs = dvec(table.get((i, j), {}))
            rhs = mulvec(di, {j: one}) if di else {}
            dj = dcols.get(j)
            if dj:
                second = mulvec({i: one}, dj)
                if sign < 0:
                    second = negate_coeffs(field, second)
                add_into(field, rhs, second)
            if lhs != rhs:
                v.append(AxiomViolation(
                    "leibniz", (i, j),
                    f"d(e{i}*e{j}) = {show(lhs)} but the rule gives {show(rhs)}",
                ))

    # d(1) = 0: implied by Leibniz, still checked to catch corrupt input
    if unit:
        du = dvec(unit)
        if du:
            v.append(AxiomViolation("d-unit", (), f"d(1) = {show(du)}"))

    return v


# -- derived constructions --------------------------------------------------


def opposite(A: DgAlgebra) -> DgAlgebra:
    """Same space and differential, product reversed with the Koszul sign."""
    deg = A.space.flat_degrees()
    table = {}
    for (i, j), out in A.table.items():
        if ksign(deg[i], deg[j]) < 0:
            out = negate_coeffs(A.field, out)
        table[(j, i)] = out
    return DgAlgebra.build(A.field, A.space, A.unit, table, A.dcols)


def tensor_product(A: DgAlgebra, B: DgAlgebra) -> DgAlgebra:
    """Graded tensor product with the sign rule on interchanged factors."""
    if A.field != B.field:
        raise ShapeMismatch("tensor factors over different fields")
    f = A.field
    tb = tensor_of_spaces(A.space, B.space)
    idx = tb.index
    degA = A.space.flat_degrees()
    degB = B.space.flat_degrees()

    unit: dict = {}
    for i, a in A.unit.items():
        for j, b in B.unit.items():
            unit[idx[(i, j)]] = f.mul(a, b)

    table: dict = {}
    for (i1, i2), outA in A.table.items():
        for (j1, j2), outB in B.table.items():
            sgn = ksign(degB[j1], degA[i2])
            out: dict = {}
            for k, a in outA.items():
                for l, b in outB.items():
                    c = f.mul(a, b)
                    out[idx[(k, l)]] = f.neg(c) if sgn < 0 else c
            if out:
                table[(idx[(i1, j1)], idx[(i2, j2)])] = out

    dcols: dict = {}
    for t, (i, j) in enumerate(tb.pairs):
        col: dict = {}
        for k, c in A.dcols.get(i, {}).items():
            add_into(f, col, {idx[(k, j)]: c})
        dj = B.dcols.get(j)
        if dj:
            sgn = ksign(degA[i], 1)
            for l, c in dj.items():
                add_into(f, col, {idx[(i, l)]: f.neg(c) if sgn < 0 else c})
        if col:
            dcols[t] = col

    return DgAlgebra.build(f, tb.space, unit, table, dcols)


def swap_map(A: DgAlgebra, B: DgAlgebra) -> HomogeneousMap:
    """The signed flip a@b -> (-1)^{|a||b|} b@a between the two tensor spaces."""
    f = A.field
    tab = tensor_of_spaces(A.space, B.space)
    tba = tensor_of_spaces(B.space, A.space)
    degA = A.space.flat_degrees()
    degB = B.space.flat_degrees()
    cols = {}
    for t, (i, j) in enumerate(tab.pairs):
        c = f.one if ksign(degA[i], degB[j]) > 0 else f.neg(f.one)
        cols[t] = {tba.index[(j, i)]: c}
    return HomogeneousMap.from_flat_columns(f, tab.space, tba.space, 0, cols)


def unsigned_swap_map(A: DgAlgebra, B: DgAlgebra) -> HomogeneousMap:
    """The naive flip with no signs; fails multiplicativity in odd degrees."""
    f = A.field
    tab = tensor_of_spaces(A.space, B.space)
    tba = tensor_of_spaces(B.space, A.space)
    cols = {t: {tba.index[(j, i)]: f.one} for t, (i, j) in enumerate(tab.pairs)}
    return HomogeneousMap.from_flat_columns(f, tab.space, tba.space, 0, cols)


def swap_iso(A: DgAlgebra, B: DgAlgebra):
    """Verified isomorphism A (x) B -> B (x) A; returns the full witness."""
    from .brauer import verify_dg_iso  # local import, brauer sits above this module

    return verify_dg_iso(tensor_product(A, B), tensor_product(B, A), swap_map(A, B))


# -- homology and kernel ------------------------------------------------------


def _cycle_and_boundary_columns(A: DgAlgebra):
    """Per degree: kernel columns of d and pivot columns of the image of d."""
    d = A.differential_map()
    cycles: dict[int, list] = {}
    bounds: dict[int, list] = {}
    for k in A.space.degrees():
        blk = d.block(k)
        cycles[k] = blk.kernel_basis()
        pivots = blk.column_space_pivots()
        if pivots:
            bounds.setdefault(k + 1, []).extend(blk.column(j) for j in pivots)
    return cycles, bounds


def kernel_subalgebra(A: DgAlgebra) -> "KernelAlgebra":
    """ker(d) with its inherited product; closed by the Leibniz rule."""
    f = A.field
    cycles, _ = _cycle_and_boundary_columns(A)
    dims = {k: len(cols) for k, cols in cycles.items() if cols}
    labels = {k: tuple(f"z{k}_{i}" for i in range(m)) for k, m in dims.items()}
    space = GradedVectorSpace(dims, labels)
    blocks = {
        k: Matrix.from_columns(f, cycles[k], A.space.dim(k)) for k in dims
    }
    incl = HomogeneousMap(f, space, A.space, 0, blocks)

    cols_flat = incl.flat_columns()
    table: dict = {}
    nz = space.total_dim
    for i in range(nz):
        for j in range(nz):
            p = A.mul(cols_flat.get(i, {}), cols_flat.get(j, {}))
            if not p:
                continue
            deg = space.degree_of(i) + space.degree_of(j)
            blk = blocks.get(deg)
            if blk is None:
                raise ValidationError([AxiomViolation(
                    "kernel-closure", (i, j), "product of cycles leaves the kernel")])
            dense = [f.zero] * A.space.dim(deg)
            base = A.space.flat_index(deg, 0)
            for m, c in p.items():
                dense[m - base] = c
            sol = blk.solve(dense)
            if sol is None:
                raise ValidationError([AxiomViolation(
                    "kernel-closure", (i, j), "product of cycles leaves the kernel")])
            base_z = space.flat_index(deg, 0)
            out = {base_z + t: c for t, c in enumerate(sol) if not f.is_zero(c)}
            if out:
                table[(i, j)] = out

    unit: dict = {}
    if A.unit:
        blk = blocks.get(0)
        if blk is None:
            raise ValidationError([AxiomViolation("kernel-closure", (), "unit is not a cycle")])
        dense = [f.zero] * A.space.dim(0)
        base = A.space.flat_index(0, 0)
        for m, c in A.unit.items():
            dense[m - base] = c
        sol = blk.solve(dense)
        if sol is None:
            raise ValidationError([AxiomViolation("kernel-closure", (), "unit is not a cycle")])
        base_z = space.flat_index(0, 0)
        unit = {base_z + t: c for t, c in enumerate(sol) if not f.is_zero(c)}

    alg = DgAlgebra.build(f, space, unit, table, {})
    return KernelAlgebra(alg, incl)


@dataclass(frozen=True)
class KernelAlgebra:
    algebra: DgAlgebra
    inclusion: HomogeneousMap


def homology(A: DgAlgebra) -> DgAlgebra:
    """H(A) with its induced product, as a dg-algebra with zero differential.

    Well-definedness of the product (boundaries times cycles stay boundaries)
    is checked rather than assumed.
    """
    f = A.field
    cycles, bounds = _cycle_and_boundary_columns(A)

    reps: dict[int, list] = {}
    solver: dict[int, tuple] = {}  # degree -> (matrix [B|R], number of boundary cols)
    bmats: dict[int, Matrix] = {}
    for k in sorted(set(cycles) | set(bounds)):
        zc = cycles.get(k, [])
        bc = bounds.get(k, [])
        nk = A.space.dim(k)
        if not zc and not bc:
            continue
        if bc:
            bmats[k] = Matrix.from_columns(f, bc, nk)
        aug = Matrix.from_columns(f, bc + zc, nk)
        pivots = aug.column_space_pivots()
        if len([p for p in pivots if p < len(bc)]) != len(bc):
            raise ValidationError([AxiomViolation(
                "homology", (k,), "boundary columns are dependent")])
        chosen = [aug.column(p) for p in pivots if p >= len(bc)]
        if chosen:
            reps[k] = chosen
        solver[k] = (Matrix.from_columns(f, bc + chosen, nk), len(bc))

    # boundaries form an ideal inside the cycles: check it on basis columns
    for kb, bm in bmats.items():
        for kz, zc in cycles.items():
            tdeg = kb + kz
            tb = bmats.get(tdeg)
            for bcol in bm.columns():
                bvec = _dense_to_flat(A.space, kb, bcol, f)
                for zcol in zc:
                    zvec = _dense_to_flat(A.space, kz, zcol, f)
                    for prod in (A.mul(bvec, zvec), A.mul(zvec, bvec)):
                        if not prod:
                            continue
                        if tb is None or tb.solve(_flat_to_dense(A.space, tdeg, prod, f)) is None:
                            raise ValidationError([AxiomViolation(
                                "homology", (kb, kz),
                                "boundary times cycle is not a boundary")])

    dims = {k: len(v) for k, v in reps.items()}
    labels = {k: tuple(f"h{k}_{i}" for i in range(m)) for k, m in dims.items()}
    space = GradedVectorSpace(dims, labels)
    if space.is_zero():
        return DgAlgebra.zero_algebra(f)

    rep_flat: list[dict] = []
    for k in space.degrees():
        for col in reps[k]:
            rep_flat.append(_dense_to_flat(A.space, k, col, f))

    def project(degree, vec):
        """Coordinates of a cycle in the chosen representatives, mod boundaries."""
        if degree not in solver:
            raise ValidationError([AxiomViolation(
                "homology", (degree,), "product of cycles is not a cycle")])
        mat, nb = solver[degree]
        sol = mat.solve(_flat_to_dense(A.space, degree, vec, f))
        if sol is None:
            raise ValidationError([AxiomViolation(
                "homology", (degree,), "product of cycles is not a cycle")])
        base = space.flat_index(degree, 0)
        return {base + (t - nb): c for t, c in enumerate(sol) if t >= nb and not f.is_zero(c)}

    table: dict = {}
    nh = space.total_dim
    for i in range(nh):
        for j in range(nh):
            p = A.mul(rep_flat[i], rep_flat[j])
            if not p:
                continue
            out = project(space.degree_of(i) + space.degree_of(j), p)
            if out:
                table[(i, j)] = out

    unit = project(0, A.unit) if A.unit else {}
    return DgAlgebra.build(f, space, unit, table, {})


def _dense_to_flat(space, degree, col, f):
    base = space.flat_index(degree, 0)
    return {base + r: x for r, x in enumerate(col) if not f.is_zero(x)}


def _flat_to_dense(space, degree, vec, f):
    dense = [f.zero] * space.dim(degree)
    base = space.flat_index(degree, 0)
    for m, c in vec.items():
        if space.degree_of(m) != degree:
            raise ShapeMismatch("vector not homogeneous of the expected degree")
        dense[m - base] = c
    return dense


# -- contracting elements ----------------------------------------------------


@dataclass(frozen=True)
class ContractingElement:
    """A degree -1 solution z of d(z) = 1 plus the decomposition certificate."""

    z: GradedVector
    kernel_dims: dict
    dims_add_up: bool
    intersection_trivial: bool
    retraction_ok: bool

    @property
    def certified(self) -> bool:
        return self.dims_add_up and self.intersection_trivial and self.retraction_ok


def contracting_element(A: DgAlgebra):
    """Solve d(z) = 1 in degree -1; None when the system has no solution.

    The choice is canonical: the reduced-echelon particular solution with free
    variables zero.  When a solution exists the direct sum
    A = ker(d) + z ker(d) is certified degree by degree.
    """
    f = A.field
    if not A.unit or A.space.dim(-1) == 0:
        return None
    blk = A.differential_map().block(-1)
    sol = blk.solve(_flat_to_dense(A.space, 0, A.unit, f))
    if sol is None:
        return None
    zvec = _dense_to_flat(A.space, -1, sol, f)
    z = GradedVector.from_flat(f, A.space, zvec)

    ker = kernel_of(A.differential_map())
    kdims = dict(ker.space.dims)
    kcols = ker.inclusion.flat_columns()
    nzk = ker.space.total_dim

    zk_by_deg: dict[int, list] = {}
    retraction_ok = True
    for i in range(nzk):
        ncol = kcols.get(i, {})
        zn = A.mul(zvec, ncol)
        deg = ker.space.degree_of(i) - 1
        zk_by_deg.setdefault(deg, []).append(_flat_to_dense(A.space, deg, zn, f) if zn else [f.zero] * A.space.dim(deg))
        if A.d_apply(zn) != ncol:
            retraction_ok = False

    dims_add_up = ker.space.total_dim * 2 == A.dim
    intersection_trivial = True
    for k in A.space.degrees():
        kerk = [ker.inclusion.block(k).column(j) for j in range(ker.space.dim(k))]
        zkk = zk_by_deg.get(k, [])
        combined = Matrix.from_columns(f, kerk + zkk, A.space.dim(k))
        if combined.rank() != len(kerk) + len(zkk):
            intersection_trivial = False
        if len(kerk) + len(zkk) != A.space.dim(k):
            dims_add_up = False
    return ContractingElement(z, kdims, dims_add_up, intersection_trivial, retraction_ok)


# -- center and semisimplicity -----------------------------------------------


def center(A: DgAlgebra) -> Subspace:
    """The graded subspace of elements commuting with every basis element."""
    f = A.field
    dims = {}
    blocks = {}
    labels = {}
    for k in A.space.degrees():
        nk = A.space.dim(k)
        rows = []
        for pos in range(nk):
            s = A.space.flat_index(k, pos)
            col_entries = {}
            for j in range(A.dim):
                comm = A.mul({s: f.one}, {j: f.one})
                add_into(f, comm, negate_coeffs(f, A.mul({j: f.one}, {s: f.one})))
                for m, c in comm.items():
                    col_entries[(j, m)] = c
            rows.append(col_entries)
        keys = sorted({key for r in rows for key in r})
        mat = Matrix(
            f,
            [[rows[pos].get(key, f.zero) for pos in range(nk)] for key in keys],
            ncols=nk,
        )
        basis = mat.kernel_basis()
        if basis:
            dims[k] = len(basis)
            blocks[k] = Matrix.from_columns(f, basis, nk)
            labels[k] = tuple(f"c{k}_{i}" for i in range(len(basis)))
    space = GradedVectorSpace(dims, labels)
    incl = HomogeneousMap(f, space, A.space, 0, blocks)
    return Subspace(space, incl)


@dataclass(frozen=True)
class SemisimplicityReport:
    """verdict True/False, or None when the method cannot decide."""

    verdict: bool | None
    method: str
    radical: tuple = ()
    detail: str = ""


_EXHAUSTIVE_CAP = 4096


def is_semisimple_ungraded(A: DgAlgebra) -> SemisimplicityReport:
    """Semisimplicity of the underlying ungraded algebra.

    Characteristic zero or p > dim: radical = kernel of the trace form
    tr(L_x L_y).  Small finite cases: exhaustive search for the maximal nil
    ideal.  Anything else is reported as indeterminate rather than guessed.
    """
    f = A.field
    n = A.dim
    if n == 0:
        return SemisimplicityReport(True, "trace-form", (), "zero algebra")
    p = f.characteristic()
    if p == 0 or p > n:
        # tr(L_x L_y) = tr(L_{xy}); precompute traces of left multiplications
        trvec = [f.zero] * n
        for m in range(n):
            acc = f.zero
            for k in range(n):
                c = A.table.get((m, k), {}).get(k)
                if c is not None:
                    acc = f.add(acc, c)
            trvec[m] = acc
        gram = [[f.zero] * n for _ in range(n)]
        for (i, j), out in A.table.items():
            acc = f.zero
            for m, c in out.items():
                acc = f.add(acc, f.mul(c, trvec[m]))
            gram[i][j] = acc
        rad = Matrix(f, gram).kernel_basis()
        radical = tuple(
            GradedVector.from_flat(f, A.space, {i: c for i, c in enumerate(col) if not f.is_zero(c)})
            for col in rad
        )
        return SemisimplicityReport(not rad, "trace-form", radical)

    if p ** n <= _EXHAUSTIVE_CAP:
        elems = [
            {i: c for i, c in enumerate(tup) if c}
            for tup in itertools.product(range(p), repeat=n)
        ]

        def nilpotent(vec):
            y = vec
            e = 1
            while y and e <= n:
                y = A.mul(y, y)
                e *= 2
            return not y

        members = [x for x in elems if all(nilpotent(A.mul(x, a)) for a in elems)]
        member_keys = {tuple(sorted(x.items())) for x in members}
        for x in members:
            for y in members:
                s: dict = dict(x)
                add_into(f, s, y)
                if tuple(sorted(s.items())) not in member_keys:
                    return SemisimplicityReport(
                        None, "exhaustive", (), "nil candidates not closed under addition"
                    )
        cols = [tuple(x.get(i, 0) for i in range(n)) for x in members]
        mat = Matrix.from_columns(f, cols, n) if cols else Matrix.zeros(f, n, 0)
        pivots = mat.column_space_pivots()
        radical = tuple(
            GradedVector.from_flat(f, A.space, members[j]) for j in pivots
        )
        return SemisimplicityReport(not radical, "exhaustive", radical)

    return SemisimplicityReport(
        None, "indeterminate", (),
        f"characteristic {p} <= dim {n} and {p}^{n} > {_EXHAUSTIVE_CAP}",
    )


@dataclass(frozen=True)
class TgrReport:
    """Whether bounded + acyclic + semisimple kernel all hold."""

    verdict: bool | None
    acyclic: bool
    homology_dims: dict
    kernel_dims: dict
    kernel_report: SemisimplicityReport
    reasons: tuple

    @property
    def is_semisimple(self):
        return self.verdict


def is_tgr_semisimple(A: DgAlgebra) -> TgrReport:
    """Acyclic with semisimple kernel subalgebra (boundedness is automatic)."""
    H = homology(A)
    acyclic = H.space.is_zero()
    ker = kernel_subalgebra(A)
    krep = is_semisimple_ungraded(ker.algebra)
    reasons = ["bounded: yes (finite dimensional)"]
    reasons.append("acyclic: " + ("yes" if acyclic else f"no, homology dims {dict(H.space.dims)}"))
    if krep.verdict is None:
        reasons.append(f"kernel semisimple: indeterminate ({krep.detail})")
        verdict = False if not acyclic else None
    else:
        reasons.append("kernel semisimple: " + ("yes" if krep.verdict else "no"))
        verdict = acyclic and krep.verdict
    return TgrReport(
        verdict, acyclic, dict(H.space.dims), dict(ker.algebra.space.dims), krep, tuple(reasons)
    )


# -- degree-zero wrappers ------------------------------------------------------


def trivial_dg(field, labels, unit, table) -> DgAlgebra:
    """An ordinary algebra viewed as a dg-algebra: degree 0, zero differential."""
    labels = tuple(labels)
    space = GradedVectorSpace({0: len(labels)}, {0: labels})
    return DgAlgebra.build(field, space, unit, table, {})


def regrade_trivial(A: DgAlgebra) -> DgAlgebra:
    """Forget the grading and differential of A, keeping its product table."""
    labels = A.space.all_labels()
    space = GradedVectorSpace({0: A.dim}, {0: labels})
    return DgAlgebra.build(A.field, space, A.unit, A.table, {})


# -- complexes and modules ----------------------------------------------------


class KComplex:
    """A graded space with a degree +1 square-zero map; validated on build."""

    def __init__(self, field, space, dcols):
        self.field = field
        self.space = space
        self.dcols = {int(i): clean_coeffs(field, c) for i, c in dcols.items()}
        self.dcols = {i: c for i, c in self.dcols.items() if c}
        violations = []
        for i, out in self.dcols.items():
            for k in out:
                if space.degree_of(k) != space.degree_of(i) + 1:
                    violations.append(AxiomViolation(
                        "d-degree", (i,),
                        f"d hits degree {space.degree_of(k)} from {space.degree_of(i)}",
                    ))
                    break
        for i in range(space.total_dim):
            col = self.dcols.get(i)
            if not col:
                continue
            acc: dict = {}
            for m, c in col.items():
                out = self.dcols.get(m)
                if out:
                    add_into(field, acc, out, scale=c)
            if acc:
                violations.append(AxiomViolation("d-squared", (i,), "d(d(e)) nonzero"))
        if violations:
            raise ValidationError(violations)

    @classmethod
    def point(cls, field, label="1"):
        return cls(field, GradedVectorSpace({0: 1}, {0: (label,)}), {})

    @classmethod
    def from_algebra(cls, A: DgAlgebra):
        return cls(A.field, A.space, A.dcols)

    @property
    def dim(self):
        return self.space.total_dim

    def d_apply(self, u: dict) -> dict:
        acc: dict = {}
        for i, c in u.items():
            col = self.dcols.get(i)
            if col:
                add_into(self.field, acc, col, scale=c)
        return acc

    def differential_map(self) -> HomogeneousMap:
        return HomogeneousMap.from_flat_columns(self.field, self.space, self.space, 1, self.dcols)

    def differential_linear(self) -> LinearMap:
        return LinearMap(self.field, self.space, self.space, self.dcols)

    def __eq__(self, other):
        return (
            isinstance(other, KComplex)
            and self.field == other.field
            and self.space == other.space
            and self.dcols == other.dcols
        )

    def __repr__(self):
        return f"KComplex(dims={dict(self.space.dims)})"


class DgModule:
    """A right module over a dg-algebra, with its own differential.

    ``action[(m, a)]`` is the sparse expansion of (module basis m) * (algebra
    basis a).  Use validate_module to machine-check the axioms.
    """

    def __init__(self, algebra: DgAlgebra, space, action, dcols):
        self.algebra = algebra
        self.field = algebra.field
        self.space = space
        self.action = {}
        for (m, a), out in action.items():
            out = clean_coeffs(self.field, out)
            if out:
                self.action[(int(m), int(a))] = out
        self.dcols = {int(i): clean_coeffs(self.field, c) for i, c in dcols.items()}
        self.dcols = {i: c for i, c in self.dcols.items() if c}

    @classmethod
    def regular(cls, A: DgAlgebra) -> "DgModule":
        """A as a right module over itself."""
        return cls(A, A.space, dict(A.table), dict(A.dcols))

    @classmethod
    def left_regular_as_op(cls, A: DgAlgebra, Aop: DgAlgebra | None = None) -> "DgModule":
        """A as a left module over itself, i.e. a right module over opposite(A)."""
        if Aop is None:
            Aop = opposite(A)
        f = A.field
        deg = A.space.flat_degrees()
        action = {}
        for (a, m), out in A.table.items():
            if ksign(deg[a], deg[m]) < 0:
                out = negate_coeffs(f, out)
            action[(m, a)] = out
        return cls(Aop, A.space, action, dict(A.dcols))

    def act(self, mvec: dict, avec: dict) -> dict:
        f = self.field
        acc: dict = {}
        for m, c in mvec.items():
            for a, b in avec.items():
                out = self.action.get((m, a))
                if out:
                    add_into(f, acc, out, scale=f.mul(c, b))
        return acc

    def d_apply(self, u: dict) -> dict:
        acc: dict = {}
        for i, c in u.items():
            col = self.dcols.get(i)
            if col:
                add_into(self.field, acc, col, scale=c)
        return acc

    def complex(self) -> KComplex:
        return KComplex(self.field, self.space, self.dcols)

    def __repr__(self):
        return f"DgModule(dims={dict(self.space.dims)} over dim-{self.algebra.dim} algebra)"


def validate_module(M: DgModule):
    """All module axioms, exhaustively; returns the violations found."""
    A = M.algebra
    f = M.field
    v: list[AxiomViolation] = []
    mdeg = M.space.flat_degrees()
    adeg = A.space.flat_degrees()
    nm, na = M.space.total_dim, A.dim

    for (m, a), out in sorted(M.action.items()):
        want = mdeg[m] + adeg[a]
        for k in out:
            if mdeg[k] != want:
                v.append(AxiomViolation(
                    "module-degree", (m, a), f"action hits degree {mdeg[k]}, expected {want}"))
                break

    one = f.one
    for m in range(nm):
        if M.act({m: one}, A.unit) != {m: one}:
            v.append(AxiomViolation("module-unit", (m,), "m*1 differs from m"))

    for m in range(nm):
        for a in range(na):
            ma = M.action.get((m, a))
            for b in range(na):
                ab = A.table.get((a, b))
                if ma is None and ab is None:
                    continue
                left = M.act(ma or {}, {b: one})
                right = M.act({m: one}, ab or {})
                if left != right:
                    v.append(AxiomViolation(
                        "module-associativity", (m, a, b),
                        "(m*a)*b differs from m*(a*b)"))

    for i, out in sorted(M.dcols.items()):
        for k in out:
            if mdeg[k] != mdeg[i] + 1:
                v.append(AxiomViolation("module-d-degree", (i,), "d is not degree +1"))
                break
    for i in range(nm):
        acc = M.d_apply(M.dcols.get(i, {}))
        if acc:
            v.append(AxiomViolation("module-d-squared", (i,), "d(d(m)) nonzero"))

    for m in range(nm):
        dm = M.dcols.get(m, {})
        sgn = ksign(mdeg[m], 1)
        for a in range(na):
            lhs = M.d_apply(M.action.get((m, a), {}))
            rhs = M.act(dm, {a: one}) if dm else {}
            da = A.dcols.get(a)
            if da:
                second = M.act({m: one}, da)
                if sgn < 0:
                    second = negate_coeffs(f, second)
                add_into(f, rhs, second)
            if lhs != rhs:
                v.append(AxiomViolation(
                    "module-leibniz", (m, a),
                    "d(m*a) differs from d(m)*a + (-1)^{|m|} m*d(a)"))
    return v
