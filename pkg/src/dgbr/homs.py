"""Hom complexes between modules or complexes, and endomorphism dg-algebras.

The degree-n part of Hom(M, N) consists of the linear maps shifting degree by
n.  Its basis is the family of matrix units between graded components,
ordered by (source degree, source position, target position), which keeps
serialized output stable.  The differential is

    d(f) = d_N o f - (-1)^{|f|} f o d_M

and composition makes Hom(C, C) a dg-algebra.
"""
from __future__ import annotations

from .dg import DgAlgebra, DgModule, KComplex, ksign
from .errors import AxiomViolation, ShapeMismatch, ValidationError
from .graded import GradedVectorSpace, LinearMap, add_into, clean_coeffs
from .linalg import Matrix


class HomComplex:
    """Hom(M, N) as a complex, for either linearity flavor.

    ``units`` lists the matrix-unit basis of the full base-field Hom space as
    (source flat index, target flat index) pairs, in flat order.  For the
    algebra-linear flavor ``coords`` expresses each basis vector of the
    (generally smaller) solution space in unit coordinates; for the base-field
    flavor the units themselves are the basis and ``coords`` is None.
    """

    def __init__(self, field, source_space, target_space, space, units, unit_index,
                 dcols, coords=None, linearity="base-field", source=None, target=None):
        self.field = field
        self.source_space = source_space
        self.target_space = target_space
        self.space = space
        self.units = units
        self.unit_index = unit_index
        self.dcols = dcols
        self.coords = coords
        self.linearity = linearity
        self.source = source
        self.target = target

    @property
    def dim(self):
        return self.space.total_dim

    def complex(self) -> KComplex:
        return KComplex(self.field, self.space, self.dcols)

    def unit_coords(self, coeffs: dict) -> dict:
        """Expand coefficients over self.space into full unit coordinates."""
        if self.coords is None:
            return dict(coeffs)
        acc: dict = {}
        for t, c in coeffs.items():
            add_into(self.field, acc, self.coords[t], scale=c)
        return acc

    def basis_map(self, t: int) -> LinearMap:
        return self.to_map({t: self.field.one})

    def to_map(self, coeffs: dict) -> LinearMap:
        """The actual linear map with the given coefficients."""
        cols: dict = {}
        for u, c in self.unit_coords(clean_coeffs(self.field, coeffs)).items():
            mi, nj = self.units[u]
            cols.setdefault(mi, {})[nj] = self.field.add(
                cols.get(mi, {}).get(nj, self.field.zero), c
            )
        cols = {mi: clean_coeffs(self.field, col) for mi, col in cols.items()}
        return LinearMap(self.field, self.source_space, self.target_space,
                         {mi: col for mi, col in cols.items() if col})

    def from_map(self, lm: LinearMap) -> dict:
        """Coefficients of a linear map; fails if it lies outside the space."""
        ucoords: dict = {}
        for mi, col in lm.cols.items():
            for nj, c in col.items():
                ucoords[self.unit_index[(mi, nj)]] = c
        if self.coords is None:
            return clean_coeffs(self.field, ucoords)
        out: dict = {}
        f = self.field
        by_deg: dict[int, dict] = {}
        for u, c in ucoords.items():
            by_deg.setdefault(self._unit_degree(u), {})[u] = c
        for k, part in by_deg.items():
            base = self.space.flat_index(k, 0) if self.space.dim(k) else None
            cols = [self.coords[base + t] for t in range(self.space.dim(k))] if base is not None else []
            order = sorted({u for col in cols for u in col} | set(part))
            mat = Matrix(f, [[col.get(u, f.zero) for col in cols] for u in order],
                         ncols=len(cols))
            sol = mat.solve([part.get(u, f.zero) for u in order])
            if sol is None:
                raise ShapeMismatch("map is not algebra-linear")
            for t, c in enumerate(sol):
                if not f.is_zero(c):
                    out[base + t] = c
        return out

    def _unit_degree(self, u: int) -> int:
        mi, nj = self.units[u]
        return self.target_space.degree_of(nj) - self.source_space.degree_of(mi)

    def __repr__(self):
        return f"HomComplex(dims={dict(self.space.dims)}, {self.linearity})"


def _full_hom_data(field, Ms: GradedVectorSpace, Ns: GradedVectorSpace, dM: dict, dN: dict):
    """Unit basis and d columns for the base-field Hom of two complexes."""
    degM = Ms.flat_degrees()
    degN = Ns.flat_degrees()
    buckets: dict[int, list] = {}
    for mi in range(Ms.total_dim):
        for nj in range(Ns.total_dim):
            buckets.setdefault(degN[nj] - degM[mi], []).append((mi, nj))
    dims = {k: len(v) for k, v in buckets.items()}
    labels = {
        k: tuple(f"{Ms.label_of(mi)}>{Ns.label_of(nj)}" for mi, nj in v)
        for k, v in buckets.items()
    }
    space = GradedVectorSpace(dims, labels)
    units: list = []
    for k in sorted(buckets):
        units.extend(buckets[k])
    unit_index = {pair: t for t, pair in enumerate(units)}

    # transpose of the source differential: which basis vectors map onto mi
    rev: dict[int, dict] = {}
    for src, col in dM.items():
        for tgt, c in col.items():
            rev.setdefault(tgt, {})[src] = c

    dcols: dict = {}
    for t, (mi, nj) in enumerate(units):
        k = degN[nj] - degM[mi]
        col: dict = {}
        for nj2, c in dN.get(nj, {}).items():
            add_into(field, col, {unit_index[(mi, nj2)]: c})
        sgn = ksign(k, 1)
        for mi2, c in rev.get(mi, {}).items():
            c = field.neg(c) if sgn > 0 else c
            add_into(field, col, {unit_index[(mi2, nj)]: c})
        if col:
            dcols[t] = col
    return space, tuple(units), unit_index, dcols


def hom_of_complexes(C: KComplex, D: KComplex) -> HomComplex:
    if C.field != D.field:
        raise ShapeMismatch("complexes over different fields")
    space, units, unit_index, dcols = _full_hom_data(
        C.field, C.space, D.space, C.dcols, D.dcols
    )
    return HomComplex(C.field, C.space, D.space, space, units, unit_index, dcols,
                      source=C, target=D)


def hom_complex(M: DgModule, N: DgModule, linearity: str = "base-field") -> HomComplex:
    """Hom(M, N) for modules over one algebra.

    base-field: all degree-shifting linear maps.  algebra-linear: the
    subcomplex of maps with f(m*a) = f(m)*a; the constraint is solved degree
    by degree and the induced differential is checked to stay inside.
    """
    if linearity not in ("base-field", "algebra-linear"):
        raise ShapeMismatch(f"unknown linearity {linearity!r}")
    if M.field != N.field:
        raise ShapeMismatch("modules over different fields")
    if M.algebra is not N.algebra and M.algebra != N.algebra:
        raise ShapeMismatch("modules over different algebras")
    f = M.field
    space, units, unit_index, dcols = _full_hom_data(
        f, M.space, N.space, M.dcols, N.dcols
    )
    full = HomComplex(f, M.space, N.space, space, units, unit_index, dcols,
                      source=M, target=N)
    if linearity == "base-field":
        return full

    A = M.algebra
    degM = M.space.flat_degrees()
    degN = N.space.flat_degrees()
    sub_dims: dict[int, int] = {}
    sub_labels: dict[int, tuple] = {}
    coords: list[dict] = []
    kernel_cols: dict[int, list] = {}
    for k in space.degrees():
        nk = space.dim(k)
        base = space.flat_index(k, 0)
        # unknown column per unit; equation rows keyed (module m, algebra a, output)
        cols_entries: list[dict] = []
        for t in range(nk):
            mi, nj = units[base + t]
            entries: dict = {}
            for m in range(M.space.total_dim):
                for a in range(A.dim):
                    out_ma = M.action.get((m, a))
                    if out_ma:
                        c = out_ma.get(mi)
                        if c is not None:
                            key = (m, a, nj)
                            entries[key] = f.add(entries.get(key, f.zero), c)
                    if m == mi:
                        for out_n, c in N.action.get((nj, a), {}).items():
                            key = (m, a, out_n)
                            entries[key] = f.sub(entries.get(key, f.zero), c)
            cols_entries.append({k: c for k, c in entries.items() if not f.is_zero(c)})
        keys = sorted({key for e in cols_entries for key in e})
        mat = Matrix(f, [[e.get(key, f.zero) for e in cols_entries] for key in keys],
                     ncols=nk)
        basis = mat.kernel_basis()
        if basis:
            kernel_cols[k] = basis
            sub_dims[k] = len(basis)
            sub_labels[k] = tuple(f"al{k}_{i}" for i in range(len(basis)))
            for col in basis:
                coords.append({base + t: c for t, c in enumerate(col) if not f.is_zero(c)})

    sub_space = GradedVectorSpace(sub_dims, sub_labels)
    sub_dcols: dict = {}
    for s in range(sub_space.total_dim):
        k = sub_space.degree_of(s)
        img: dict = {}
        for u, c in coords[s].items():
            col = dcols.get(u)
            if col:
                add_into(f, img, col, scale=c)
        if not img:
            continue
        tk = k + 1
        if sub_space.dim(tk) == 0:
            raise ValidationError([AxiomViolation(
                "hom-subcomplex", (s,), "differential leaves the linearity solution space")])
        tbase = space.flat_index(tk, 0)
        ntk = space.dim(tk)
        cols = [
            [coords[sub_space.flat_index(tk, q)].get(tbase + t, f.zero) for q in range(sub_space.dim(tk))]
            for t in range(ntk)
        ]
        sol = Matrix(f, cols, ncols=sub_space.dim(tk)).solve(
            [img.get(tbase + t, f.zero) for t in range(ntk)]
        )
        if sol is None:
            raise ValidationError([AxiomViolation(
                "hom-subcomplex", (s,), "differential leaves the linearity solution space")])
        out = {sub_space.flat_index(tk, q): c for q, c in enumerate(sol) if not f.is_zero(c)}
        if out:
            sub_dcols[s] = out

    return HomComplex(f, M.space, N.space, sub_space, units, unit_index, sub_dcols,
                      coords=coords, linearity="algebra-linear", source=M, target=N)


def hom_differential(H: HomComplex, lm: LinearMap) -> LinearMap:
    """d_N o f - (-1)^{|f|} f o d_M, applied per homogeneous component of f."""
    f = H.field
    degM = H.source_space.flat_degrees()
    degN = H.target_space.flat_degrees()
    parts: dict[int, dict] = {}
    for mi, col in lm.cols.items():
        for nj, c in col.items():
            parts.setdefault(degN[nj] - degM[mi], {}).setdefault(mi, {})[nj] = c
    dM = {i: c for i, c in (H.source.dcols if H.source is not None else {}).items()}
    dN = {i: c for i, c in (H.target.dcols if H.target is not None else {}).items()}
    out_cols: dict = {}

    def add_entry(mi, nj, c):
        col = out_cols.setdefault(mi, {})
        col[nj] = f.add(col.get(nj, f.zero), c)

    for k, cols in parts.items():
        sgn = ksign(k, 1)
        for mi, col in cols.items():
            for nj, c in col.items():
                for nj2, e in dN.get(nj, {}).items():
                    add_entry(mi, nj2, f.mul(e, c))
        for src, dcol in dM.items():
            for mid, e in dcol.items():
                col = cols.get(mid)
                if not col:
                    continue
                for nj, c in col.items():
                    v = f.mul(e, c)
                    add_entry(src, nj, f.neg(v) if sgn > 0 else v)
    out_cols = {mi: clean_coeffs(f, col) for mi, col in out_cols.items()}
    return LinearMap(f, H.source_space, H.target_space,
                     {mi: col for mi, col in out_cols.items() if col})


def end_dg_algebra(C: KComplex) -> DgAlgebra:
    """Hom(C, C) as a dg-algebra under composition.

    The product of matrix units is composition, the unit is the identity map,
    the differential is the Hom differential; the result passes the full
    dg-algebra validation and its total dimension is (dim C)^2.
    """
    if C.space.is_zero():
        raise ShapeMismatch("endomorphisms of the zero complex")
    H = hom_of_complexes(C, C)
    f = C.field
    one = f.one
    n = H.dim
    units = H.units
    idx = H.unit_index
    table: dict = {}
    for t1 in range(n):
        mi1, nj1 = units[t1]
        for t2 in range(n):
            mi2, nj2 = units[t2]
            # compose: t2 first, then t1; nonzero only when they chain
            if nj2 == mi1:
                table[(t1, t2)] = {idx[(mi2, nj1)]: one}
    unit = {}
    for mi in range(C.space.total_dim):
        unit[idx[(mi, mi)]] = one
    return DgAlgebra.build(f, H.space, unit, table, H.dcols, hom=H)
