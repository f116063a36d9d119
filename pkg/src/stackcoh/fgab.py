"""Finitely generated abelian groups, homomorphisms, and cochain complexes.

A group is a presentation Z^r / (row lattice of a relation matrix).  The
canonical form is the list of invariant factors in a divisibility chain,
with unit factors dropped and 0 denoting a free summand, so Z^2 + Z/2 + Z/6
has canonical form (2, 6, 0, 0).
"""

from functools import cached_property

from .intlinalg import (
    IntMat,
    in_colspan,
    kernel,
    lattice_basis,
    preimage_lattice,
    solve,
    solve_mod,
)


class FgAbGroup:
    """Z^free_rank modulo the lattice spanned by the rows of `relations`."""

    def __init__(self, free_rank, relations=None):
        free_rank = int(free_rank)
        if free_rank < 0:
            raise ValueError("free_rank must be >= 0")
        if relations is None:
            relations = IntMat.zeros(0, free_rank)
        elif not isinstance(relations, IntMat):
            relations = IntMat(relations, len(relations), free_rank)
        if relations.ncols != free_rank:
            raise ValueError("relation width does not match free rank")
        self.free_rank = free_rank
        self.relations = relations

    @cached_property
    def rel_cols(self):
        """Relation lattice as a column matrix (free_rank x #relators)."""
        return self.relations.transpose()

    @cached_property
    def _snf(self):
        # U * rel_cols * V = D; columns of U^-1 give the adapted basis of Z^r
        return self.rel_cols.snf

    @cached_property
    def invariant_factors(self):
        """Divisibility chain (d_1 | d_2 | ... | 0 ... 0), unit factors dropped."""
        U, D, V = self._snf
        r = self.free_rank
        diag = [D.rows[i][i] for i in range(min(D.nrows, D.ncols))]
        diag += [0] * (r - len(diag))
        return tuple(d for d in diag[:r] if d != 1)

    @property
    def canonical_form(self):
        return self.invariant_factors

    @cached_property
    def rank(self):
        return sum(1 for d in self.invariant_factors if d == 0)

    @cached_property
    def torsion(self):
        return tuple(d for d in self.invariant_factors if d != 0)

    def is_trivial(self):
        return not self.invariant_factors

    def order(self):
        """Number of elements, or None if infinite."""
        if self.rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    @cached_property
    def _coords(self):
        # data to move between the free generators and the adapted SNF basis
        U, D, V = self._snf
        r = self.free_rank
        diag = [D.rows[i][i] for i in range(min(D.nrows, D.ncols))]
        diag += [0] * (r - len(diag))
        return U, diag[:r]

    def normalize(self, v):
        """Canonical representative of v in Z^r: reduce in the adapted basis."""
        U, diag = self._coords
        if len(v) != self.free_rank:
            raise ValueError("vector length mismatch")
        y = list(U.apply(v))
        for i, d in enumerate(diag):
            if d:
                y[i] %= d
        return solve(U, y)

    def is_zero_element(self, v):
        return all(x == 0 for x in self.normalize(v))

    def elements_equal(self, v, w):
        return self.normalize(v) == self.normalize(w)

    def in_relation_lattice(self, v):
        return in_colspan(self.rel_cols, v)

    def zero(self):
        return (0,) * self.free_rank

    def generators(self):
        return [tuple(int(i == j) for j in range(self.free_rank)) for i in range(self.free_rank)]

    def elements(self):
        """Enumerate all elements (finite groups only) as canonical vectors."""
        if self.rank:
            raise ValueError("infinite group")
        U, diag = self._coords
        reps = [self.zero()]
        seen = {self.zero()}
        # walk by adding generators until closure
        gens = self.generators()
        frontier = list(reps)
        while frontier:
            nxt = []
            for v in frontier:
                for g in gens:
                    w = self.normalize(tuple(a + b for a, b in zip(v, g)))
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            reps.extend(nxt)
            frontier = nxt
        return reps

    def __eq__(self, other):
        """Isomorphism, not identity of presentations."""
        return isinstance(other, FgAbGroup) and self.invariant_factors == other.invariant_factors

    def __hash__(self):
        return hash(self.invariant_factors)

    def __str__(self):
        return format_group(self.invariant_factors)

    def __repr__(self):
        return f"<FgAbGroup {self}>"


def format_group(factors):
    """Render invariant factors as e.g. 'Z^2 + Z/2 + Z/6', or '0'."""
    free = sum(1 for d in factors if d == 0)
    torsion = [d for d in factors if d != 0]
    parts = []
    if free == 1:
        parts.append("Z")
    elif free > 1:
        parts.append(f"Z^{free}")
    parts.extend(f"Z/{d}" for d in torsion)
    return " + ".join(parts) if parts else "0"


def free_group(r):
    return FgAbGroup(r)


def cyclic(n):
    """Z/n, with Z for n = 0."""
    return FgAbGroup(1, [[n]])


def direct_sum(groups):
    groups = list(groups)
    r = sum(g.free_rank for g in groups)
    rels = IntMat.block_diag([g.relations for g in groups]) if groups else IntMat.zeros(0, 0)
    return FgAbGroup(r, rels)


class GroupHom:
    """Homomorphism given by a matrix on the free generators."""

    def __init__(self, source, target, matrix, check=True):
        if not isinstance(matrix, IntMat):
            matrix = IntMat(matrix, target.free_rank, source.free_rank)
        if matrix.nrows != target.free_rank or matrix.ncols != source.free_rank:
            raise ValueError("hom matrix shape mismatch")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check and not self._well_defined():
            raise ValueError("matrix does not map source relations into target relations")

    def _well_defined(self):
        for rel in self.source.relations.rows:
            if not self.target.in_relation_lattice(self.matrix.apply(rel)):
                return False
        return True

    @staticmethod
    def identity(g):
        return GroupHom(g, g, IntMat.identity(g.free_rank), check=False)

    @staticmethod
    def zero(source, target):
        return GroupHom(source, target, IntMat.zeros(target.free_rank, source.free_rank), check=False)

    def __call__(self, v):
        return self.matrix.apply(v)

    def compose(self, other):
        """self o other."""
        if other.target.free_rank != self.source.free_rank:
            raise ValueError("composition shape mismatch")
        return GroupHom(other.source, self.target, self.matrix * other.matrix, check=False)

    def __add__(self, other):
        return GroupHom(self.source, self.target, self.matrix + other.matrix, check=False)

    def __sub__(self, other):
        return GroupHom(self.source, self.target, self.matrix - other.matrix, check=False)

    def __neg__(self):
        return GroupHom(self.source, self.target, -self.matrix, check=False)

    def is_zero_map(self):
        """Zero as a map (not necessarily a zero matrix)."""
        return all(
            self.target.in_relation_lattice(self.matrix.col(j)) for j in range(self.matrix.ncols)
        )

    def equal_map(self, other):
        return (self - other).is_zero_map()

    def is_mono(self):
        return hom_exactness(self).kernel.is_trivial()

    def is_epi(self):
        return hom_exactness(self).cokernel.is_trivial()

    def is_iso(self):
        e = hom_exactness(self)
        return e.kernel.is_trivial() and e.cokernel.is_trivial()

    def preimage(self, w):
        """Some v with f(v) = w in the target, or None."""
        return solve_mod(self.matrix, w, self.target.rel_cols)

    def __repr__(self):
        return f"<GroupHom {self.source} -> {self.target}>"


class Subquotient:
    """A subquotient N/D of an ambient Z^r.

    `numerator` columns are a basis of the lattice N; `denominator` columns
    generate the sublattice D (which must lie in N).  group() presents N/D on
    the numerator basis; express() writes an ambient vector in that basis.
    """

    def __init__(self, ambient_rank, numerator, denominator):
        self.ambient_rank = ambient_rank
        self.numerator = numerator
        self.denominator = denominator

    @staticmethod
    def from_generators(ambient_rank, num_gens, den_gens):
        num = lattice_basis(IntMat.from_cols(list(num_gens), ambient_rank))
        den = IntMat.from_cols(list(den_gens), ambient_rank)
        return Subquotient(ambient_rank, num, den)

    @cached_property
    def group(self):
        rel_rows = []
        for j in range(self.denominator.ncols):
            coords = solve(self.numerator, self.denominator.col(j))
            if coords is None:
                raise ValueError("denominator not contained in numerator lattice")
            rel_rows.append(coords)
        return FgAbGroup(self.numerator.ncols, IntMat(rel_rows, len(rel_rows), self.numerator.ncols))

    def express(self, v):
        """Coordinates of ambient vector v on the numerator basis, or None."""
        return solve(self.numerator, v)

    def lift(self, coords):
        """Ambient representative of an element given in numerator coordinates."""
        return self.numerator.apply(coords)


class HomExactness:
    """Kernel, image and cokernel of a GroupHom, with structural maps."""

    def __init__(self, f):
        src, tgt = f.source, f.target
        # kernel: preimage of the target relation lattice, modulo source relations
        ker_lat = preimage_lattice(f.matrix, tgt.rel_cols)
        self._ker_sq = Subquotient(src.free_rank, ker_lat, src.rel_cols)
        self.kernel = self._ker_sq.group
        self.kernel_inclusion = GroupHom(self.kernel, src, ker_lat, check=False)
        # image: free generators of the source, modulo the full preimage lattice
        self.image = FgAbGroup(src.free_rank, ker_lat.transpose())
        self.image_inclusion = GroupHom(self.image, tgt, f.matrix, check=False)
        self.image_projection = GroupHom(src, self.image, IntMat.identity(src.free_rank), check=False)
        # cokernel: target modulo its relations and the image columns
        cok_rels = IntMat.vstack([tgt.relations, f.matrix.transpose()])
        self.cokernel = FgAbGroup(tgt.free_rank, cok_rels)
        self.cokernel_projection = GroupHom(tgt, self.cokernel, IntMat.identity(tgt.free_rank), check=False)

    def kernel_express(self, v):
        return self._ker_sq.express(v)


def hom_exactness(f):
    return HomExactness(f)


def pair_exact(f, g):
    """Is the composable pair f: A->B, g: B->C exact at B?

    Requires g o f = 0 as a map and ker(g) = im(f) as lattices in B.
    """
    if f.target is not g.source and f.target.free_rank != g.source.free_rank:
        raise ValueError("maps not composable")
    if not g.compose(f).is_zero_map():
        return False
    B = g.source
    ker_lat = preimage_lattice(g.matrix, g.target.rel_cols)
    den = IntMat.hstack([f.matrix, B.rel_cols]) if B.rel_cols.ncols else f.matrix
    homology = Subquotient(B.free_rank, ker_lat, lattice_basis(den))
    return homology.group.is_trivial()


class AbCochainComplex:
    """Cochain complex of FgAbGroups over a finite degree window [lo, hi]."""

    def __init__(self, lo, hi, groups, diffs, check=True):
        self.lo = lo
        self.hi = hi
        self.groups = dict(groups)
        self.diffs = dict(diffs)
        for n in range(lo, hi + 1):
            if n not in self.groups:
                raise ValueError(f"missing group in degree {n}")
        if check:
            for n in range(lo, hi):
                d2 = self.diff(n + 1).compose(self.diff(n))
                if not d2.is_zero_map():
                    raise ValueError(f"differential does not square to zero at degree {n}")

    def group(self, n):
        return self.groups.get(n, FgAbGroup(0))

    def diff(self, n):
        d = self.diffs.get(n)
        if d is None:
            d = GroupHom.zero(self.group(n), self.group(n + 1))
        return d

    def cohomology(self, n):
        if n < self.lo - 1 or n > self.hi + 1:
            raise ValueError(f"degree {n} outside window [{self.lo - 1}, {self.hi + 1}]")
        dn = self.diff(n)
        dprev = self.diff(n - 1)
        A = self.group(n)
        ker_lat = preimage_lattice(dn.matrix, dn.target.rel_cols)
        den = IntMat.hstack([dprev.matrix, A.rel_cols])
        return Subquotient(A.free_rank, ker_lat, lattice_basis(den)).group

    def is_exact_at(self, n):
        return self.cohomology(n).is_trivial()


def cochain_cohomology(C, n):
    return C.cohomology(n)


def directed_colimit_groups(poset_elems, leq, groups, maps):
    """Colimit of a directed diagram of FgAbGroups.

    poset_elems : list of index labels; leq(i, j) tests i <= j.
    groups : dict label -> FgAbGroup; maps : dict (i, j) -> GroupHom for i <= j.
    Returns (colimit group, dict label -> GroupHom into the colimit).

    Standard presentation: direct sum of all groups modulo (v in G_i) - (f_ij v).
    """
    elems = list(poset_elems)
    offs = {}
    off = 0
    for i in elems:
        offs[i] = off
        off += groups[i].free_rank
    total = off
    rel_blocks = [IntMat.zeros(0, total)]
    for i in elems:
        g = groups[i]
        if g.relations.nrows:
            rows = []
            for rel in g.relations.rows:
                row = [0] * total
                row[offs[i] : offs[i] + g.free_rank] = list(rel)
                rows.append(row)
            rel_blocks.append(IntMat(rows, len(rows), total))
    for (i, j), f in maps.items():
        if i == j:
            continue
        gi = groups[i]
        rows = []
        for k in range(gi.free_rank):
            row = [0] * total
            row[offs[i] + k] = 1
            col = f.matrix.col(k)
            for t, x in enumerate(col):
                row[offs[j] + t] -= x
            rows.append(row)
        rel_blocks.append(IntMat(rows, len(rows), total))
    rels = IntMat.vstack(rel_blocks)
    colim = FgAbGroup(total, rels)
    incls = {}
    for i in elems:
        g = groups[i]
        rows = [[0] * g.free_rank for _ in range(total)]
        for k in range(g.free_rank):
            rows[offs[i] + k][k] = 1
        incls[i] = GroupHom(g, colim, IntMat(rows, total, g.free_rank), check=False)
    return colim, incls
