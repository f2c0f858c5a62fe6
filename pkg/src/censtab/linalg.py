"""Exact linear algebra over a FieldSpec.

Subspaces are stored as reduced row-echelon bases with no zero rows, so a
subspace has exactly one representation and equality is entry-wise
comparison.  All decisions in the package (centers, radicals, ideal
closures, stability criteria) reduce to the operations here.

Row reduction over Q works on primitive integer rows (gcd 1) and eliminates
by cross-multiplication; converting to lowest-terms Fractions happens once,
when a canonical basis is produced.  Per-entry Fraction normalization inside
the elimination loop would otherwise dominate the running time.
"""

from __future__ import annotations

from bisect import insort
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch
from .scalars import FieldSpec


def _row_gcd(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


class _RationalReducer:
    """Incremental echelon basis over Q, rows kept as primitive int vectors."""

    __slots__ = ("width", "pivots", "rows")

    def __init__(self, width):
        self.width = width
        self.pivots = []  # sorted pivot columns
        self.rows = {}  # pivot column -> full-width int row

    @property
    def dim(self):
        return len(self.pivots)

    @staticmethod
    def _to_int_row(vec):
        lcm = 1
        for x in vec:
            if isinstance(x, Fraction):
                d = x.denominator
                lcm = lcm // gcd(lcm, d) * d
        if lcm == 1:
            return [int(x) for x in vec]
        return [int(x * lcm) for x in vec]

    def residual(self, vec):
        """Reduce vec against the current rows; zero residual means membership."""
        v = self._to_int_row(vec)
        for p in self.pivots:
            c = v[p]
            if c:
                r = self.rows[p]
                g = gcd(r[p], c)
                a, b = r[p] // g, c // g  # a > 0 since pivots are positive
                if a == 1:
                    v[p:] = [x - b * y for x, y in zip(v[p:], r[p:])]
                else:
                    # the whole row is scaled by a, not just the tail
                    v[:p] = [a * x for x in v[:p]]
                    v[p:] = [a * x - b * y for x, y in zip(v[p:], r[p:])]
                    g = _row_gcd(v)
                    if g > 1:
                        v = [x // g for x in v]
        return v

    def contains(self, vec) -> bool:
        return not any(self.residual(vec))

    def insert(self, vec):
        """Add vec to the span.  Returns the new basis row, or None if dependent."""
        v = self.residual(vec)
        for p, x in enumerate(v):
            if x:
                g = _row_gcd(v)
                if x < 0:
                    g = -g
                if g != 1:
                    v = [y // g for y in v]
                self.rows[p] = v
                insort(self.pivots, p)
                return v
        return None

    def canonical_rows(self):
        """Fully reduced rows with unit pivots, as Fraction tuples."""
        rows = {p: list(r) for p, r in self.rows.items()}
        for p in reversed(self.pivots):
            base = rows[p]
            for q in self.pivots:
                if q >= p:
                    break
                r = rows[q]
                c = r[p]
                if c:
                    g = gcd(base[p], c)
                    a, b = base[p] // g, c // g
                    merged = [a * x - b * y for x, y in zip(r, base)]
                    g = _row_gcd(merged)
                    if g > 1:
                        merged = [x // g for x in merged]
                    rows[q] = merged
        out = []
        for p in self.pivots:
            r = rows[p]
            piv = r[p]
            out.append(tuple(Fraction(x, piv) for x in r))
        return out


class _PrimeReducer:
    """Incremental echelon basis over GF(p), rows kept with unit pivots."""

    __slots__ = ("width", "p", "pivots", "rows")

    def __init__(self, width, p):
        self.width = width
        self.p = p
        self.pivots = []
        self.rows = {}

    @property
    def dim(self):
        return len(self.pivots)

    def residual(self, vec):
        p_ = self.p
        v = [int(x) % p_ for x in vec]
        for p in self.pivots:
            c = v[p]
            if c:
                r = self.rows[p]
                v[p:] = [(x - c * y) % p_ for x, y in zip(v[p:], r[p:])]
        return v

    def contains(self, vec) -> bool:
        return not any(self.residual(vec))

    def insert(self, vec):
        v = self.residual(vec)
        for p, x in enumerate(v):
            if x:
                inv = pow(x, -1, self.p)
                v = [y * inv % self.p for y in v]
                self.rows[p] = v
                insort(self.pivots, p)
                return v
        return None

    def canonical_rows(self):
        rows = {p: list(r) for p, r in self.rows.items()}
        for p in reversed(self.pivots):
            base = rows[p]
            for q in self.pivots:
                if q >= p:
                    break
                r = rows[q]
                c = r[p]
                if c:
                    rows[q] = [(x - c * y) % self.p for x, y in zip(r, base)]
        return [tuple(rows[p]) for p in self.pivots]


def _make_reducer(field: FieldSpec, width: int):
    if field.p is None:
        return _RationalReducer(width)
    return _PrimeReducer(width, field.p)


class Mat:
    """A dense matrix with canonical scalar entries, row-major."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldSpec, rows, ncols: int | None = None):
        rows = [tuple(field.coerce(x) for x in r) for r in rows]
        if rows:
            ncols_seen = {len(r) for r in rows}
            if len(ncols_seen) != 1:
                raise DimensionMismatch("ragged rows")
            inferred = ncols_seen.pop()
            if ncols is not None and ncols != inferred:
                raise DimensionMismatch(f"expected {ncols} columns, got {inferred}")
            ncols = inferred
        elif ncols is None:
            ncols = 0
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = tuple(rows)

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], n)

    def apply(self, v):
        """Row vector times matrix: result[j] = sum_i v[i] * self[i][j]."""
        if len(v) != self.nrows:
            raise DimensionMismatch(f"vector length {len(v)} != {self.nrows} rows")
        f = self.field
        out = [f.zero] * self.ncols
        for x, row in zip(v, self.rows):
            if x:
                for j, y in enumerate(row):
                    if y:
                        out[j] = f.add(out[j], f.mul(x, y))
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"Mat({self.field!r}, {self.nrows}x{self.ncols})"


def rref(m: Mat) -> Mat:
    """The unique reduced row-echelon form of m (zero rows kept at the bottom)."""
    red = _make_reducer(m.field, m.ncols)
    for row in m.rows:
        red.insert(row)
    rows = red.canonical_rows()
    zero_row = tuple([m.field.zero] * m.ncols)
    rows += [zero_row] * (m.nrows - len(rows))
    return Mat(m.field, rows, m.ncols)


class Subspace:
    """A linear subspace held as its canonical RREF basis (no zero rows)."""

    __slots__ = ("field", "ambient_dim", "rows", "pivots")

    def __init__(self, field, ambient_dim, rows, pivots):
        # rows/pivots must already be canonical; use span() to build one.
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = rows
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    @property
    def basis(self) -> Mat:
        return Mat(self.field, self.rows, self.ambient_dim)

    def _check_len(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector length {len(v)} != ambient dimension {self.ambient_dim}"
            )

    def reduce(self, v):
        """Residual of v after eliminating all pivot coordinates."""
        self._check_len(v)
        f = self.field
        w = [f.coerce(x) for x in v]
        for p, row in zip(self.pivots, self.rows):
            c = w[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        w[j] = f.sub(w[j], f.mul(c, row[j]))
        return w

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v):
        """Coefficients of v over the RREF basis, or None if v is outside."""
        self._check_len(v)
        f = self.field
        coords = tuple(f.coerce(v[p]) for p in self.pivots)
        if any(self.reduce(v)):
            return None
        return coords

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.rows))

    def __le__(self, other):
        return all(other.contains(r) for r in self.rows)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim} over {self.field!r})"


def _subspace_from_reducer(field, ambient_dim, red) -> Subspace:
    rows = tuple(red.canonical_rows())
    return Subspace(field, ambient_dim, rows, tuple(red.pivots))


def span(field: FieldSpec, vectors, ambient_dim: int) -> Subspace:
    """The canonical subspace spanned by the given coordinate vectors."""
    red = _make_reducer(field, ambient_dim)
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch(
                f"vector length {len(v)} != ambient dimension {ambient_dim}"
            )
        red.insert(v)
    return _subspace_from_reducer(field, ambient_dim, red)


def zero_subspace(field: FieldSpec, ambient_dim: int) -> Subspace:
    return Subspace(field, ambient_dim, (), ())


def full_subspace(field: FieldSpec, ambient_dim: int) -> Subspace:
    return span(field, Mat.identity(field, ambient_dim).rows, ambient_dim)


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    if s.field != t.field or s.ambient_dim != t.ambient_dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")
    red = _make_reducer(s.field, s.ambient_dim)
    for v in s.rows:
        red.insert(v)
    for v in t.rows:
        red.insert(v)
    return _subspace_from_reducer(s.field, s.ambient_dim, red)


def kernel_of_rows(field: FieldSpec, rows, ncols: int) -> Subspace:
    """Solutions x of R x = 0 for the given equation rows."""
    red = _make_reducer(field, ncols)
    for r in rows:
        red.insert(r)
    rref_rows = red.canonical_rows()
    pivots = list(red.pivots)
    pivot_set = set(pivots)
    basis = []
    one, zero = field.one, field.zero
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for p, row in zip(pivots, rref_rows):
            if row[free]:
                v[p] = field.neg(row[free])
        basis.append(v)
    return span(field, basis, ncols)


def kernel(m: Mat) -> Subspace:
    return kernel_of_rows(m.field, m.rows, m.ncols)


def subspace_intersect(s: Subspace, t: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked generator system."""
    if s.field != t.field or s.ambient_dim != t.ambient_dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")
    field = s.field
    n = s.ambient_dim
    # Columns are the generators of s followed by those of t; a kernel vector
    # (a, b) satisfies sum a_i s_i = sum b_j t_j, an intersection vector.
    ds, dt = s.dim, t.dim
    if ds == 0 or dt == 0:
        return zero_subspace(field, n)
    eq_rows = []
    for c in range(n):
        row = [s.rows[i][c] for i in range(ds)] + [field.neg(t.rows[j][c]) for j in range(dt)]
        eq_rows.append(row)
    k = kernel_of_rows(field, eq_rows, ds + dt)
    vecs = []
    for kv in k.rows:
        v = [field.zero] * n
        for i in range(ds):
            if kv[i]:
                row = s.rows[i]
                for c in range(n):
                    if row[c]:
                        v[c] = field.add(v[c], field.mul(kv[i], row[c]))
        vecs.append(v)
    return span(field, vecs, n)


def express_in_span(field: FieldSpec, generators, target, width: int):
    """Coefficients writing target as a combination of the generators.

    The generators need not be independent.  Returns a list of scalars, or
    None if target is outside the span.  Works by augmenting each generator
    with an indicator block and a bookkeeping column, so the reduction of
    the target carries its own combination along.
    """
    gens = list(generators)
    g = len(gens)
    red = _make_reducer(field, width + g + 1)
    zero = field.zero
    for i, v in enumerate(gens):
        if len(v) != width:
            raise DimensionMismatch("generator has wrong length")
        aug = [zero] * (g + 1)
        aug[i] = field.one
        red.insert(list(v) + aug)
    if len(target) != width:
        raise DimensionMismatch("target has wrong length")
    w = red.residual(list(target) + [zero] * g + [field.one])
    if any(w[:width]):
        return None
    scale = w[width + g]
    assert scale != 0
    if field.p is None:
        return [-Fraction(w[width + i], scale) for i in range(g)]
    inv = pow(scale, -1, field.p)
    return [(-w[width + i]) * inv % field.p for i in range(g)]


def solve_linear(field: FieldSpec, eq_rows, rhs):
    """A particular solution x of the system rows . x = rhs, or None.

    Free variables are set to zero.  eq_rows is an iterable of equation
    rows; rhs the matching right-hand sides.
    """
    eq_rows = list(eq_rows)
    rhs = list(rhs)
    if len(eq_rows) != len(rhs):
        raise DimensionMismatch("system and right-hand side differ in length")
    if not eq_rows:
        return ()
    n = len(eq_rows[0])
    red = _make_reducer(field, n + 1)
    for row, b in zip(eq_rows, rhs):
        red.insert(list(row) + [b])
        if n in red.pivots:  # pivot in the rhs column: inconsistent
            return None
    rows = red.canonical_rows()
    x = [field.zero] * n
    pivot_rows = list(zip(red.pivots, rows))
    for p, row in reversed(pivot_rows):
        acc = row[n]
        for c in range(p + 1, n):
            if row[c] and x[c]:
                acc = field.sub(acc, field.mul(row[c], x[c]))
        x[p] = acc
    return tuple(x)
