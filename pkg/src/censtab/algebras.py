"""Finite-dimensional associative algebras given by structure constants.

An algebra of dimension n over a FieldSpec is the data of its basis products
e_i * e_j = sum_k c[i][j][k] e_k.  The table is stored sparsely: a dict
mapping (i, j) to a tuple of (k, scalar) pairs, with absent pairs meaning a
zero product.  Associativity is validated once at construction and derived
constructions (quotients, tensor products, ...) are trusted to preserve it;
`verify_associativity` re-checks any algebra on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlgebraMismatch,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotAnIdeal,
    NotAssociative,
)
from .linalg import Mat, Subspace, _make_reducer, kernel_of_rows, solve_linear, span
from .scalars import FieldSpec


class Algebra:
    """An associative algebra presented by a structure-constant table."""

    __slots__ = ("field", "dim", "table", "labels", "unity")

    def __init__(self, field, dim, table, labels, unity, _trusted=False):
        if not _trusted:
            raise TypeError("use build_algebra() to construct an Algebra")
        self.field = field
        self.dim = dim
        self.table = table
        self.labels = labels
        self.unity = unity

    # -- element and vector helpers -----------------------------------------

    def element(self, coords) -> Element:
        if len(coords) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, tuple(self.field.coerce(x) for x in coords))

    def zero(self) -> Element:
        return Element(self, (self.field.zero,) * self.dim)

    def basis_element(self, i: int) -> Element:
        coords = [self.field.zero] * self.dim
        coords[i] = self.field.one
        return Element(self, tuple(coords))

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def one(self) -> Element:
        if self.unity is None:
            raise ValueError("algebra has no unity")
        return Element(self, self.unity)

    @property
    def is_unital(self) -> bool:
        return self.unity is not None

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def __repr__(self):
        return f"Algebra(dim {self.dim} over {self.field!r})"

    def same_structure(self, other) -> bool:
        """Identical presentation: same field, dimension and table."""
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.table == other.table
        )

    # -- products (coordinate level) -----------------------------------------
    # Raw ints may appear in intermediate sums; the reducers and `canon`
    # accept them, so only Element-facing results are canonicalized.

    def mul_coords(self, x, y):
        acc = {}
        table = self.table
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        pairs = table.get((i, j))
                        if pairs:
                            c = xi * yj
                            for k, ck in pairs:
                                acc[k] = acc.get(k, 0) + c * ck
        canon = self.field.canon
        zero = self.field.zero
        return tuple(canon(acc[k]) if k in acc else zero for k in range(self.dim))

    def _basis_mul_vec(self, i, v):
        """Coordinates of e_i * v, or None when the product is zero."""
        acc = {}
        table = self.table
        for j, x in enumerate(v):
            if x:
                pairs = table.get((i, j))
                if pairs:
                    for k, c in pairs:
                        acc[k] = acc.get(k, 0) + x * c
        if not acc:
            return None
        return [acc.get(k, 0) for k in range(self.dim)]

    def _vec_mul_basis(self, v, i):
        """Coordinates of v * e_i, or None when the product is zero."""
        acc = {}
        table = self.table
        for j, x in enumerate(v):
            if x:
                pairs = table.get((j, i))
                if pairs:
                    for k, c in pairs:
                        acc[k] = acc.get(k, 0) + x * c
        if not acc:
            return None
        return [acc.get(k, 0) for k in range(self.dim)]


class Element:
    """A coordinate vector over an algebra's distinguished basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: tuple):
        self.algebra = algebra
        self.coords = coords

    def _check_same(self, other):
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._check_same(other)
        f = self.algebra.field
        return Element(self.algebra, tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check_same(other)
        f = self.algebra.field
        return Element(self.algebra, tuple(f.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        f = self.algebra.field
        return Element(self.algebra, tuple(f.neg(a) for a in self.coords))

    def __mul__(self, other):
        self._check_same(other)
        return Element(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    def scale(self, c):
        f = self.algebra.field
        c = f.coerce(c)
        return Element(self.algebra, tuple(f.mul(c, a) for a in self.coords))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.algebra is other.algebra
            and all(a == b for a, b in zip(self.coords, other.coords))
        )

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        a = self.algebra
        terms = [
            f"{a.field.format(c)}*{a.label(i)}" for i, c in enumerate(self.coords) if c
        ]
        return " + ".join(terms) if terms else "0"


def multiply(x: Element, y: Element) -> Element:
    return x * y


def commutator(x: Element, y: Element) -> Element:
    """[x, y] = xy - yx."""
    return x * y - y * x


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------


def _normalize_table(field, dim, table):
    """Accept a sparse dict or a dense nested list, produce the canonical dict."""
    out = {}
    if isinstance(table, dict):
        items = []
        for key, val in table.items():
            i, j = key
            if isinstance(val, dict):
                pairs = list(val.items())
            else:
                pairs = [(k, c) for k, c in val]
            items.append((i, j, pairs))
    else:
        items = []
        for i, row in enumerate(table):
            for j, entry in enumerate(row):
                if len(entry) != dim:
                    raise DimensionMismatch(f"dense table entry ({i},{j}) has wrong length")
                items.append((i, j, list(enumerate(entry))))
    for i, j, pairs in items:
        if not (0 <= i < dim and 0 <= j < dim):
            raise IndexOutOfRange(f"pair index ({i},{j}) outside [0,{dim})")
        canon = {}
        for k, c in pairs:
            if not (0 <= k < dim):
                raise IndexOutOfRange(f"target index {k} in entry ({i},{j})")
            c = field.coerce(c)
            if c:
                canon[k] = field.add(canon.get(k, field.zero), c)
        canon = {k: c for k, c in canon.items() if c}
        if canon:
            out[(i, j)] = tuple(sorted(canon.items()))
    return out


def _check_associativity(field, dim, table):
    canon = field.canon
    for i in range(dim):
        for j in range(dim):
            pij = table.get((i, j), ())
            for k in range(dim):
                left = {}
                for m, c in pij:
                    for q, d in table.get((m, k), ()):
                        left[q] = left.get(q, 0) + c * d
                right = {}
                for m, c in table.get((j, k), ()):
                    for q, d in table.get((i, m), ()):
                        right[q] = right.get(q, 0) + c * d
                for q in left.keys() | right.keys():
                    if canon(left.get(q, 0) - right.get(q, 0)) != 0:
                        raise NotAssociative(i, j, k)


def _find_unity(field, dim, table):
    if dim == 0:
        return None
    rows = {}
    for (j, i), pairs in table.items():
        for k, c in pairs:
            rows.setdefault(("r", i, k), [field.zero] * dim)[j] = c
    for (i, j), pairs in table.items():
        for k, c in pairs:
            rows.setdefault(("l", i, k), [field.zero] * dim)[j] = c
    for i in range(dim):
        if ("r", i, i) not in rows or ("l", i, i) not in rows:
            return None  # no u can reproduce e_i on that side
    keys = sorted(rows.keys())
    rhs = [field.one if i == k else field.zero for (_, i, k) in keys]
    u = solve_linear(field, [rows[key] for key in keys], rhs)
    if u is None:
        return None
    # solve_linear returns some solution; re-check it is a two-sided unity
    for i in range(dim):
        ei = [field.zero] * dim
        ei[i] = field.one
        alg_like = (field, dim, table)
        if _mul_vec(alg_like, u, ei) != tuple(ei) or _mul_vec(alg_like, ei, u) != tuple(ei):
            return None
    return tuple(u)


def _mul_vec(alg_like, x, y):
    field, dim, table = alg_like
    acc = {}
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    for k, c in table.get((i, j), ()):
                        acc[k] = acc.get(k, 0) + xi * yj * c
    return tuple(field.canon(acc.get(k, 0)) for k in range(dim))


def build_algebra(field: FieldSpec, dim: int, table, labels=None) -> Algebra:
    """Validate a structure-constant table and wrap it as an Algebra.

    Checks index ranges, associativity on all basis triples and solves for a
    two-sided unity (cached if present).  Raises NotAssociative with a
    witness triple on failure.
    """
    if dim < 0:
        raise DimensionMismatch("dimension must be non-negative")
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != dim:
            raise DimensionMismatch("labels length != dim")
    table = _normalize_table(field, dim, table)
    _check_associativity(field, dim, table)
    unity = _find_unity(field, dim, table)
    return Algebra(field, dim, table, labels, unity, _trusted=True)


def _derived(field, dim, table, labels=None, unity=None) -> Algebra:
    """Internal constructor for algebras associative by construction."""
    if labels is not None:
        labels = tuple(labels)
    return Algebra(field, dim, table, labels, unity, _trusted=True)


def verify_associativity(a: Algebra) -> None:
    """Re-run the full associativity check (raises NotAssociative)."""
    _check_associativity(a.field, a.dim, a.table)
    if a.unity is not None:
        for i in range(a.dim):
            ei = a.basis_element(i)
            u = Element(a, a.unity)
            if u * ei != ei or ei * u != ei:
                raise NotAssociative(-1, -1, i)


# ---------------------------------------------------------------------------
# Centers, commutators, ideals
# ---------------------------------------------------------------------------


def center(a: Algebra) -> Subspace:
    """The subspace {z : zx = xz for all x}, as the kernel of z -> ([z, e_j])_j."""
    rows = {}
    for (i, j), pairs in a.table.items():
        for k, c in pairs:
            # c contributes +c to row (j, k) at column i and -c to row (i, k) at column j
            r = rows.get((j, k))
            if r is None:
                r = rows[(j, k)] = [a.field.zero] * a.dim
            r[i] = a.field.add(r[i], c)
            r = rows.get((i, k))
            if r is None:
                r = rows[(i, k)] = [a.field.zero] * a.dim
            r[j] = a.field.sub(r[j], c)
    return kernel_of_rows(a.field, rows.values(), a.dim)


def commutator_space(x: Element) -> Subspace:
    """span{[x, e_i] : i = 0..dim-1}."""
    a = x.algebra
    vecs = []
    for i in range(a.dim):
        left = a._vec_mul_basis(x.coords, i)
        right = a._basis_mul_vec(i, x.coords)
        if left is None and right is None:
            continue
        if left is None:
            vecs.append([-c for c in right])
        elif right is None:
            vecs.append(left)
        else:
            vecs.append([p - q for p, q in zip(left, right)])
    return span(a.field, vecs, a.dim)


def _ideal_closure(a: Algebra, vectors, on_insert=None):
    """Fixpoint of S <- S + sum_i e_i S + S e_i starting from span(vectors).

    Returns (reducer, complete).  on_insert, when given, is called with each
    newly added basis row; returning True stops the closure early
    (complete=False) -- used for membership tests that only need a lower
    bound of the ideal.  The closure converges after at most two growth
    rounds plus one verification round, since e.g. e_j (e_i v) = (e_j e_i) v
    already lies in span(A v).
    """
    n = a.dim
    red = _make_reducer(a.field, n)
    work = []
    for v in vectors:
        r = red.insert(v)
        if r is not None:
            work.append(r)
            if on_insert is not None and on_insert(r):
                return red, False
    while work:
        if red.dim == n:
            return red, True
        fresh = []
        for v in work:
            for i in range(n):
                for w in (a._basis_mul_vec(i, v), a._vec_mul_basis(v, i)):
                    if w is None:
                        continue
                    r = red.insert(w)
                    if r is not None:
                        fresh.append(r)
                        if on_insert is not None and on_insert(r):
                            return red, False
                        if red.dim == n:
                            return red, True
        work = fresh
    return red, True


def _coords_of(a: Algebra, xs):
    vecs = []
    for x in xs:
        if isinstance(x, Element):
            if x.algebra is not a:
                raise AlgebraMismatch("generator belongs to a different algebra")
            vecs.append(x.coords)
        else:
            if len(x) != a.dim:
                raise DimensionMismatch("generator has wrong length")
            vecs.append(tuple(a.field.coerce(c) for c in x))
    return vecs


def ideal_generated(a: Algebra, xs) -> Subspace:
    """The two-sided ideal generated by the elements xs (generators included).

    For non-unital algebras this is span(xs) + A xs + xs A + A xs A.
    """
    from .linalg import _subspace_from_reducer

    red, complete = _ideal_closure(a, _coords_of(a, xs))
    assert complete
    return _subspace_from_reducer(a.field, a.dim, red)


def ideal_witness(a: Algebra, s: Subspace):
    """None if s is a two-sided ideal, else a witness (vec_idx, basis_idx, side)."""
    if s.ambient_dim != a.dim or s.field != a.field:
        raise DimensionMismatch("subspace does not live in the algebra")
    red = _make_reducer(a.field, a.dim)
    for v in s.rows:
        red.insert(v)
    for vi, v in enumerate(s.rows):
        for i in range(a.dim):
            w = a._basis_mul_vec(i, v)
            if w is not None and not red.contains(w):
                return (vi, i, "left")
            w = a._vec_mul_basis(v, i)
            if w is not None and not red.contains(w):
                return (vi, i, "right")
    return None


# ---------------------------------------------------------------------------
# Quotients
# ---------------------------------------------------------------------------


@dataclass
class QuotientMap:
    """The canonical surjection source -> source/ideal.

    The target basis consists of the images of the non-pivot coordinates of
    the ideal's RREF basis, so the construction is deterministic.
    """

    source: Algebra
    ideal: Subspace
    target: Algebra
    projection: Mat  # source dim x target dim
    section: Mat  # target dim x source dim
    free_cols: tuple

    def project_vec(self, v):
        w = self.ideal.reduce(v)
        return tuple(w[c] for c in self.free_cols)

    def project(self, x: Element) -> Element:
        if x.algebra is not self.source:
            raise AlgebraMismatch("element is not in the quotient source")
        return Element(self.target, self.project_vec(x.coords))

    def lift_vec(self, v):
        out = [self.source.field.zero] * self.source.dim
        for c, x in zip(self.free_cols, v):
            out[c] = self.source.field.coerce(x)
        return tuple(out)

    def lift(self, x: Element) -> Element:
        if x.algebra is not self.target:
            raise AlgebraMismatch("element is not in the quotient target")
        return Element(self.source, self.lift_vec(x.coords))


def quotient(a: Algebra, ideal: Subspace) -> QuotientMap:
    """Build a/ideal; raises NotAnIdeal (with witness) when ideal is not one."""
    w = ideal_witness(a, ideal)
    if w is not None:
        raise NotAnIdeal(*w)
    n = a.dim
    pivot_set = set(ideal.pivots)
    free = tuple(c for c in range(n) if c not in pivot_set)
    m = len(free)
    reduce = ideal.reduce
    table = {}
    for ai, x in enumerate(free):
        for bi, y in enumerate(free):
            pairs = a.table.get((x, y))
            if not pairs:
                continue
            v = [a.field.zero] * n
            for k, c in pairs:
                v[k] = c
            img = reduce(v)
            entry = tuple((k, val) for k, val in enumerate(img[c] for c in free) if val)
            if entry:
                table[(ai, bi)] = entry
    labels = tuple(a.label(c) for c in free) if a.labels else None
    if a.unity is not None:
        w0 = reduce(a.unity)
        unity = tuple(w0[c] for c in free)
    else:
        unity = _find_unity(a.field, m, table)
    target = _derived(a.field, m, table, labels, unity)
    proj_rows = []
    for i in range(n):
        ei = [a.field.zero] * n
        ei[i] = a.field.one
        w = reduce(ei)
        proj_rows.append(tuple(w[c] for c in free))
    projection = Mat(a.field, proj_rows, m)
    section = Mat(a.field, [
        [a.field.one if c == fc else a.field.zero for c in range(n)] for fc in free
    ], n)
    return QuotientMap(a, ideal, target, projection, section, free)


# ---------------------------------------------------------------------------
# Products, tensors, unitization, opposite
# ---------------------------------------------------------------------------


@dataclass
class DirectProduct:
    algebra: Algebra
    left: Algebra
    right: Algebra

    def embed_left(self, x: Element) -> Element:
        f = self.algebra.field
        return Element(self.algebra, tuple(x.coords) + (f.zero,) * self.right.dim)

    def embed_right(self, x: Element) -> Element:
        f = self.algebra.field
        return Element(self.algebra, (f.zero,) * self.left.dim + tuple(x.coords))

    def project_left(self, x: Element) -> Element:
        return Element(self.left, x.coords[: self.left.dim])

    def project_right(self, x: Element) -> Element:
        return Element(self.right, x.coords[self.left.dim :])


def direct_product(a: Algebra, b: Algebra) -> DirectProduct:
    """A x B with block-diagonal structure constants."""
    if a.field != b.field:
        raise FieldMismatch("direct product over different fields")
    n, m = a.dim, b.dim
    table = dict(a.table)
    for (i, j), pairs in b.table.items():
        table[(i + n, j + n)] = tuple((k + n, c) for k, c in pairs)
    labels = None
    if a.labels or b.labels:
        labels = tuple(a.label(i) for i in range(n)) + tuple(b.label(j) for j in range(m))
    unity = None
    if a.unity is not None and b.unity is not None:
        unity = tuple(a.unity) + tuple(b.unity)
    prod = _derived(a.field, n + m, table, labels, unity)
    return DirectProduct(prod, a, b)


def tensor_product(a: Algebra, b: Algebra) -> Algebra:
    """A (x) B with basis ordered left-factor major: (i, p) -> i*dim(B) + p."""
    if a.field != b.field:
        raise FieldMismatch("tensor product over different fields")
    f = a.field
    nb = b.dim
    table = {}
    for (i, j), pa in a.table.items():
        for (p, q), pb in b.table.items():
            entry = []
            for k, c in pa:
                for r, d in pb:
                    entry.append((k * nb + r, f.mul(c, d)))
            table[(i * nb + p, j * nb + q)] = tuple(sorted(entry))
    labels = None
    if a.labels or b.labels:
        labels = tuple(
            f"{a.label(i)}(x){b.label(p)}" for i in range(a.dim) for p in range(nb)
        )
    unity = None
    if a.unity is not None and b.unity is not None:
        unity = tuple(
            f.mul(a.unity[i], b.unity[p]) for i in range(a.dim) for p in range(nb)
        )
    return _derived(f, a.dim * nb, table, labels, unity)


def matrix_units_algebra(field: FieldSpec, n: int) -> Algebra:
    """M_n(F) on the matrix-unit basis e_pq, index p*n + q (0-based)."""
    table = {}
    one = field.one
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    if q == r:
                        table[(p * n + q, r * n + s)] = ((p * n + s, one),)
    labels = tuple(f"e{p + 1}{q + 1}" for p in range(n) for q in range(n))
    unity = tuple(one if p == q else field.zero for p in range(n) for q in range(n))
    return _derived(field, n * n, table, labels, unity)


def matrix_algebra(a: Algebra, n: int) -> Algebra:
    """n x n matrices over a, realized as a (x) M_n(F)."""
    if n < 1:
        raise DimensionMismatch("matrix size must be >= 1")
    return tensor_product(a, matrix_units_algebra(a.field, n))


@dataclass
class Unitization:
    """a with a unity adjoined as basis vector 0; a sits inside as an ideal."""

    algebra: Algebra
    original: Algebra

    def embed_vec(self, v):
        return (self.algebra.field.zero,) + tuple(v)

    def embed(self, x: Element) -> Element:
        return Element(self.algebra, self.embed_vec(x.coords))

    def strip_vec(self, v):
        # drops the adjoined-unity coordinate; caller must know it is zero
        return tuple(v[1:])


def unitization(a: Algebra) -> Unitization:
    """Adjoin a unity (also when a already has one; the result is dim+1)."""
    f = a.field
    one = f.one
    table = {(0, 0): ((0, one),)}
    for i in range(a.dim):
        table[(0, i + 1)] = ((i + 1, one),)
        table[(i + 1, 0)] = ((i + 1, one),)
    for (i, j), pairs in a.table.items():
        table[(i + 1, j + 1)] = tuple((k + 1, c) for k, c in pairs)
    labels = None
    if a.labels:
        labels = ("1",) + tuple(a.labels)
    unity = (one,) + (f.zero,) * a.dim
    alg = _derived(f, a.dim + 1, table, labels, unity)
    return Unitization(alg, a)


def opposite(a: Algebra) -> Algebra:
    """Same space, reversed multiplication: c_op[i][j] = c[j][i]."""
    table = {(j, i): pairs for (i, j), pairs in a.table.items()}
    return _derived(a.field, a.dim, table, a.labels, a.unity)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def is_commutative(a: Algebra) -> bool:
    for (i, j), pairs in a.table.items():
        if a.table.get((j, i), ()) != pairs:
            return False
    return True


def nilpotency_index(a: Algebra):
    """Smallest k with A^k = 0, or None if the power chain stalls above zero."""
    if a.dim == 0:
        return 1
    cur = [tuple(r) for r in Mat.identity(a.field, a.dim).rows]
    k = 1
    while cur:
        red = _make_reducer(a.field, a.dim)
        nxt = []
        for i in range(a.dim):
            for v in cur:
                w = a._basis_mul_vec(i, v)
                if w is not None:
                    r = red.insert(w)
                    if r is not None:
                        nxt.append(r)
        if len(nxt) == len(cur):
            return None  # A^{k+1} = A^k != 0
        cur = nxt
        k += 1
    return k


def is_nilpotent(a: Algebra) -> bool:
    return nilpotency_index(a) is not None
