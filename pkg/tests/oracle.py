"""Dense Fraction-matrix oracle used to cross-check structure-constant code.

Everything here multiplies honest n x n matrices entry by entry, so results
are independent of the sparse table machinery under test.
"""

from fractions import Fraction


def zeros(n):
    return [[Fraction(0)] * n for _ in range(n)]


def unit(n, p, q):
    m = zeros(n)
    m[p][q] = Fraction(1)
    return m


def identity(n):
    m = zeros(n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def mat_mul(a, b):
    n = len(a)
    out = zeros(n)
    for i in range(n):
        for k in range(n):
            if a[i][k]:
                for j in range(n):
                    if b[k][j]:
                        out[i][j] += a[i][k] * b[k][j]
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def commutator_m(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


class MatrixFamily:
    """A matrix algebra presented by an explicit list of dense basis matrices."""

    def __init__(self, n, basis, to_coords):
        self.n = n
        self.basis = basis
        self.dim = len(basis)
        self._to_coords = to_coords

    def coords_to_mat(self, coords):
        out = zeros(self.n)
        for c, b in zip(coords, self.basis):
            if c:
                out = mat_add(out, mat_scale(Fraction(c), b))
        return out

    def mat_to_coords(self, m):
        coords = self._to_coords(m)
        assert self.coords_to_mat(coords) == m, "matrix outside the family"
        return coords

    def table(self):
        """Structure constants computed by dense multiplication."""
        t = {}
        for i, bi in enumerate(self.basis):
            for j, bj in enumerate(self.basis):
                coords = self.mat_to_coords(mat_mul(bi, bj))
                pairs = tuple((k, c) for k, c in enumerate(coords) if c)
                if pairs:
                    t[(i, j)] = pairs
        return t


def full_family(n):
    cells = [(p, q) for p in range(n) for q in range(n)]
    basis = [unit(n, p, q) for p, q in cells]

    def to_coords(m):
        return [m[p][q] for p, q in cells]

    return MatrixFamily(n, basis, to_coords)


def upper_family(n):
    cells = [(p, q) for p in range(n) for q in range(p, n)]
    basis = [unit(n, p, q) for p, q in cells]

    def to_coords(m):
        return [m[p][q] for p, q in cells]

    return MatrixFamily(n, basis, to_coords)


def strict_upper_family(n):
    cells = [(p, q) for p in range(n) for q in range(p + 1, n)]
    basis = [unit(n, p, q) for p, q in cells]

    def to_coords(m):
        return [m[p][q] for p, q in cells]

    return MatrixFamily(n, basis, to_coords)


def scalar_plus_strict_family(n):
    cells = [(p, q) for p in range(n) for q in range(p + 1, n)]
    basis = [identity(n)] + [unit(n, p, q) for p, q in cells]

    def to_coords(m):
        return [m[0][0]] + [m[p][q] for p, q in cells]

    return MatrixFamily(n, basis, to_coords)
