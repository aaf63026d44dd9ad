"""Exact dense linear algebra over the rationals and prime fields.

Everything downstream (piece bases, hom spaces, syzygies, translates) reduces
to kernel/image/solve calls on small dense matrices, so this module is kept
dependency-free and fully deterministic: same input, same output basis.
"""

from fractions import Fraction
from math import lcm

from .errors import FieldMismatch, DimensionMismatch, InputError


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The coefficient field: the rationals ("Q") or a prime field ("Fp:<p>").

    Rational scalars are `Fraction` (always reduced, positive denominator);
    prime-field scalars are ints in [0, p).
    """

    _cache = {}

    def __new__(cls, tag):
        if tag in cls._cache:
            return cls._cache[tag]
        self = super().__new__(cls)
        if tag == "Q":
            self.p = None
        elif tag.startswith("Fp:"):
            p = int(tag[3:])
            if not _is_prime(p):
                raise InputError(f"modulus {p} is not prime")
            self.p = p
        else:
            raise InputError(f"unknown field tag {tag!r}")
        self.tag = tag
        cls._cache[tag] = self
        return self

    @property
    def is_rationals(self):
        return self.p is None

    @property
    def characteristic(self):
        return 0 if self.p is None else self.p

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def of(self, v):
        """Coerce an int, Fraction or string into a scalar of this field."""
        if isinstance(v, str):
            return self.parse(v)
        if self.p is None:
            return Fraction(v)
        return int(v) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p is None else pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, s):
        s = s.strip().replace("−", "-")
        if self.p is None:
            return Fraction(s)
        if "/" in s:
            raise InputError(f"prime-field scalar {s!r} must be a decimal residue")
        return int(s) % self.p

    def fmt(self, a):
        if self.p is None:
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def __repr__(self):
        return f"Field({self.tag})"


QQ = Field("Q")


def GF(p):
    return Field(f"Fp:{p}")


class Matrix:
    """An immutable dense matrix over one field, stored row-major.

    Zero-row and zero-column shapes are legal and occur constantly (graded
    pieces are very often 0-dimensional).
    """

    __slots__ = ("field", "rows", "cols", "data", "_rref")

    def __init__(self, field, rows, cols, entries):
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise DimensionMismatch(f"expected {rows}x{cols} entries")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(field.of(v) for v in row) for row in entries)
        self._rref = None

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero()
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, field, nrows, columns):
        return cls(field, nrows, len(columns), [[c[i] for c in columns] for i in range(nrows)])

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field is other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field.tag, self.rows, self.cols, self.data))

    def _check_field(self, other):
        if self.field is not other.field:
            raise FieldMismatch(f"mixed fields {self.field.tag} and {other.field.tag}")

    def __add__(self, other):
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      [[f.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other):
        return self + other.scale(self.field.of(-1))

    def scale(self, c):
        f = self.field
        return Matrix(f, self.rows, self.cols, [[f.mul(c, v) for v in row] for row in self.data])

    def __matmul__(self, other):
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        out = []
        bt = other.transpose().data
        for row in self.data:
            out.append([self._dot(f, row, col) for col in bt])
        return Matrix(f, self.rows, other.cols, out)

    @staticmethod
    def _dot(f, u, v):
        s = f.zero()
        for a, b in zip(u, v):
            if a and b:
                s = f.add(s, f.mul(a, b))
        return s

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def hstack(self, other):
        self._check_field(other)
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      [ra + rb for ra, rb in zip(self.data, other.data)])

    def vstack(self, other):
        self._check_field(other)
        if self.cols != other.cols:
            raise DimensionMismatch("vstack column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.data + other.data)

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def select_cols(self, js):
        return Matrix(self.field, self.rows, len(js), [[row[j] for j in js] for row in self.data])

    def is_zero(self):
        return all(not v for row in self.data for v in row)

    def rref(self):
        """Reduced row echelon form and pivot columns.

        Over the rationals the forward pass is fraction-free (Bareiss) on a
        denominator-cleared copy, which bounds intermediate entry growth; the
        pivot inside a column is the candidate of smallest numerator bit-size.
        Over a prime field, plain Gauss-Jordan with first-nonzero pivoting.
        """
        if self._rref is None:
            if self.field.is_rationals:
                self._rref = _rref_bareiss(self)
            else:
                self._rref = _rref_modp(self)
        return self._rref

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Matrix whose columns are the standard RREF kernel basis of self."""
        R, pivots = self.rref()
        f = self.field
        pivset = set(pivots)
        free = [j for j in range(self.cols) if j not in pivset]
        cols = []
        for fc in free:
            v = [f.zero()] * self.cols
            v[fc] = f.one()
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(R.data[r][fc])
            cols.append(v)
        return Matrix.from_cols(f, self.cols, cols)

    def image_basis(self):
        """The pivot columns of self: a basis of the column space."""
        _, pivots = self.rref()
        return self.select_cols(list(pivots))

    def solve(self, B):
        """Return X with self @ X = B, or None if the system is inconsistent.

        Free variables are set to zero, so the solution is deterministic.
        """
        self._check_field(B)
        if B.rows != self.rows:
            raise DimensionMismatch("solve: right-hand side row mismatch")
        f = self.field
        aug = self.hstack(B)
        R, pivots = aug.rref()
        n = self.cols
        for r in range(len(pivots)):
            if pivots[r] >= n:
                return None
        cols = []
        for k in range(B.cols):
            x = [f.zero()] * n
            for r, pc in enumerate(pivots):
                x[pc] = R.data[r][n + k]
            cols.append(x)
        return Matrix.from_cols(f, n, cols)

    def to_lists(self):
        return [list(row) for row in self.data]

    def fmt(self):
        f = self.field
        return [[f.fmt(v) for v in row] for row in self.data]

    def __repr__(self):
        return f"Matrix({self.field.tag}, {self.rows}x{self.cols})"


def kernel_image(A):
    """(kernel basis, image basis, rank); rank + kernel columns = cols."""
    ker = A.kernel_basis()
    im = A.image_basis()
    return ker, im, A.rank()


def _rref_modp(A):
    f = A.field
    m = [list(row) for row in A.data]
    rows, cols = A.rows, A.cols
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = f.inv(m[r][c])
        m[r] = [f.mul(inv, v) for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                q = m[i][c]
                m[i] = [f.sub(a, f.mul(q, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return Matrix(f, rows, cols, m), tuple(pivots)


def _rref_bareiss(A):
    # Forward pass: integer fraction-free elimination on denominator-cleared
    # rows; entries stay bounded by minors of the cleared matrix.
    rows, cols = A.rows, A.cols
    m = []
    for row in A.data:
        mult = lcm(*(v.denominator for v in row)) if row else 1
        m.append([int(v * mult) for v in row])
    perm = list(range(rows))
    pivots = []
    prev = 1
    r = 0
    for c in range(cols):
        cand = [i for i in range(r, rows) if m[i][c]]
        if not cand:
            continue
        pr = min(cand, key=lambda i: (abs(m[i][c]).bit_length(), i))
        m[r], m[pr] = m[pr], m[r]
        perm[r], perm[pr] = perm[pr], perm[r]
        for i in range(r + 1, rows):
            if any(m[i][c:]):
                piv = m[r][c]
                vic = m[i][c]
                mi, mr = m[i], m[r]
                for j in range(c, cols):
                    mi[j] = (piv * mi[j] - vic * mr[j]) // prev
        prev = m[r][c]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    # Back substitution with exact rationals to reach reduced form.
    q = [[Fraction(v) for v in row] for row in m]
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        piv = q[r][c]
        q[r] = [v / piv for v in q[r]]
        for i in range(r):
            factor = q[i][c]
            if factor:
                q[i] = [a - factor * b for a, b in zip(q[i], q[r])]
    return Matrix(QQ, rows, cols, q), tuple(pivots)


def charpoly(A):
    """Characteristic polynomial of a square matrix, low-degree-first.

    Samuelson-Berkowitz: division-free, so it is uniform over Q and F_p.
    Returns coefficients of det(tI - A).
    """
    if A.rows != A.cols:
        raise DimensionMismatch("charpoly needs a square matrix")
    f = A.field
    n = A.rows
    if n == 0:
        return [f.one()]
    # vectors are polynomials low-first; iteratively build via Toeplitz products
    poly = [f.neg(A.data[0][0]), f.one()]
    for k in range(1, n):
        a = A.data[k][k]
        R = [A.data[k][j] for j in range(k)]
        C = [A.data[i][k] for i in range(k)]
        sub = [[A.data[i][j] for j in range(k)] for i in range(k)]
        # t-column of the Toeplitz matrix: [-a, 1] then -R S^i C
        tcol = [f.neg(a), f.one()]
        vec = C
        for _ in range(k):
            s = f.zero()
            for x, y in zip(R, vec):
                if x and y:
                    s = f.add(s, f.mul(x, y))
            tcol.insert(0, f.neg(s))
            nxt = []
            for i in range(k):
                acc = f.zero()
                for j in range(k):
                    if sub[i][j] and vec[j]:
                        acc = f.add(acc, f.mul(sub[i][j], vec[j]))
                nxt.append(acc)
            vec = nxt
        # multiply: new = tcol-Toeplitz applied to old poly
        new = [f.zero()] * (len(poly) + 1)
        for i, c in enumerate(poly):
            if not c:
                continue
            for j, t in enumerate(tcol):
                if t:
                    idx = i + j - k
                    if 0 <= idx <= len(poly):
                        new[idx] = f.add(new[idx], f.mul(c, t))
        poly = new
    return poly


def poly_eval_matrix(poly, A):
    """Evaluate a polynomial (low-first coefficients) at a square matrix."""
    f = A.field
    acc = Matrix.zeros(f, A.rows, A.rows)
    power = Matrix.identity(f, A.rows)
    for c in poly:
        if c:
            acc = acc + power.scale(c)
        power = power @ A
    return acc


def poly_eval(poly, x, field):
    acc = field.zero()
    for c in reversed(poly):
        acc = field.add(field.mul(acc, x), c)
    return acc


def roots_in_field(poly, field, scan_limit=4096):
    """Roots of a polynomial lying in the base field, ascending.

    Over F_p all residues are scanned (p must stay below scan_limit).  Over Q
    the rational-root test is applied to the cleared-denominator polynomial.
    """
    while poly and not poly[-1]:
        poly = poly[:-1]
    if len(poly) <= 1:
        return []
    if not field.is_rationals:
        if field.p > scan_limit:
            return []
        return [x for x in range(field.p) if not poly_eval(poly, x, field)]
    mult = lcm(*(c.denominator for c in poly))
    ipoly = [int(c * mult) for c in poly]
    while ipoly and ipoly[0] == 0:
        ipoly = ipoly[1:]
    # dropped factors of t correspond to the root 0
    roots = set()
    if len(ipoly) < len(poly):
        roots.add(Fraction(0))
    if len(ipoly) > 1:
        a0, an = abs(ipoly[0]), abs(ipoly[-1])
        for p in _bounded_divisors(a0, scan_limit):
            for q in _bounded_divisors(an, scan_limit):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if not poly_eval(poly, cand, field):
                        roots.add(cand)
    return sorted(roots)


def _bounded_divisors(n, limit):
    out = []
    d = 1
    while d * d <= n and len(out) < limit:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)[:limit]
