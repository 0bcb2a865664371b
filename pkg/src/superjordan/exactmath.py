"""Exact rational scalars, polynomials and dense matrices.

Everything here works over ``fractions.Fraction``; nothing ever rounds.
Vectors are plain tuples of fractions, matrices are immutable :class:`Mat`
values.  Subspaces are kept in reduced row echelon form so that two bases of
the same space compare equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import ShapeError

Rational = Fraction
Vector = tuple

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` with an optional leading minus and no spaces."""
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-as_fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading
        return Poly(c / lead for c in self.coeffs)

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(p) -> Poly:
    return p if isinstance(p, Poly) else Poly.constant(p)


# ---------------------------------------------------------------------------
# matrices


class Mat:
    """Immutable dense matrix of fractions."""

    __slots__ = ("nrows", "ncols", "data", "_hash")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != ncols:
                raise ShapeError("ragged matrix rows")
        self.nrows = len(data)
        self.ncols = ncols
        self.data = data
        self._hash = None

    # constructors
    @classmethod
    def _raw(cls, data, ncols):
        m = object.__new__(cls)
        m.data = data
        m.nrows = len(data)
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Mat":
        ncols = nrows if ncols is None else ncols
        return cls._raw(tuple((ZERO,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def unit(cls, n: int, i: int, j: int, m: int | None = None) -> "Mat":
        """Matrix unit with a single 1 at 0-based position (i, j)."""
        m = n if m is None else m
        return cls._raw(tuple(tuple(ONE if (r, c) == (i, j) else ZERO for c in range(m)) for r in range(n)), m)

    @classmethod
    def diag(cls, entries: Sequence) -> "Mat":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Mat":
        if not columns:
            return cls._raw(tuple(() for _ in range(nrows or 0)), 0)
        n = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)])

    @classmethod
    def from_flat(cls, nrows: int, ncols: int, entries: Sequence) -> "Mat":
        if len(entries) != nrows * ncols:
            raise ShapeError("entry count does not match shape")
        return cls([entries[i * ncols:(i + 1) * ncols] for i in range(nrows)], ncols)

    @classmethod
    def block_diag(cls, *blocks: "Mat") -> "Mat":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = [[ZERO] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[r0 + i][c0 + j] = b.data[i][j]
            r0 += b.nrows
            c0 += b.ncols
        return cls(rows, m)

    # accessors
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def entries(self) -> tuple:
        return tuple(x for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.ncols)]

    def tolist(self) -> list:
        return [list(r) for r in self.data]

    def __eq__(self, other):
        if isinstance(other, Mat):
            return self.ncols == other.ncols and self.data == other.data
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ncols, self.data))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self.data)
        return f"Mat[{body}]"

    # arithmetic
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)), self.ncols)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        return Mat._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)), self.ncols)

    def __neg__(self) -> "Mat":
        return Mat._raw(tuple(tuple(-a for a in r) for r in self.data), self.ncols)

    def scale(self, c) -> "Mat":
        c = as_fraction(c)
        return Mat._raw(tuple(tuple(c * a for a in r) for r in self.data), self.ncols)

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            # multiply integer numerators over one common denominator per factor
            da, A = self._integral()
            db, B = other._integral()
            cols = list(zip(*B)) if other.nrows else [()] * other.ncols
            den = da * db
            out = []
            for r in A:
                nz = [(k, a) for k, a in enumerate(r) if a]
                out.append(tuple(Fraction(sum(a * col[k] for k, a in nz), den) if nz else ZERO for col in cols))
            return Mat._raw(tuple(out), other.ncols)
        return self.scale(other)

    def _integral(self) -> tuple[int, list]:
        den = lcm(*(x.denominator for r in self.data for x in r)) if self.nrows and self.ncols else 1
        return den, [[x.numerator * (den // x.denominator) for x in r] for r in self.data]

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other):
        return self * other

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise ShapeError("vector length does not match matrix")
        return tuple(sum((a * x for a, x in zip(r, v) if a and x), ZERO) for r in self.data)

    def __pow__(self, k: int) -> "Mat":
        if not self.is_square():
            raise ShapeError("power of a non-square matrix")
        result = Mat.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def transpose(self) -> "Mat":
        return Mat._raw(tuple(zip(*self.data)) if self.nrows else tuple(), self.nrows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def trace(self):
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.nrows)), ZERO)

    def rank(self) -> int:
        return len(rref(self.data)[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise ShapeError("determinant of a non-square matrix")
        a = [list(r) for r in self.data]
        n = self.nrows
        d = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c] != 0), None)
            if p is None:
                return ZERO
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            piv = a[c][c]
            d *= piv
            for i in range(c + 1, n):
                f = a[i][c]
                if f:
                    f /= piv
                    ri, rc = a[i], a[c]
                    for j in range(c, n):
                        ri[j] -= f * rc[j]
        return d

    def inverse(self) -> "Mat":
        if not self.is_square():
            raise ShapeError("inverse of a non-square matrix")
        n = self.nrows
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.data)]
        red, piv = rref(aug)
        if len(piv) < n or piv[n - 1] != n - 1:
            raise ZeroDivisionError("matrix is singular")
        return Mat([row[n:] for row in red[:n]])

    def is_invertible(self) -> bool:
        return self.is_square() and self.det() != 0

    def conjugate(self, P: "Mat", P_inv: "Mat | None" = None) -> "Mat":
        """Return P^-1 * self * P."""
        P_inv = P.inverse() if P_inv is None else P_inv
        return P_inv * self * P

    def flat(self) -> tuple:
        return self.entries


def jordan_block(lam, n: int) -> Mat:
    """Upper Jordan block: ``lam`` on the diagonal, ones just above it."""
    lam = as_fraction(lam)
    return Mat([[lam if i == j else (ONE if j == i + 1 else ZERO) for j in range(n)] for i in range(n)])


def E12(n: int = 2) -> Mat:
    return Mat.unit(n, 0, 1)


# ---------------------------------------------------------------------------
# echelon machinery


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a list of rows; returns (nonzero rows, pivots)."""
    a = [[as_fraction(x) for x in r] for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = ONE / a[r][c]
        pr = [x * inv for x in a[r]]
        a[r] = pr
        for i in range(len(a)):
            if i != r:
                f = a[i][c]
                if f:
                    ai = a[i]
                    for j in range(c, ncols):
                        if pr[j]:
                            ai[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return a[:r], pivots


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace of Q^n."""

    def __init__(self, dim: int, vectors: Iterable[Sequence] = ()):
        self.dim = dim
        self._rows: dict[int, list[Fraction]] = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        w = [as_fraction(x) for x in v]
        if len(w) != self.dim:
            raise ShapeError("vector length does not match ambient dimension")
        for p, row in self._rows.items():
            f = w[p]
            if f:
                for j, x in enumerate(row):
                    if x:
                        w[j] -= f * x
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Add ``v``; return True when it enlarged the span."""
        w = self.reduce(v)
        p = next((j for j, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = ONE / w[p]
        w = [x * inv for x in w]
        for q, row in self._rows.items():
            f = row[p]
            if f:
                for j, x in enumerate(w):
                    if x:
                        row[j] -= f * x
        self._rows[p] = w
        return True

    def basis(self) -> list[tuple]:
        return [tuple(self._rows[p]) for p in sorted(self._rows)]

    def pivots(self) -> list[int]:
        return sorted(self._rows)


def echelon_basis(vectors: Iterable[Sequence], dim: int) -> list[tuple]:
    return Echelon(dim, vectors).basis()


def kernel_basis(M: Mat) -> list[tuple]:
    """Basis of the right kernel of ``M``, in reduced echelon form."""
    n = M.ncols
    red, pivots = rref(M.data)
    free = [j for j in range(n) if j not in set(pivots)]
    vecs = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        vecs.append(v)
    return echelon_basis(vecs, n)


def rank(M: Mat) -> int:
    return M.rank()


# ---------------------------------------------------------------------------
# spectra


def char_poly(M: Mat) -> Poly:
    """det(xI - M) by the Faddeev-LeVerrier recursion (exact in characteristic 0)."""
    if not M.is_square():
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = M.nrows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    I = Mat.identity(n)
    N = Mat.zeros(n)
    for k in range(1, n + 1):
        N = M * N + I.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(M * N).trace() / k
    return Poly(coeffs)


def _iroot_ceil(x: int, k: int) -> int:
    """Smallest integer r >= 0 with r**k >= x."""
    if x <= 0:
        return 0
    r = 1 << ((x.bit_length() + k - 1) // k)
    # Newton iteration from above converges to floor root
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r ** k < x:
        r += 1
    return r


def _integer_divisors_upto(n: int, bound: int) -> list[int]:
    n = abs(n)
    if bound * bound <= n:
        return [d for d in range(1, bound + 1) if n % d == 0]
    small = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                small.append(n // d)
        d += 1
    return sorted(x for x in small if x <= bound)


def rational_eigenvalues(p: Poly) -> tuple[dict[Fraction, int], Poly]:
    """Split off all rational roots of ``p`` with multiplicities.

    Returns ``(roots, remainder)`` where ``remainder`` is monic with no rational
    root and ``prod (x - r)^m * remainder == monic(p)``.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no well-defined roots")
    rest = p.monic()
    roots: dict[Fraction, int] = {}

    def strip(r):
        nonlocal rest
        lin = Poly((-r, 1))
        while rest.degree >= 1:
            q, rem = divmod(rest, lin)
            if not rem.is_zero():
                break
            rest = q
            roots[r] = roots.get(r, 0) + 1

    strip(ZERO)
    if rest.degree >= 1:
        # candidates come from the square-free part, whose coefficients stay small
        sf = rest // _poly_gcd(rest, _derivative(rest))
        for r in _rational_roots_squarefree(sf):
            strip(r)
    return dict(sorted(roots.items())), rest



def _derivative(p: Poly) -> Poly:
    return Poly([i * c for i, c in enumerate(p.coeffs)][1:])


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _rational_roots_squarefree(p: Poly) -> list[Fraction]:
    # substitute x = y / D so that the polynomial becomes monic integral;
    # its rational roots are then integers dividing the constant term
    D = 1
    for c in p.coeffs:
        D = D * c.denominator // _gcd(D, c.denominator)
    n = p.degree
    ints = [int(p.coeffs[i] * D ** (n - i)) for i in range(n + 1)]
    bound = 0
    for k in range(1, n + 1):
        c = abs(ints[n - k])
        if c:
            bound = max(bound, _iroot_ceil(c, k))
    bound = 2 * bound + 1
    out = []
    for y in _integer_divisors_upto(ints[0], bound):
        for cand in (y, -y):
            r = Fraction(cand, D)
            if p(r) == 0:
                out.append(r)
    return out

def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def generalized_eigenspace(M: Mat, lam) -> list[tuple]:
    """Basis of ker (M - lam I)^n, n = size of M."""
    if not M.is_square():
        raise ShapeError("generalized eigenspace of a non-square matrix")
    n = M.nrows
    shifted = M - Mat.identity(n).scale(as_fraction(lam))
    return kernel_basis(shifted ** n)


def eigenspace(M: Mat, lam) -> list[tuple]:
    n = M.nrows
    return kernel_basis(M - Mat.identity(n).scale(as_fraction(lam)))


def square_zero_standard_basis(X: Mat) -> tuple[Mat, int, int]:
    """Columns of P put X into r copies of E12(2) followed by a z x z zero block."""
    if not X.is_square():
        raise ShapeError("square-zero normal form needs a square matrix")
    if not (X * X).is_zero():
        raise ValueError("matrix does not square to zero")
    n = X.nrows
    _, pivots = rref(X.data)  # pivot columns are independent columns of X
    r = len(pivots)
    cols = []
    image = Echelon(n)
    for j in pivots:
        u = tuple(ONE if i == j else ZERO for i in range(n))
        w = X.col(j)
        image.add(w)
        cols.extend([w, u])
    extra = []
    for k in kernel_basis(X):
        if image.add(k):
            extra.append(k)
    cols.extend(extra)
    z = len(extra)
    assert 2 * r + z == n
    return Mat.from_columns(cols), r, z


# ---------------------------------------------------------------------------
# generic invertibility of a matrix space


def _poly_mul_linear(poly: dict, lin: dict) -> dict:
    out: dict = {}
    for mono, c in poly.items():
        for var, a in lin.items():
            key = tuple(sorted(mono + (var,)))
            out[key] = out.get(key, ZERO) + c * a
    return {k: v for k, v in out.items() if v}


def symbolic_det(H: Sequence[Mat]) -> dict:
    """det(sum c_i H_i) as a sparse polynomial {sorted variable tuple: coeff}.

    Expansion column by column over subsets of used rows.
    """
    n = H[0].nrows
    lin = [[{k: h.data[i][j] for k, h in enumerate(H) if h.data[i][j]} for j in range(n)] for i in range(n)]
    states: dict[frozenset, dict] = {frozenset(): {(): ONE}}
    for j in range(n):
        nxt: dict[frozenset, dict] = {}
        for used, poly in states.items():
            for i in range(n):
                if i in used or not lin[i][j]:
                    continue
                flips = sum(1 for u in used if u > i)
                term = _poly_mul_linear(poly, lin[i][j])
                if flips % 2:
                    term = {k: -v for k, v in term.items()}
                key = used | {i}
                acc = nxt.setdefault(key, {})
                for m, c in term.items():
                    acc[m] = acc.get(m, ZERO) + c
        states = {k: {m: c for m, c in v.items() if c} for k, v in nxt.items()}
        states = {k: v for k, v in states.items() if v}
        if not states:
            return {}
    return states.get(frozenset(range(n)), {})


def _combination(H: Sequence[Mat], coeffs: Sequence) -> Mat:
    n = H[0].nrows
    acc = [[ZERO] * n for _ in range(n)]
    for h, c in zip(H, coeffs):
        if c:
            for i, row in enumerate(h.data):
                for j, x in enumerate(row):
                    if x:
                        acc[i][j] += c * x
    return Mat(acc)


def invertible_combination(H: Sequence[Mat]) -> Mat | None:
    """Search for an invertible member of span(H); None if span(H) has none.

    Positive answers are certified by a nonzero determinant.  Negative answers
    are certified by exact symbolic expansion of det(sum c_i H_i).
    """
    H = list(H)
    if not H:
        return None
    n = H[0].nrows
    for h in H:
        if h.shape != (n, n):
            raise ShapeError("matrices in a generic-invertibility query must share one square size")
    if n == 0:
        return Mat.identity(0)
    for h in H:
        if h.det() != 0:
            return h
    # a common kernel or cokernel vector rules out invertibility immediately
    stacked = Mat([row for h in H for row in h.data])
    if stacked.rank() < n:
        return None
    side = Mat([[h.data[i][j] for h in H for j in range(n)] for i in range(n)])
    if side.rank() < n:
        return None
    k = len(H)
    # moment-curve points (1, t, t^2, ...); det along the curve has degree <= n(k-1)
    for t in range(1, n * (k - 1) + 2):
        M = _combination(H, [Fraction(t) ** i for i in range(k)])
        if M.det() != 0:
            return M
    # the curve can miss a nonzero determinant polynomial; decide exactly
    poly = symbolic_det(H)
    if not poly:
        return None
    # a nonzero polynomial of total degree <= n has a non-root on {0..n}^k;
    # find one by fixing variables one at a time
    point = _nonroot(poly, k, n)
    return _combination(H, point)


def _nonroot(poly: dict, k: int, deg: int) -> list[Fraction]:
    point: list[Fraction] = []
    current = poly
    for var in range(k):
        for value in range(deg + 1):
            sub = _substitute(current, var, Fraction(value))
            if sub:
                point.append(Fraction(value))
                current = sub
                break
        else:  # pragma: no cover - impossible for a nonzero polynomial
            raise AssertionError("no non-root found")
    return point


def _substitute(poly: dict, var: int, value: Fraction) -> dict:
    out: dict = {}
    for mono, c in poly.items():
        e = mono.count(var)
        rest = tuple(v for v in mono if v != var)
        out[rest] = out.get(rest, ZERO) + c * value ** e
    return {m: c for m, c in out.items() if c}


def generic_invertibility(H: Sequence[Mat]) -> bool:
    """True iff some rational linear combination of the matrices is invertible."""
    return invertible_combination(H) is not None


__all__ = [
    "Rational",
    "Poly",
    "Mat",
    "Echelon",
    "E12",
    "jordan_block",
    "parse_rational",
    "format_rational",
    "as_fraction",
    "rref",
    "echelon_basis",
    "kernel_basis",
    "rank",
    "char_poly",
    "rational_eigenvalues",
    "generalized_eigenspace",
    "eigenspace",
    "square_zero_standard_basis",
    "symbolic_det",
    "invertible_combination",
    "generic_invertibility",
]
