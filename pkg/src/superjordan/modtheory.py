"""Finite-dimensional modules over the super Jordan plane.

A module is a pair of square matrices (X1, X2) with X1^2 = 0 and
X2^2 X1 = X1 X2^2 + X1 X2 X1.  This module computes the usual structural
data: the kernel V0 of X1, generated submodules, the generalized eigenspace
splitting along T = X2^2, Hom and End spaces, Jacobson radicals, composition
series, indecomposability and isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ClosureViolated, NonsplitSpectrum, RelationViolated, ShapeError
from .exactmath import (
    Echelon,
    Mat,
    as_fraction,
    char_poly,
    generalized_eigenspace,
    invertible_combination,
    kernel_basis,
    rational_eigenvalues,
    rref,
)

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    relation: str | None = None
    witness: tuple | None = None  # (row, col, value), 0-based

    def __bool__(self):
        return self.valid


def _first_nonzero(M: Mat):
    for i, row in enumerate(M.data):
        for j, x in enumerate(row):
            if x:
                return (i, j, x)
    return None


def check_representation(X1: Mat, X2: Mat) -> ValidityReport:
    """Check x1^2 = 0 and x2^2 x1 = x1 x2^2 + x1 x2 x1 on a pair of matrices."""
    if not (X1.is_square() and X2.is_square()) or X1.shape != X2.shape:
        raise ShapeError(f"X1 and X2 must be square of equal size, got {X1.shape} and {X2.shape}")
    w = _first_nonzero(X1 * X1)
    if w:
        return ValidityReport(False, "x1^2 = 0", w)
    X2X1 = X2 * X1
    rel = X2 * X2X1 - X1 * X2 * X2 - X1 * X2X1
    w = _first_nonzero(rel)
    if w:
        return ValidityReport(False, "x2^2 x1 = x1 x2^2 + x1 x2 x1", w)
    return ValidityReport(True)


@dataclass(frozen=True)
class Representation:
    """A module given by the action matrices of x1 and x2.

    Construction validates the defining relations and raises
    :class:`RelationViolated` when they fail.
    """

    X1: Mat
    X2: Mat

    def __post_init__(self):
        if not isinstance(self.X1, Mat):
            object.__setattr__(self, "X1", Mat(self.X1))
        if not isinstance(self.X2, Mat):
            object.__setattr__(self, "X2", Mat(self.X2))
        if self.X1.nrows == 0:
            raise ShapeError("representations of dimension 0 are not supported")
        report = check_representation(self.X1, self.X2)
        if not report:
            i, j, x = report.witness
            raise RelationViolated(f"{report.relation} fails: entry ({i + 1},{j + 1}) is {x}")

    @property
    def n(self) -> int:
        return self.X1.nrows

    @property
    def S(self) -> Mat:
        return self.X1 * self.X2 + self.X2 * self.X1

    @property
    def T(self) -> Mat:
        return self.X2 * self.X2

    def conjugate(self, P: Mat) -> "Representation":
        """The same module written in the basis given by the columns of P."""
        Pi = P.inverse()
        return Representation(Pi * self.X1 * P, Pi * self.X2 * P)

    def __add__(self, other: "Representation") -> "Representation":
        return direct_sum(self, other)

    def __repr__(self):
        return f"Representation(n={self.n}, X1={self.X1!r}, X2={self.X2!r})"


def direct_sum(*reps: Representation) -> Representation:
    return Representation(Mat.block_diag(*(r.X1 for r in reps)), Mat.block_diag(*(r.X2 for r in reps)))


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of Q^n stored by its reduced row echelon basis."""

    __slots__ = ("ambient", "basis", "_pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        ech = Echelon(ambient, vectors)
        self.ambient = ambient
        self.basis = tuple(ech.basis())
        self._pivots = tuple(ech.pivots())

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, [tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return self._pivots

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if isinstance(other, Subspace):
            return self.ambient == other.ambient and self.basis == other.basis
        return NotImplemented

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(ambient={self.ambient}, dim={self.dim})"

    def contains(self, v: Sequence) -> bool:
        return Echelon(self.ambient, self.basis).contains(v)

    def __contains__(self, v):
        return self.contains(v)

    def issubset(self, other: "Subspace") -> bool:
        ech = Echelon(other.ambient, other.basis)
        return all(ech.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self.basis or not other.basis:
            return Subspace(self.ambient)
        k = self.dim
        # sum a_i u_i - sum b_j w_j = 0
        cols = list(self.basis) + [tuple(-x for x in w) for w in other.basis]
        M = Mat.from_columns(cols)
        vecs = []
        for sol in kernel_basis(M):
            v = [ZERO] * self.ambient
            for a, u in zip(sol[:k], self.basis):
                if a:
                    for i, x in enumerate(u):
                        v[i] += a * x
            vecs.append(v)
        return Subspace(self.ambient, vecs)

    def image(self, M: Mat) -> "Subspace":
        return Subspace(M.nrows, [M.apply(v) for v in self.basis])

    def is_invariant(self, M: Mat) -> bool:
        ech = Echelon(self.ambient, self.basis)
        return all(ech.contains(M.apply(v)) for v in self.basis)

    def coordinates(self, v: Sequence) -> tuple:
        """Coordinates of v in the echelon basis; raises if v is outside."""
        coords = tuple(as_fraction(v[p]) for p in self._pivots)
        rebuilt = [ZERO] * self.ambient
        for c, u in zip(coords, self.basis):
            if c:
                for i, x in enumerate(u):
                    rebuilt[i] += c * x
        if any(as_fraction(a) != b for a, b in zip(v, rebuilt)):
            raise ValueError("vector does not lie in the subspace")
        return coords

    def basis_matrix(self) -> Mat:
        """Matrix whose columns are the basis vectors."""
        if not self.basis:
            return Mat.zeros(self.ambient, 0)
        return Mat.from_columns(self.basis)


def restrict(R: Representation, W: Subspace) -> Representation:
    """The action on an invariant subspace, in its echelon basis."""
    if W.dim == 0:
        raise ShapeError("cannot restrict to the zero subspace")

    def block(X):
        cols = []
        for v in W.basis:
            try:
                cols.append(W.coordinates(X.apply(v)))
            except ValueError:
                raise ClosureViolated("subspace is not invariant under the action") from None
        return Mat.from_columns(cols)

    return Representation(block(R.X1), block(R.X2))


def quotient(R: Representation, W: Subspace) -> tuple[Representation, list[int]]:
    """Action on V/W in the basis of standard vectors outside W's pivots.

    Returns the quotient module and the indices of those standard vectors.
    """
    if not (W.is_invariant(R.X1) and W.is_invariant(R.X2)):
        raise ClosureViolated("quotient by a subspace that is not a submodule")
    comp = [j for j in range(R.n) if j not in set(W.pivots)]
    ech = Echelon(R.n, W.basis)

    def block(X):
        rows = [[ZERO] * len(comp) for _ in comp]
        for jj, j in enumerate(comp):
            red = ech.reduce(X.col(j))
            for ii, i in enumerate(comp):
                rows[ii][jj] = red[i]
        return Mat(rows, len(comp))

    return Representation(block(R.X1), block(R.X2)), comp


# ---------------------------------------------------------------------------
# submodules


def v0_basis(R: Representation) -> Subspace:
    """V0 = ker X1; never zero, stable under S and T."""
    V0 = Subspace(R.n, kernel_basis(R.X1))
    assert V0.dim > 0
    return V0


def submodule_generated(R: Representation, vectors: Iterable[Sequence]) -> Subspace:
    """Smallest subspace containing the vectors and stable under X1 and X2."""
    ech = Echelon(R.n)
    frontier = [v for v in vectors if ech.add(v)]
    while frontier:
        nxt = []
        for v in frontier:
            for X in (R.X1, R.X2):
                w = X.apply(v)
                if ech.add(w):
                    nxt.append(w)
        frontier = nxt
    return Subspace(R.n, ech.basis())


def is_submodule(R: Representation, W: Subspace) -> bool:
    return W.is_invariant(R.X1) and W.is_invariant(R.X2)


@dataclass(frozen=True)
class V0Submodules:
    V0: Subspace
    W: Subspace
    U: Subspace
    W_closed: bool
    U_closed: bool
    eigenvector: tuple
    s_eigenvalue: Fraction
    t_eigenvalue: Fraction

    @property
    def ok(self) -> bool:
        return self.W_closed and self.U_closed


def v0_submodules(R: Representation) -> V0Submodules:
    """W = X2 V0 ∩ V0 and U = X2 V0 + V0, with a common S,T eigenvector in V0.

    The eigenvector is taken in ker S ∩ V0, which is stable under T because
    S T = T S - S^2.
    """
    V0 = v0_basis(R)
    X2V0 = V0.image(R.X2)
    W = X2V0.intersect(V0)
    U = X2V0 + V0
    W_closed = is_submodule(R, W)
    U_closed = is_submodule(R, U)

    S, T = R.S, R.T
    K = Subspace(R.n, kernel_basis(S)).intersect(V0)
    if K.dim == 0:  # pragma: no cover - S is nilpotent on V0
        raise AssertionError("ker S ∩ V0 is zero")
    TK = restrict_matrix(T, K)
    roots, rest = rational_eigenvalues(char_poly(TK))
    if not roots:
        raise NonsplitSpectrum("T has no rational eigenvalue on ker S ∩ V0", rest)
    tau = next(iter(roots))
    coords = kernel_basis(TK - Mat.identity(K.dim).scale(tau))[0]
    v = [ZERO] * R.n
    for c, u in zip(coords, K.basis):
        for i, x in enumerate(u):
            v[i] += c * x
    v = tuple(v)
    if any(S.apply(v)) or T.apply(v) != tuple(tau * x for x in v):  # pragma: no cover
        raise AssertionError("simultaneous eigenvector check failed")
    return V0Submodules(V0, W, U, W_closed, U_closed, v, ZERO, tau)


def restrict_matrix(M: Mat, W: Subspace) -> Mat:
    """Matrix of M on an M-invariant subspace, in W's echelon basis."""
    return Mat.from_columns([W.coordinates(M.apply(v)) for v in W.basis])


# ---------------------------------------------------------------------------
# splitting along T


def _split_spectrum(M: Mat, what: str) -> dict:
    roots, rest = rational_eigenvalues(char_poly(M))
    if rest.degree >= 1:
        raise NonsplitSpectrum(f"nonsplit spectrum of {what}: factor {rest}", rest)
    return roots


def decompose_by_T(R: Representation) -> list[tuple[Subspace, Representation]]:
    """Split V into the generalized eigenspaces of T = X2^2.

    Each summand is a submodule; the list is ordered by eigenvalue.
    """
    T = R.T
    roots = _split_spectrum(T, "T")
    out = []
    for lam in roots:
        Wl = Subspace(R.n, generalized_eigenspace(T, lam))
        out.append((Wl, restrict(R, Wl)))
    return out


def t_eigenvalues(R: Representation) -> list:
    return list(_split_spectrum(R.T, "T"))


# ---------------------------------------------------------------------------
# Hom and End


@dataclass(frozen=True)
class HomBasis:
    source: Representation
    target: Representation
    basis: tuple

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)


def intertwiner_equations(A: Representation, B: Representation) -> Mat:
    """Coefficient matrix of H X^A - X^B H = 0 in the unknowns vec(H), row-major."""
    n, m = A.n, B.n
    rows = []
    for XA, XB in ((A.X1, B.X1), (A.X2, B.X2)):
        for i in range(m):
            for j in range(n):
                row = [ZERO] * (m * n)
                for k in range(n):
                    c = XA.data[k][j]
                    if c:
                        row[i * n + k] += c
                for k in range(m):
                    c = XB.data[i][k]
                    if c:
                        row[k * n + j] -= c
                if any(row):
                    rows.append(row)
    if not rows:
        rows = [[ZERO] * (m * n)]
    return Mat(rows, m * n)


def hom_space(A: Representation, B: Representation) -> HomBasis:
    """Basis of the module maps A -> B (matrices of shape dim B x dim A)."""
    sols = kernel_basis(intertwiner_equations(A, B))
    return HomBasis(A, B, tuple(Mat.from_flat(B.n, A.n, v) for v in sols))


@dataclass(frozen=True)
class MatrixAlgebra:
    n: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, M: Mat) -> bool:
        return Echelon(self.n * self.n, [b.flat() for b in self.basis]).contains(M.flat())


def generated_matrix_algebra(gens: Sequence[Mat], n: int | None = None) -> MatrixAlgebra:
    """Unital algebra generated by square matrices of one size."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("size is required when no generators are given")
        n = gens[0].nrows
    for g in gens:
        if g.shape != (n, n):
            raise ShapeError("generators must be square of equal size")
    ech = Echelon(n * n)
    I = Mat.identity(n)
    ech.add(I.flat())
    found = [I]
    frontier = [I]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                p = g * w
                if ech.add(p.flat()):
                    nxt.append(p)
                    found.append(p)
        frontier = nxt
    basis = tuple(Mat.from_flat(n, n, v) for v in ech.basis())
    return MatrixAlgebra(n, basis)


def endomorphism_algebra(R: Representation) -> MatrixAlgebra:
    return MatrixAlgebra(R.n, hom_space(R, R).basis)


@dataclass(frozen=True)
class Radical:
    algebra: MatrixAlgebra
    basis: tuple
    quotient_dim: int
    quotient_commutative: bool
    nilpotency_index: int

    @property
    def dim(self) -> int:
        return len(self.basis)


def _check_closure(A: MatrixAlgebra) -> None:
    ech = Echelon(A.n * A.n, [b.flat() for b in A.basis])
    if not ech.contains(Mat.identity(A.n).flat()):
        raise ClosureViolated("identity is not in the algebra")
    for x in A.basis:
        for y in A.basis:
            if not ech.contains((x * y).flat()):
                raise ClosureViolated("basis is not closed under products")


def _combine(coeffs, mats: Sequence[Mat], n: int) -> Mat:
    acc = [[ZERO] * n for _ in range(n)]
    for c, M in zip(coeffs, mats):
        if c:
            for i, row in enumerate(M.data):
                for j, x in enumerate(row):
                    if x:
                        acc[i][j] += c * x
    return Mat(acc, n)


def algebra_radical(A: MatrixAlgebra) -> Radical:
    """Jacobson radical as the kernel of the trace form (x, y) -> tr(xy)."""
    _check_closure(A)
    k = A.dim
    gram = Mat([[(A.basis[i] * A.basis[j]).trace() for j in range(k)] for i in range(k)])
    rad_vecs = kernel_basis(gram)
    rad = [_combine(v, A.basis, A.n) for v in rad_vecs]
    rad_ech = Echelon(A.n * A.n, [r.flat() for r in rad])
    rad = [Mat.from_flat(A.n, A.n, v) for v in rad_ech.basis()]

    # nilpotency: powers of the radical ideal reach zero
    power = list(rad)
    index = 1
    while power:
        if index > len(rad) + 1:
            raise AssertionError("trace-form radical is not nilpotent")  # pragma: no cover
        ech = Echelon(A.n * A.n)
        for r in rad:
            for q in power:
                ech.add((r * q).flat())
        power = [Mat.from_flat(A.n, A.n, v) for v in ech.basis()]
        index += 1

    commutative = True
    for i, x in enumerate(A.basis):
        for y in A.basis[i + 1:]:
            if not rad_ech.contains((x * y - y * x).flat()):
                commutative = False
                break
        if not commutative:
            break
    return Radical(A, tuple(rad), k - len(rad), commutative, index if rad else 1)


def end_quotient_dim(R: Representation) -> int:
    return algebra_radical(endomorphism_algebra(R)).quotient_dim


def is_indecomposable(R: Representation) -> bool:
    """End(R) is local: End modulo its radical is one-dimensional."""
    return end_quotient_dim(R) == 1


# ---------------------------------------------------------------------------
# isomorphism


def isomorphism(A: Representation, B: Representation) -> Mat | None:
    """An invertible intertwiner H with H X^A = X^B H, or None."""
    if A.n != B.n:
        return None
    # cheap necessary conditions first
    if A.X1.rank() != B.X1.rank() or char_poly(A.X2) != char_poly(B.X2):
        return None
    hom = hom_space(A, B)
    if hom.dim != hom_space(A, A).dim or hom.dim != hom_space(B, B).dim:
        return None
    return invertible_combination(hom.basis)


def is_isomorphic(A: Representation, B: Representation) -> bool:
    return isomorphism(A, B) is not None


# ---------------------------------------------------------------------------
# decomposition into indecomposables


def _split_by_endomorphism(R: Representation) -> list[Subspace] | None:
    """Generalized eigenspaces of an endomorphism with two rational eigenvalues."""
    E = hom_space(R, R).basis
    candidates = list(E)
    for i in range(len(E)):
        for j in range(i + 1, len(E)):
            for k in (1, 2, 3):
                candidates.append(E[i] + E[j].scale(k))
    for phi in candidates:
        roots, rest = rational_eigenvalues(char_poly(phi))
        if rest.degree >= 1 or len(roots) < 2:
            continue
        return [Subspace(R.n, generalized_eigenspace(phi, mu)) for mu in roots]
    return None


def _decompose_vectors(R: Representation) -> list[list[tuple]]:
    """Summands of R as lists of spanning vectors in R's coordinates."""
    if is_indecomposable(R):
        return [[tuple(ONE if i == j else ZERO for j in range(R.n)) for i in range(R.n)]]
    parts = _split_by_endomorphism(R)
    if parts is None:
        raise NonsplitSpectrum("endomorphism algebra has no split idempotent over Q")
    out = []
    for W in parts:
        sub = restrict(R, W)
        M = W.basis_matrix()
        for vecs in _decompose_vectors(sub):
            out.append([M.apply(v) for v in vecs])
    return out


def decompose_with_bases(R: Representation) -> list[tuple[Subspace, Representation]]:
    """Indecomposable summands with their subspaces of V."""
    out = []
    for W, sub in decompose_by_T(R):
        M = W.basis_matrix()
        for vecs in _decompose_vectors(sub):
            S = Subspace(R.n, [M.apply(v) for v in vecs])
            out.append((S, restrict(R, S)))
    return out


def full_decompose(R: Representation) -> list[Representation]:
    """Indecomposable direct summands: first along T, then by idempotents of End."""
    return [sub for _, sub in decompose_with_bases(R)]


# ---------------------------------------------------------------------------
# composition series


@dataclass(frozen=True)
class CompositionSeries:
    chain: tuple  # Subspaces 0 = V_0 < V_1 < ... < V_n = V
    characters: tuple  # eigenvalue of x2 on each one-dimensional factor

    @property
    def distinct_characters(self) -> list:
        return sorted(set(self.characters))


def _common_eigenvector(R: Representation):
    roots = _split_spectrum(R.X2, "X2")
    for a in roots:
        stacked = Mat(list(R.X1.data) + list((R.X2 - Mat.identity(R.n).scale(a)).data), R.n)
        ker = kernel_basis(stacked)
        if ker:
            return ker[0], a
    return None, None


def composition_series(R: Representation) -> CompositionSeries:
    """Chain of submodules with one-dimensional factors.

    At each step a common eigenvector of X1 and X2 in the current quotient
    spans a one-dimensional submodule; its preimage extends the chain.
    """
    n = R.n
    chain = [Subspace(n)]
    chars = []
    current = R
    lift = [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]
    while True:
        v, a = _common_eigenvector(current)
        if v is None:
            raise AssertionError("module without a one-dimensional submodule")  # pragma: no cover
        line = submodule_generated(current, [v])
        if line.dim != 1:  # pragma: no cover
            raise AssertionError("common eigenvector does not span a submodule")
        lifted = [ZERO] * n
        for c, u in zip(v, lift):
            if c:
                for i, x in enumerate(u):
                    lifted[i] += c * x
        chain.append(chain[-1] + Subspace(n, [lifted]))
        chars.append(a)
        if current.n == 1:
            break
        current, comp = quotient(current, line)
        lift = [lift[j] for j in comp]
    return CompositionSeries(tuple(chain), tuple(chars))


# ---------------------------------------------------------------------------
# direct summands


def complement_projection(R: Representation, W: Subspace) -> Mat | None:
    """A module map pi: V -> W with pi restricted to W the identity, or None.

    Such a map exists exactly when W is a direct summand; its kernel is then a
    complementary submodule.  The map is returned in W's echelon coordinates.
    """
    if W.dim == 0 or not is_submodule(R, W):
        return None
    RW = restrict(R, W)
    J = W.basis_matrix()
    hom = hom_space(R, RW).basis
    k = W.dim
    if not hom:
        return None
    # sum_l c_l (pi_l J) = I_k
    products = [(p * J).flat() for p in hom]
    target = Mat.identity(k).flat()
    aug = [[products[l][e] for l in range(len(hom))] + [target[e]] for e in range(k * k)]
    red, piv = rref(aug)
    if len(hom) in piv:
        return None
    coeffs = [ZERO] * len(hom)
    for row, p in zip(red, piv):
        coeffs[p] = row[-1]
    pi = Mat.zeros(k, R.n)
    for c, p in zip(coeffs, hom):
        if c:
            pi = pi + p.scale(c)
    assert pi * J == Mat.identity(k)
    return pi


def is_direct_summand(R: Representation, W: Subspace) -> bool:
    return complement_projection(R, W) is not None


def one_dimensional_submodules_in(R: Representation) -> list[Subspace]:
    """Lines spanned by common eigenvectors, one per eigenspace basis vector."""
    out = []
    for a in _split_spectrum(R.X2, "X2"):
        stacked = Mat(list(R.X1.data) + list((R.X2 - Mat.identity(R.n).scale(a)).data), R.n)
        for v in kernel_basis(stacked):
            out.append(Subspace(R.n, [v]))
    return out
