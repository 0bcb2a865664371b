"""Canonical forms for modules of dimension at most 3, and the n-dimensional families.

Labels name a canonical module together with its parameters, e.g.
``Dim2U(2,3)`` or ``FamV(-1/2,5)``.  :func:`classify` returns the canonical
label of an indecomposable module (or the labels of its summands) and checks
the answer against an explicit change of basis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConstraintViolation,
    DimensionUnsupported,
    NonsplitSpectrum,
    ParseError,
    RelationViolated,
)
from .exactmath import (
    E12,
    Mat,
    as_fraction,
    char_poly,
    format_rational,
    jordan_block,
    parse_rational,
    rational_eigenvalues,
    square_zero_standard_basis,
)
from .modtheory import Representation, full_decompose, is_indecomposable

ZERO = Fraction(0)
ONE = Fraction(1)

# name -> (parameter count, index of an integer dimension parameter or None)
FAMILIES = {
    "JordanChain": (2, 1),
    "Dim2U": (2, None),
    "Dim2V": (1, None),
    "T1U": (2, None),
    "T1Y": (5, None),
    "T2R": (1, None),
    "T2S": (1, None),
    "T2T": (3, None),
    "T3U": (2, None),
    "T3W": (5, None),
    "T4Vupper": (1, None),
    "T4Vlower": (1, None),
    "FamU": (2, 1),
    "FamV": (2, 1),
}

THETA_OF = {
    "T1U": 1, "T1Y": 1,
    "T2R": 2, "T2S": 2, "T2T": 2,
    "T3U": 3, "T3W": 3,
    "T4Vupper": 4, "T4Vlower": 4,
}


@dataclass(frozen=True)
class Label:
    name: str
    params: tuple

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ConstraintViolation(f"unknown family {self.name!r}")
        arity, dim_index = FAMILIES[self.name]
        if len(self.params) != arity:
            raise ConstraintViolation(f"{self.name} takes {arity} parameters, got {len(self.params)}")
        params = tuple(as_fraction(p) for p in self.params)
        if dim_index is not None:
            n = params[dim_index]
            if n.denominator != 1:
                raise ConstraintViolation(f"{self.name}: dimension must be an integer")
            params = params[:dim_index] + (int(n),) + params[dim_index + 1:]
        object.__setattr__(self, "params", params)
        self._check_constraints()

    def _check_constraints(self):
        p, name = self.params, self.name

        def need(cond, msg):
            if not cond:
                raise ConstraintViolation(f"{self}: {msg}")

        if name == "JordanChain":
            need(p[1] >= 1, "n must be at least 1")
        elif name in ("Dim2V", "T4Vupper", "T4Vlower"):
            need(p[0] != 0, "a must be nonzero")
        elif name == "T1Y":
            need(p[4] != 0, "e must be nonzero")
        elif name == "T2T":
            need(p[1] != 0 or p[2] != 0, "b or c must be nonzero")
        elif name == "T3W":
            need(p[3] != 0, "d must be nonzero")
        elif name == "FamU":
            need(p[1] >= 2, "n must be at least 2")
        elif name == "FamV":
            need(p[1] >= 2, "n must be at least 2")
            need(p[0] != 0, "a must be nonzero")

    @property
    def dim(self) -> int:
        _, dim_index = FAMILIES[self.name]
        if dim_index is not None:
            return self.params[dim_index]
        return 2 if self.name.startswith("Dim2") else 3

    def __str__(self):
        return f"{self.name}({','.join(format_rational(Fraction(x)) for x in self.params)})"

    def __repr__(self):
        return f"Label({self})"

    @classmethod
    def parse(cls, text: str) -> "Label":
        m = re.fullmatch(r"\s*([A-Za-z][A-Za-z0-9]*)\s*\(([^()]*)\)\s*", text)
        if not m:
            raise ParseError(f"cannot parse label {text!r}")
        name, inner = m.group(1), m.group(2)
        if name not in FAMILIES:
            raise ParseError(f"unknown family {name!r}")
        parts = [s.strip() for s in inner.split(",")] if inner.strip() else []
        try:
            params = tuple(parse_rational(s) for s in parts)
        except ValueError as exc:
            raise ParseError(f"bad parameter in {text!r}: {exc}") from None
        return cls(name, params)


def label(name: str, *params) -> Label:
    return Label(name, tuple(params))


@dataclass(frozen=True)
class Decomposable:
    """Result of classifying a module that splits; summands sorted by (dim, text)."""

    summands: tuple

    def __str__(self):
        return "decomposable: " + " + ".join(str(s) for s in self.summands)

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)


# ---------------------------------------------------------------------------
# constructors


def _m3(rows) -> Mat:
    return Mat([[as_fraction(x) for x in r] for r in rows])


def construct(L: Label) -> Representation:
    """The canonical module for a label, with X1 in standard form."""
    name, p = L.name, L.params
    if name == "JordanChain":
        lam, n = p
        return Representation(Mat.zeros(n), jordan_block(lam, n))
    if name == "Dim2U":
        a, b = p
        return Representation(E12(2), Mat([[a, b], [0, a]]))
    if name == "Dim2V":
        (a,) = p
        return Representation(E12(2), Mat.diag([a, -a]))
    if name in ("FamU", "FamV"):
        a, n = p
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = a if (name == "FamU" or i == 0) else -a
        for i in range(2, n):
            rows[i][i - 1] = ONE
        return Representation(E12(n), Mat(rows))

    X1 = E12(3)
    if name == "T1U":
        a, b = p
        X2 = _m3([[a, b, 0], [0, a, 1], [0, 0, -a]])
    elif name == "T1Y":
        a, b, c, d, e = p
        X2 = _m3([[a, b, c], [0, d, e], [0, (a * a - d * d) / e, -d]])
    elif name == "T2R":
        (a,) = p
        X2 = _m3([[a, 0, 0], [0, a, 0], [0, 1, a]])
    elif name == "T2S":
        (a,) = p
        X2 = _m3([[a, 0, 1], [0, a, 0], [0, 0, a]])
    elif name == "T2T":
        a, b, c = p
        X2 = _m3([[a, 0, b], [0, a, 0], [0, c, a]])
    elif name == "T3U":
        a, b = p
        X2 = _m3([[a, b, 0], [0, a, 0], [1, 0, -a]])
    elif name == "T3W":
        a, b, c, d, e = p
        X2 = _m3([[a, b, (c * c - a * a) / d], [0, c, 0], [d, e, -a]])
    elif name == "T4Vupper":
        (a,) = p
        X2 = _m3([[a, 0, 1], [0, -a, 0], [0, 0, a]])
    elif name == "T4Vlower":
        (a,) = p
        X2 = _m3([[a, 0, 0], [0, -a, 0], [0, 1, -a]])
    else:  # pragma: no cover
        raise ConstraintViolation(f"no constructor for {name}")
    return Representation(X1, X2)


# ---------------------------------------------------------------------------
# the four three-dimensional shapes


@dataclass(frozen=True)
class ThetaFamily:
    index: int
    params: tuple  # (a, b, c, d, e)

    def __str__(self):
        return f"Theta{self.index}({','.join(format_rational(x) for x in self.params)})"


def standard_form(R: Representation) -> tuple[Mat, Mat]:
    """Basis P putting X1 into E12 blocks; returns (P, P^-1 X2 P)."""
    P, _, _ = square_zero_standard_basis(R.X1)
    return P, R.X2.conjugate(P)


def _theta_from_matrix(M: Mat) -> ThetaFamily:
    (al, be, ga), (de, ep, ze), (et, th, io) = M.data
    if de != 0:
        raise RelationViolated("entry (2,1) of X2 is nonzero in the standard basis")
    if ze != 0:
        if et != 0 or io != -ep or th != (al * al - ep * ep) / ze:
            raise RelationViolated("matrix does not have the expected shape for its family")
        return ThetaFamily(1, (al, be, ga, ep, ze))
    if et != 0:
        if io != -al or ga != (ep * ep - al * al) / et:
            raise RelationViolated("matrix does not have the expected shape for its family")
        return ThetaFamily(3, (al, be, ep, et, th))
    if ep == al:
        return ThetaFamily(2, (al, be, ga, th, io))
    if ep == -al and al != 0:
        return ThetaFamily(4, (al, be, ga, th, io))
    raise RelationViolated("diagonal entries incompatible with the defining relations")


def detect_theta_family(R: Representation) -> ThetaFamily:
    """Read the shape of X2 once X1 is E12(3)."""
    if R.n != 3 or R.X1.rank() != 1:
        raise DimensionUnsupported("shape detection needs dimension 3 and rank X1 = 1")
    _, M = standard_form(R)
    return _theta_from_matrix(M)


def theta_indecomposable(F: ThetaFamily) -> bool:
    a, b, c, d, e = F.params
    if F.index in (1, 3):
        return True
    if F.index == 2:
        return (c != 0 or d != 0) and e == a
    return (c != 0 and e == a) or (d != 0 and e == -a)


def _basis_change(l1, b1, l3, b3) -> Mat:
    # columns: v1, l1 v1 + v2 + l3 v3, b1 v1 + b3 v3
    return _m3([[1, l1, b1], [0, 1, 0], [0, l3, b3]])


def _canonical_theta(F: ThetaFamily) -> tuple[Label, Mat]:
    """Canonical label of an indecomposable in a shape family and the basis reaching it."""
    a, b, c, d, e = F.params
    if F.index == 1:
        return label("T1U", a, b + c * (a - d) / e), _basis_change(c / e, 0, (a - d) / e, 1 / e)
    if F.index == 2:
        if c != 0 and d != 0:
            return label("T2T", a, c * d, 1), _basis_change(0, b, 0, d)
        if d != 0:
            return label("T2R", a), _basis_change(0, b, 0, d)
        return label("T2S", a), _basis_change(0, 0, -b / c, 1 / c)
    if F.index == 3:
        return label("T3U", c, (b * d + c * e - a * e) / d), _basis_change(-e / d, a - c, 0, d)
    if e == a and c != 0:
        return label("T4Vupper", a), _basis_change((c * d - 2 * a * b) / (4 * a * a), 0, -d / (2 * a), 1 / c)
    return label("T4Vlower", a), _basis_change(-(2 * a * b + c * d) / (4 * a * a), -d * c / (2 * a), 0, d)


# ---------------------------------------------------------------------------
# classification


def _jordan_chain_basis(X2: Mat, lam) -> Mat | None:
    """Basis turning X2 into one upper Jordan block, if it is one."""
    n = X2.nrows
    N = X2 - Mat.identity(n).scale(lam)
    if not (N ** n).is_zero() or N.rank() != n - 1:
        return None
    top = N ** (n - 1)
    v = next(tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n) if any(top.col(j)))
    chain = [v]
    for _ in range(n - 1):
        chain.append(N.apply(chain[-1]))
    return Mat.from_columns(chain[::-1])


def _dim2_canonical(M: Mat) -> tuple[Label, Mat]:
    (al, be), (ga, de) = M.data
    if ga != 0:
        raise RelationViolated("entry (2,1) of X2 is nonzero in the standard basis")
    if de == al:
        return label("Dim2U", al, be), Mat.identity(2)
    if de == -al and al != 0:
        return label("Dim2V", al), Mat([[1, -be / (2 * al)], [0, 1]])
    raise RelationViolated("diagonal entries incompatible with the defining relations")


def _sort_key(L: Label):
    return (L.dim, str(L))


def classify_with_certificate(R: Representation):
    """Return (label, Q) with Q^-1 X Q = construct(label), or (Decomposable, None)."""
    n = R.n
    if R.X1.is_zero():
        roots, rest = rational_eigenvalues(char_poly(R.X2))
        if rest.degree >= 1:
            raise NonsplitSpectrum(f"nonsplit spectrum of X2: factor {rest}", rest)
        if len(roots) == 1:
            lam = next(iter(roots))
            Q = _jordan_chain_basis(R.X2, lam)
            if Q is not None:
                return _certify(R, label("JordanChain", lam, n), Q)
        return _decomposable(R), None
    if n > 3:
        raise DimensionUnsupported(f"classification with X1 != 0 is available up to dimension 3, got {n}")
    P, M = standard_form(R)
    if n == 2:
        L, P2 = _dim2_canonical(M)
        return _certify(R, L, P * P2)
    F = _theta_from_matrix(M)
    indec = theta_indecomposable(F)
    if indec != is_indecomposable(R):  # pragma: no cover - guarded by tests
        raise AssertionError(f"indecomposability criteria disagree on {F}")
    if not indec:
        return _decomposable(R), None
    L, P2 = _canonical_theta(F)
    return _certify(R, L, P * P2)


def _certify(R: Representation, L: Label, Q: Mat):
    target = construct(L)
    Qi = Q.inverse()
    if Qi * R.X1 * Q != target.X1 or Qi * R.X2 * Q != target.X2:
        raise AssertionError(f"basis change does not reach {L}")  # pragma: no cover
    return L, Q


def _decomposable(R: Representation) -> Decomposable:
    labels = []
    for sub in full_decompose(R):
        L, _ = classify_with_certificate(sub)
        if isinstance(L, Decomposable):  # pragma: no cover
            raise AssertionError("summand of a full decomposition is decomposable")
        labels.append(L)
    return Decomposable(tuple(sorted(labels, key=_sort_key)))


def classify(R: Representation):
    """Canonical label of R, or a :class:`Decomposable` listing its summands."""
    return classify_with_certificate(R)[0]


# ---------------------------------------------------------------------------
# isomorphism by invariants


def canonical_label(L: Label) -> Label:
    """Representative of the isomorphism class of construct(L)."""
    name, p = L.name, L.params
    if name == "T1Y":
        a, b, c, d, e = p
        return label("T1U", a, b + c * (a - d) / e)
    if name == "T2T":
        a, b, c = p
        if b != 0 and c != 0:
            return label("T2T", a, b * c, 1)
        return label("T2R", a) if b == 0 else label("T2S", a)
    if name == "T3W":
        a, b, c, d, e = p
        return label("T3U", c, (b * d + c * e - a * e) / d)
    if name == "FamU" and p[1] == 2:
        return label("Dim2U", p[0], 0)
    if name == "FamU" and p[1] == 3:
        return label("T2R", p[0])
    if name == "FamV" and p[1] == 2:
        return label("Dim2V", p[0])
    if name == "FamV" and p[1] == 3:
        return label("T4Vlower", p[0])
    return L


def iso_criterion(L1: Label, L2: Label) -> bool:
    """Decide isomorphism of two labeled modules from their parameters alone."""
    return canonical_label(L1) == canonical_label(L2)


def dim2_nondegenerate_check(R: Representation) -> bool:
    """A 2-dimensional module with X1 != 0 is indecomposable."""
    if R.n != 2:
        raise DimensionUnsupported("defined for dimension 2 only")
    return R.X1.is_zero() or is_indecomposable(R)
