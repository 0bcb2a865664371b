"""Normal forms in the super Jordan plane B and the Jordan plane A.

B is generated by x1, x2 subject to x1^2 = 0 and x2 s - s x2 - x1 s = 0 with
s = x21 = x1 x2 + x2 x1.  Its elements are written in the basis
x1^a x21^b x2^c (a in {0, 1}).  A is generated by y1, y2 subject to
y1 y2 - y2 y1 - y2^2 = 0, with basis y1^a y2^b.  The subalgebra of B
generated by t = x2^2 and s is a copy of A via y1 -> t, y2 -> s.

Two independent engines compute in B: :func:`normal_mul` uses the left
regular action of the generators on basis monomials, while
:func:`reduce_word` runs a string rewriting system on words.  The test-suite
checks that they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, NamedTuple

from .exactmath import Mat, as_fraction, format_rational

ZERO = Fraction(0)


class PBWMonomial(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def degree(self) -> int:
        return self.a + 2 * self.b + self.c

    def sort_key(self):
        return (self.degree, self.a, self.b, self.c)


class JordanMonomial(NamedTuple):
    a: int  # exponent of y1
    b: int  # exponent of y2

    @property
    def degree(self) -> int:
        return self.a + self.b


def _clean(terms: dict) -> dict:
    return {m: c for m, c in terms.items() if c}


def _accumulate(acc: dict, terms, scale=1) -> None:
    for m, c in terms:
        acc[m] = acc.get(m, ZERO) + scale * c


class _Element:
    """Shared arithmetic for finite linear combinations of monomials."""

    __slots__ = ("terms", "_key")
    _monomial: type = tuple

    def __init__(self, terms=None):
        raw = {}
        if terms:
            for m, c in dict(terms).items():
                c = as_fraction(c)
                if c:
                    m = self._monomial(*m)
                    raw[m] = raw.get(m, ZERO) + c
        self.terms = _clean(raw)
        self._key = None

    @classmethod
    def _wrap(cls, terms: dict):
        e = object.__new__(cls)
        e.terms = terms
        e._key = None
        return e

    def _sorted_items(self):
        raise NotImplementedError

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._key is None:
            self._key = hash(frozenset(self.terms.items()))
        return self._key

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        _accumulate(acc, other.terms.items())
        return self._wrap(_clean(acc))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = as_fraction(c)
        if not c:
            return self._wrap({})
        return self._wrap({m: c * v for m, v in self.terms.items()})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = self.one()
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        return self.one().scale(other)

    def __iter__(self):
        return iter(self._sorted_items())

    def __len__(self):
        return len(self.terms)


class PBWElement(_Element):
    """Element of B in the basis x1^a x21^b x2^c."""

    __slots__ = ()
    _monomial = PBWMonomial

    @classmethod
    def monomial(cls, a: int, b: int, c: int, coeff=1) -> "PBWElement":
        return cls({PBWMonomial(a, b, c): coeff})

    @classmethod
    def one(cls) -> "PBWElement":
        return cls.monomial(0, 0, 0)

    @classmethod
    def zero(cls) -> "PBWElement":
        return cls()

    def _sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return normal_mul(self, other)
        return self.scale(other)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def __repr__(self):
        return f"PBWElement({format_element(self)})"

    def __str__(self):
        return format_element(self)


X1 = PBWElement.monomial(1, 0, 0)
X2 = PBWElement.monomial(0, 0, 1)
S = PBWElement.monomial(0, 1, 0)
T = PBWElement.monomial(0, 0, 2)
ONE_B = PBWElement.one()


class JordanElement(_Element):
    """Element of A in the basis y1^a y2^b."""

    __slots__ = ()
    _monomial = JordanMonomial

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "JordanElement":
        return cls({JordanMonomial(a, b): coeff})

    @classmethod
    def one(cls) -> "JordanElement":
        return cls.monomial(0, 0)

    def _sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].degree, kv[0].a, kv[0].b))

    def __mul__(self, other):
        if isinstance(other, JordanElement):
            return jordan_mul(self, other)
        return self.scale(other)

    def __repr__(self):
        return f"JordanElement({format_jordan(self)})"

    def __str__(self):
        return format_jordan(self)


Y1 = JordanElement.monomial(1, 0)
Y2 = JordanElement.monomial(0, 1)


# ---------------------------------------------------------------------------
# the left regular action on PBW monomials


def _left_x1(m: PBWMonomial):
    if m.a:
        return ()
    return ((PBWMonomial(1, m.b, m.c), 1),)


def _left_x2(m: PBWMonomial):
    a, b, c = m
    if a == 0:
        # x2 s^b = s^b x2 + b x1 s^b
        out = [(PBWMonomial(0, b, c + 1), 1)]
        if b:
            out.append((PBWMonomial(1, b, c), b))
        return tuple(out)
    # x2 x1 = s - x1 x2, and x1 x2 s^b = x1 s^b x2
    return ((PBWMonomial(0, b + 1, c), 1), (PBWMonomial(1, b, c + 1), -1))


@lru_cache(maxsize=None)
def _mono_mul(m: PBWMonomial, n: PBWMonomial) -> tuple:
    """m * n for basis monomials, as a tuple of (monomial, coefficient)."""
    a, b, c = m
    if c:
        acc: dict = {}
        rest = PBWMonomial(a, b, c - 1)
        for k, coeff in _left_x2(n):
            _accumulate(acc, _mono_mul(rest, k), coeff)
        return tuple(_clean(acc).items())
    # s commutes with x1, so s^b x1^a' s^b' x2^c' is already ordered
    if a and n.a:
        return ()
    return ((PBWMonomial(a | n.a, b + n.b, n.c), Fraction(1)),)


def normal_mul(u: PBWElement, v: PBWElement) -> PBWElement:
    """Product u * v written in the PBW basis."""
    acc: dict = {}
    for m, cu in u.terms.items():
        for n, cv in v.terms.items():
            _accumulate(acc, _mono_mul(m, n), cu * cv)
    return PBWElement._wrap(_clean(acc))


def left_action(letter: str, u: PBWElement) -> PBWElement:
    """Left multiplication by one generator, using only the basic rules."""
    acc: dict = {}
    for m, c in u.terms.items():
        if letter == "x1":
            _accumulate(acc, _left_x1(m), c)
        elif letter == "x2":
            _accumulate(acc, _left_x2(m), c)
        else:
            raise ValueError(f"unknown generator {letter!r}")
    return PBWElement._wrap(_clean(acc))


# ---------------------------------------------------------------------------
# word rewriting

# '1' = x1, '2' = x2, 's' = x21.  Each rule removes one inversion against the
# order x1 < x21 < x2 (or shortens the word), so rewriting terminates.
_RULES = {
    "11": (),
    "21": (("s", 1), ("12", -1)),
    "s1": (("1s", 1),),
    "2s": (("s2", 1), ("1s", 1)),
}

_LETTER = {"x1": "1", "x2": "2", "x21": "s", "s": "s"}


def parse_word(word) -> str:
    """Accept ``"x1 x2 x1"`` or a sequence of letters; return the internal string."""
    if isinstance(word, str):
        letters = word.split()
    else:
        letters = list(word)
    out = []
    for w in letters:
        try:
            out.append(_LETTER[w])
        except KeyError:
            raise ValueError(f"unknown letter {w!r}; expected x1, x2 or x21") from None
    return "".join(out)


def _redex(word: str, rightmost: bool) -> int:
    positions = range(len(word) - 2, -1, -1) if rightmost else range(len(word) - 1)
    for i in positions:
        if word[i:i + 2] in _RULES:
            return i
    return -1


def _word_to_monomial(word: str) -> PBWMonomial:
    a = 1 if word.startswith("1") else 0
    rest = word[a:]
    b = len(rest) - len(rest.lstrip("s"))
    tail = rest[b:]
    if set(tail) - {"2"}:
        raise AssertionError(f"word {word!r} is not in normal form")
    return PBWMonomial(a, b, len(tail))


def reduce_word(word, strategy: str = "leftmost", max_steps: int = 1_000_000) -> PBWElement:
    """Rewrite a word in x1, x2 (and x21) to PBW normal form.

    ``strategy`` picks the leftmost or the rightmost reducible pair at every
    step; by confluence both give the same result.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError("strategy must be 'leftmost' or 'rightmost'")
    rightmost = strategy == "rightmost"
    pending = {parse_word(word): Fraction(1)}
    done: dict = {}
    steps = 0
    # rewrite in rounds so that equal intermediate words merge
    while pending:
        nxt: dict = {}
        for w, c in pending.items():
            if not c:
                continue
            i = _redex(w, rightmost)
            if i < 0:
                m = _word_to_monomial(w)
                done[m] = done.get(m, ZERO) + c
                continue
            steps += 1
            if steps > max_steps:
                raise RuntimeError("rewriting did not terminate within the step budget")
            for rep, k in _RULES[w[i:i + 2]]:
                nw = w[:i] + rep + w[i + 2:]
                nxt[nw] = nxt.get(nw, ZERO) + c * k
        pending = nxt
    return PBWElement._wrap(_clean(done))


def word_product(word) -> PBWElement:
    """The same element as :func:`reduce_word`, computed by the left action."""
    letters = parse_word(word)
    acc = ONE_B
    for ch in reversed(letters):
        if ch == "1":
            acc = left_action("x1", acc)
        elif ch == "2":
            acc = left_action("x2", acc)
        else:
            acc = left_action("x1", left_action("x2", acc)) + left_action("x2", left_action("x1", acc))
    return acc


# ---------------------------------------------------------------------------
# the Jordan plane


@lru_cache(maxsize=None)
def _left_y2(m: JordanMonomial) -> tuple:
    a, b = m
    if a == 0:
        return ((JordanMonomial(0, b + 1), Fraction(1)),)
    # y2 y1 = y1 y2 - y2^2
    inner = _left_y2(JordanMonomial(a - 1, b))
    acc: dict = {}
    for k, c in inner:
        _accumulate(acc, ((JordanMonomial(k.a + 1, k.b), 1),), c)
        _accumulate(acc, _left_y2(k), -c)
    return tuple(_clean(acc).items())


@lru_cache(maxsize=None)
def _jordan_mono_mul(m: JordanMonomial, n: JordanMonomial) -> tuple:
    a, b = m
    if b:
        acc: dict = {}
        rest = JordanMonomial(a, b - 1)
        for k, c in _left_y2(n):
            _accumulate(acc, _jordan_mono_mul(rest, k), c)
        return tuple(_clean(acc).items())
    return ((JordanMonomial(a + n.a, n.b), Fraction(1)),)


def jordan_mul(u: JordanElement, v: JordanElement) -> JordanElement:
    """Product in A written in the basis y1^a y2^b."""
    acc: dict = {}
    for m, cu in u.terms.items():
        for n, cv in v.terms.items():
            _accumulate(acc, _jordan_mono_mul(m, n), cu * cv)
    return JordanElement._wrap(_clean(acc))


def jordan_to_super(u: JordanElement) -> PBWElement:
    """Image of u under y1 -> t = x2^2, y2 -> s = x21."""
    acc: dict = {}
    for m, c in u.terms.items():
        # t^a is the monomial x2^(2a); t^a s^b still has to be reordered
        img = normal_mul(PBWElement.monomial(0, 0, 2 * m.a), PBWElement.monomial(0, m.b, 0))
        _accumulate(acc, img.terms.items(), c)
    return PBWElement._wrap(_clean(acc))


# ---------------------------------------------------------------------------
# matrices


def evaluate_in_rep(u: PBWElement, rep) -> Mat:
    """rho(u) for a representation exposing matrices ``X1`` and ``X2``."""
    X1m, X2m = rep.X1, rep.X2
    n = X1m.nrows
    Sm = X1m * X2m + X2m * X1m
    x2pow = [Mat.identity(n)]
    spow = [Mat.identity(n)]
    acc = Mat.zeros(n)
    for m, c in u.terms.items():
        while len(x2pow) <= m.c:
            x2pow.append(x2pow[-1] * X2m)
        while len(spow) <= m.b:
            spow.append(spow[-1] * Sm)
        term = spow[m.b] * x2pow[m.c]
        if m.a:
            term = X1m * term
        acc = acc + term.scale(c)
    return acc


# ---------------------------------------------------------------------------
# identities


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    cases: int
    counterexample: str | None = None


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def _run(name: str, cases: Iterable) -> IdentityCheck:
    count = 0
    for label, lhs, rhs in cases:
        count += 1
        if lhs != rhs:
            diff = lhs - rhs
            return IdentityCheck(name, False, count, f"{label}: lhs - rhs = {format_element(diff)}")
    return IdentityCheck(name, True, count)


def _z_sum(n: int, z: PBWElement) -> PBWElement:
    """sum_j n!/(n-j)! s^j z^(n-j)."""
    acc = PBWElement.zero()
    for j in range(n + 1):
        acc = acc + (S ** j * z ** (n - j)).scale(Fraction(factorial(n), factorial(n - j)))
    return acc


def check_identities(bmax: int = 6, cmax: int = 6, nmax: int = 8, lam=0) -> IdentityReport:
    """Verify the basic identities of B by exact normal-form computation."""
    if min(bmax, cmax, nmax) < 1:
        raise ValueError("bounds must be at least 1")
    lam = as_fraction(lam)
    z = T - ONE_B.scale(lam)
    checks = [
        _run("x1^2 = 0", [("", X1 * X1, PBWElement.zero())]),
        _run("x2 s - s x2 - x1 s = 0", [("", X2 * S - S * X2 - X1 * S, PBWElement.zero())]),
        _run("s x1 = x1 s", [("", S * X1, X1 * S)]),
        _run("x2^2 x1 = x1 x2^2 + x1 x2 x1", [("", X2 * X2 * X1, X1 * X2 * X2 + X1 * X2 * X1)]),
        _run("s t = (t - s) s", [("", S * T, (T - S) * S)]),
        _run("[t, s^n] = n s^(n+1)",
             ((f"n={n}", T * S ** n - S ** n * T, (S ** (n + 1)).scale(n)) for n in range(1, nmax + 1))),
        _run("x2 t = t x2", [("", X2 * T, T * X2)]),
        _run("t x1 = x1 (t + s)", [("", T * X1, X1 * (T + S))]),
        _run("s^b x2^c = (x2 - b x1) s^b x2^(c-1)",
             ((f"b={b}, c={c}", PBWElement.monomial(0, b, c),
               (X2 - X1.scale(b)) * PBWElement.monomial(0, b, c - 1))
              for b in range(1, bmax + 1) for c in range(1, cmax + 1))),
        _run("x1 s^b x2^c = x1 x2 s^b x2^(c-1)",
             ((f"b={b}, c={c}", X1 * S ** b * X2 ** c, X1 * X2 * S ** b * X2 ** (c - 1))
              for b in range(1, bmax + 1) for c in range(1, cmax + 1))),
        _run(f"z^n x1 = x1 sum n!/(n-j)! s^j z^(n-j), z = t - {format_rational(lam)}",
             ((f"n={n}", z ** n * X1, X1 * _z_sum(n, z)) for n in range(1, nmax + 1))),
        _run(f"z^n x1 x2 = x1 x2 sum n!/(n-j)! s^j z^(n-j), z = t - {format_rational(lam)}",
             ((f"n={n}", z ** n * X1 * X2, X1 * X2 * _z_sum(n, z)) for n in range(1, nmax + 1))),
    ]
    return IdentityReport(tuple(checks))


# ---------------------------------------------------------------------------
# B as a right A-module

GENERATORS = ("1", "x1", "x2", "x1x2")
_GEN_ELEMENT = {"1": ONE_B, "x1": X1, "x2": X2, "x1x2": X1 * X2}


def right_module_generators(m) -> dict:
    """Write a basis monomial as sum g * alpha with g in {1, x1, x2, x1 x2}.

    The coefficients alpha live in A and act through y1 -> t, y2 -> s, on the
    right.
    """
    a, b, c = PBWMonomial(*m)
    k, odd = divmod(c, 2)
    alpha = jordan_mul(JordanElement.monomial(0, b), JordanElement.monomial(k, 0))
    out = {g: JordanElement() for g in GENERATORS}
    if not odd:
        out["x1" if a else "1"] = alpha
    elif a:
        out["x1x2"] = alpha
    else:
        out["x2"] = alpha
        if b:
            out["x1"] = alpha.scale(-b)
    return out


def expand_right_module(coeffs: dict) -> PBWElement:
    acc = PBWElement.zero()
    for g, alpha in coeffs.items():
        if alpha:
            acc = acc + _GEN_ELEMENT[g] * jordan_to_super(alpha)
    return acc


def monomials_up_to(degree: int) -> list:
    out = []
    for d in range(degree + 1):
        for a in (0, 1):
            for b in range((d - a) // 2 + 1):
                c = d - a - 2 * b
                if c >= 0:
                    out.append(PBWMonomial(a, b, c))
    return out


@dataclass(frozen=True)
class EmbeddingReport:
    pairs: int
    passed: bool
    counterexample: str | None = None


def embedding_check(dmax: int = 8) -> EmbeddingReport:
    """Check that y1 -> t, y2 -> s is multiplicative on monomials s^b t^k.

    Every pair whose combined y-degree is at most ``dmax`` is tested: the PBW
    product of s^b t^k and s^b' t^k' must equal the image of the product of
    y2^b y1^k and y2^b' y1^k' computed inside A.
    """
    if dmax < 2:
        raise ValueError("dmax must be at least 2")
    monos = [(b, k) for d in range(dmax + 1) for b in range(d + 1) for k in [d - b]]
    pairs = 0
    for b, k in monos:
        left_b = PBWElement.monomial(0, b, 2 * k)
        left_a = jordan_mul(JordanElement.monomial(0, b), JordanElement.monomial(k, 0))
        for b2, k2 in monos:
            if b + k + b2 + k2 > dmax:
                continue
            pairs += 1
            in_b = normal_mul(left_b, PBWElement.monomial(0, b2, 2 * k2))
            right_a = jordan_mul(JordanElement.monomial(0, b2), JordanElement.monomial(k2, 0))
            in_a = jordan_to_super(jordan_mul(left_a, right_a))
            if in_b != in_a:
                return EmbeddingReport(pairs, False, f"s^{b} t^{k} * s^{b2} t^{k2}")
    return EmbeddingReport(pairs, True)


# ---------------------------------------------------------------------------
# text form


def _coeff_text(c: Fraction) -> str:
    c = abs(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _monomial_text(m: PBWMonomial) -> str:
    parts = []
    for name, e in (("x1", m.a), ("x21", m.b), ("x2", m.c)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "·".join(parts)


def _join_terms(items) -> str:
    if not items:
        return "0"
    out = []
    for i, (c, mono) in enumerate(items):
        body = _coeff_text(c) + (f"·{mono}" if mono else "")
        if i == 0:
            out.append(("+" if c > 0 else "−") + body)
        else:
            out.append((" + " if c > 0 else " − ") + body)
    return "".join(out)


def format_element(u: PBWElement) -> str:
    """Render as ``+1·x21 − 1·x1·x2``: signed terms in (degree, a, b, c) order."""
    return _join_terms([(c, _monomial_text(m)) for m, c in u._sorted_items()])


def format_jordan(u: JordanElement) -> str:
    def mono(m):
        parts = []
        for name, e in (("y1", m.a), ("y2", m.b)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "·".join(parts)
    return _join_terms([(c, mono(m)) for m, c in u._sorted_items()])
