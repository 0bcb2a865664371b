"""Seeded random generators for labels, base changes and valid modules."""

from __future__ import annotations

import random
from fractions import Fraction

from .classify import FAMILIES, Label, construct
from .exactmath import Mat
from .modtheory import Representation, direct_sum

THREE_DIM = ("T1U", "T1Y", "T2R", "T2S", "T2T", "T3U", "T3W", "T4Vupper", "T4Vlower")
TWO_DIM = ("Dim2U", "Dim2V")


def random_rational(rng: random.Random, bound: int = 5, nonzero: bool = False) -> Fraction:
    """A rational in [-bound, bound] with denominator at most 3."""
    while True:
        q = rng.choice((1, 1, 1, 2, 3))
        x = Fraction(rng.randint(-bound * q, bound * q), q)
        if x or not nonzero:
            return x


def random_invertible(rng: random.Random, n: int, bound: int = 3) -> Mat:
    """Product of unit triangular matrices and a permutation; always invertible."""
    L = [[Fraction(int(i == j)) if j >= i else Fraction(rng.randint(-bound, bound)) for j in range(n)] for i in range(n)]
    U = [[Fraction(int(i == j)) if j <= i else Fraction(rng.randint(-bound, bound)) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    P = Mat([[int(perm[i] == j) for j in range(n)] for i in range(n)])
    D = Mat.diag([random_rational(rng, 2, nonzero=True) for _ in range(n)])
    return Mat(L) * D * Mat(U) * P


def random_conjugate(rng: random.Random, R: Representation) -> Representation:
    return R.conjugate(random_invertible(rng, R.n))


def random_label(rng: random.Random, name: str, bound: int = 5, max_n: int = 6) -> Label:
    """Random parameters for a family, satisfying its constraints."""
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    r = lambda nz=False: random_rational(rng, bound, nz)  # noqa: E731
    if name == "JordanChain":
        return Label(name, (r(), rng.randint(1, max_n)))
    if name in ("FamU", "FamV"):
        return Label(name, (r(name == "FamV"), rng.randint(2, max_n)))
    if name in ("Dim2V", "T4Vupper", "T4Vlower"):
        return Label(name, (r(True),))
    if name in ("T2R", "T2S"):
        return Label(name, (r(),))
    if name in ("Dim2U", "T1U", "T3U"):
        return Label(name, (r(), r()))
    if name == "T1Y":
        return Label(name, (r(), r(), r(), r(), r(True)))
    if name == "T3W":
        return Label(name, (r(), r(), r(), r(True), r()))
    # T2T
    b, c = r(), r()
    if b == 0 and c == 0:
        b = r(True)
    return Label(name, (r(), b, c))


def random_label_any(rng: random.Random, max_dim: int = 3) -> Label:
    """A random label of dimension at most max_dim."""
    names = ["JordanChain"]
    if max_dim >= 2:
        names += list(TWO_DIM) + ["FamU", "FamV"]
    if max_dim >= 3:
        names += list(THREE_DIM)
    while True:
        L = random_label(rng, rng.choice(names), max_n=max_dim)
        if L.dim <= max_dim:
            return L


def random_representation(rng: random.Random, max_dim: int = 4, conjugate: bool = True) -> Representation:
    """Direct sum of random canonical modules, optionally in a random basis."""
    parts = []
    left = rng.randint(1, max_dim)
    while left:
        L = random_label_any(rng, left)
        parts.append(construct(L))
        left -= L.dim
    R = direct_sum(*parts)
    return random_conjugate(rng, R) if conjugate else R
