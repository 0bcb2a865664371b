from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from superjordan.exactmath import (
    E12,
    Mat,
    Poly,
    char_poly,
    format_rational,
    generalized_eigenspace,
    generic_invertibility,
    invertible_combination,
    jordan_block,
    kernel_basis,
    parse_rational,
    rational_eigenvalues,
    square_zero_standard_basis,
    symbolic_det,
)
from superjordan.errors import ShapeError
from superjordan.sampling import random_invertible

x = Poly.x()


def test_parse_and_format_rationals():
    assert parse_rational("-3/6") == F(-1, 2)
    assert parse_rational("7") == 7
    assert format_rational(F(4, 2)) == "2"
    assert format_rational(F(-1, 3)) == "-1/3"
    for bad in ("1/0", "1.5", " 2", "+3", "1/-2", "", "--1"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_kernel_examples():
    assert kernel_basis(E12(2)) == [(1, 0)]
    assert kernel_basis(Mat.identity(3)) == []
    (v,) = kernel_basis(Mat([[1, 1], [1, 1]]))
    assert v[0] == -v[1] != 0


def test_char_poly_examples():
    assert char_poly(Mat.diag([2, 3])) == (x - 2) * (x - 3)
    assert char_poly(E12(2)) == x ** 2
    assert char_poly(Mat([[0, -1], [1, 0]])) == x ** 2 + 1


def test_rational_eigenvalues():
    assert rational_eigenvalues(x ** 2 - 1) == ({F(-1): 1, F(1): 1}, Poly.constant(1))
    roots, rest = rational_eigenvalues(x ** 2 + 1)
    assert roots == {} and rest == x ** 2 + 1
    roots, rest = rational_eigenvalues((x - 2) ** 2 * (x + 2))
    assert roots == {F(2): 2, F(-2): 1} and rest == Poly.constant(1)


def test_rational_eigenvalues_fractional_roots():
    p = (x - F(3, 7)) ** 2 * (x + F(5, 2)) * x * (x ** 2 - 2)
    roots, rest = rational_eigenvalues(p)
    assert roots == {F(3, 7): 2, F(-5, 2): 1, F(0): 1}
    assert rest == x ** 2 - 2


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=9), min_size=1, max_size=5))
def test_rational_eigenvalues_recover_roots(roots):
    p = Poly.from_roots(roots)
    found, rest = rational_eigenvalues(p)
    assert rest == Poly.constant(1)
    rebuilt = Poly.constant(1)
    for r, k in found.items():
        rebuilt = rebuilt * (x - r) ** k
    assert rebuilt == p


def test_generalized_eigenspace_examples():
    assert len(generalized_eigenspace(jordan_block(5, 2), 5)) == 2
    assert generalized_eigenspace(Mat.diag([1, 2]), 1) == [(1, 0)]
    M = Mat.block_diag(jordan_block(0, 2), Mat([[3]]))
    assert generalized_eigenspace(M, 0) == [(1, 0, 0), (0, 1, 0)]
    assert generalized_eigenspace(M, 7) == []


def test_eigenspace_dims_match_multiplicities(rng):
    for _ in range(30):
        n = rng.randint(1, 5)
        D = Mat.block_diag(*(jordan_block(rng.randint(-2, 2), 1) for _ in range(n)))
        P = random_invertible(rng, n)
        M = D.conjugate(P)
        roots, rest = rational_eigenvalues(char_poly(M))
        assert rest.degree == 0
        for lam, mult in roots.items():
            assert len(generalized_eigenspace(M, lam)) == mult


def test_square_zero_standard_basis():
    P, r, z = square_zero_standard_basis(Mat.zeros(3))
    assert (r, z) == (0, 3) and P == Mat.identity(3)
    P, r, z = square_zero_standard_basis(E12(2))
    assert (r, z) == (1, 0) and P == Mat.identity(2)
    X = Mat([[1, -1], [1, -1]])
    P, r, z = square_zero_standard_basis(X)
    assert (r, z) == (1, 0)
    assert P.inverse() * X * P == E12(2)
    with pytest.raises(ValueError):
        square_zero_standard_basis(Mat.identity(2))


def test_square_zero_standard_basis_random(rng):
    for _ in range(40):
        r = rng.randint(0, 2)
        n = 2 * r + rng.randint(0, 2) or 1
        blocks = [E12(2)] * r + [Mat.zeros(1)] * (n - 2 * r)
        X = Mat.block_diag(*blocks).conjugate(random_invertible(rng, n))
        P, rr, z = square_zero_standard_basis(X)
        assert rr == r == X.rank() and 2 * rr + z == n
        assert P.inverse() * X * P == Mat.block_diag(*blocks)


def test_generic_invertibility_examples():
    assert generic_invertibility([Mat.identity(2)])
    assert not generic_invertibility([E12(2)])
    assert generic_invertibility([Mat.unit(2, 0, 0), Mat.unit(2, 1, 1)])
    with pytest.raises(ShapeError):
        generic_invertibility([Mat.identity(2), Mat.identity(3)])


def test_generic_invertibility_singular_span_without_common_kernel():
    # 3x3 skew-symmetric matrices: no common kernel, every member singular
    H = [Mat.unit(3, 0, 1) - Mat.unit(3, 1, 0),
         Mat.unit(3, 0, 2) - Mat.unit(3, 2, 0),
         Mat.unit(3, 1, 2) - Mat.unit(3, 2, 1)]
    assert symbolic_det(H) == {}
    assert not generic_invertibility(H)


def test_invertible_combination_is_invertible(rng):
    for _ in range(20):
        n = rng.randint(2, 5)
        # a diagonal algebra spanned by unit idempotents: no single member invertible
        H = [Mat.unit(n, i, i) for i in range(n)]
        M = invertible_combination(H)
        assert M is not None and M.det() != 0


def test_symbolic_det_matches_numeric(rng):
    for _ in range(20):
        n = rng.randint(1, 4)
        H = [Mat([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]) for _ in range(3)]
        poly = symbolic_det(H)
        c = [F(rng.randint(-3, 3)) for _ in range(3)]
        value = sum((coef * _monomial(c, m) for m, coef in poly.items()), F(0))
        M = H[0].scale(c[0]) + H[1].scale(c[1]) + H[2].scale(c[2])
        assert value == M.det()


def _monomial(c, mono):
    out = F(1)
    for v in mono:
        out *= c[v]
    return out


def test_matrix_arithmetic_exact(rng):
    for _ in range(20):
        n = rng.randint(1, 4)
        P = random_invertible(rng, n)
        assert P * P.inverse() == Mat.identity(n)
        assert (P * P).det() == P.det() ** 2
    assert F(3, 7) * F(7, 3) == 1


def test_rank_nullity(rng):
    for _ in range(30):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        M = Mat([[rng.choice([0, 0, 1, -1, 2]) for _ in range(n)] for _ in range(m)])
        ker = kernel_basis(M)
        assert M.rank() + len(ker) == n
        for v in ker:
            assert not any(M.apply(v))


def test_inverse_of_singular_raises():
    with pytest.raises(ZeroDivisionError):
        E12(2).inverse()


def test_generic_invertibility_beyond_moment_curve():
    # det(c0 E11 + c1 (E12 + E21) + c2 E22) = c0 c2 - c1^2 vanishes at every (1, t, t^2)
    H = [Mat.unit(2, 0, 0), Mat.unit(2, 0, 1) + Mat.unit(2, 1, 0), Mat.unit(2, 1, 1)]
    for t in range(1, 6):
        M = H[0] + H[1].scale(t) + H[2].scale(t * t)
        assert M.det() == 0
    M = invertible_combination(H)
    assert M is not None and M.det() != 0
