"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line with its runtime and the time
limit.  Run directly with ``python tests/test_acceptance.py`` for the summary
alone, or through pytest.
"""

import itertools
import random
import time
from fractions import Fraction as F

import pytest

from superjordan import algebra
from superjordan.classify import Decomposable, Label, classify, construct, iso_criterion, label
from superjordan.exactmath import E12, char_poly, rational_eigenvalues
from superjordan.modtheory import (
    Subspace,
    algebra_radical,
    composition_series,
    decompose_by_T,
    direct_sum,
    end_quotient_dim,
    generated_matrix_algebra,
    is_direct_summand,
    is_isomorphic,
    is_submodule,
    v0_submodules,
)
from superjordan.sampling import THREE_DIM, random_conjugate, random_label, random_representation

SEED = 1234


def _report(number, title, passed, elapsed, limit, detail):
    status = "PASS" if passed else "FAIL"
    lim = f"{elapsed:.2f}s" + (f" (limit {limit}s)" if limit else "")
    return f"[{status}] criterion {number:>2}: {title}: {detail}; {lim}"


def _timed(fn):
    start = time.perf_counter()
    passed, detail = fn()
    return passed, detail, time.perf_counter() - start


# ---------------------------------------------------------------------------
# criteria


def identity_suite():
    failures = []
    total = 0
    for lam in (F(0), F(1), F(-3, 2)):
        rep = algebra.check_identities(bmax=6, cmax=6, nmax=8, lam=lam)
        total += sum(c.cases for c in rep.checks)
        failures += [f"{c.name} at {lam}: {c.counterexample}" for c in rep.failures()]
    return not failures, f"{total} cases, {len(failures)} failures" + (f": {failures[0]}" if failures else "")


def confluence_associativity():
    rng = random.Random(SEED)
    words = bad = 0
    for letters in itertools.product(("x1", "x2"), repeat=8):
        words += 1
        bad += algebra.reduce_word(letters, "leftmost") != algebra.reduce_word(letters, "rightmost")
    mons = algebra.monomials_up_to(6)

    def element():
        return sum((algebra.PBWElement.monomial(*rng.choice(mons), F(rng.randint(-4, 4), rng.randint(1, 3)))
                    for _ in range(rng.randint(1, 3))), algebra.PBWElement.zero())

    nonassoc = 0
    for _ in range(200):
        u, v, w = element(), element(), element()
        nonassoc += (u * v) * w != u * (v * w)
    return bad == 0 and nonassoc == 0, f"{words} words ({bad} order-dependent), 200 triples ({nonassoc} non-associative)"


def subalgebra_embedding():
    rep = algebra.embedding_check(8)
    return rep.passed, f"{rep.pairs} monomial pairs" + (f", counterexample {rep.counterexample}" if rep.counterexample else "")


def right_module_round_trip():
    mons = algebra.monomials_up_to(8)
    bad = [m for m in mons
           if algebra.expand_right_module(algebra.right_module_generators(m)) != algebra.PBWElement.monomial(*m)]
    return not bad, f"{len(mons)} monomials, {len(bad)} mismatches"


def dim2_round_trip():
    rng = random.Random(SEED)
    ok = 0
    for i in range(100):
        name = ("Dim2U", "Dim2V", "JordanChain")[i % 3]
        L = random_label(rng, name) if name != "JordanChain" else label("JordanChain", random_label(rng, "Dim2U").params[0], 2)
        got = classify(random_conjugate(rng, construct(L)))
        ok += not isinstance(got, Decomposable) and iso_criterion(L, got)
    return ok == 100, f"{ok}/100 labels recovered"


def _iso_partner(rng, A):
    name, p = A.name, A.params
    if name == "T1Y":
        a, b, c, d, e = p
        inv = b + c * (a - d) / e
        _, _, c2, d2, e2 = random_label(rng, name).params
        return Label(name, (a, inv - c2 * (a - d2) / e2, c2, d2, e2))
    if name == "T2T":
        a, b, c = p
        if b and c:
            k = F(rng.choice([1, 2, -3, 5]), rng.choice([1, 2, 3]))
            return Label(name, (a, b * k, c / k))
        return A
    a, b, c, d, e = p
    inv = (b * d + c * e - a * e) / d
    a2, _, _, d2, e2 = random_label(rng, name).params
    return Label(name, (a2, (inv * d2 - c * e2 + a2 * e2) / d2, c, d2, e2))


def _same_family_random(rng, A):
    B = random_label(rng, A.name)
    p = list(B.params)
    # share the eigenvalue parameter so the comparison is not decided by the spectrum alone
    p[2 if A.name == "T3W" else 0] = A.params[2 if A.name == "T3W" else 0]
    if A.name == "T2T" and p[1] == 0 and p[2] == 0:
        p[1] = F(1)
    return Label(A.name, tuple(p))


def theta_round_trip_and_criteria():
    rng = random.Random(SEED)
    recovered = total = 0
    for name in THREE_DIM:
        for _ in range(50):
            L = random_label(rng, name)
            got = classify(random_conjugate(rng, construct(L)))
            total += 1
            recovered += not isinstance(got, Decomposable) and iso_criterion(L, got)
    agree = pairs = iso_pairs = 0
    for name in ("T1Y", "T2T", "T3W"):
        for i in range(50):
            A = random_label(rng, name)
            B = _iso_partner(rng, A) if i % 2 else _same_family_random(rng, A)
            truth = is_isomorphic(construct(A), construct(B))
            pairs += 1
            iso_pairs += truth
            agree += iso_criterion(A, B) == truth
    family = {n: n[:2] for n in THREE_DIM}
    rejected = cross = 0
    for fam in ("T1", "T2", "T3", "T4"):
        mine = [n for n in THREE_DIM if family[n] == fam]
        other = [n for n in THREE_DIM if family[n] != fam]
        for _ in range(50):
            A = random_label(rng, rng.choice(mine))
            B = random_label(rng, rng.choice(other))
            cross += 1
            rejected += not iso_criterion(A, B) and not is_isomorphic(construct(A), construct(B))
    passed = recovered == total and agree == pairs and rejected == cross
    return passed, (f"{recovered}/{total} reclassified, {agree}/{pairs} same-family pairs agree "
                    f"({iso_pairs} isomorphic), {rejected}/{cross} cross-family pairs rejected")


def _t_eigen(L):
    roots, rest = rational_eigenvalues(char_poly(construct(L).T))
    return roots, rest


def _all_family_names():
    return ["JordanChain", "Dim2U", "Dim2V", *THREE_DIM, "FamU", "FamV"]


def t_decomposition():
    rng = random.Random(SEED)
    recovered = 0
    for _ in range(100):
        labels, used = [], set()
        for _ in range(rng.randint(2, 3)):
            while True:
                L = random_label(rng, rng.choice(_all_family_names()), max_n=4)
                (t,), _ = _t_eigen(L)
                if t not in used:
                    break
            used.add(t)
            labels.append((t, L))
        R = random_conjugate(rng, direct_sum(*(construct(L) for _, L in labels)))
        expected = [L.dim for _, L in sorted(labels, key=lambda x: x[0])]
        got = [W.dim for W, _ in decompose_by_T(R)]
        recovered += got == expected
    single = 0
    checked = 0
    for name in _all_family_names():
        for _ in range(10):
            roots, rest = _t_eigen(random_label(rng, name))
            checked += 1
            single += len(roots) == 1 and rest.degree == 0
    return recovered == 100 and single == checked, (f"{recovered}/100 sums split correctly, "
                                                    f"{single}/{checked} indecomposables with one T-eigenvalue")


def n_dimensional_families():
    local = total = 0
    for name, values in (("FamU", (0, 1, 2, F(-3, 2))), ("FamV", (1, 2, F(-3, 2)))):
        for a in values:
            for n in range(2, 9):
                total += 1
                local += end_quotient_dim(construct(label(name, a, n))) == 1
    distinct = pairs = 0
    for a in (1, 2, F(-3, 2)):
        for n in range(2, 9):
            pairs += 1
            distinct += not is_isomorphic(construct(label("FamU", a, n)), construct(label("FamV", a, n)))
    return local == total and distinct == pairs, f"{local}/{total} local endomorphism algebras, {distinct}/{pairs} U/V pairs non-isomorphic"


def _canonical_small(rng):
    out = []
    for name in _all_family_names():
        for _ in range(5):
            L = random_label(rng, name, max_n=3)
            out.append(L)
    return out


def composition_and_semisimple_quotient():
    rng = random.Random(SEED)
    good = 0
    labels = _canonical_small(rng)
    for L in labels:
        R = construct(L)
        cs = composition_series(R)
        good += [W.dim for W in cs.chain] == list(range(R.n + 1)) and all(is_submodule(R, W) for W in cs.chain)
    ok_alg = 0
    for _ in range(50):
        R = random_representation(rng, 4)
        rad = algebra_radical(generated_matrix_algebra([R.X1, R.X2]))
        chars = composition_series(R).distinct_characters
        ok_alg += rad.quotient_commutative and rad.quotient_dim == len(chars)
    return good == len(labels) and ok_alg == 50, (f"{good}/{len(labels)} canonical modules with 1-dim factors, "
                                                  f"{ok_alg}/50 commutative quotients matching the characters")


def submodules_and_splitting():
    rng = random.Random(SEED)
    closed = 0
    for _ in range(100):
        res = v0_submodules(random_representation(rng, 5))
        closed += res.W_closed and res.U_closed
    not_summand = total = 0
    for name in ("Dim2U", "Dim2V", *THREE_DIM, "FamU", "FamV"):
        for _ in range(8):
            R = construct(random_label(rng, name))
            assert R.X1.rank() == 1 and R.X1 == E12(R.n)
            total += 1
            not_summand += not is_direct_summand(R, Subspace(R.n, [tuple(F(int(j == 0)) for j in range(R.n))]))
    return closed == 100 and not_summand == total, f"{closed}/100 with W, U closed, span(v1) split off in {total - not_summand}/{total} modules"


CRITERIA = [
    (1, "identity suite", identity_suite, 5),
    (2, "confluence and associativity", confluence_associativity, 10),
    (3, "subalgebra embedding", subalgebra_embedding, 5),
    (4, "right module generators", right_module_round_trip, None),
    (5, "dimension 2 round trip", dim2_round_trip, 5),
    (6, "dimension 3 round trip and iso criteria", theta_round_trip_and_criteria, 30),
    (7, "splitting along T", t_decomposition, 10),
    (8, "n-dimensional families", n_dimensional_families, 10),
    (9, "composition factors and semisimple quotient", composition_and_semisimple_quotient, 10),
    (10, "closed submodules and non-splitting line", submodules_and_splitting, 10),
]


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit, capsys):
    passed, detail, elapsed = _timed(fn)
    line = _report(number, title, passed, elapsed, limit, detail)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line
    if limit is not None:
        assert elapsed < limit, line


if __name__ == "__main__":
    results = []
    for number, title, fn, limit in CRITERIA:
        passed, detail, elapsed = _timed(fn)
        ok = passed and (limit is None or elapsed < limit)
        results.append(ok)
        print(_report(number, title, ok, elapsed, limit, detail))
    raise SystemExit(0 if all(results) else 1)
