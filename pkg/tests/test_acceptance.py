"""Acceptance suite: one test per criterion, each printing a verdict line.

Every check is an exact equality (rational arithmetic end to end); the
stated runtime ceilings are asserted as well.  Run with ``pytest -v``
(add ``-s`` to see the verdict lines as they happen).
"""

import functools
import random
import subprocess
import sys
import time

from soergelcalc.groebner import (
    GradedSeries,
    colon_ideal,
    hilbert_series,
    ideal_member,
    ideal_sum,
    normal_form,
)
from soergelcalc.partitions import box_count
from soergelcalc.polycore import (
    PolyMatrix,
    Polynomial,
    det_sum_expansion,
    det_sum_summands,
    determinant,
    xvar,
    ypvar,
    yvar,
)
from soergelcalc.qhomology import (
    corollary_check,
    corollary_rhs_expansion,
    homology_series,
    qbinomial_delta_identity,
    qdim_Ij_formula,
    qdim_Ij_groebner,
    qdim_Rprime,
)
from soergelcalc.schur import (
    complete_h,
    h_recursion_check,
    laplace_identity_check,
    schur_bialternant_oracle,
    schur_dual_giambelli,
    schur_giambelli,
    schur_in_z,
)
from soergelcalc.soergel import (
    SoergelContext,
    delta_formula,
    delta_sign_report,
    hochschild_direct,
    minor_ideal_Ij,
    verify_bimodule,
)


def criterion(number, label, limit_seconds):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper():
            start = time.monotonic()
            try:
                detail = fn()
            except BaseException:
                print(f"criterion {number:2d} [{label}]: FAIL", flush=True)
                raise
            elapsed = time.monotonic() - start
            assert elapsed < limit_seconds, (
                f"criterion {number} exceeded its {limit_seconds}s budget: {elapsed:.1f}s"
            )
            suffix = f" ({detail})" if detail else ""
            print(
                f"criterion {number:2d} [{label}]: PASS in {elapsed:.1f}s{suffix}",
                flush=True,
            )

        return wrapper

    return decorate


def _partitions_upto(maxweight):
    out = [()]

    def rec(prefix, remaining, maxpart):
        for p in range(min(remaining, maxpart), 0, -1):
            out.append(prefix + (p,))
            rec(prefix + (p,), remaining - p, p)

    rec((), maxweight, maxweight)
    return out


def _random_poly(rng, variables, max_terms=2, max_exp=1, max_coeff=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(
            sorted((v, e) for v in variables if (e := rng.randint(0, max_exp)))
        )
        c = rng.randint(-max_coeff, max_coeff)
        if c:
            terms[mono] = terms.get(mono, 0) + c
    return Polynomial({m: c for m, c in terms.items() if c})


@criterion(1, "Schur ground truth", 10)
def test_criterion_01_schur_ground_truth():
    lams = _partitions_upto(8)
    compared = 0
    for n in range(1, 5):
        for lam in lams:
            g = schur_giambelli(lam, n)
            assert g == schur_dual_giambelli(lam, n)
            if len(lam) <= n:
                assert schur_in_z(lam, n) == schur_bialternant_oracle(lam, n)
            else:
                assert g.is_zero()
            compared += 1
    # the displayed 3x3 determinant in complete symmetric polynomials
    h = lambda m: complete_h(m, 3)
    displayed = PolyMatrix(
        [
            [h(3), h(4), h(5)],
            [h(2), h(3), h(4)],
            [Polynomial.zero(), Polynomial.one(), h(1)],
        ]
    )
    assert schur_dual_giambelli((3, 3, 1), 3) == determinant(displayed)
    return f"{compared} multiindex/variable-count pairs, exact"


@criterion(2, "symmetric-function identities", 10)
def test_criterion_02_section2_identities():
    checked = 0
    for n in range(1, 5):
        for m in range(1, 9):
            assert h_recursion_check(m, n)
            checked += 1
        for p in range(6):
            for q in range(6):
                assert laplace_identity_check(p, q, n)
                checked += 1
    return f"{checked} identity instances, exact"


@criterion(3, "determinant of a sum", 30)
def test_criterion_03_det_sum_expansion():
    from math import comb

    rng = random.Random(2024)
    vs = [xvar(1), yvar(1)]
    count = 0
    for n in (2, 3, 4):
        assert det_sum_summands(n) == comb(2 * n, n)
        per_size = 67 if n < 4 else 66
        for _ in range(per_size):
            a = PolyMatrix(
                [[_random_poly(rng, vs) for _ in range(n)] for _ in range(n)]
            )
            b = PolyMatrix(
                [[_random_poly(rng, vs) for _ in range(n)] for _ in range(n)]
            )
            assert det_sum_expansion(a, b) == determinant(a + b)
            count += 1
    assert count == 200
    return "200 random matrices sizes 2-4, summand counts C(2k,k)"


@criterion(4, "bimodule map exists", 300)
def test_criterion_04_bimodule_map_existence():
    cases = []
    for k in range(1, 4):
        for l in range(1, 5 - k):
            cases.append((k, l, False))
    cases += [(3, 2, True), (4, 1, True)]
    for k, l, force in cases:
        r = verify_bimodule(k, l, force=force)
        assert all(r["membership"]), (k, l)
        assert r["f_nonzero"], (k, l)
        assert r["homogeneous"], (k, l)
        assert r["degree"] == 2 * k * l, (k, l)
        assert r["delta_terms"] == box_count(k, l)
    return "k+l <= 4 plus forced k+l = 5, all memberships exact"


@criterion(5, "determinant form", 60)
def test_criterion_05_determinant_form():
    signs = []
    for k in range(1, 4):
        for l in range(1, k + 1):
            from soergelcalc.soergel import delta_determinant

            det = delta_determinant(k, l)
            f = delta_formula(k, l).to_P()
            r = delta_sign_report(k, l)
            eps = r["sign_epsilon"]
            assert eps in (1, -1), (k, l)
            # monomial-by-monomial agreement after sign normalization
            assert det == eps * f, (k, l)
            signs.append(f"eps({k},{l})={eps:+d} vs printed {r['sign_paper']:+d}")
    return "; ".join(signs)


@criterion(6, "uniqueness at desk scale", 120)
def test_criterion_06_uniqueness():
    # k+l <= 3: the kernel of the first difference, by colon ideal
    for k, l in [(1, 1), (2, 1), (1, 2)]:
        ctx = SoergelContext(k, l)
        p = Polynomial.variable(yvar(1)) - Polynomial.variable(ypvar(1))
        col = colon_ideal(ctx.gb_I, p)
        kernel = hilbert_series(ctx.gb_I) - hilbert_series(col)
        assert kernel == GradedSeries.monomial(2 * k * l) * qdim_Rprime(k, l), (k, l)
    # k+l = 4: the equivalent Euler identity, all three series independent
    for k, l in [(2, 2), (3, 1), (1, 3)]:
        ctx = SoergelContext(k, l)
        qp = hilbert_series(ctx.gb_I)
        qp1 = ctx.qdim_P_t(1)
        lhs = GradedSeries({(0, 0): 1, (2, 0): -1}) * qp
        rhs = qp1 - GradedSeries.monomial(2 + 2 * k * l) * qdim_Rprime(k, l)
        assert lhs == rhs, (k, l)
    return "colon kernels at k+l<=3; Euler identity at k+l=4"


@criterion(7, "minor-ideal series formula", 60)
def test_criterion_07_qdim_Ij():
    for k, l in [(1, 1), (2, 1), (2, 2)]:
        for j in range(1, l + 1):
            assert qdim_Ij_formula(k, l, j) == qdim_Ij_groebner(k, l, j), (k, l, j)
    return "resolution formula = free series minus quotient series, exact"


@criterion(8, "homology cross-check", 120)
def test_criterion_08_homology_direct():
    for k, l in [(1, 1), (2, 1)]:
        direct = hochschild_direct(k, l)
        formula = homology_series(k, l)
        assert len(direct) == len(formula)
        for i, (a, b) in enumerate(zip(direct, formula)):
            assert a == b, (k, l, i)
    return "direct Koszul equals the closed formula, shifts included"


@criterion(9, "digon identity", 10)
def test_criterion_09_corollary():
    for k in range(1, 5):
        for l in range(1, k + 1):
            r = corollary_check(k, l)
            assert r["equal"], (k, l)
            assert r["rhs_expansion_consistent"], (k, l)
    for k in range(1, 6):
        for l in range(1, 6):
            prod = GradedSeries.one()
            for i in range(1, l + 1):
                prod = prod * (
                    GradedSeries.one() - GradedSeries.monomial(2 * k + 2 * i - 1, -1)
                )
            assert prod == corollary_rhs_expansion(k, l)
    assert all(qbinomial_delta_identity(m) for m in range(11))
    return "exact rational-function identity, k >= l up to 4"


@criterion(10, "Groebner kernel health", 60)
def test_criterion_10_groebner_health():
    rng = random.Random(77)
    bases = []
    for k in range(1, 4):
        for l in range(1, 5 - k):
            bases.append(SoergelContext(k, l).gb_I)
    bases.append(SoergelContext(3, 2).gb_I)
    for k, l in [(2, 2), (3, 1), (1, 3)]:
        bases.append(SoergelContext(k, l).gb_P_t(1))
    for k, l in [(1, 1), (2, 1), (1, 2)]:
        ctx = SoergelContext(k, l)
        p = Polynomial.variable(yvar(1)) - Polynomial.variable(ypvar(1))
        bases.append(colon_ideal(ctx.gb_I, p))
        bases.append(ideal_sum(ctx.gb_I, [p]))
    for k, l in [(1, 1), (2, 1), (2, 2)]:
        for j in range(1, l + 1):
            bases.append(minor_ideal_Ij(k, l, j))
    spairs = 0
    for gb in bases:
        for i in range(len(gb)):
            for j in range(i + 1, len(gb)):
                assert ideal_member(gb.s_polynomial(i, j), gb)
                spairs += 1
        for _ in range(100):
            p = _random_poly(rng, gb.variables, max_terms=3, max_exp=1, max_coeff=4)
            nf = normal_form(p, gb)
            assert normal_form(nf, gb) == nf
    return f"{len(bases)} ideals, {spairs} S-pairs to zero, 100 idempotence probes each"


@criterion(11, "selftest determinism", 120)
def test_criterion_11_determinism():
    cmd = [
        sys.executable,
        "-m",
        "soergelcalc.cli",
        "selftest",
        "--max-kl",
        "3",
        "--seed",
        "7",
    ]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stderr == b.stderr
    return "two seeded runs byte-identical"
