"""Batch command-line surface: delta, verify, homology, hilbert, selftest.

Exit codes: 0 success, 1 identity/check failure, 2 usage error,
3 resource refusal.  All commands are deterministic given their flags
(and --seed where randomness is involved).
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import qhomology, schur, soergel
from .groebner import GradedSeries, ideal_member, normal_form
from .partitions import box_count, enumerate_box
from .polycore import (
    PolyMatrix,
    Polynomial,
    det_sum_expansion,
    determinant,
    determinant_cofactor,
    is_homogeneous,
    poly_to_json_obj,
    poly_to_text,
    weighted_degree,
    xvar,
    ypvar,
    yvar,
)
from .soergel import ResourceLimitError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _positive_int(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser():
    p = argparse.ArgumentParser(
        prog="soergelcalc",
        description="Exact bimodule-map and Koszul-homology computations "
        "for two-block symmetric polynomial rings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_kl(sp):
        sp.add_argument("--k", type=_positive_int, required=True)
        sp.add_argument("--l", type=_positive_int, required=True)
        sp.add_argument("--format", choices=("text", "json"), default="text")

    d = sub.add_parser("delta", help="print the bimodule map on 1")
    add_kl(d)
    d.set_defaults(func=cmd_delta)

    v = sub.add_parser("verify", help="verify the bimodule-map identities")
    add_kl(v)
    v.add_argument("--force", action="store_true", help="override the size cap")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("homology", help="graded dimensions of the homology")
    add_kl(h)
    h.add_argument(
        "--direct",
        action="store_true",
        help="also run the direct Koszul computation and compare",
    )
    h.add_argument("--force", action="store_true", help="override the size cap")
    h.set_defaults(func=cmd_homology)

    hb = sub.add_parser("hilbert", help="graded series of the quotient tower")
    add_kl(hb)
    hb.add_argument("--force", action="store_true", help="override the size cap")
    hb.set_defaults(func=cmd_hilbert)

    st = sub.add_parser("selftest", help="run the invariant suites")
    st.add_argument("--max-kl", type=_positive_int, default=3, dest="max_kl")
    st.add_argument("--seed", type=int, default=0)
    st.set_defaults(func=cmd_selftest)

    return p


def cmd_delta(args):
    expr = soergel.delta_formula(args.k, args.l)
    f = expr.to_P()
    deg = weighted_degree(f)
    if args.format == "json":
        out = {
            "k": args.k,
            "l": args.l,
            "terms": expr.to_json_obj(),
            "count": len(expr),
            "degree": deg,
            "p_image": poly_to_json_obj(f),
        }
        print(json.dumps(out))
    else:
        print(expr)
        print(f"count: {len(expr)}")
        print(f"degree: {deg}")
        print(f"P-image: {poly_to_text(f)}")
    return EXIT_OK


def cmd_verify(args):
    report = soergel.verify_bimodule(args.k, args.l, force=args.force)
    if args.format == "json":
        print(json.dumps(report))
    else:
        print(f"k={report['k']} l={report['l']} terms={report['delta_terms']}")
        print(
            f"degree: {report['degree']} (expected {report['degree_expected']}), "
            f"homogeneous: {report['homogeneous']}"
        )
        print(f"membership (y_j - y'_j) f in I: {report['membership']}")
        print(f"f nonzero in the quotient: {report['f_nonzero']}")
        print(
            f"determinant sign: measured {report['sign_epsilon']}, "
            f"printed-formula {report['sign_paper']}"
        )
        print(f"top minor ideal principal on f: {report['minor_ideal_principal']}")
        print("verdict: " + ("PASS" if report["ok"] else "FAIL"))
    return EXIT_OK if report["ok"] else EXIT_CHECK_FAILED


def cmd_homology(args):
    series = qhomology.homology_series(args.k, args.l)
    cor = qhomology.corollary_check(args.k, args.l)
    direct_match = None
    if args.direct:
        direct = soergel.hochschild_direct(args.k, args.l, force=args.force)
        direct_match = len(direct) == len(series) and all(
            a == b for a, b in zip(direct, series)
        )
    ok = cor["equal"] and cor["rhs_expansion_consistent"] and direct_match is not False
    if args.format == "json":
        out = {
            "k": args.k,
            "l": args.l,
            "homology": [s.to_json_obj() for s in series],
            "corollary": cor["equal"],
            "rhs_expansion_consistent": cor["rhs_expansion_consistent"],
            "direct_match": direct_match,
        }
        print(json.dumps(out))
    else:
        for i, s in enumerate(series):
            label = "H_0" if i == 0 else f"H_-{i}"
            print(f"{label} = {s}")
        print("corollary: " + ("PASS" if cor["equal"] else "FAIL"))
        if direct_match is not None:
            print("direct check: " + ("MATCH" if direct_match else "MISMATCH"))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_hilbert(args):
    k, l = (args.k, args.l) if args.k >= args.l else (args.l, args.k)
    soergel._check_ring_size(2 * (k + l), args.force)
    ctx = soergel.SoergelContext(k, l)
    rows = [("qdim R'", qhomology.qdim_Rprime(k, l))]
    for t in range(l + 1):
        name = "qdim P" if t == 0 else f"qdim P_{t}"
        rows.append((name, ctx.qdim_P_t(t)))
    for j in range(1, l + 1):
        rows.append((f"qdim I_{j} (formula)", qhomology.qdim_Ij_formula(k, l, j)))
        rows.append((f"qdim I_{j} (groebner)", qhomology.qdim_Ij_groebner(k, l, j)))
    if args.format == "json":
        print(json.dumps({name: s.to_json_obj() for name, s in rows}))
    else:
        if (k, l) != (args.k, args.l):
            print(f"(roles exchanged: computing at k={k}, l={l})")
        for name, s in rows:
            print(f"{name} = {s}")
    return EXIT_OK


# -- selftest suites ---------------------------------------------------------


def _random_poly(rng, variables, max_terms=4, max_exp=2, max_coeff=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = []
        for v in variables:
            e = rng.randint(0, max_exp)
            if e:
                mono.append((v, e))
        c = rng.randint(-max_coeff, max_coeff)
        if c:
            terms[tuple(sorted(mono))] = terms.get(tuple(sorted(mono)), 0) + c
    return Polynomial({m: Fraction(c) for m, c in terms.items() if c})


def _suite_ring_axioms(rng, max_kl):
    vs = [xvar(1), xvar(2), yvar(1)]
    for _ in range(40):
        a, b, c = (_random_poly(rng, vs) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + Polynomial.zero() == a
        assert a * Polynomial.one() == a
    for _ in range(10):
        p = _random_poly(rng, vs)
        f = {xvar(1): _random_poly(rng, [yvar(1)], max_terms=2, max_exp=1)}
        g = {yvar(1): _random_poly(rng, [xvar(2)], max_terms=2, max_exp=1)}
        composed = {
            xvar(1): f[xvar(1)].substitute(g),
            yvar(1): g[yvar(1)],
        }
        assert p.substitute(f).substitute(g) == p.substitute(composed)
    return "40 random triples, 10 substitution compositions"


def _suite_determinants(rng, max_kl):
    vs = [xvar(1), yvar(1)]
    checked = 0
    for n in (2, 3):
        for _ in range(8):
            rows = [
                [_random_poly(rng, vs, max_terms=2, max_exp=1, max_coeff=3) for _ in range(n)]
                for _ in range(n)
            ]
            m = PolyMatrix(rows)
            d = determinant(m)
            assert d == determinant_cofactor(m)
            # alternating: swapping two rows flips the sign
            sw = PolyMatrix([rows[1], rows[0]] + rows[2:])
            assert determinant(sw) == -d
            checked += 1
    for n in (2, 3):
        for _ in range(6):
            a = PolyMatrix(
                [[_random_poly(rng, vs, 2, 1, 3) for _ in range(n)] for _ in range(n)]
            )
            b = PolyMatrix(
                [[_random_poly(rng, vs, 2, 1, 3) for _ in range(n)] for _ in range(n)]
            )
            assert det_sum_expansion(a, b) == determinant(a + b)
            checked += 1
    return f"{checked} determinant identities"


def _suite_partitions(rng, max_kl):
    n = 0
    for k in range(1, 5):
        for l in range(1, 5):
            box = enumerate_box(k, l)
            assert len(box) == box_count(k, l)
            for a in box:
                assert a.conjugate().conjugate() == a
                assert a.complement(k, l).complement(k, l) == a
                assert a.weight() + a.complement(k, l).weight() == k * l
                c = a.complement(k, l).conjugate()
                assert c.fits_box(l, k)
                n += 1
    return f"{n} box partitions checked"


def _suite_schur(rng, max_kl):
    checked = 0
    for n in range(1, 4):
        for lam in _partitions_upto(6):
            g = schur.schur_giambelli(lam, n)
            assert g == schur.schur_dual_giambelli(lam, n)
            if len(lam) <= n:
                assert schur.schur_in_z(lam, n) == schur.schur_bialternant_oracle(lam, n)
                if sum(lam):
                    assert weighted_degree(g) == 2 * sum(lam)
                    assert is_homogeneous(g)
            else:
                assert g.is_zero()
            checked += 1
    for n in range(1, 4):
        for m in range(1, 7):
            assert schur.h_recursion_check(m, n)
        for p in range(4):
            for q in range(4):
                assert schur.laplace_identity_check(p, q, n)
    return f"{checked} Schur comparisons plus recursion/convolution ranges"


def _partitions_upto(maxweight):
    out = [()]
    def rec(prefix, remaining, maxpart):
        for p in range(min(remaining, maxpart), 0, -1):
            out.append(prefix + (p,))
            rec(prefix + (p,), remaining - p, p)
    rec((), maxweight, maxweight)
    return out


def _suite_groebner(rng, max_kl):
    count = 0
    for k in range(1, max_kl):
        for l in range(1, max_kl + 1 - k):
            gb = soergel.SoergelContext(k, l).gb_I
            for i in range(len(gb)):
                for j in range(i + 1, len(gb)):
                    assert ideal_member(gb.s_polynomial(i, j), gb)
            for g in soergel.ideal_I_generators(k, l):
                assert ideal_member(g, gb)
            vs = gb.variables
            for _ in range(20):
                p = _random_poly(rng, vs, max_terms=3, max_exp=1)
                nf = normal_form(p, gb)
                assert normal_form(nf, gb) == nf
                q = _random_poly(rng, vs, max_terms=3, max_exp=1)
                assert normal_form(p + q, gb) == normal_form(p, gb) + normal_form(q, gb)
            count += 1
    return f"{count} presentation ideals: S-polynomials, idempotence, linearity"


def _suite_bimodule(rng, max_kl):
    reports = []
    for k in range(1, max_kl):
        for l in range(1, max_kl + 1 - k):
            r = soergel.verify_bimodule(k, l)
            assert r["ok"], f"verification failed at ({k},{l}): {r}"
            assert r["delta_terms"] == box_count(k, l)
            reports.append((k, l, r["sign_epsilon"]))
    signs = ", ".join(f"eps({k},{l})={e:+d}" for k, l, e in reports)
    return f"{len(reports)} cases; {signs}"


def _suite_qseries(rng, max_kl):
    for n in range(1, 11):
        for m in range(n + 1):
            lhs = qhomology.quantum_binomial(n, m)
            rhs = qhomology.quantum_binomial(n - 1, m - 1) + GradedSeries.monomial(
                2 * m
            ) * qhomology.quantum_binomial(n - 1, m)
            assert lhs == rhs
    assert all(qhomology.qbinomial_delta_identity(m) for m in range(9))
    for k in range(1, 4):
        for l in range(1, k + 1):
            assert qhomology.corollary_rhs_product(k, l) == qhomology.qdim_Rprime(
                k, l
            ) * qhomology.corollary_rhs_expansion(k, l)
            cor = qhomology.corollary_check(k, l)
            assert cor["equal"]
            hs = qhomology.homology_series(k, l)
            assert hs[0] == qhomology.qdim_Rprime(k, l)
            alt = GradedSeries.zero()
            for i, h in enumerate(hs):
                t = h.shift(texp=-i)
                alt = alt + (t if i % 2 == 0 else -t)
            assert alt == qhomology.product_expansion_series(k, l)
    return "q-Pascal to 10, delta collapse to 8, digon identity to k=3"


def _suite_homology_direct(rng, max_kl):
    cases = [(1, 1), (2, 1)]
    if max_kl >= 4:
        cases.append((2, 2))
    for k, l in cases:
        d = soergel.hochschild_direct(k, l)
        f = qhomology.homology_series(k, l)
        assert len(d) == len(f) and all(a == b for a, b in zip(d, f))
    return f"direct Koszul matches the closed formula on {cases}"


def _suite_minor_ideals(rng, max_kl):
    cases = [(1, 1), (2, 1)]
    if max_kl >= 4:
        cases.append((2, 2))
    for k, l in cases:
        for j in range(1, l + 1):
            assert qhomology.qdim_Ij_formula(k, l, j) == qhomology.qdim_Ij_groebner(
                k, l, j
            )
    return f"resolution formula matches Groebner series on {cases}"


def _suite_uniqueness(rng, max_kl):
    checked = []
    for k in range(1, 3):
        for l in range(1, 4 - k):
            ctx = soergel.SoergelContext(k, l)
            gb = ctx.gb_I
            p = Polynomial.variable(yvar(1)) - Polynomial.variable(ypvar(1))
            step = soergel.koszul_step(gb, p)
            expected = GradedSeries.monomial(2 * k * l) * qhomology.qdim_Rprime(k, l)
            assert step["kernel_series"] == expected
            checked.append((k, l))
    for k in range(1, max_kl):
        for l in range(1, min(k, max_kl - k) + 1):
            r = qhomology.recurrence_checks(k, l)
            assert r["eq_first_step"]
            assert all(r["tower_shifted"])
    return f"kernel series = shifted free series on {checked}; tower recurrences hold"


_SUITES = [
    ("ring-axioms", _suite_ring_axioms),
    ("determinants", _suite_determinants),
    ("partitions", _suite_partitions),
    ("schur", _suite_schur),
    ("groebner-health", _suite_groebner),
    ("bimodule-map", _suite_bimodule),
    ("q-series", _suite_qseries),
    ("homology-direct", _suite_homology_direct),
    ("minor-ideals", _suite_minor_ideals),
    ("uniqueness", _suite_uniqueness),
]


def cmd_selftest(args):
    if args.max_kl > 4:
        print(
            f"refusing --max-kl {args.max_kl}: the Groebner suites grow quickly; "
            "4 is the supported ceiling (run individual verify/homology commands "
            "with --force for larger single cases)"
        )
        return EXIT_RESOURCE
    failures = 0
    for name, fn in _SUITES:
        rng = random.Random((args.seed, name).__repr__())
        try:
            detail = fn(rng, args.max_kl)
            print(f"{name}: PASS ({detail})")
        except AssertionError as e:
            failures += 1
            print(f"{name}: FAIL ({e})")
    if failures:
        print(f"{failures} suite(s) failed")
        return EXIT_CHECK_FAILED
    print("all suites passed")
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
