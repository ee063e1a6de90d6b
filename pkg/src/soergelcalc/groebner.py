"""Groebner bases over the rationals, and graded series of quotients.

The kernel is a plain Buchberger loop with the coprime and chain pair
criteria, running on dense integer exponent vectors with fraction-free
content-stripped arithmetic; reduced bases are monic and canonical for
the chosen order.  On top of it: normal forms, ideal membership,
intersections by elimination, colon ideals, and weighted Hilbert series
computed from the initial ideal.
"""

import heapq
import json
from collections import Counter
from fractions import Fraction
from math import gcd

from .polycore import (
    Family,
    Polynomial,
    STANDARD_GRADING,
    auxvar,
    exact_div,
    is_homogeneous,
)


class MonomialOrder:
    """Admissible monomial order: weighted degrevlex, or an elimination
    block order that compares a chosen block of variables first."""

    def __init__(self, kind="wdegrevlex", elim=frozenset(), grading=STANDARD_GRADING):
        if kind not in ("wdegrevlex", "elim"):
            raise ValueError(f"unknown order kind: {kind}")
        self.kind = kind
        self.elim = frozenset(elim)
        self.grading = grading

    @classmethod
    def wdegrevlex(cls):
        return cls("wdegrevlex")

    @classmethod
    def elimination(cls, elim_vars):
        return cls("elim", elim=frozenset(elim_vars))

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.elim == other.elim
        )

    def __hash__(self):
        return hash((self.kind, self.elim))

    def dense_key(self, variables):
        """Key function on dense exponent tuples over the sorted variables."""
        vs = tuple(sorted(variables))
        n = len(vs)
        wt = [self.grading.weight(v) for v in vs]

        if self.kind == "wdegrevlex":

            def key(e):
                wd = sum(x * w for x, w in zip(e, wt))
                td = sum(e)
                return (wd, td, tuple(-x for x in reversed(e)))

            return key

        eidx = [i for i, v in enumerate(vs) if v in self.elim]
        ridx = [i for i, v in enumerate(vs) if v not in self.elim]

        def key(e):
            ed = sum(e[i] for i in eidx)
            er = tuple(-e[i] for i in reversed(eidx))
            wd = sum(e[i] * wt[i] for i in ridx)
            td = sum(e[i] for i in ridx)
            return (ed, er, wd, td, tuple(-e[i] for i in reversed(ridx)))

        return key


DEFAULT_ORDER = MonomialOrder.wdegrevlex()


# -- dense integer polynomials (internal) -----------------------------------


def _to_dense(p, pos, n):
    """Polynomial -> dict dense-exponent-tuple -> int, denominators cleared."""
    if p.is_zero():
        return {}
    denom = 1
    for c in p.terms.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    out = {}
    for m, c in p.terms.items():
        e = [0] * n
        for v, x in m:
            e[pos[v]] = x
        out[tuple(e)] = int(c * denom)
    return out


def _from_dense(d, vs, denom=1):
    terms = {}
    for e, c in d.items():
        mono = tuple((vs[i], x) for i, x in enumerate(e) if x)
        terms[mono] = Fraction(c, denom)
    return Polynomial(terms)


def _content(d):
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _strip(d):
    g = _content(d)
    if g > 1:
        for e in d:
            d[e] //= g
    return d


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm_d(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _triple(d, key):
    """(lead_exp, positive lead_coeff, dict) for a nonzero int poly."""
    le = max(d, key=key)
    if d[le] < 0:
        for e in d:
            d[e] = -d[e]
    return (le, d[le], d)


def _reduce_step(p, c, quot, lc, b):
    """p <- lc*p - c*quot*b, in place."""
    if lc != 1:
        for e in p:
            p[e] *= lc
    for e, bc in b.items():
        m = tuple(x + y for x, y in zip(e, quot))
        s = p.get(m, 0) - c * bc
        if s:
            p[m] = s
        else:
            p.pop(m, None)


def _reduce_int(p, basis, key):
    """Fully reduce the int poly ``p`` by ``basis``, up to a scalar.

    Returns a content-stripped remainder; the exact scalar is dropped
    (callers needing exactness use _reduce_exact).
    """
    p = dict(p)
    done = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        hit = None
        for le, lc, b in basis:
            if _divides(le, m):
                hit = (le, lc, b)
                break
        if hit is None:
            del p[m]
            done[m] = c
            continue
        le, lc, b = hit
        quot = tuple(x - y for x, y in zip(m, le))
        _reduce_step(p, c, quot, lc, b)
        if lc != 1:
            for e in done:
                done[e] *= lc
        if p and any(abs(v) > 1 << 128 for v in p.values()):
            g = gcd(_content(p), _content(done) if done else 0)
            if g > 1:
                for e in p:
                    p[e] //= g
                for e in done:
                    done[e] //= g
    _strip(done)
    return done


def _reduce_exact(p, denom, basis, key):
    """Fully reduce, tracking the exact scalar: returns (dict, denominator)."""
    p = dict(p)
    done = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        hit = None
        for le, lc, b in basis:
            if _divides(le, m):
                hit = (le, lc, b)
                break
        if hit is None:
            del p[m]
            done[m] = c
            continue
        le, lc, b = hit
        quot = tuple(x - y for x, y in zip(m, le))
        _reduce_step(p, c, quot, lc, b)
        if lc != 1:
            for e in done:
                done[e] *= lc
            denom *= lc
            g = gcd(gcd(_content(p) if p else 0, _content(done) if done else 0), denom)
            if g > 1:
                for e in p:
                    p[e] //= g
                for e in done:
                    done[e] //= g
                denom //= g
    return done, denom


def _spoly(f, g):
    """S-polynomial of two int-poly triples, content-stripped."""
    lf, cf, df = f
    lg, cg, dg = g
    m = _lcm_d(lf, lg)
    qf = tuple(x - y for x, y in zip(m, lf))
    qg = tuple(x - y for x, y in zip(m, lg))
    out = {}
    for e, c in df.items():
        out[tuple(x + y for x, y in zip(e, qf))] = cg * c
    for e, c in dg.items():
        me = tuple(x + y for x, y in zip(e, qg))
        s = out.get(me, 0) - cf * c
        if s:
            out[me] = s
        else:
            out.pop(me, None)
    return _strip(out)


class GroebnerBasis:
    """Reduced Groebner basis: monic, interreduced, canonically sorted."""

    __slots__ = ("order", "variables", "generators", "_key", "_basis_int")

    def __init__(self, order, variables, generators):
        self.order = order
        self.variables = tuple(sorted(variables))
        self.generators = tuple(generators)
        pos = {v: i for i, v in enumerate(self.variables)}
        n = len(self.variables)
        self._key = order.dense_key(self.variables)
        self._basis_int = [
            _triple(_strip(_to_dense(g, pos, n)), self._key) for g in self.generators
        ]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def contains_unit(self):
        return len(self.generators) == 1 and self.generators[0] == Polynomial.one()

    def leading_monomials(self):
        """Dense exponent tuples of the generators' leading monomials."""
        return [le for le, _, _ in self._basis_int]

    def s_polynomial(self, i, j):
        """S-polynomial of generators i and j (scalar-normalized)."""
        d = _spoly(self._basis_int[i], self._basis_int[j])
        return _from_dense(d, self.variables)


def buchberger(gens, order=None, variables=None):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Zero generators are dropped; the zero ideal gives the empty basis.
    ``variables`` fixes the ambient ring (defaults to the union of the
    generators' supports); the ambient matters for Hilbert series and
    for elimination.
    """
    order = order or DEFAULT_ORDER
    gens = [g for g in gens if not g.is_zero()]
    support = set()
    for g in gens:
        support.update(g.variables())
    if variables is None:
        variables = support
    else:
        variables = set(variables)
        if not support <= variables:
            raise ValueError("generators use variables outside the given ambient")
    vs = tuple(sorted(variables))
    if not gens:
        return GroebnerBasis(order, vs, ())
    pos = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    key = order.dense_key(vs)

    basis = []
    for g in gens:
        d = _strip(_to_dense(g, pos, n))
        basis.append(_triple(d, key))
    basis.sort(key=lambda t: key(t[0]))

    heap = []
    live = set()

    def push_pairs(j):
        for i in range(j):
            lcm = _lcm_d(basis[i][0], basis[j][0])
            heapq.heappush(heap, (key(lcm), i, j))
            live.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    def coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in live:
            continue
        live.discard((i, j))
        li, lj = basis[i][0], basis[j][0]
        if coprime(li, lj):
            continue
        lcm_ij = _lcm_d(li, lj)
        # chain criterion, strict form (safe in any processing order):
        # skip when some other lead divides the lcm with both mixed lcms
        # strictly smaller
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            lk = basis[k][0]
            if (
                _divides(lk, lcm_ij)
                and _lcm_d(li, lk) != lcm_ij
                and _lcm_d(lj, lk) != lcm_ij
            ):
                skip = True
                break
        if skip:
            continue
        rem = _reduce_int(_spoly(basis[i], basis[j]), basis, key)
        if not rem:
            continue
        basis.append(_triple(rem, key))
        push_pairs(len(basis) - 1)

    # minimalize: drop any element whose lead is divisible by another's
    basis.sort(key=lambda t: key(t[0]))
    kept = []
    for t in basis:
        if not any(_divides(k[0], t[0]) for k in kept):
            kept.append(t)
    # tail-reduce each survivor against the others, then make monic
    reduced = []
    for i, (le, lc, d) in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        r, _ = _reduce_exact(dict(d), 1, others, key)
        lr = max(r, key=key)
        reduced.append((lr, _from_dense(r, vs, r[lr])))
    reduced.sort(key=lambda t: key(t[0]))
    return GroebnerBasis(order, vs, tuple(p for _, p in reduced))


def normal_form(p, gb):
    """Complete reduction of p modulo the basis: exact, linear, idempotent."""
    if p.is_zero() or not gb.generators:
        return p
    if not set(p.variables()) <= set(gb.variables):
        gb = GroebnerBasis(
            gb.order, set(gb.variables) | set(p.variables()), gb.generators
        )
    vs = gb.variables
    pos = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    d = _to_dense(p, pos, n)
    denom = 1
    for c in p.terms.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    out, den = _reduce_exact(d, denom, gb._basis_int, gb._key)
    return _from_dense(out, vs, den)


def ideal_member(p, gb):
    """True iff p lies in the ideal."""
    return normal_form(p, gb).is_zero()


def ideal_sum(gb, extra, variables=None):
    """Reduced basis of gb's ideal plus extra generators."""
    gens = list(gb.generators) + list(extra)
    vs = set(gb.variables) if variables is None else set(variables)
    for g in extra:
        vs.update(g.variables())
    return buchberger(gens, gb.order, vs)


def intersect(gb_i, gb_j):
    """Basis of the intersection, by the one-auxiliary elimination trick."""
    variables = set(gb_i.variables) | set(gb_j.variables)
    if any(v[0] == Family.AUX for v in variables):
        raise ValueError("ambient rings may not already contain auxiliaries")
    if not gb_i.generators or not gb_j.generators:
        return buchberger([], gb_i.order, variables)
    w = Polynomial.variable(auxvar(1))
    gens = [w * f for f in gb_i.generators]
    gens += [(Polynomial.one() - w) * g for g in gb_j.generators]
    elim = buchberger(
        gens,
        MonomialOrder.elimination({auxvar(1)}),
        variables | {auxvar(1)},
    )
    kept = [g for g in elim.generators if auxvar(1) not in g.variables()]
    return buchberger(kept, gb_i.order, variables)


def colon_ideal(gb, p):
    """Basis of (I : p) = {q : p*q in I}, via intersection with <p>."""
    if p.is_zero():
        raise ValueError("colon by the zero polynomial")
    variables = set(gb.variables) | set(p.variables())
    base = GroebnerBasis(gb.order, variables, gb.generators)
    pr = buchberger([p], gb.order, variables)
    inter = intersect(base, pr)
    quots = [exact_div(g, p) for g in inter.generators]
    return buchberger(quots, gb.order, variables)


def ideal_equal(gb_i, gb_j):
    """True iff the two reduced bases (under one order) coincide."""
    if gb_i.order != gb_j.order:
        raise ValueError("cannot compare bases under different orders")
    return set(gb_i.generators) == set(gb_j.generators)


# -- Hilbert series ----------------------------------------------------------


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


def _qpoly_mul_factor(p, d):
    """p * (1 - q^d) for an int dict qexp -> coeff."""
    out = dict(p)
    for e, c in p.items():
        s = out.get(e + d, 0) - c
        if s:
            out[e + d] = s
        else:
            del out[e + d]
    return out


_HILBERT_MEMO = {}


def _hilbert_numerator(gens, weights):
    """Numerator of the Hilbert series of R/<gens> over prod_v (1 - q^w(v)).

    gens are dense exponent tuples of a monomial ideal; classic pivot
    recursion, memoized on the minimal generator set.
    """
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    n = len(weights)
    if gens[0] == (0,) * n:
        return {}
    memo_key = (gens, weights)
    if memo_key in _HILBERT_MEMO:
        return _HILBERT_MEMO[memo_key]
    occur = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                occur[i] += 1
    if all(o <= 1 for o in occur):
        # pairwise disjoint supports form a regular sequence
        out = {0: 1}
        for g in gens:
            out = _qpoly_mul_factor(out, sum(e * w for e, w in zip(g, weights)))
        _HILBERT_MEMO[memo_key] = out
        return out
    pivot = max(range(n), key=lambda i: occur[i])
    pw = weights[pivot]
    plus = list(gens) + [tuple(1 if i == pivot else 0 for i in range(n))]
    coloned = [
        tuple(e - 1 if i == pivot and e > 0 else e for i, e in enumerate(g))
        for g in gens
    ]
    a = _hilbert_numerator(tuple(plus), weights)
    b = _hilbert_numerator(tuple(coloned), weights)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e + pw, 0) + c
        if s:
            out[e + pw] = s
        else:
            del out[e + pw]
    _HILBERT_MEMO[memo_key] = out
    return out


def hilbert_series(gb, grading=STANDARD_GRADING):
    """Exact weighted Hilbert series of (ambient ring)/(ideal).

    Works from the leading-term ideal, which shares the Hilbert series
    of the ideal itself; the ideal must be homogeneous for that to be
    sound, and that is checked.
    """
    for v in gb.variables:
        if v[0] == Family.AUX:
            raise ValueError("Hilbert series over a ring with auxiliaries")
    for g in gb.generators:
        if not is_homogeneous(g, grading):
            raise ValueError(f"inhomogeneous ideal generator: {g}")
    weights = tuple(grading.weight(v) for v in gb.variables)
    num = _hilbert_numerator(tuple(gb.leading_monomials()), weights)
    return GradedSeries({(e, 0): c for e, c in num.items()}, weights)


# -- graded q,t-series -------------------------------------------------------


class GradedSeries:
    """Laurent polynomial in q and t over a product of (1 - q^d) factors.

    ``num`` maps (q-exponent, t-exponent) to a nonzero integer; ``den``
    is a multiset (sorted tuple) of positive integers d, one per factor
    (1 - q^d).  Equality cross-multiplies, hence is exact.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        self.num = {(int(e), int(t)): int(c) for (e, t), c in num.items() if c}
        self.den = tuple(sorted(int(d) for d in den))
        if any(d < 1 for d in self.den):
            raise ValueError("denominator exponents must be >= 1")

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, qexp, texp=0, coeff=1):
        return cls({(qexp, texp): coeff})

    @classmethod
    def free_ring(cls, weights):
        """Series of the free graded ring on variables of the given weights."""
        return cls({(0, 0): 1}, tuple(weights))

    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return not self.normalized().den

    def shift(self, qexp=0, texp=0):
        """Multiply by q^qexp t^texp (the grading shift)."""
        return GradedSeries(
            {(e + qexp, t + texp): c for (e, t), c in self.num.items()}, self.den
        )

    def __neg__(self):
        return GradedSeries({e: -c for e, c in self.num.items()}, self.den)

    def __add__(self, other):
        if isinstance(other, int):
            other = GradedSeries({(0, 0): other})
        if not isinstance(other, GradedSeries):
            return NotImplemented
        den = _den_union(self.den, other.den)
        a = _rescale(self, den)
        b = _rescale(other, den)
        for e, c in b.items():
            s = a.get(e, 0) + c
            if s:
                a[e] = s
            else:
                del a[e]
        return GradedSeries(a, den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = GradedSeries({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedSeries({e: other * c for e, c in self.num.items()}, self.den)
        if not isinstance(other, GradedSeries):
            return NotImplemented
        num = {}
        for (e1, t1), c1 in self.num.items():
            for (e2, t2), c2 in other.num.items():
                k = (e1 + e2, t1 + t2)
                s = num.get(k, 0) + c1 * c2
                if s:
                    num[k] = s
                else:
                    del num[k]
        return GradedSeries(num, self.den + other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = GradedSeries({(0, 0): other})
        if not isinstance(other, GradedSeries):
            return NotImplemented
        da = list(self.den)
        db = list(other.den)
        for d in list(da):
            if d in db:
                da.remove(d)
                db.remove(d)
        a = dict(self.num)
        for d in db:
            a = _num_mul_factor(a, d)
        b = dict(other.num)
        for d in da:
            b = _num_mul_factor(b, d)
        return a == b

    def __hash__(self):
        n = self.normalized()
        return hash((frozenset(n.num.items()), n.den))

    def normalized(self):
        """Cancel denominator factors that divide the numerator exactly."""
        num = dict(self.num)
        den = list(self.den)
        changed = True
        while changed and den:
            changed = False
            for d in sorted(set(den)):
                q = _num_div_factor(num, d)
                if q is not None:
                    num = q
                    den.remove(d)
                    changed = True
                    break
        return GradedSeries(num, tuple(den))

    def coefficient(self, qexp, texp=0):
        """Coefficient of q^qexp t^texp in the power-series expansion."""
        if not self.num:
            return 0
        lo = min(e for e, _ in self.num)

        def expand(idx, remaining):
            if idx == len(self.den):
                return self.num.get((remaining, texp), 0)
            d = self.den[idx]
            acc = 0
            m = 0
            while remaining - m * d >= lo:
                acc += expand(idx + 1, remaining - m * d)
                m += 1
            return acc

        return expand(0, qexp)

    def __str__(self):
        n = self.normalized()
        if not n.num:
            return "0"
        parts = []
        for (e, t), c in sorted(n.num.items()):
            body = []
            if abs(c) != 1 or (e == 0 and t == 0):
                body.append(str(abs(c)))
            if e:
                body.append("q" if e == 1 else f"q^{e}")
            if t:
                body.append("t" if t == 1 else f"t^{t}")
            s = "*".join(body)
            if not parts:
                parts.append("-" + s if c < 0 else s)
            else:
                parts.append(("- " if c < 0 else "+ ") + s)
        num_s = " ".join(parts)
        if not n.den:
            return num_s
        den_s = "".join(
            f"(1-q^{d})" + (f"^{m}" if m > 1 else "")
            for d, m in sorted(Counter(n.den).items())
        )
        return f"({num_s}) / {den_s}"

    def __repr__(self):
        return f"GradedSeries({self})"

    def to_json_obj(self):
        return {
            "num": [[e, t, c] for (e, t), c in sorted(self.num.items())],
            "den": list(self.den),
        }

    @classmethod
    def from_json_obj(cls, obj):
        return cls({(e, t): c for e, t, c in obj["num"]}, tuple(obj["den"]))

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, s):
        return cls.from_json_obj(json.loads(s))


def _den_union(a, b):
    ca, cb = Counter(a), Counter(b)
    out = []
    for d in set(ca) | set(cb):
        out.extend([d] * max(ca[d], cb[d]))
    return tuple(sorted(out))


def _rescale(s, den):
    """Numerator of s after rescaling to the larger denominator multiset."""
    missing = Counter(den) - Counter(s.den)
    num = dict(s.num)
    for d, m in missing.items():
        for _ in range(m):
            num = _num_mul_factor(num, d)
    return num


def _num_mul_factor(num, d):
    """num * (1 - q^d) on (qexp, texp) dicts."""
    out = dict(num)
    for (e, t), c in num.items():
        k = (e + d, t)
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def _num_div_factor(num, d):
    """num / (1 - q^d) if exact, else None; works per t-slice."""
    slices = {}
    for (e, t), c in num.items():
        slices.setdefault(t, {})[e] = c
    out = {}
    for t, p in slices.items():
        lo = min(p)
        rem = dict(p)
        while rem:
            top = max(rem)
            c = rem.pop(top)
            od = top - d
            if od < lo:
                return None
            out[(od, t)] = out.get((od, t), 0) - c
            s = rem.get(od, 0) + c
            if s:
                rem[od] = s
            else:
                rem.pop(od, None)
    return {k: v for k, v in out.items() if v}
