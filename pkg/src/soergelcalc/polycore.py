"""Exact sparse multivariate polynomials over the rationals.

Variables come in named families (x, y, primed copies, z, elimination
auxiliaries), carry an even weight, and polynomials are stored as sparse
term maps with Fraction coefficients.  Everything is immutable and exact:
no floats anywhere, equality is structural equality of the term maps.
"""

import json
import re
from enum import IntEnum
from fractions import Fraction
from itertools import combinations


class Family(IntEnum):
    """Variable families, in canonical display order."""

    X = 0
    Y = 1
    XP = 2
    YP = 3
    Z = 4
    AUX = 5


_PREFIX = {
    Family.X: "x",
    Family.Y: "y",
    Family.XP: "xp",
    Family.YP: "yp",
    Family.Z: "z",
    Family.AUX: "w",
}
_FAMILY_OF_PREFIX = {p: f for f, p in _PREFIX.items()}

# A variable is a (family, index) pair with index >= 1; a monomial is a
# tuple of ((family, index), exponent) pairs sorted by variable, with all
# exponents positive.  The empty tuple is the monomial 1.

ONE_MONO = ()


def var(family, index):
    """Build a variable id, checking the index is positive."""
    if index < 1:
        raise ValueError(f"variable index must be >= 1, got {index}")
    return (Family(family), index)


def xvar(i):
    return var(Family.X, i)


def yvar(i):
    return var(Family.Y, i)


def xpvar(i):
    return var(Family.XP, i)


def ypvar(i):
    return var(Family.YP, i)


def zvar(i):
    return var(Family.Z, i)


def auxvar(i=1):
    return var(Family.AUX, i)


def var_name(v):
    fam, idx = v
    return f"{_PREFIX[fam]}{idx}"


_VAR_RE = re.compile(r"^(xp|yp|x|y|z|w)(\d+)$")


def parse_var(name):
    """Inverse of var_name."""
    m = _VAR_RE.match(name)
    if not m:
        raise ValueError(f"not a variable name: {name!r}")
    return var(_FAMILY_OF_PREFIX[m.group(1)], int(m.group(2)))


class Grading:
    """Weight function on variables: z weighs 2, x_i and y_i weigh 2i.

    Elimination auxiliaries weigh 0 so they never disturb the grading of
    the rings they are temporarily adjoined to.
    """

    def weight(self, v):
        fam, idx = v
        if fam == Family.Z:
            return 2
        if fam == Family.AUX:
            return 0
        return 2 * idx


STANDARD_GRADING = Grading()


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_div(a, b):
    """Return a/b as a monomial, or None if b does not divide a."""
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        r = d.get(v, 0) - e
        if r < 0:
            return None
        if r == 0:
            del d[v]
        else:
            d[v] = r
    return tuple(sorted(d.items()))


def mono_pow(a, n):
    return tuple((v, e * n) for v, e in a) if n else ONE_MONO


def mono_wdeg(m, grading=STANDARD_GRADING):
    return sum(e * grading.weight(v) for v, e in m)


def mono_totdeg(m):
    return sum(e for _, e in m)


def term_key(variables):
    """Canonical term order on monomials supported on ``variables``.

    Graded reverse lexicographic under the standard weights, with the
    plain exponent sum inserted as a secondary grade (the zero-weight
    auxiliaries would otherwise make 1 non-minimal), and the variable
    significance x1 > x2 > ... > y1 > ... > xp > yp > z > w.
    """
    vs = sorted(variables)
    pos = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    wt = [STANDARD_GRADING.weight(v) for v in vs]

    def key(mono):
        e = [0] * n
        wd = 0
        td = 0
        for v, x in mono:
            i = pos[v]
            e[i] = x
            wd += x * wt[i]
            td += x
        return (wd, td, tuple(-e[i] for i in range(n - 1, -1, -1)))

    return key


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be exact (int or Fraction), got {type(c)}")


class Polynomial:
    """Sparse exact polynomial: a map monomial -> nonzero Fraction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, c in terms.items():
                c = _as_fraction(c)
                if c:
                    t[m] = c
        self.terms = t
        self._hash = None

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def constant(cls, c):
        return cls({ONE_MONO: _as_fraction(c)})

    @classmethod
    def variable(cls, v):
        return cls({((v, 1),): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        p = Polynomial.__new__(Polynomial)
        p.terms = t
        p._hash = None
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Polynomial.__new__(Polynomial)
        p.terms = {m: -c for m, c in self.terms.items()}
        p._hash = None
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return _ZERO
            p = Polynomial.__new__(Polynomial)
            p.terms = {m: c * v for m, v in self.terms.items()}
            p._hash = None
            return p
        if not isinstance(other, Polynomial):
            return NotImplemented
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    del t[m]
        p = Polynomial.__new__(Polynomial)
        p.terms = t
        p._hash = None
        return p

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def variables(self):
        """Sorted tuple of variables occurring in the polynomial."""
        s = set()
        for m in self.terms:
            for v, _ in m:
                s.add(v)
        return tuple(sorted(s))

    def substitute(self, mapping):
        """Compose with ``mapping`` (variable -> Polynomial, identity default)."""
        sub = {}
        for v, val in mapping.items():
            if isinstance(val, (int, Fraction)):
                val = Polynomial.constant(val)
            sub[v] = val
        powers = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = sub[v] ** e
            return powers[key]

        out = _ZERO
        for m, c in self.terms.items():
            piece = Polynomial.constant(c)
            rest = []
            for v, e in m:
                if v in sub:
                    piece = piece * power(v, e)
                else:
                    rest.append((v, e))
            if rest:
                piece = piece * Polynomial({tuple(rest): Fraction(1)})
            out = out + piece
        return out

    def canonical_terms(self):
        """Terms as (monomial, coefficient), largest first in the canonical order."""
        key = term_key(self.variables())
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, key=None):
        """(monomial, coefficient) maximal under ``key`` (canonical by default)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if key is None:
            key = term_key(self.variables())
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return f"Polynomial({poly_to_text(self)})"


_ZERO = Polynomial.__new__(Polynomial)
_ZERO.terms = {}
_ZERO._hash = None
_ONE = Polynomial.__new__(Polynomial)
_ONE.terms = {ONE_MONO: Fraction(1)}
_ONE._hash = None


def weighted_degree(p, grading=STANDARD_GRADING):
    """Max weighted degree over terms, or None for the zero polynomial."""
    if p.is_zero():
        return None
    return max(mono_wdeg(m, grading) for m in p.terms)


def is_homogeneous(p, grading=STANDARD_GRADING):
    """True if all terms share one weighted degree (vacuously true for 0)."""
    degs = {mono_wdeg(m, grading) for m in p.terms}
    return len(degs) <= 1


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def exact_div(num, den):
    """Quotient num/den, raising ExactDivisionError unless it is exact."""
    if den.is_zero():
        raise ZeroDivisionError("exact_div by zero polynomial")
    if num.is_zero():
        return _ZERO
    key = term_key(set(num.variables()) | set(den.variables()))
    dm, dc = den.leading_term(key)
    quot = {}
    rem = num
    while rem.terms:
        m, c = rem.leading_term(key)
        q = mono_div(m, dm)
        if q is None:
            raise ExactDivisionError(f"{den} does not divide {num}")
        qc = c / dc
        quot[q] = quot.get(q, 0) + qc
        rem = rem - Polynomial({q: qc}) * den
    return Polynomial(quot)


class PolyMatrix:
    """Rectangular matrix of polynomials."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise ValueError("matrix must be nonempty")
        ncols = len(entries[0])
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for e in row:
                if not isinstance(e, Polynomial):
                    raise TypeError("entries must be Polynomial")
        self.entries = entries
        self.rows = len(entries)
        self.cols = ncols

    @classmethod
    def identity(cls, n):
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, a, b):
        top = [row + [_ZERO] * b.cols for row in a.entries]
        bot = [[_ZERO] * a.cols + row for row in b.entries]
        return cls(top + bot)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = _ZERO
                for t in range(self.cols):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def submatrix(self, row_idx, col_idx):
        return PolyMatrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 1:
        return m.entries[0][0]
    a = [row[:] for row in m.entries]
    sign = 1
    prev = _ONE
    for col in range(n - 1):
        pivot = None
        for r in range(col, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            return _ZERO
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                num = a[col][col] * a[r][c] - a[r][col] * a[col][c]
                a[r][c] = exact_div(num, prev)
            a[r][col] = _ZERO
        prev = a[col][col]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def determinant_cofactor(m):
    """Exact determinant by cofactor expansion, a cross-check for small sizes."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")

    def rec(rows, cols):
        if not rows:
            return _ONE
        i = rows[0]
        acc = _ZERO
        for pos, j in enumerate(cols):
            e = m.entries[i][j]
            if not e:
                continue
            minor = rec(rows[1:], cols[:pos] + cols[pos + 1 :])
            term = e * minor
            acc = acc + (term if pos % 2 == 0 else -term)
        return acc

    return rec(tuple(range(m.rows)), tuple(range(m.cols)))


def det_sum_terms(a, b):
    """Yield the summands of the complementary-minor expansion of det(a+b).

    One signed product per pair of equal-length increasing row/column
    subsequences: the minor of ``a`` on the chosen rows and columns times
    the minor of ``b`` on the complementary ones.
    """
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise ValueError("det_sum_expansion needs square matrices of equal size")
    k = a.rows
    full = tuple(range(k))
    for i in range(k + 1):
        for rows in combinations(full, i):
            rows_c = tuple(r for r in full if r not in rows)
            for cols in combinations(full, i):
                cols_c = tuple(c for c in full if c not in cols)
                sign = (-1) ** (sum(rows) - sum(cols))
                da = determinant(a.submatrix(rows, cols)) if rows else _ONE
                db = determinant(b.submatrix(rows_c, cols_c)) if rows_c else _ONE
                term = da * db
                yield term if sign == 1 else -term


def det_sum_expansion(a, b):
    """det(a+b) as the sum over complementary-minor pairs."""
    total = _ZERO
    for term in det_sum_terms(a, b):
        total = total + term
    return total


def det_sum_summands(k):
    """Number of summands in det_sum_expansion for k x k matrices."""
    from math import comb

    return sum(comb(k, i) ** 2 for i in range(k + 1))


# -- serialization ----------------------------------------------------------


def poly_to_text(p):
    """Canonical text form, e.g. ``x2 - 1*x1*y1 + y1^2``."""
    if p.is_zero():
        return "0"
    parts = []
    for m, c in p.canonical_terms():
        factors = [
            var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in sorted(m)
        ]
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors) if c > 0 else "1*" + "*".join(factors)
        else:
            body = str(abs(c)) + "*" + "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def poly_from_text(s):
    """Parse the text form produced by poly_to_text."""
    s = s.strip()
    if s == "0":
        return _ZERO
    s = s.replace("- ", "-").replace("+ ", "+")
    out = _ZERO
    for chunk in s.split():
        chunk = chunk.replace("+", "")
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        coeff = Fraction(sign)
        mono = {}
        for factor in chunk.split("*"):
            if _VAR_RE.match(factor.split("^")[0]):
                if "^" in factor:
                    name, e = factor.split("^")
                    mono[parse_var(name)] = mono.get(parse_var(name), 0) + int(e)
                else:
                    v = parse_var(factor)
                    mono[v] = mono.get(v, 0) + 1
            else:
                coeff *= Fraction(factor)
        out = out + Polynomial({tuple(sorted(mono.items())): coeff})
    return out


def poly_to_json_obj(p):
    """JSON-ready list of terms in canonical order."""
    out = []
    for m, c in p.canonical_terms():
        out.append(
            {
                "c": f"{c.numerator}/{c.denominator}",
                "m": {var_name(v): e for v, e in sorted(m)},
            }
        )
    return out


def poly_from_json_obj(obj):
    terms = {}
    for t in obj:
        c = Fraction(t["c"])
        m = tuple(sorted((parse_var(name), e) for name, e in t["m"].items()))
        terms[m] = terms.get(m, 0) + c
    return Polynomial(terms)


def poly_to_json(p):
    return json.dumps(poly_to_json_obj(p))


def poly_from_json(s):
    return poly_from_json_obj(json.loads(s))
