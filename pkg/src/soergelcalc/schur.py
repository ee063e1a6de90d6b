"""Schur polynomials in elementary symmetric variables.

The convention throughout: a Schur polynomial indexed by a multiindex is a
polynomial in the elementary symmetric variables of one family (x, y, or
y'), built by the Giambelli determinant.  Multiindices that are not
partitions, or have more positive parts than the family has variables,
give the zero polynomial rather than an error.

The bialternant construction in honest z variables is kept alongside as
an independent oracle: expanding the Giambelli polynomial into z's must
reproduce it exactly.
"""

from fractions import Fraction
from itertools import combinations

from .partitions import Partition
from .polycore import (
    Family,
    PolyMatrix,
    Polynomial,
    determinant,
    exact_div,
    var,
    zvar,
)

_SCHUR_FAMILIES = (Family.X, Family.Y, Family.YP)


def _normalize_multiindex(idx, n):
    """Partition with <= n parts, or None when the vanishing convention applies."""
    if isinstance(idx, Partition):
        parts = idx.parts
    else:
        parts = tuple(int(p) for p in idx)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 0 for p in parts):
        return None
    if any(a < b for a, b in zip(parts, parts[1:])):
        return None
    if len(parts) > n:
        return None
    return Partition(parts)


def _gen(family, i, n):
    """The i-th elementary symmetric variable of the family: e_0 = 1, out of range 0."""
    if i == 0:
        return Polynomial.one()
    if i < 0 or i > n:
        return Polynomial.zero()
    return Polynomial.variable(var(family, i))


_cache = {}


def schur_giambelli(idx, n, family=Family.X):
    """Schur polynomial of ``idx`` in n elementary symmetric variables.

    Computes the determinant of the conjugate-indexed matrix of family
    variables; returns 0 for multiindices outside the vanishing rules.
    """
    if family not in _SCHUR_FAMILIES:
        raise ValueError(f"unsupported Schur family: {family}")
    lam = _normalize_multiindex(idx, n)
    if lam is None:
        return Polynomial.zero()
    key = (family, n, lam.parts)
    if key in _cache:
        return _cache[key]
    mu = lam.conjugate().parts
    m = len(mu)
    if m == 0:
        result = Polynomial.one()
    else:
        rows = [
            [_gen(family, mu[i] + j - i, n) for j in range(m)] for i in range(m)
        ]
        result = determinant(PolyMatrix(rows))
    _cache[key] = result
    return result


def complete_h(m, n, family=Family.X):
    """m-th complete symmetric polynomial in n variables (0 for m < 0, 1 for m = 0)."""
    if m < 0:
        return Polynomial.zero()
    return schur_giambelli((m,), n, family)


def schur_dual_giambelli(idx, n, family=Family.X):
    """Schur polynomial via the dual (complete-symmetric) determinant."""
    if family not in _SCHUR_FAMILIES:
        raise ValueError(f"unsupported Schur family: {family}")
    lam = _normalize_multiindex(idx, n)
    if lam is None:
        return Polynomial.zero()
    parts = lam.parts
    r = len(parts)
    if r == 0:
        return Polynomial.one()
    rows = [
        [complete_h(parts[i] + j - i, n, family) for j in range(r)] for i in range(r)
    ]
    return determinant(PolyMatrix(rows))


def h_recursion_check(m, n, family=Family.X):
    """First-row expansion of the complete-symmetric determinant, as an identity."""
    if m < 1:
        raise ValueError("recursion check needs m >= 1")
    rhs = Polynomial.zero()
    for i in range(1, n + 1):
        term = _gen(family, i, n) * complete_h(m - i, n, family)
        rhs = rhs + (term if i % 2 == 1 else -term)
    return complete_h(m, n, family) == rhs


def laplace_identity_check(p, q, n, family=Family.X):
    """Single-row Schur of p+q against the alternating hook convolution."""
    if p < 0 or q < 0:
        raise ValueError("p, q must be >= 0")
    lhs = schur_giambelli((p + q,), n, family)
    rhs = Polynomial.zero()
    for i in range(n):
        term = schur_giambelli((p,) + (1,) * i, n, family) * schur_giambelli(
            (q - i,), n, family
        )
        rhs = rhs + (term if i % 2 == 0 else -term)
    return lhs == rhs


def elementary_in_z(j, zvars):
    """j-th elementary symmetric polynomial in the given z variables."""
    if j < 0 or j > len(zvars):
        return Polynomial.zero()
    if j == 0:
        return Polynomial.one()
    terms = {}
    for c in combinations(zvars, j):
        terms[tuple((v, 1) for v in sorted(c))] = Fraction(1)
    return Polynomial(terms)


def schur_bialternant_oracle(idx, n):
    """Schur polynomial in z_1..z_n by the bialternant quotient.

    The alternant determinant is divided exactly by the Vandermonde; a
    nonzero remainder at any step means the implementation is broken, so
    it surfaces as ExactDivisionError rather than a value.
    """
    lam = _normalize_multiindex(idx, n)
    if lam is None or len(lam.parts) > n:
        raise ValueError(f"multiindex {idx} is not a partition with <= {n} parts")
    padded = lam.padded(n)
    rows = []
    for i in range(1, n + 1):
        zi = Polynomial.variable(zvar(i))
        rows.append([zi ** (padded[j - 1] + n - j) for j in range(1, n + 1)])
    num = determinant(PolyMatrix(rows))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            diff = Polynomial.variable(zvar(i)) - Polynomial.variable(zvar(j))
            num = exact_div(num, diff)
    return num


def schur_in_z(idx, n, family=Family.X):
    """Giambelli polynomial expanded into z variables (for oracle comparisons)."""
    p = schur_giambelli(idx, n, family)
    zs = [zvar(i) for i in range(1, n + 1)]
    mapping = {var(family, i): elementary_in_z(i, zs) for i in range(1, n + 1)}
    return p.substitute(mapping)
