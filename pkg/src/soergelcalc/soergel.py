"""The two-block bimodule: presentation ideal, the comultiplication-style
map on generators, its determinant form, minor ideals, and direct Koszul
homology.

The bimodule of interest is presented as a quotient ring in paired
variable families (x, y) and (x', y'); the map is a signed sum of Schur
polynomial tensor pairs indexed by the partitions in the k x l box, and
being a bimodule map amounts to l ideal-membership statements that a
Groebner basis decides.
"""

import os

from .groebner import (
    buchberger,
    colon_ideal,
    hilbert_series,
    ideal_equal,
    ideal_member,
    ideal_sum,
    intersect,
    normal_form,
)
from .partitions import enumerate_box
from .polycore import (
    Family,
    PolyMatrix,
    Polynomial,
    is_homogeneous,
    poly_to_json_obj,
    poly_to_text,
    var,
    weighted_degree,
    xpvar,
    xvar,
    ypvar,
    yvar,
)
from .schur import schur_giambelli

DEFAULT_MAX_VARS = 10


class ResourceLimitError(RuntimeError):
    """A computation was refused because it exceeds the configured size cap."""


def max_vars_limit():
    """Polynomial-ring size cap; SOERGEL_MAX_VARS overrides the default of 10."""
    v = os.environ.get("SOERGEL_MAX_VARS")
    return int(v) if v else DEFAULT_MAX_VARS


def _check_ring_size(nvars, force):
    if not force and nvars > max_vars_limit():
        raise ResourceLimitError(
            f"computation needs a {nvars}-variable ring; the cap is "
            f"{max_vars_limit()} (force, or raise SOERGEL_MAX_VARS)"
        )


def _fam_gen(family, i, n):
    """i-th variable of a family of size n, with e_0 = 1 and out-of-range 0."""
    if i == 0:
        return Polynomial.one()
    if i < 0 or i > n:
        return Polynomial.zero()
    return Polynomial.variable(var(family, i))


def _prime(p):
    """Send x -> x', y -> y'."""
    mapping = {}
    for v in p.variables():
        fam, idx = v
        if fam == Family.X:
            mapping[v] = Polynomial.variable(xpvar(idx))
        elif fam == Family.Y:
            mapping[v] = Polynomial.variable(ypvar(idx))
        else:
            raise ValueError(f"cannot prime a polynomial containing {v}")
    return p.substitute(mapping)


def _unprime(p):
    """Send x' -> x, y' -> y."""
    mapping = {}
    for v in p.variables():
        fam, idx = v
        if fam == Family.XP:
            mapping[v] = Polynomial.variable(xvar(idx))
        elif fam == Family.YP:
            mapping[v] = Polynomial.variable(yvar(idx))
    return p.substitute(mapping)


def ideal_I_generators(k, l):
    """The k+l generators: full symmetric functions of (x,y) minus (x',y').

    The i-th generator is sum_j x_j y_{i-j} - x'_j y'_{i-j}, homogeneous
    of weighted degree 2i.
    """
    if k < 1 or l < 1:
        raise ValueError("k, l must be >= 1")
    gens = []
    for i in range(1, k + l + 1):
        s = Polynomial.zero()
        for j in range(0, i + 1):
            s = s + _fam_gen(Family.X, j, k) * _fam_gen(Family.Y, i - j, l)
            s = s - _fam_gen(Family.XP, j, k) * _fam_gen(Family.YP, i - j, l)
        gens.append(s)
    return gens


def ring_variables(k, l, primed=True):
    """Ambient variables: x1..xk, y1..yl, plus primed copies if asked."""
    vs = [xvar(i) for i in range(1, k + 1)] + [yvar(j) for j in range(1, l + 1)]
    if primed:
        vs += [xpvar(i) for i in range(1, k + 1)]
        vs += [ypvar(j) for j in range(1, l + 1)]
    return tuple(vs)


class SoergelContext:
    """Fixed (k, l) with the Groebner basis of the presentation ideal."""

    def __init__(self, k, l):
        if k < 1 or l < 1:
            raise ValueError("k, l must be >= 1")
        self.k = k
        self.l = l
        self._gb_I = None
        self._gb_Pt = {}

    @property
    def gb_I(self):
        if self._gb_I is None:
            self._gb_I = buchberger(
                ideal_I_generators(self.k, self.l),
                variables=ring_variables(self.k, self.l),
            )
        return self._gb_I

    def gb_P_t(self, t):
        """Basis of the ideal presenting P_t = P / <y_1-y'_1, ..., y_t-y'_t>."""
        if not 0 <= t <= self.l:
            raise ValueError(f"t must be in 0..{self.l}")
        if t == 0:
            return self.gb_I
        if t not in self._gb_Pt:
            diffs = [
                Polynomial.variable(yvar(j)) - Polynomial.variable(ypvar(j))
                for j in range(1, t + 1)
            ]
            self._gb_Pt[t] = ideal_sum(self.gb_I, diffs)
        return self._gb_Pt[t]

    def qdim_P_t(self, t):
        return hilbert_series(self.gb_P_t(t))


class TensorExpr:
    """Formal sum of left (x) tensor right: pairs of polynomials in x, y.

    The image in the quotient presentation multiplies each left factor by
    the primed copy of its right factor.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple((left, right) for left, right in terms)

    def to_P(self):
        out = Polynomial.zero()
        for left, right in self.terms:
            out = out + left * _prime(right)
        return out

    @classmethod
    def from_polynomial(cls, p):
        """Split each monomial into its unprimed and primed halves."""
        by_right = {}
        for m, c in p.terms.items():
            plain = tuple((v, e) for v, e in m if v[0] in (Family.X, Family.Y))
            primed = tuple((v, e) for v, e in m if v[0] in (Family.XP, Family.YP))
            if len(plain) + len(primed) != len(m):
                raise ValueError("polynomial contains variables outside x,y,x',y'")
            right = _unprime(Polynomial({primed: 1}))
            key = frozenset(right.terms.items())
            if key in by_right:
                by_right[key] = (by_right[key][0] + Polynomial({plain: c}), right)
            else:
                by_right[key] = (Polynomial({plain: c}), right)
        return cls(sorted(by_right.values(), key=lambda t: poly_to_text(t[1])))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, TensorExpr) and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for left, right in self.terms:
            neg = False
            lt = left.canonical_terms()
            if lt and lt[0][1] < 0:
                neg = True
                left = -left
            ls = poly_to_text(left)
            rs = poly_to_text(right)
            if len(left.terms) > 1:
                ls = f"({ls})"
            if len(right.terms) > 1:
                rs = f"({rs})"
            body = f"{ls}⊗{rs}"
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def to_json_obj(self):
        return [
            {"left": poly_to_json_obj(left), "right": poly_to_json_obj(right)}
            for left, right in self.terms
        ]


def delta_formula(k, l):
    """The signed sum over box partitions of Schur tensor pairs.

    For each partition a in the k x l box, the term carries sign
    (-1)^|a|, left factor the Schur polynomial of a in the x family, and
    right factor the Schur polynomial of the conjugate of the box
    complement of a in the y family.
    """
    if k < 1 or l < 1:
        raise ValueError("k, l must be >= 1")
    terms = []
    for alpha in enumerate_box(k, l):
        left = schur_giambelli(alpha, k, Family.X)
        right = schur_giambelli(
            alpha.complement(k, l).conjugate(), l, Family.Y
        )
        if alpha.weight() % 2 == 1:
            left = -left
        terms.append((left, right))
    return TensorExpr(terms)


def matrix_M(k, l):
    """The k x k matrix whose determinant realizes the map.

    Rows 1..l hold differences of primed-y and x Schur polynomials on
    hook-shaped multiindices; rows l+1..k hold the banded matrix of
    primed y variables.  Requires k >= l (swap the roles otherwise).
    """
    if k < l:
        raise ValueError("matrix_M needs k >= l; run on the swapped context")
    rows = []
    for i in range(1, l + 1):
        row = []
        for j in range(1, k + 1):
            idx = (l + 1 - i,) + (1,) * (j - 1)
            row.append(
                schur_giambelli(idx, l, Family.YP) - schur_giambelli(idx, k, Family.X)
            )
        rows.append(row)
    for r in range(1, k - l + 1):
        rows.append([_fam_gen(Family.YP, c - r, l) for c in range(1, k + 1)])
    return PolyMatrix(rows)


def matrix_S(k, l):
    """Unitriangular l x l matrix with alternating x entries above the diagonal."""
    if k < l:
        raise ValueError("matrix_S needs k >= l")
    rows = []
    for i in range(1, l + 1):
        row = []
        for j in range(1, l + 1):
            if j < i:
                row.append(Polynomial.zero())
            elif j == i:
                row.append(Polynomial.one())
            else:
                e = _fam_gen(Family.X, j - i, k)
                row.append(e if (j - i) % 2 == 0 else -e)
        rows.append(row)
    return PolyMatrix(rows)


def matrix_Mprime(k, l):
    """Row-reduced form: block-diagonal(S, identity) times M."""
    s = matrix_S(k, l)
    if k > l:
        s = PolyMatrix.block_diag(s, PolyMatrix.identity(k - l))
    return s * matrix_M(k, l)


def delta_determinant(k, l):
    """Determinant of the k x k matrix; equals the map's image up to sign."""
    from .polycore import determinant

    return determinant(matrix_M(k, l))


def minor_ideal_Ij(k, l, j, use_mprime=False):
    """Ideal of maximal minors of the last k-l+j rows, pushed down to x,y.

    Returns the reduced basis of the ideal of the unprimed polynomial
    ring generated by all (k-l+j)-column minors.
    """
    if not 1 <= j <= l:
        raise ValueError(f"j must be in 1..{l}")
    if k < l:
        raise ValueError("minor ideals need k >= l")
    from itertools import combinations

    from .polycore import determinant

    m = matrix_Mprime(k, l) if use_mprime else matrix_M(k, l)
    size = k - l + j
    row_idx = tuple(range(k - size, k))
    gens = []
    for cols in combinations(range(k), size):
        minor = determinant(m.submatrix(row_idx, cols))
        gens.append(_unprime(minor))
    return buchberger(gens, variables=ring_variables(k, l, primed=False))


def delta_sign_report(k, l):
    """Measured sign relating det M to the closed formula, plus the printed one."""
    if k < l:
        k, l = l, k
    det = delta_determinant(k, l)
    f = delta_formula(k, l).to_P()
    if det == f:
        eps = 1
    elif det == -f:
        eps = -1
    else:
        eps = None
    return {
        "sign_epsilon": eps,
        "sign_paper": (-1) ** (k * (k + 1) // 2),
        "det_matches_formula": eps is not None,
    }


def verify_bimodule(k, l, force=False):
    """Full check that the closed formula defines a bimodule map.

    Reduces (y_j - y'_j) f modulo the presentation ideal for every j,
    checks f itself does not reduce to zero, checks degree and
    homogeneity, and compares the determinant form against the formula.
    """
    if k < 1 or l < 1:
        raise ValueError("k, l must be >= 1")
    _check_ring_size(2 * (k + l), force)
    ctx = SoergelContext(k, l)
    expr = delta_formula(k, l)
    f = expr.to_P()
    gb = ctx.gb_I
    membership = []
    for j in range(1, l + 1):
        d = Polynomial.variable(yvar(j)) - Polynomial.variable(ypvar(j))
        membership.append(ideal_member(d * f, gb))
    f_nonzero = not normal_form(f, gb).is_zero()
    deg = weighted_degree(f)
    sign = delta_sign_report(k, l)
    kk, ll = (k, l) if k >= l else (l, k)
    gb_last = minor_ideal_Ij(kk, ll, ll)
    f_or_swapped = f if (kk, ll) == (k, l) else delta_formula(kk, ll).to_P()
    principal = ideal_equal(gb_last, buchberger([_unprime(f_or_swapped)]))
    return {
        "k": k,
        "l": l,
        "delta_terms": len(expr),
        "degree": deg,
        "degree_expected": 2 * k * l,
        "homogeneous": is_homogeneous(f),
        "sign_epsilon": sign["sign_epsilon"],
        "sign_paper": sign["sign_paper"],
        "membership": membership,
        "f_nonzero": f_nonzero,
        "minor_ideal_principal": principal,
        "ok": (
            all(membership)
            and f_nonzero
            and deg == 2 * k * l
            and is_homogeneous(f)
            and sign["sign_epsilon"] is not None
            and principal
        ),
    }


def koszul_step(gb, p):
    """Kernel and cokernel series of multiplication by p on (ring)/(ideal).

    Both series are reported unshifted; any grading shift of the source
    copy is the caller's bookkeeping.  The zero map has the full quotient
    series on both sides.
    """
    if p.is_zero():
        full = hilbert_series(gb)
        return {"kernel_series": full, "cokernel_series": full}
    if not is_homogeneous(p):
        raise ValueError("koszul_step needs a homogeneous map")
    quotient = hilbert_series(gb)
    coker = hilbert_series(ideal_sum(gb, [p]))
    if ideal_member(p, gb):
        return {"kernel_series": quotient, "cokernel_series": coker}
    col = colon_ideal(gb, p)
    kernel = quotient - hilbert_series(col)
    return {"kernel_series": kernel, "cokernel_series": coker}


def hochschild_direct(k, l, force=False):
    """Graded dimensions of the Koszul homology, computed head-on.

    Only the differentials y_i - y'_i enter; the i-th one's source is
    shifted up by 2i-1.  Fully direct (colon ideals, intersections, and
    Hilbert series; no use of the closed homology formula) for l <= 2,
    which is the scale the formula path is cross-checked at.
    """
    if k < 1 or l < 1:
        raise ValueError("k, l must be >= 1")
    if l > 2:
        raise ResourceLimitError(
            "direct Koszul homology is implemented for l <= 2; "
            "use the formula path beyond that"
        )
    _check_ring_size(2 * (k + l), force)
    ctx = SoergelContext(k, l)
    gb = ctx.gb_I
    series_P = hilbert_series(gb)
    diffs = [
        Polynomial.variable(yvar(i)) - Polynomial.variable(ypvar(i))
        for i in range(1, l + 1)
    ]
    if l == 1:
        step = koszul_step(gb, diffs[0])
        return [
            step["cokernel_series"],
            step["kernel_series"].shift(1),
        ]
    # l == 2: the extreme homologies come from colon ideals; the middle one
    # from rank-nullity per degree.  With the odd source shifts every
    # differential raises total degree by exactly 1, so the image of d1,
    # a subspace of the target P, sits one degree above the source slices
    # it comes from, and the image of d2 one degree above its source.
    p1, p2 = diffs
    col1 = colon_ideal(gb, p1)
    col2 = colon_ideal(gb, p2)
    both = intersect(col1, col2)
    top_kernel = series_P - hilbert_series(both)
    h2 = top_kernel.shift(1 + 3)
    h0 = hilbert_series(ideal_sum(gb, [p1, p2]))
    im_d1 = series_P - h0
    ker_d1 = series_P.shift(1) + series_P.shift(3) - im_d1.shift(-1)
    im_d2 = (series_P.shift(4) - h2).shift(1)
    h1 = ker_d1 - im_d2
    return [h0, h1, h2]
