"""Jacobi forms: theta blocks, coefficient tables, index raising, quotients.

A weight-k index-M Jacobi cusp form is stored through its reduced classes:
the coefficient c(n, r) depends only on (D, r mod 2M) with D = 4nM - r^2,
via c(n, r) = c(n + lam*r + lam^2*M, r + 2*lam*M) and c(n, -r) = (-1)^k c(n, r).
For the theta blocks used here (odd weight) the class representative with
|r| <= M and minimal n is kept in a dense integer strip, so lookups are a
single array access after reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .qzseries import QZPoly, qz_divide


class CacheMiss(Exception):
    """A coefficient was requested beyond the populated range."""

    def __init__(self, need_depth, msg=""):
        super().__init__(msg or "table depth %d required" % need_depth)
        self.need_depth = need_depth


# ---------------------------------------------------------------------------
# theta blocks


def bar_b2(x):
    """Periodized second Bernoulli polynomial B2(x - floor(x)), exact."""
    x = Fraction(x)
    x -= x.numerator // x.denominator  # frac(x)
    return x * x - x + Fraction(1, 6)


@dataclass(frozen=True)
class ThetaBlockSpec:
    """eta^(2k-l) * prod theta_{d_j}; stored with d sorted ascending."""

    weight: int
    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(sorted(self.d)))
        if any(x < 1 for x in self.d):
            raise ValueError("theta shifts must be positive")

    @property
    def index2(self):
        return sum(x * x for x in self.d)

    @property
    def index(self):
        s = self.index2
        if s % 2:
            raise ValueError("sum of squares is odd; no integral index")
        return s // 2

    def admissible(self):
        """Cusp-form criterion: 12 | k+l, integral index, and strict positivity
        of k/12 + (1/2) sum B2bar(d_j x) on [0, 1/2] at steps of 1/(2M)."""
        k, ell = self.weight, len(self.d)
        if (k + ell) % 12:
            return False, None
        if self.index2 % 2:
            return False, None
        m = self.index
        for t in range(0, m + 1):  # x = t/(2m) over [0, 1/2]
            x = Fraction(t, 2 * m)
            val = Fraction(k, 12) + Fraction(1, 2) * sum(bar_b2(dj * x) for dj in self.d)
            if val <= 0:
                return False, m
        return True, m


def theta_block_admissible(spec):
    return spec.admissible()


def _theta_terms(d, depth):
    """Terms (h, w, sign) of theta(tau, d z)/(q^(1/8) zeta^(d/2)):
    sum over j in Z of (-1)^j q^((j^2+j)/2) zeta^(d j)."""
    out = []
    j = 0
    while (j * j + j) // 2 <= depth:
        for jj in (j, -j - 1):
            h = (jj * jj + jj) // 2
            if h <= depth:
                out.append((h, d * jj, -1 if jj % 2 else 1))
        j += 1
    return out


def _eta_cube_exponents(depth):
    """prod (1-q^n)^3 = sum_j (-1)^j (2j+1) q^((j^2+j)/2), truncated."""
    out = []
    j = 0
    while (j * j + j) // 2 <= depth:
        out.append(((j * j + j) // 2, (2 * j + 1) * (-1 if j % 2 else 1)))
        j += 1
    return out


def theta_block_strip(d_list, depth):
    """Exact strip of theta block coefficients for weight 3, length 9.

    Returns an int64 array `strip` with strip[n-1, r+M] = c(n, r) for
    1 <= n <= depth and |r| <= M, where M = (sum d^2)/2.
    """
    d_list = sorted(d_list, reverse=True)
    s2 = sum(d * d for d in d_list)
    if s2 % 2 or sum(d_list) % 2:
        raise ValueError("block has no integral index / zeta offset")
    m_idx = s2 // 2
    zoff = sum(d_list) // 2
    # zeta-window of the final strip in product coordinates (rho = r - zoff)
    rho_lo, rho_hi = -m_idx - zoff, m_idx - zoff
    prod_depth = depth - 1  # product-part q-exponent = n - 1

    rem_sq = s2
    rem_sum = sum(d_list)
    arr = None
    half = 0
    for d in d_list:
        rem_sq -= d * d
        rem_sum -= d
        reach = isqrt(2 * max(prod_depth, 1) * rem_sq) + rem_sum + 1
        new_half = max(abs(rho_lo), abs(rho_hi)) + reach
        terms = _theta_terms(d, prod_depth)
        if arr is None:
            arr = np.zeros((prod_depth + 1, 2 * new_half + 1), dtype=np.int64)
            for h, w, sgn in terms:
                if abs(w) <= new_half:
                    arr[h, w + new_half] += sgn
        else:
            new = np.zeros((prod_depth + 1, 2 * new_half + 1), dtype=np.int64)
            for h, w, sgn in terms:
                # shift old block by (h, w) into the new window
                src_lo = max(-half, -new_half - w)
                src_hi = min(half, new_half - w)
                if src_lo > src_hi:
                    continue
                rows = prod_depth + 1 - h
                block = arr[:rows, src_lo + half:src_hi + half + 1]
                if sgn > 0:
                    new[h:, src_lo + w + new_half:src_hi + w + new_half + 1] += block
                else:
                    new[h:, src_lo + w + new_half:src_hi + w + new_half + 1] -= block
            arr = new
        half = new_half
    # extract the strip rho in [rho_lo, rho_hi]
    strip = arr[:, rho_lo + half:rho_hi + half + 1].copy()
    del arr
    # divide by prod(1-q^n)^3 using its sparse (pentagonal-cube) expansion
    eta3 = _eta_cube_exponents(prod_depth)[1:]
    for n in range(strip.shape[0]):
        row = strip[n]
        for h, c in eta3:
            if h > n:
                break
            row -= c * strip[n - h]
    if strip.size and max(-int(strip.min()), int(strip.max())) >= (1 << 60):
        raise OverflowError("theta block coefficients overflow int64")
    return strip


class JacobiClassTable:
    """Reduced-class coefficient table of a weight-3 theta block (cusp form)."""

    def __init__(self, spec, depth):
        ok, m_idx = spec.admissible()
        if not ok:
            raise ValueError("inadmissible theta block %s" % (spec,))
        self.spec = spec
        self.weight = spec.weight
        self.M = m_idx
        self.depth = 0
        self.strip = np.zeros((0, 2 * m_idx + 1), dtype=np.int64)
        if depth:
            self.grow(depth)

    def grow(self, depth):
        if depth <= self.depth:
            return
        self.strip = theta_block_strip(self.spec.d, depth)
        self.depth = depth

    # -- scalar access -------------------------------------------------------
    def coeff(self, n, r):
        m = self.M
        d = 4 * n * m - r * r
        if d <= 0:
            return 0
        r0 = (r + m) % (2 * m) - m
        n0 = (d + r0 * r0) // (4 * m)
        if n0 > self.depth:
            raise CacheMiss(n0)
        return int(self.strip[n0 - 1, r0 + m])

    def coeff_array(self, n, r):
        """Vectorized coefficient lookup; n, r int64 arrays of equal shape."""
        m = self.M
        n = np.asarray(n, dtype=np.int64)
        r = np.asarray(r, dtype=np.int64)
        d = 4 * n * m - r * r
        pos = d > 0
        r0 = (r + m) % (2 * m) - m
        n0 = (d + r0 * r0) // (4 * m)
        need = n0[pos]
        if need.size and int(need.max()) > self.depth:
            raise CacheMiss(int(need.max()))
        out = np.zeros(n.shape, dtype=np.int64)
        out[pos] = self.strip[n0[pos] - 1, r0[pos] + m]
        return out

    def max_abs(self):
        return int(np.abs(self.strip).max()) if self.strip.size else 0


# index-raising operator ------------------------------------------------------


def v_coeff(table, m, n, r, weight=None):
    """(phi | V_m)(n, r) = sum over delta | gcd(n, r, m) of
    delta^(k-1) c(n m / delta^2, r / delta).

    For weight 0 the delta^(-1) factors make individual values rational;
    those are returned as Fractions.
    """
    k = table.weight if weight is None else weight
    g = gcd(gcd(abs(n), abs(r)), m)
    divisors = [d for d in range(1, g + 1) if g % d == 0]
    if k >= 1:
        return sum(delta ** (k - 1) * table.coeff((n // delta) * (m // delta), r // delta)
                   for delta in divisors)
    return sum(Fraction(table.coeff((n // delta) * (m // delta), r // delta),
                        delta ** (1 - k))
               for delta in divisors)


def v_block(table, m, depth, half_width, weight=None):
    """(phi | V_m) as a QZPoly on rows 1..depth, |r| <= half_width (k >= 1)."""
    k = table.weight if weight is None else weight
    if k < 1:
        raise ValueError("v_block needs weight >= 1; use v_coeff for k = 0")
    need = depth * m + (table.M + 3) // 4 + 1
    if need > table.depth:
        table.grow(need)
    n = np.arange(1, depth + 1, dtype=np.int64)[:, None]
    r = np.arange(-half_width, half_width + 1, dtype=np.int64)[None, :]
    out = np.zeros((depth, 2 * half_width + 1), dtype=np.int64)
    for delta in range(1, m + 1):
        if m % delta:
            continue
        mask = (n % delta == 0) & (r % delta == 0)
        nn = np.where(mask, (n // delta) * (m // delta), 1)
        rr = np.where(mask, r // delta, 0)
        vals = table.coeff_array(nn, rr)
        out += np.where(mask, vals, 0) * delta ** (k - 1)
    return QZPoly(out, 1, -half_width)


def raw_block(table, depth, half_width):
    """The plain expansion of the form itself (V_1 block)."""
    return v_block(table, 1, depth, half_width)


# dimension formulas -----------------------------------------------------------


def dim_cusp_forms_sl2(w):
    """dim S_w(SL2(Z)) for even weight w >= 0 (0 below weight 12 except the
    standard pattern; the classical floor formula)."""
    if w < 4 or w % 2:
        return 0
    if w % 12 == 2:
        return w // 12 - 1
    return w // 12


def dim_jacobi_cusp(k, m):
    """dim J^cusp_{k,m} for k = 3: sum over j of dim S_(2+2j) - floor(j^2/4m)."""
    if k != 3:
        raise ValueError("only the weight-3 case is supported")
    return sum(dim_cusp_forms_sl2(2 + 2 * j) - (j * j) // (4 * m) for j in range(1, m))


# weakly holomorphic quotients --------------------------------------------------


class WeakJacobiTable:
    """Weight-0 weakly holomorphic coefficients keyed by class (D, r mod 2M).

    Even weight: c(n, -r) = c(n, r), so class keys use r reduced into
    [0, M].  The populated region is described by (q_max, r_window): a class
    is covered when some representative (n, r) with 0 <= n <= q_max,
    |r| <= r_window exists.  Below the inferred support floor lookups return
    0; covered-but-absent classes are genuine zeros; uncovered classes raise
    CacheMiss.
    """

    def __init__(self, m_idx, data, d_min, q_max, r_window):
        self.M = m_idx
        self.weight = 0
        self.data = dict(data)  # (D, r0) -> nonzero int
        self.d_min = d_min      # inferred support floor (most negative populated)
        self.q_max = q_max
        self.r_window = r_window

    @property
    def neg_cover(self):
        """Every class with D >= -neg_cover is certainly populated or zero."""
        if self.r_window < self.M:
            return 0
        return max(0, 4 * self.M * self.q_max - self.M * self.M)

    @staticmethod
    def _reduce_r(r, m):
        r0 = r % (2 * m)
        if r0 > m:
            r0 = 2 * m - r0
        return r0

    def _covered(self, d, r0):
        m = self.M
        # representatives r = +-r0 + 2*m*t inside the window with 0 <= n <= q_max
        for base in (r0, -r0):
            r = base
            while r <= self.r_window:
                num = d + r * r
                if num >= 0 and num % (4 * m) == 0 and num // (4 * m) <= self.q_max:
                    return True
                r += 2 * m
        return False

    def coeff(self, n, r):
        m = self.M
        d = 4 * n * m - r * r
        if d < self.d_min:
            return 0
        r0 = self._reduce_r(r, m)
        val = self.data.get((d, r0))
        if val is not None:
            return val
        if not self._covered(d, r0):
            raise CacheMiss(0, "class (%d, %d) beyond populated range" % (d, r0))
        return 0

    def singular_part(self):
        """Coefficients c(0, r) for r >= 0 down to the support floor."""
        out = {}
        r = 0
        while -r * r >= self.d_min:
            out[r] = self.coeff(0, r)
            r += 1
        return out

    def combine(self, others, coeffs):
        """Integer linear combination coeffs[0]*self + sum coeffs[i]*others[i-1]."""
        tabs = [self] + list(others)
        keys = set()
        for t in tabs:
            keys |= set(t.data)
        data = {}
        for key in keys:
            v = sum(c * t.data.get(key, 0) for c, t in zip(coeffs, tabs))
            if v:
                data[key] = v
        d_min = min((k[0] for k in data), default=0)
        d_min = min(d_min, min(t.d_min for t in tabs))
        return WeakJacobiTable(self.M, data, min(d_min, 0),
                               min(t.q_max for t in tabs),
                               min(t.r_window for t in tabs))


def weakly_holo_quotient(num, den, m_idx, q_max, z_window=None, _widen=0):
    """psi = num/den as a weight-0 weakly holomorphic table of index m_idx.

    num and den are QZPoly expansions (num typically -(phi|V_2), den = phi).
    The quotient is verified by back-multiplication on the window shrunk by
    den's zeta spread; on mismatch the window is widened and the division
    retried.
    """
    if z_window is None:
        z_window = isqrt(4 * m_idx * (q_max + 1)) + 1
    den = den.trim()
    den_spread = max(abs(den.r0), abs(den.r_max))
    w = z_window + den_spread + _widen
    if num.n_max < q_max + den.q_order() or num.r_max < w:
        raise CacheMiss(0, "numerator block too small for the quotient")
    psi = qz_divide(num, den, q_max, -w, w)
    # verification on the shrunk window
    back = den.mul(psi, n_cut=q_max)
    ok_w = w - den_spread
    diff = (back - num.truncate_q(q_max)).window_r(-ok_w, ok_w)
    if not diff.is_zero():
        if _widen >= 4 * m_idx:
            raise ArithmeticError("quotient verification failed at window %d" % w)
        return weakly_holo_quotient(num, den, m_idx, q_max, z_window,
                                    _widen=_widen + m_idx)
    data = {}
    d_min = 0
    for n, r, c in psi.nonzero_terms():
        if abs(r) > ok_w:
            continue
        d = 4 * n * m_idx - r * r
        key = (d, WeakJacobiTable._reduce_r(r, m_idx))
        old = data.get(key)
        if old is not None and old != c:
            raise ArithmeticError("inconsistent class values in quotient")
        data[key] = c
        d_min = min(d_min, d)
    return WeakJacobiTable(m_idx, data, d_min, q_max, ok_w)
