"""Paramodular Fourier coefficients at prime level N.

Gritsenko lifts are read off Jacobi coefficient tables through the
index-raising divisor sum.  The nonlift eigenform is a linear combination
of lifts plus a scaled holomorphic quotient G[i]G[j]/G[k]; its coefficients
come from solving the Fourier-Jacobi product identity level by level.
Also here: the prime-level dimension formula, unit content, and the
coefficient action of the Hecke operators at a bad prime p || N.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from . import leveldata
from .jacobi import JacobiClassTable, ThetaBlockSpec, v_block, v_coeff
from .qzseries import QZPoly, qz_divide


class GritsenkoLift:
    """Lift of a weight-3 theta block: a(n, r, m) = sum_{delta | (n,r,m)}
    delta^2 c(n m / delta^2, r / delta)."""

    def __init__(self, table):
        self.table = table
        self.level = table.M

    def _ensure(self, nm_max):
        need = nm_max + (self.level + 3) // 4 + 1
        if need > self.table.depth:
            self.table.grow(need)

    def coeff(self, n, r, m):
        if n < 1 or m < 1:
            return 0
        self._ensure(n * m)
        return v_coeff(self.table, m, n, r)

    def coeff_array(self, n, r, m):
        """Vectorized coefficients; n, r, m equal-shape int64 arrays."""
        n = np.asarray(n, dtype=np.int64)
        r = np.asarray(r, dtype=np.int64)
        m = np.asarray(m, dtype=np.int64)
        if n.size == 0:
            return np.zeros(0, dtype=np.int64)
        self._ensure(int((n * m).max()))
        g = np.gcd(np.gcd(n, np.abs(r)), m)
        out = self.table.coeff_array(n * m, r)
        extra = np.nonzero(g > 1)[0]
        for i in extra:
            gi = int(g[i])
            for delta in range(2, gi + 1):
                if gi % delta == 0:
                    out[i] += delta * delta * self.table.coeff(
                        (int(n[i]) // delta) * (int(m[i]) // delta),
                        int(r[i]) // delta)
        return out

    def fj_block(self, m, depth, half_width):
        return v_block(self.table, m, depth, half_width)


class NonliftForm:
    """f = sum_j c_j G[j] + scale * G[i]G[j]/G[k], coefficients on demand.

    The quotient's Fourier-Jacobi blocks Q_m of index m N are solved from
    (G[i]G[j])_m = sum_{m1+m2=m} (G[k])_{m1} Q_{m2}; symmetry a(n,r,m) =
    a(m,r,n) keeps the solve depth at min(n, m).
    """

    def __init__(self, lifts, spec):
        self.lifts = lifts
        self.spec = spec
        self.level = spec.level
        self._blocks = {}      # m -> QZPoly
        self._solved = (0, 0)  # (m_max, depth)

    # -- Fourier-Jacobi solve ------------------------------------------------
    def _solve(self, m_max, depth):
        if self._solved[0] >= m_max and self._solved[1] >= depth:
            return
        m_max = max(m_max, self._solved[0])
        depth = max(depth, self._solved[1])
        n_lv = self.level
        ga = self.lifts[self.spec.quot[0] - 1]
        gb = self.lifts[self.spec.quot[1] - 1]
        gc = self.lifts[self.spec.quot[2] - 1]
        dep_p = depth + 1
        w_all = n_lv * m_max + 2 * isqrt(n_lv * m_max * dep_p) + 20
        a_blocks = [ga.fj_block(m, dep_p, w_all) for m in range(1, m_max + 1)]
        b_blocks = [gb.fj_block(m, dep_p, w_all) for m in range(1, m_max + 1)]
        c_blocks = [gc.fj_block(m, dep_p, w_all) for m in range(1, m_max + 1)]
        blocks = {}
        for m in range(2, m_max + 2):
            rhs = None
            for m1 in range(1, m):
                m2 = m - m1
                if m2 <= m_max and m1 <= m_max:
                    term = a_blocks[m1 - 1].mul(b_blocks[m2 - 1], n_cut=dep_p)
                    rhs = term if rhs is None else rhs + term
            for m1 in range(2, m):
                m2 = m - m1
                if m1 <= m_max and m2 in blocks:
                    rhs = rhs - c_blocks[m1 - 1].mul(blocks[m2], n_cut=dep_p)
            q_m = qz_divide(rhs, c_blocks[0], depth, -w_all, w_all)
            blocks[m - 1] = q_m
        # self-check: remultiplied series reproduces the product blocks
        for m in range(2, m_max + 2):
            lhs = None
            rhs = None
            for m1 in range(1, m):
                m2 = m - m1
                if m2 <= m_max and m1 <= m_max:
                    t = a_blocks[m1 - 1].mul(b_blocks[m2 - 1], n_cut=depth)
                    lhs = t if lhs is None else lhs + t
                if m1 <= m_max and m2 in blocks:
                    t = c_blocks[m1 - 1].mul(blocks[m2], n_cut=depth)
                    rhs = t if rhs is None else rhs + t
            if not (lhs - rhs).is_zero():
                raise ArithmeticError("quotient solve failed verification at level %d" % m)
        self._blocks = blocks
        self._solved = (m_max, depth)

    def quotient_coeff(self, n, r, m):
        if n < 1 or m < 1:
            return 0
        if m > n:
            n, m = m, n
        mn = self.level * m
        d = 4 * n * m * self.level - r * r
        if d <= 0:
            return 0
        r0 = (r + mn) % (2 * mn) - mn
        n0 = (d + r0 * r0) // (4 * mn)
        self._solve(m, n0)
        return self._blocks[m].get(n0, r0)

    def coeff(self, n, r, m):
        lin = sum(c * g.coeff(n, r, m) for c, g in zip(self.spec.linear, self.lifts))
        return lin + self.spec.scale * self.quotient_coeff(n, r, m)


def unit_content_witness(coeffs):
    """True when the listed integer coefficients generate the unit ideal."""
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("need at least one coefficient")
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g == 1


# ---------------------------------------------------------------------------
# dimension formula for prime level


def _legendre(a, p):
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def dim_paramodular_cusp3(p):
    """dim of the weight-3 paramodular cusp space at prime level p >= 5."""
    from .exactcore import is_prime
    if p < 5 or not is_prime(p):
        raise ValueError("the formula needs a prime level p >= 5")
    F = Fraction
    total = F(p * p - 1, 2880) - 1
    total += F(p + 1, 64) * (1 - _legendre(-1, p))
    total += F(5 * (p - 1), 192) * (1 + _legendre(-1, p))
    total += F(p + 1, 72) * (1 - _legendre(-3, p))
    total += F(p - 1, 36) * (1 + _legendre(-3, p))
    total += F(1, 8) * (1 - _legendre(2, p))
    total += F(1, 5) * (1 - _legendre(5, p))
    if p % 12 == 5:
        total += F(1, 6)
    if total.denominator != 1:
        raise ArithmeticError("dimension did not come out integral")
    return int(total)


# ---------------------------------------------------------------------------
# coefficient action of Hecke operators at a bad prime p || N


def _transform_index(t, u, divide):
    """(1/divide) * u^T t u for t = (n, r, m) at level N; returns the
    fractional triple (n', r', m') or None when it is not integral."""
    n, r, m, level = t
    u11, u12, u21, u22 = u
    # t as a matrix [[n, r/2], [r/2, m*level]]
    a11 = n * u11 * u11 + r * u11 * u21 + m * level * u21 * u21
    a12 = n * u11 * u12 + Fraction(r, 2) * (u11 * u22 + u12 * u21) + m * level * u21 * u22
    a22 = n * u12 * u12 + r * u12 * u22 + m * level * u22 * u22
    np_, rp, mp = a11 / divide, 2 * a12 / divide, a22 / (divide * level)
    for x in (np_, rp, mp):
        if Fraction(x).denominator != 1:
            return None
    return int(np_), int(rp), int(mp)


def fc_action_bad_prime(coeff_fn, level, p, t, which, k=3):
    """Coefficient of f|T at index t for T in {T(p), T01(p^2)}, p || N.

    coeff_fn(n, r, m) supplies the Fourier coefficients of f (0 outside the
    cusp support); t = (n, r, m).  Transformed indices that are not integral
    contribute 0.
    """
    if level % p or (level // p) % p == 0:
        raise ValueError("need p || N")
    n, r, m = t
    nn = level // p
    m_inv = pow(nn, -1, p)
    # a p - c N/p = 1
    c_coef = (p * pow(p, -1, nn) - 1) // nn if nn > 1 else p - 1
    a_coef = (1 + c_coef * nn) // p
    assert a_coef * p - c_coef * nn == 1
    tt = (n, r, m, level)

    def fc(idx):
        if idx is None:
            return 0
        ni, ri, mi = idx
        if ni < 1 or mi < 1 or 4 * ni * mi * level - ri * ri <= 0:
            return 0
        return coeff_fn(ni, ri, mi)

    if which == "Tp":
        total = fc((p * n, p * r, p * m))
        for x in range(p):
            total += p ** (k - 2) * fc(_transform_index(tt, (1, 0, -x, p), p))
        for y in range(p):
            total += p ** (k - 2) * fc(_transform_index(tt, (p, level * m_inv * y, 0, 1), p))
        total += p ** (2 * k - 3) * fc(_transform_index(tt, (1, 0, 0, 1), p))
        case = (p - 1) if (r % p == 0) else -1
        total += p ** (k - 3) * case * fc(
            _transform_index(tt, (a_coef * p, level, c_coef, p), p))
        return total

    if which == "T01p2":
        total = 0
        for x in range(p):
            total += p ** (k - 3) * fc(_transform_index(tt, (1, 0, -x, p), 1))
        for y in range(p):
            total += p ** (3 * k - 6) * fc(
                _transform_index(tt, (1, Fraction(level * m_inv * y, p), 0, Fraction(1, p)), 1))
        for y in range(p):
            cond = r * (1 + 2 * c_coef * nn + 2 * c_coef * y) + 2 * m * nn * c_coef
            case = (p - 1) if cond % p == 0 else -1
            u = (Fraction(c_coef * level + p + c_coef * level * m_inv * y, p),
                 level + level * m_inv * y, Fraction(c_coef, p), 1)
            total += p ** (2 * k - 6) * case * fc(_transform_index(tt, u, 1))
        for x in range(p):
            for y in range(p):
                case = (p - 1) if (r * m_inv * y + m) % p == 0 else -1
                u = (1 + Fraction(level * m_inv * x * y, p), level * m_inv * y,
                     Fraction(x, p), 1)
                total += p ** (2 * k - 6) * case * fc(_transform_index(tt, u, 1))
        return total

    raise ValueError("which must be 'Tp' or 'T01p2'")
