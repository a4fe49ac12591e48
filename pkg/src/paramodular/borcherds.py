"""Borcherds products from weight-0 weakly holomorphic Jacobi forms.

psi = -(phi|V_2)/phi for a theta block phi gives the product input; this
module extracts the product data (prefactor exponents, weight, Fricke sign),
Humbert surface multiplicities, the published-style divisor tables, and an
explicit check to Fourier-Jacobi depth 2 that the Borcherds product equals
the Gritsenko lift, both through the product expansion and through the
theta-block times exp(-lift) identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .jacobi import (CacheMiss, WeakJacobiTable, raw_block, v_block, v_coeff,
                     weakly_holo_quotient)
from .qzseries import QZPoly


def psi_from_theta_block(table, q_max=None):
    """psi = -(phi|V_2)/phi for the theta block behind `table`.

    The default depth guarantees coverage of every singular class with
    |D| <= 8M, comfortably past the support floors seen here, so Humbert
    multiplicity sums terminate with certified zeros.
    """
    m_idx = table.M
    floor_depth = (m_idx * m_idx + 8 * m_idx) // (4 * m_idx) + 3
    q_max = max(q_max or 0, floor_depth)
    width = isqrt(4 * m_idx * (q_max + 1)) + 1 + 2 * m_idx
    num = v_block(table, 2, q_max + 2, width + 2 * m_idx).scale(-1)
    den = raw_block(table, q_max + 2, width + 2 * m_idx)
    return weakly_holo_quotient(num, den, m_idx, q_max)


@dataclass(frozen=True)
class BorcherdsData:
    A: Fraction
    B: Fraction
    C: Fraction
    D0: int
    weight: int
    fricke: int


def borcherds_data(psi):
    """Prefactor exponents and weight/sign data of BL(psi)."""
    sing = psi.singular_part()
    c00 = sing.get(0, 0)
    tail = {r: c for r, c in sing.items() if r >= 1}
    a_val = Fraction(c00, 24) + Fraction(sum(tail.values()), 12)
    b_val = Fraction(sum(r * c for r, c in tail.items()), 2)
    c_val = Fraction(sum(r * r * c for r, c in tail.items()), 2)
    d0 = 0  # these psi have q-order 0: no strictly negative q-support
    weight = Fraction(c00, 2)
    if weight.denominator != 1:
        raise ArithmeticError("half-integral weight from c(0,0)")
    weight = int(weight)
    eps = (-1) ** ((weight + d0) % 2)
    return BorcherdsData(a_val, b_val, c_val, d0, weight, eps)


def humbert_multiplicity(psi, n, m, r):
    """Multiplicity of the Humbert surface of (n, m, r), 4 n m N - r^2 < 0,
    on the divisor of BL(psi): sum over i >= 1 of c(i^2 n m, i r)."""
    level = psi.M
    d = 4 * n * m * level - r * r
    if d >= 0:
        raise ValueError("need a negative discriminant")
    if m < 0 or gcd(gcd(abs(n), abs(m)), abs(r)) != 1:
        raise ValueError("need a primitive triple with m >= 0")
    if psi.d_min < -psi.neg_cover + 4 * level:
        raise CacheMiss(0, "support floor too close to the coverage bound; "
                           "recompute psi deeper")
    total = 0
    i = 1
    while i * i * (-d) <= psi.neg_cover:
        total += psi.coeff(i * i * n * m, i * r)
        i += 1
    return total


def humbert_class_triple(level, disc, r):
    """Representative (n, m=1, r) of the class (|D|, r mod 2N)."""
    num = r * r - disc
    if num % (4 * level):
        raise ValueError("class (%d, %d) is not defined at level %d" % (disc, r, level))
    return num // (4 * level), 1, r


def divisor_table(psis, combos, classes, level):
    """Humbert multiplicities for each coefficient combination in `combos`
    (sequences over `psis`) at each (|D|, r) class.  Returns a list of rows
    aligned with `classes`."""
    tables = []
    for combo in combos:
        base = psis[0]
        tab = base.combine(psis[1:], list(combo))
        tables.append(tab)
    rows = []
    for disc, r in classes:
        n, m, rr = humbert_class_triple(level, disc, r)
        rows.append(tuple(humbert_multiplicity(t, n, m, rr) for t in tables))
    return rows


def format_divisor_table(classes, columns, rows, level, sep=None):
    """Aligned text (sep=None) or TSV (sep='\\t') rendering."""
    head = ["H_%d(|D|,r)" % level] + list(columns)
    body = [["H_%d(%d,%d)" % (level, d, r) for (d, r) in classes]]
    for j in range(len(rows[0])):
        body.append([str(rows[i][j]) for i in range(len(rows))])
    cols = [head[0:1] + body[0]] + [[str(h)] + col for h, col in zip(head[1:], body[1:])]
    if sep is not None:
        lines = [sep.join(head)]
        for i in range(len(rows)):
            lines.append(sep.join(col[i + 1] for col in cols))
        return "\n".join(lines)
    widths = [max(len(x) for x in col) for col in cols]
    lines = ["  ".join(c[0].rjust(w) for c, w in zip(cols, widths))]
    for i in range(len(rows)):
        lines.append("  ".join(c[i + 1].rjust(w) for c, w in zip(cols, widths)))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# product expansion to Fourier-Jacobi depth 2


def _binomial_factor_power(n_shift, r_shift, exponent, q_depth, r_window):
    """(1 - q^n_shift zeta^r_shift)^exponent as a QZPoly, truncated."""
    if exponent >= 0:
        out = QZPoly(np.array([[1]], dtype=np.int64))
        base = QZPoly.from_terms([(0, 0, 1), (n_shift, r_shift, -1)],
                                 0, max(n_shift, 0), min(r_shift, 0), max(r_shift, 0))
        for _ in range(exponent):
            out = out.mul(base, n_cut=q_depth)
            if n_shift == 0:
                out = out.window_r(-r_window, r_window)
        return out
    # negative exponent: truncated geometric/binomial series
    terms = [(0, 0, 1)]
    k = 1
    coeff = 1
    e = -exponent
    while (n_shift > 0 and k * n_shift <= q_depth) or (n_shift == 0 and k * abs(r_shift) <= r_window):
        coeff = coeff * (e + k - 1) // k
        terms.append((k * n_shift, k * r_shift, coeff))
        k += 1
    n1 = max(t[0] for t in terms)
    r_lo = min(t[1] for t in terms)
    r_hi = max(t[1] for t in terms)
    return QZPoly.from_terms(terms, 0, n1, r_lo, r_hi)


def product_fj_blocks(psi, q_depth, r_window):
    """Fourier-Jacobi coefficients 1 and 2 of BL(psi) via the product formula.

    Returns (fj1, fj2) as QZPolys carrying the q^A zeta^B prefactor, valid
    on q <= q_depth and a zeta-window that shrinks with the factors used;
    compare within |r| <= r_window.
    """
    data = borcherds_data(psi)
    if data.A.denominator != 1 or data.B.denominator != 1:
        raise ArithmeticError("non-integral prefactor exponents")
    sing = psi.singular_part()
    wide = 3 * r_window + 2 * psi.M
    part0 = QZPoly(np.array([[1]], dtype=np.int64))
    # m = 0, n = 0, r < 0 factors
    for r, c in sorted(sing.items()):
        if r >= 1 and c:
            part0 = part0.mul(_binomial_factor_power(0, -r, c, q_depth, wide),
                              n_cut=q_depth).window_r(-wide, wide)
    # m = 0, n >= 1 factors: exponents c(0, r), both signs of r
    for n in range(1, q_depth + 1):
        for r, c in sorted(sing.items()):
            if not c:
                continue
            shifts = (0,) if r == 0 else (r, -r)
            for rs in shifts:
                part0 = part0.mul(_binomial_factor_power(n, rs, c, q_depth, wide),
                                  n_cut=q_depth).window_r(-wide, wide)
    # prefactor q^A zeta^B
    fj1 = QZPoly(part0.a, part0.n0 + int(data.A), part0.r0 + int(data.B))
    # m = 1 first-order part: -sum_{n, r} c(n, r) q^n zeta^r
    rows = q_depth + 1
    width = wide
    s_arr = np.zeros((rows, 2 * width + 1), dtype=np.int64)
    for n in range(0, rows):
        for r in range(-width, width + 1):
            s_arr[n, r + width] = psi.coeff(n, r)
    s_blk = QZPoly(-s_arr, 0, -width)
    fj2 = fj1.mul(s_blk, n_cut=q_depth + int(data.A)).window_r(-r_window, r_window)
    fj1 = fj1.window_r(-r_window, r_window)
    fj2 = fj2.truncate_q(q_depth)
    fj1 = fj1.truncate_q(q_depth)
    return fj1, fj2


def check_grit_equals_borcherds(table, psi, q_depth=8):
    """Depth-2 equality of BL(psi) and the Gritsenko lift of the theta block.

    Checks, on q <= q_depth and the comparison window:
      - product-expansion FJ_1 equals the theta block;
      - product-expansion FJ_2 equals the block's V_2 image (the lift's FJ_2);
      - the series identity: FJ_2 from the product equals -TB * psi,
        the depth-2 content of TB * xi^C * exp(-Grit(psi)).
    Returns a dict of booleans.
    """
    m_idx = table.M
    r_window = isqrt(4 * m_idx * q_depth) + 1
    fj1, fj2 = product_fj_blocks(psi, q_depth, r_window)
    tb = raw_block(table, q_depth, r_window)
    ok1 = (fj1 - tb.window_r(fj1.r0, fj1.r_max)).truncate_q(q_depth).is_zero()
    v2 = v_block(table, 2, q_depth, r_window).window_r(fj2.r0, fj2.r_max)
    ok2 = (fj2 - v2).truncate_q(q_depth).is_zero()
    # exp identity at depth 2: FJ_2 = -TB * psi
    rows = q_depth + 1
    wide = 2 * r_window + 2 * m_idx
    s_arr = np.zeros((rows, 2 * wide + 1), dtype=np.int64)
    for n in range(0, rows):
        for r in range(-wide, wide + 1):
            s_arr[n, r + wide] = psi.coeff(n, r)
    tbpsi = raw_block(table, q_depth, wide).mul(QZPoly(-s_arr, 0, -wide), n_cut=q_depth)
    ok3 = (fj2 - tbpsi.window_r(fj2.r0, fj2.r_max)).truncate_q(q_depth).is_zero()
    return {"fj1_equals_theta_block": ok1,
            "fj2_equals_v2": ok2,
            "exp_identity_depth2": ok3}
