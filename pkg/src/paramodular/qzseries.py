"""Truncated two-variable series blocks.

A QZPoly stores exact integer coefficients of q^n zeta^r on a rectangle:
value(n, r) = a[n - n0, r - r0].  These blocks carry theta-block expansions,
Fourier-Jacobi coefficients, and the polynomial algebra behind quotient
solving.  All arithmetic is exact (int64 with overflow guards; the values
appearing here stay far below 2^62).
"""

from __future__ import annotations

import numpy as np

_GUARD = 1 << 60


def _check(a):
    if a.size and max(-int(a.min()), int(a.max())) >= _GUARD:
        raise OverflowError("QZPoly coefficient overflow")
    return a


class QZPoly:
    __slots__ = ("a", "n0", "r0")

    def __init__(self, a, n0=0, r0=0):
        self.a = np.asarray(a, dtype=np.int64)
        if self.a.ndim != 2:
            raise ValueError("QZPoly wants a 2D block")
        self.n0 = int(n0)
        self.r0 = int(r0)

    @classmethod
    def zero(cls, rows, cols, n0=0, r0=0):
        return cls(np.zeros((rows, cols), dtype=np.int64), n0, r0)

    @classmethod
    def from_terms(cls, terms, n0, n1, r0, r1):
        """Build from an iterable of (n, r, coeff) restricted to the rectangle."""
        a = np.zeros((n1 - n0 + 1, r1 - r0 + 1), dtype=np.int64)
        for n, r, c in terms:
            if n0 <= n <= n1 and r0 <= r <= r1:
                a[n - n0, r - r0] += c
        return cls(a, n0, r0)

    # -- bounds ------------------------------------------------------------
    @property
    def n_max(self):
        return self.n0 + self.a.shape[0] - 1

    @property
    def r_max(self):
        return self.r0 + self.a.shape[1] - 1

    def get(self, n, r):
        i = n - self.n0
        j = r - self.r0
        if 0 <= i < self.a.shape[0] and 0 <= j < self.a.shape[1]:
            return int(self.a[i, j])
        return 0

    def is_zero(self):
        return not self.a.any()

    def nonzero_terms(self):
        for i, j in zip(*np.nonzero(self.a)):
            yield self.n0 + int(i), self.r0 + int(j), int(self.a[i, j])

    def q_order(self):
        rows = np.nonzero(self.a.any(axis=1))[0]
        return None if rows.size == 0 else self.n0 + int(rows[0])

    def copy(self):
        return QZPoly(self.a.copy(), self.n0, self.r0)

    def trim(self):
        """Drop all-zero border rows/columns (keeps a 1x1 zero block)."""
        rows = np.nonzero(self.a.any(axis=1))[0]
        cols = np.nonzero(self.a.any(axis=0))[0]
        if rows.size == 0:
            return QZPoly.zero(1, 1, self.n0, self.r0)
        r0, r1 = int(rows[0]), int(rows[-1])
        c0, c1 = int(cols[0]), int(cols[-1])
        return QZPoly(self.a[r0:r1 + 1, c0:c1 + 1].copy(),
                      self.n0 + r0, self.r0 + c0)

    # -- arithmetic ---------------------------------------------------------
    def _aligned(self, other):
        n0 = min(self.n0, other.n0)
        r0 = min(self.r0, other.r0)
        n1 = max(self.n_max, other.n_max)
        r1 = max(self.r_max, other.r_max)
        a = np.zeros((n1 - n0 + 1, r1 - r0 + 1), dtype=np.int64)
        b = a.copy()
        a[self.n0 - n0:self.n0 - n0 + self.a.shape[0],
          self.r0 - r0:self.r0 - r0 + self.a.shape[1]] = self.a
        b[other.n0 - n0:other.n0 - n0 + other.a.shape[0],
          other.r0 - r0:other.r0 - r0 + other.a.shape[1]] = other.a
        return a, b, n0, r0

    def __add__(self, other):
        a, b, n0, r0 = self._aligned(other)
        return QZPoly(_check(a + b), n0, r0)

    def __sub__(self, other):
        a, b, n0, r0 = self._aligned(other)
        return QZPoly(_check(a - b), n0, r0)

    def __neg__(self):
        return QZPoly(-self.a, self.n0, self.r0)

    def scale(self, c):
        return QZPoly(_check(self.a * int(c)), self.n0, self.r0)

    def mul(self, other, n_cut=None):
        """Full product, truncated to q-exponent <= n_cut if given."""
        ra, rb = self.a.shape[0], other.a.shape[0]
        n0 = self.n0 + other.n0
        rows = ra + rb - 1
        if n_cut is not None:
            rows = min(rows, n_cut - n0 + 1)
            if rows <= 0:
                return QZPoly.zero(1, 1, n0, self.r0 + other.r0)
        cols = self.a.shape[1] + other.a.shape[1] - 1
        out = np.zeros((rows, cols), dtype=np.int64)
        for i in range(ra):
            row = self.a[i]
            if not row.any():
                continue
            top = min(rb, rows - i)
            for k in range(top):
                orow = other.a[k]
                if orow.any():
                    out[i + k] += np.convolve(row, orow)
        return QZPoly(_check(out), n0, self.r0 + other.r0)

    def truncate_q(self, n_cut):
        keep = n_cut - self.n0 + 1
        if keep <= 0:
            return QZPoly.zero(1, 1, self.n0, self.r0)
        return QZPoly(self.a[:keep].copy(), self.n0, self.r0)

    def window_r(self, r_lo, r_hi):
        """Restrict to zeta-exponents in [r_lo, r_hi]."""
        lo = max(r_lo, self.r0)
        hi = min(r_hi, self.r_max)
        if lo > hi:
            return QZPoly.zero(self.a.shape[0], 1, self.n0, r_lo)
        return QZPoly(self.a[:, lo - self.r0:hi - self.r0 + 1].copy(), self.n0, lo)


def row_deconvolve(target, div):
    """Exact 1D deconvolution: find u with conv(div, u) matching target.

    Solved from the left edge; requires the left edge of div to divide
    exactly at every step (it is +-1 for the theta leading rows used here).
    Only the leading len(target) - len(div) + 1 coefficients are trustworthy
    when target is a windowed row; callers verify by back-multiplication.
    """
    t = np.array(target, dtype=np.int64)
    d = np.asarray(div, dtype=np.int64)
    lead_ix = int(np.nonzero(d)[0][0])
    lead = int(d[lead_ix])
    n = t.shape[0] - (d.shape[0] - 1)
    if n <= 0:
        raise ValueError("target too short for deconvolution")
    u = np.zeros(n, dtype=np.int64)
    for i in range(n):
        c = int(t[i + lead_ix])
        if c % lead:
            raise ArithmeticError("inexact row division")
        c //= lead
        u[i] = c
        if c:
            t[i:i + d.shape[0]] -= c * d
    return u


def qz_divide(num, den, n_cut, r_lo, r_hi):
    """Quotient num/den as a QZPoly on q <= n_cut, zeta-window [r_lo, r_hi].

    den must have a nonzero leading q-row whose lowest zeta coefficient is
    a unit (true for theta blocks).  The result rows are found by the
    standard triangular recursion; the caller is responsible for verifying
    the quotient by back-multiplication on a shrunk window.
    """
    dord = den.q_order()
    if dord is None:
        raise ZeroDivisionError("division by the zero block")
    nord = num.q_order()
    if nord is None:
        return QZPoly.zero(1, 1, 0, r_lo)
    q0 = nord - dord
    lead = den.a[dord - den.n0]
    nz = np.nonzero(lead)[0]
    lead = lead[nz[0]:nz[-1] + 1]
    lead_r0 = den.r0 + int(nz[0])
    den_rows = den.a.shape[0]
    width = r_hi - r_lo + 1
    pad = lead.shape[0] - 1
    out = np.zeros((n_cut - q0 + 1, width), dtype=np.int64)
    # working numerator rows on the padded window
    wr_lo = r_lo + lead_r0
    wr_hi = r_hi + lead_r0 + pad
    work = num.window_r(wr_lo, wr_hi)
    rows_needed = n_cut + dord - (num.n0) + 1
    buf = np.zeros((max(rows_needed, work.a.shape[0]), wr_hi - wr_lo + 1), dtype=np.int64)
    src = work.a[:rows_needed]
    buf[:src.shape[0], work.r0 - wr_lo:work.r0 - wr_lo + src.shape[1]] = src
    for i in range(out.shape[0]):
        # row index in buf for exponent q0 + i + dord
        bi = q0 + i + dord - num.n0
        if bi < 0 or bi >= buf.shape[0]:
            raise ValueError("numerator block too short")
        u = row_deconvolve(buf[bi], lead)
        out[i] = u
        if u.any():
            # subtract u * den from subsequent working rows
            for k in range(dord + 1 - den.n0, den_rows):
                drow = den.a[k]
                if not drow.any():
                    continue
                tgt = bi + (k + den.n0 - dord)
                if tgt >= buf.shape[0]:
                    continue
                contrib = np.convolve(u, drow)
                # contrib starts at zeta-exponent r_lo + den.r0
                off = (r_lo + den.r0) - wr_lo
                lo = max(0, off)
                hi = min(buf.shape[1], off + contrib.shape[0])
                if lo < hi:
                    buf[tgt, lo:hi] -= contrib[lo - off:hi - off]
    return QZPoly(_check(out), q0, r_lo)
