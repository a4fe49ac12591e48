"""Construction constants for the three prime levels.

Everything here is published data the computations start from or verify
against: the theta-block lists spanning the Jacobi cusp spaces, the nonlift
combination (linear coefficients, quotient triple, quotient scale), the
restriction matrices used for eigenvalue runs, Humbert class lists for the
divisor tables, expected Hecke matrices for T(2), and the eigenvector /
ideal data driving the congruence verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

F = Fraction


@dataclass(frozen=True)
class NonliftSpec:
    level: int
    linear: tuple          # coefficients of G[1..dim]
    quot: tuple            # (i, j, k): G[i]*G[j]/G[k], 1-indexed
    scale: int             # multiplier of the quotient


@dataclass(frozen=True)
class SMatrix:
    """Restriction matrix s = [[a, b], [b, c/N]]; pairing <s,t> = a n + b r + c m."""
    a: int
    b: int
    c: int
    level: int

    @property
    def det_n(self):
        # N * det(s) = a*c - b^2*N > 0
        return self.a * self.c - self.b * self.b * self.level

    def triple(self):
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class CongruenceData:
    """Eigenvector coordinates and ideal data for one congruence theorem."""
    charpoly_factors: tuple      # irreducible factors, coefficient tuples (low first)
    disc_charpoly: tuple         # (factored string, integer) of disc of full charpoly
    columns: dict = field(default_factory=dict)


THETA_BLOCKS = {
    61: (
        (2, 2, 2, 3, 3, 3, 3, 5, 7),
        (2, 2, 2, 2, 3, 4, 4, 4, 7),
        (2, 2, 2, 2, 3, 3, 4, 6, 6),
        (1, 2, 3, 3, 3, 3, 4, 4, 7),
        (1, 2, 3, 3, 3, 3, 3, 6, 6),
        (1, 2, 2, 2, 4, 4, 4, 5, 6),
    ),
    73: (
        (2, 3, 3, 3, 3, 4, 4, 5, 7),
        (2, 3, 3, 3, 3, 3, 5, 6, 6),
        (2, 2, 3, 4, 4, 4, 4, 4, 7),
        (2, 2, 3, 3, 4, 4, 4, 6, 6),
        (2, 2, 3, 3, 3, 5, 5, 5, 6),
        (2, 2, 2, 4, 4, 4, 5, 5, 6),
        (2, 2, 2, 2, 3, 4, 4, 5, 8),
        (2, 2, 2, 2, 2, 4, 5, 6, 7),
    ),
    79: (
        (1, 2, 2, 2, 2, 3, 4, 4, 10),
        (2, 2, 2, 2, 4, 4, 5, 6, 7),
        (1, 1, 1, 1, 2, 3, 4, 5, 10),
        (2, 2, 2, 2, 2, 4, 4, 5, 9),
        (1, 3, 3, 3, 3, 4, 4, 5, 8),
        (1, 1, 1, 1, 1, 2, 2, 8, 9),
        (1, 2, 2, 3, 3, 3, 4, 5, 9),
    ),
}

NONLIFTS = {
    61: NonliftSpec(61, (-9, -2, 22, 9, -10, 19), (1, 6, 2), -43),
    73: NonliftSpec(73, (9, 19, 2, -13, 34, -15, -12, -10), (2, 6, 4), -39),
    79: NonliftSpec(79, (4, 13, -15, 8, 0, 5, -11), (2, 3, 1), -32),
}

# unit-content witnesses: ((n, r, m), expected coefficient)
UNIT_CONTENT_WITNESSES = {
    61: (((1, 10, 1), -75), ((1, 12, 1), 107)),
    73: (((1, 13, 1), 7), ((1, -14, 1), -6)),
    79: (((1, 12, 1), 58), ((1, -14, 1), 101)),
}

# default restriction matrices (good primes, bad prime); the pool below adds
# systematically enumerated fallbacks
S_DEFAULT = {
    61: {"good": SMatrix(122, 11, 61, 61), "bad": SMatrix(13, 2, 19, 61)},
    73: {"good": SMatrix(146, 17, 146, 73), "bad": SMatrix(146, 17, 146, 73)},
    79: {"good": SMatrix(158, 47, 1106, 79), "bad": SMatrix(158, 47, 1106, 79)},
}


def s_pool(level, kind):
    """Default s followed by small positive-definite fallbacks (b != 0;
    diagonal s annihilates these r-antisymmetric forms)."""
    pool = [S_DEFAULT[level][kind]]
    seen = {pool[0].triple()}
    cands = []
    for a in range(1, 30):
        for b in range(1, 9):
            for c in range(1, 4 * level):
                d = a * c - b * b * level
                if 0 < d <= 64 and (a, b, c) not in seen:
                    cands.append((d, a + c, SMatrix(a, b, c, level)))
    cands.sort(key=lambda t: (t[0], t[1]))
    pool.extend(s for _, _, s in cands[:12])
    return pool


# Humbert surface classes (|D|, r mod 2N) of the published divisor tables,
# together with which basis members form the table columns.
DIVISOR_TABLES = {
    61: {
        "columns": (1, 2, 6),
        "classes": ((1, 1), (4, 2), (5, 35), (9, 3), (13, 47), (16, 4), (20, 52),
                    (25, 5), (36, 6), (41, 23), (49, 7), (56, 42), (65, 59)),
    },
    73: {
        "columns": (2, 4, 6),
        "classes": ((1, 1), (4, 2), (8, 64), (9, 3), (12, 42), (16, 4), (24, 30),
                    (25, 5), (36, 6), (37, 57), (48, 62), (65, 49), (72, 46), (73, 73)),
    },
    79: {
        "columns": (1, 2, 3),
        "classes": ((1, 1), (4, 2), (5, 59), (8, 18), (9, 3), (13, 31), (16, 4),
                    (20, 40), (21, 69), (25, 5), (36, 6), (40, 44), (44, 26),
                    (45, 19), (49, 7), (65, 67), (76, 32), (80, 78), (100, 10)),
    },
}

# published T(2) matrices on the Gritsenko basis (column-action convention:
# G[j] | T(2) = sum_i M[i][j] G[i])
T2_MATRICES = {
    61: ((9, 0, 4, -1, 4, 1),
         (-6, 1, -4, -4, 0, 0),
         (3, 0, 8, 2, 2, 0),
         (3, 4, 0, 11, -4, -2),
         (-8, 0, -8, -1, -3, -1),
         (-1, -4, 2, -4, 0, 3)),
    73: ((8, 0, 3, -4, -2, -2, 4, 2),
         (-4, 1, -1, -2, -3, 0, -4, -5),
         (0, 0, 6, 0, -1, 0, 0, -1),
         (2, 2, 5, 8, 3, 2, 2, 1),
         (2, 4, -1, 6, 8, 8, -4, -5),
         (-4, -4, -8, -4, -1, -4, 2, 7),
         (-2, 0, -3, 4, 3, 2, 1, -1),
         (-3, -4, -7, -6, -4, -8, 4, 11)),
    79: ((0, -2, -2, -2, -8, -2, -6),
         (-4, 2, 0, -3, -7, -2, -5),
         (3, 0, 9, 1, 2, 2, 4),
         (0, -1, 0, 11, -1, -6, -1),
         (3, 0, 1, 2, 9, 2, 5),
         (0, -1, 0, 7, -1, -3, -1),
         (5, 2, 1, -3, 8, 6, 10)),
}

# characteristic polynomials of T(2), coefficient tuples lowest-degree first
CHARPOLY_FACTORS = {
    61: ((2026, -5205, 4471, -1714, 322, -29, 1),),
    73: ((-9, 1),
         (-2832, 9964, -12145, 7034, -2157, 357, -30, 1)),
    79: ((26, -11, 1),
         (-964, 1766, -1077, 261, -27, 1)),
}

# eigenvector coordinates of the published congruence eigenforms.
# Entries are tuples of Fractions: d[j] = sum coords[j][i] a^i.
EIGENVECTOR_COLUMNS = {
    (61, 0): (   # the degree-6 field, eigenvalue a
        (F(515, 2), F(-2377, 4), F(443), F(-269, 2), F(17), F(-3, 4)),
        (F(1899, 8), F(-7813, 16), F(1223, 4), F(-649, 8), F(39, 4), F(-7, 16)),
        (F(-305, 2), F(1697, 4), F(-359), F(237, 2), F(-16), F(3, 4)),
        (F(-396), F(855), F(-596), F(174), F(-22), F(1)),
        (F(-140), F(215), F(-97), F(17), F(-1), F(0)),
        (F(-24), F(0), F(0), F(0), F(0), F(0)),
    ),
    (73, 0): (   # the rational eigenform, eigenvalue 9 (integer column)
        (F(-3),), (F(-2),), (F(-1),), (F(2),), (F(1),), (F(3),), (F(3),), (F(2),),
    ),
    (73, 1): (   # the degree-7 field
        (F(-632307, 4), F(8480021, 16), F(-36446543, 64), F(16486531, 64),
         F(-442583, 8), F(357943, 64), F(-13671, 64)),
        (F(-247387, 2), F(2906781, 8), F(-9639367, 32), F(3516515, 32),
         F(-77947, 4), F(52719, 32), F(-1703, 32)),
        (F(134939, 4), F(-1626701, 16), F(6689239, 64), F(-2996715, 64),
         F(80271, 8), F(-64895, 64), F(2479, 64)),
        (F(-280607, 2), F(3673513, 8), F(-15573571, 32), F(6924839, 32),
         F(-181543, 4), F(142859, 32), F(-5307, 32)),
        (F(411139, 4), F(-4124773, 16), F(16534783, 64), F(-7232243, 64),
         F(187815, 8), F(-146535, 64), F(5399, 64)),
        (F(850479, 4), F(-12504265, 16), F(51374171, 64), F(-22172735, 64),
         F(569099, 8), F(-441443, 64), F(16243, 64)),
        (F(648207, 4), F(-8826201, 16), F(37654939, 64), F(-16649519, 64),
         F(434027, 8), F(-340515, 64), F(12643, 64)),
        (F(-10072),),
    ),
    (79, 0): (   # the degree-2 field
        (F(5), F(-1)), (F(-8), F(1)), (F(6), F(-1)), (F(3), F(-1)),
        (F(9), F(-1)), (F(4), F(-1)), (F(-18), F(3)),
    ),
    (79, 1): (   # the degree-5 field
        (F(103, 2), F(-257, 4), F(185, 8), F(-3), F(1, 8)),
        (F(199, 4), F(-435, 8), F(257, 16), F(-7, 4), F(1, 16)),
        (F(-19, 4), F(87, 8), F(-113, 16), F(5, 4), F(-1, 16)),
        (F(3), F(-1)),
        (F(10), F(-9), F(1)),
        (F(4), F(-1)),
        (F(-203, 4), F(443, 8), F(-257, 16), F(7, 4), F(-1, 16)),
    ),
}

# auxiliary multipliers and witnesses for the ideal-membership chains
CONGRUENCE_AUX = {
    61: {
        "ideal": (43, (7, 1)),          # <43, a+7>
        "aux_ell": 1616,
        "witness": (7, 1),              # a + 7
        "scalar_shift": -1,             # membership tested on c_j - d_j
        "published_disc": 2**14 * 3**6 * 1892022169,
        "disc_factors": ((2, 14), (3, 6), (1892022169, 1)),
    },
    73: {
        "rational_modulus": 3,
        "ideal_a": (3, (0, 1)),         # <3, a>
        "ideal_b": (13, (6, 1)),        # <13, a+6>
        "aux_ell_a": 130627630879749647154734,
        "aux_ell_b": 356550,
        "shift_a": 2,                   # c_j + 2 d_j in <w>
        "shift_b": 12,                  # c_j + 12 d_j in <a+6>
        "witness_w_combo": (3, 2),      # w = c_j + n d_j at j=3 (1-indexed), n=2
        "published_norm_w": -(2**7) * 3 * 3919 * 1941571 * 8583739212883,
        "published_norm_a6": 2**2 * 3 * 5**2 * 13 * 2377,
        "published_disc": 2**36 * 3**3 * 5**2 * 13 * 19**2 * 37 * 101 * 30931,
        "disc_factors": ((2, 36), (3, 3), (5, 2), (13, 1), (19, 2), (37, 1),
                         (101, 1), (30931, 1)),
    },
    79: {
        "ideal_a": (2, (1, 1)),         # <2, a+1>
        "aux_ell_a": 53,
        "witness_a": (5, 1),            # a + 5
        "aux_ell_b": 635,
        "witness_b_combo": (3, -5),     # w = c_j - 5 d_j at j=3 (1-indexed)
        "v_element": (F(51, 4), F(-151, 8), F(129, 16), F(-5, 4), F(1, 16)),
        "w_element": (F(35, 4), F(-435, 8), F(565, 16), F(-25, 4), F(5, 16)),
        "published_norm_a5": 2 * 53,
        "published_disc": 2**26 * 17**3 * 59**2 * 4787257,
        "disc_factors": ((2, 26), (17, 3), (59, 2), (4787257, 1)),
        "disc_q2": 17,
        "disc_q5_factors": ((2, 16), (4787257, 1)),
    },
}

LEVELS = (61, 73, 79)


def dims_expected(level):
    return {61: (7, 6), 73: (9, 8), 79: (8, 7)}[level]
