"""Exact arithmetic substrate.

Arbitrary-precision integers and rationals come straight from the Python
runtime (`int`, `fractions.Fraction`).  This module adds the pieces that do
not: univariate integer polynomials, resultants and discriminants, polynomial
factorization over small prime fields, balanced CRT lifting, and the search
for auxiliary split primes with a designated root of unity.

Polynomials are plain tuples/lists of coefficients, lowest degree first,
with a nonzero leading coefficient unless the polynomial is zero.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

# ---------------------------------------------------------------------------
# integer polynomials


def poly_trim(c):
    """Strip trailing zero coefficients; the zero polynomial is ()."""
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_deg(p):
    """Degree, with deg 0 = -1 conventions avoided: zero poly has degree -1."""
    return len(p) - 1


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_sub(p, q):
    n = max(len(p), len(q))
    return poly_trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def poly_neg(p):
    return tuple(-a for a in p)


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_scale(p, c):
    if c == 0:
        return ()
    return tuple(a * c for a in p)


def poly_eval(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def poly_derivative(p):
    return poly_trim([i * a for i, a in enumerate(p)][1:])


def poly_content(p):
    g = 0
    for a in p:
        g = gcd(g, a)
    return g


def poly_divmod_exact(p, q):
    """Euclidean division over Q, returned as Fraction tuples."""
    p = [Fraction(a) for a in p]
    q = [Fraction(a) for a in q]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    while len(p) >= len(q) and any(p):
        while p and p[-1] == 0:
            p.pop()
        if len(p) < len(q):
            break
        c = p[-1] / q[-1]
        k = len(p) - len(q)
        quot[k] = c
        for i, b in enumerate(q):
            p[i + k] -= c * b
        p.pop()
    return poly_trim(quot), poly_trim(p)


def _sylvester_det(p, q):
    """Resultant via fraction-free Bareiss elimination on the Sylvester matrix."""
    n, m = poly_deg(p), poly_deg(q)
    if n < 0 or m < 0:
        return 0
    size = n + m
    if size == 0:
        return 1
    rows = []
    rp = list(reversed(p))
    rq = list(reversed(q))
    for i in range(m):
        rows.append([0] * i + rp + [0] * (m - 1 - i))
    for i in range(n):
        rows.append([0] * i + rq + [0] * (n - 1 - i))
    # Bareiss: exact integer determinant.
    sign = 1
    prev = 1
    a = [row[:] for row in rows]
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[size - 1][size - 1]


def poly_resultant(p, q):
    return _sylvester_det(p, q)


def poly_discriminant(p):
    """Discriminant of an integer polynomial of degree >= 1.

    disc(p) = (-1)^(n(n-1)/2) * Res(p, p') / lc(p).
    """
    n = poly_deg(p)
    if n < 1:
        raise ValueError("discriminant requires degree >= 1")
    res = poly_resultant(p, poly_derivative(p))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    num = sign * res
    assert num % p[-1] == 0
    return num // p[-1]


# ---------------------------------------------------------------------------
# arithmetic mod a prime

PRIME_FIELD_MODULUS_CAP = 1 << 62  # moduli must fit a machine word


def inv_mod(a, ell):
    return pow(a % ell, -1, ell)


def _mod_poly(p, ell):
    return poly_trim([a % ell for a in p])


def _pmul(p, q, ell):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = (out[i + j] + a * b) % ell
    return poly_trim(out)


def _pmod(p, m, ell):
    p = list(p)
    dm = len(m) - 1
    inv = inv_mod(m[-1], ell)
    while len(p) - 1 >= dm and any(p):
        while p and p[-1] % ell == 0:
            p.pop()
        if len(p) - 1 < dm:
            break
        c = (p[-1] * inv) % ell
        k = len(p) - 1 - dm
        for i, b in enumerate(m):
            p[i + k] = (p[i + k] - c * b) % ell
        p.pop()
    return poly_trim([a % ell for a in p])


def _pgcd(p, q, ell):
    p, q = _mod_poly(p, ell), _mod_poly(q, ell)
    while q:
        p, q = q, _pmod(p, q, ell)
    if p:
        inv = inv_mod(p[-1], ell)
        p = tuple((a * inv) % ell for a in p)
    return p


def _ppow_mod(base, e, m, ell):
    result = (1,)
    base = _pmod(base, m, ell)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, ell), m, ell)
        base = _pmod(_pmul(base, base, ell), m, ell)
        e >>= 1
    return result


def _monic(p, ell):
    inv = inv_mod(p[-1], ell)
    return tuple((a * inv) % ell for a in p)


def _squarefree_parts(f, ell):
    """Yield (squarefree factor, multiplicity) over F_ell (Yun with char p care)."""
    out = []

    def rec(f, mult):
        if poly_deg(f) < 1:
            return
        d = poly_trim([(i * a) % ell for i, a in enumerate(f)][1:])
        if not d:
            # f is a polynomial in x^ell: take the ell-th root coefficientwise
            root = []
            for i in range(0, len(f), ell):
                # coefficients are in F_ell, so the ell-th root is the identity
                root.append(f[i])
            rec(poly_trim(root), mult * ell)
            return
        g = _pgcd(f, d, ell)
        w, r = poly_divmod_exact_mod(f, g, ell)
        assert not r
        i = 1
        while poly_deg(w) >= 1:
            wn = _pgcd(w, g, ell)
            part, r = poly_divmod_exact_mod(w, wn, ell)
            assert not r
            if poly_deg(part) >= 1:
                out.append((part, mult * i))
            g, r = poly_divmod_exact_mod(g, wn, ell)
            assert not r
            w = wn
            i += 1
        if poly_deg(g) >= 1:
            rec(g, mult)

    rec(_monic(f, ell), 1)
    return out


def poly_divmod_exact_mod(p, q, ell):
    p = list(_mod_poly(p, ell))
    dq = len(q) - 1
    inv = inv_mod(q[-1], ell)
    quot = [0] * max(len(p) - dq, 1)
    while len(p) - 1 >= dq and any(p):
        while p and p[-1] % ell == 0:
            p.pop()
        if len(p) - 1 < dq:
            break
        c = (p[-1] * inv) % ell
        k = len(p) - 1 - dq
        quot[k] = c
        for i, b in enumerate(q):
            p[i + k] = (p[i + k] - c * b) % ell
        p.pop()
    return poly_trim(quot), poly_trim(p)


def _distinct_degree(f, ell):
    """Split a squarefree monic f over F_ell into (product-of-deg-d-factors, d)."""
    out = []
    x = (0, 1)
    h = x
    d = 0
    while poly_deg(f) >= 1:
        d += 1
        if 2 * d > poly_deg(f):
            out.append((f, poly_deg(f)))
            break
        h = _ppow_mod(h, ell, f, ell)
        g = _pgcd(poly_sub(h, x), f, ell)
        if poly_deg(g) >= 1:
            out.append((g, d))
            f, r = poly_divmod_exact_mod(f, g, ell)
            assert not r
            h = _pmod(h, f, ell) if poly_deg(f) >= 1 else h
    return out


def _equal_degree_split(f, d, ell):
    """Deterministically split a monic squarefree product of degree-d irreducibles.

    All callers have tiny ell and degrees, so an exhaustive search over
    low-degree shift polynomials is both fast and reproducible.
    """
    n = poly_deg(f)
    if n == d:
        return [f]
    # candidate test elements: x + c, then higher-degree polynomials by need
    def candidates():
        for c in range(ell):
            yield (c, 1)
        for lead in range(1, ell):
            for c1 in range(ell):
                for c0 in range(ell):
                    yield (c0, c1, lead)
        for c3 in range(1, ell):
            for c2 in range(ell):
                for c1 in range(ell):
                    for c0 in range(ell):
                        yield (c0, c1, c2, c3)

    for u in candidates():
        if ell == 2:
            # trace map over F_2: u + u^2 + u^4 + ... + u^(2^(d-1))
            t = _pmod(u, f, ell)
            acc = t
            for _ in range(d - 1):
                t = _pmod(_pmul(t, t, ell), f, ell)
                acc = _mod_poly(poly_add(acc, t), ell)
            g = _pgcd(acc, f, ell)
        else:
            e = (ell ** d - 1) // 2
            pw = _ppow_mod(u, e, f, ell)
            g = _pgcd(poly_sub(pw, (1,)), f, ell)
        if 0 < poly_deg(g) < n:
            q, r = poly_divmod_exact_mod(f, g, ell)
            assert not r
            return _equal_degree_split(g, d, ell) + _equal_degree_split(q, d, ell)
    raise RuntimeError("equal-degree splitting exhausted its search space")


def factor_mod_p(p, ell):
    """Factor an integer polynomial modulo a prime ell.

    Returns a list of (monic irreducible tuple, multiplicity), sorted by
    degree then lexicographic coefficient order, whose product reproduces
    the monic reduction of p.  The leading coefficient must be a unit.
    """
    if ell >= PRIME_FIELD_MODULUS_CAP:
        raise ValueError("modulus exceeds the machine-word cap")
    f = _mod_poly(p, ell)
    if not f:
        raise ValueError("zero polynomial mod ell")
    if p[-1] % ell == 0:
        raise ValueError("leading coefficient vanishes mod ell")
    factors = []
    for sqf, mult in _squarefree_parts(f, ell):
        for block, d in _distinct_degree(sqf, ell):
            for irr in _equal_degree_split(block, d, ell):
                factors.append((irr, mult))
    factors.sort(key=lambda fm: (poly_deg(fm[0]), fm[0]))
    return factors


# ---------------------------------------------------------------------------
# primes, CRT, split primes


def is_prime(n):
    """Deterministic Miller-Rabin for n < 3.3e24 (covers every value used here)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n):
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


def primes_below(bound):
    sieve = bytearray([1]) * bound if bound > 0 else bytearray()
    out = []
    for i in range(2, bound):
        if sieve[i]:
            out.append(i)
            for j in range(i * i, bound, i):
                sieve[j] = 0
    return out


def balanced_residue(x, m):
    """Representative of x mod m in the balanced window [-(m-1)/2, m/2]."""
    r = x % m
    if r > m // 2:
        r -= m
    return r


def crt_lift(residues, bound):
    """Lift pairwise-coprime residues to the unique integer with |x| <= bound.

    residues: iterable of (value, modulus).  Requires prod(moduli) > 2*bound.
    """
    residues = list(residues)
    m = 1
    x = 0
    for v, mod in residues:
        g = gcd(m, mod)
        if g != 1:
            raise ValueError("moduli are not pairwise coprime")
        # combine x mod m with v mod mod
        t = ((v - x) * inv_mod(m, mod)) % mod
        x = x + m * t
        m *= mod
    if m <= 2 * bound:
        raise ValueError("modulus product %d cannot separate |x| <= %d" % (m, bound))
    return balanced_residue(x, m)


def multiplicative_order(r, ell):
    o = 1
    x = r % ell
    while x != 1:
        x = x * r % ell
        o += 1
        if o > ell:
            raise ValueError("not a unit")
    return o


def _factorize_small(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def has_exact_order(r, mu, ell, mu_primes):
    if pow(r, mu, ell) != 1:
        return False
    return all(pow(r, mu // rho, ell) != 1 for rho in mu_primes)


def find_split_prime(mu, min_ell):
    """Least prime ell >= min_ell with ell = 1 mod mu, and the least positive
    integer of exact multiplicative order mu mod ell."""
    if mu < 1:
        raise ValueError("mu must be positive")
    ell = max(min_ell, 2)
    # align to the 1 mod mu progression
    if mu > 1:
        rem = ell % mu
        if rem != 1:
            ell += (1 - rem) % mu
    while True:
        if ell >= PRIME_FIELD_MODULUS_CAP:
            raise ValueError("split-prime search exceeded the modulus cap")
        if (mu == 1 or ell % mu == 1) and is_prime(ell):
            break
        ell += mu if mu > 1 else 1
    mu_primes = list(_factorize_small(mu))
    r = 1
    while not has_exact_order(r, mu, ell, mu_primes):
        r += 1
    return ell, r


# ---------------------------------------------------------------------------
# small exact linear algebra mod ell (used by the restriction solver)


def solve_mod(a_rows, b, ell):
    """Solve A x = b mod ell for square/overdetermined A given as row lists.

    Returns the solution list, or raises ValueError on rank deficiency or
    inconsistency.
    """
    rows = [[x % ell for x in row] + [y % ell] for row, y in zip(a_rows, b)]
    n = len(rows[0]) - 1
    piv = []
    r = 0
    for c in range(n):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][c] % ell:
                sel = i
                break
        if sel is None:
            raise ValueError("rank deficiency at column %d" % c)
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = inv_mod(rows[r][c], ell)
        rows[r] = [(x * inv) % ell for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % ell for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, len(rows)):
        if any(x % ell for x in rows[i]):
            raise ValueError("inconsistent system")
    x = [0] * n
    for i, c in enumerate(piv):
        x[c] = rows[i][n]
    return x
