"""Independent p-adic factor counter working modulo p^K.

This is the test-side oracle for extension counting: classical shift /
Newton polygon / first-order residual analysis on integer polynomials
reduced mod p^K, with digit-wise center refinement when a residual root
repeats.  It shares no code with the package (its own F_p arithmetic,
exhaustive trial-division factorization, explicit Hensel lifting), so an
agreement between the two is meaningful.

Only desk-scale inputs are supported; faces that would need higher-order
machinery (a repeated residual factor on a ramified face, or a repeated
residual of degree above one) raise OracleDepthError.
"""

from fractions import Fraction
from itertools import product


class OracleDepthError(NotImplementedError):
    pass


# -- tiny F_p[z] toolkit (independent of the package) -------------------------


def _trim(a, p):
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out, p)


def _divmod(a, b, p):
    a = _trim(list(a), p)
    b = _trim(list(b), p)
    inv = pow(b[-1], -1, p)
    quo = [0] * max(0, len(a) - len(b) + 1)
    rem = a[:]
    for k in range(len(rem) - len(b), -1, -1):
        c = (rem[k + len(b) - 1] * inv) % p
        if c:
            quo[k] = c
            for j, y in enumerate(b):
                rem[k + j] = (rem[k + j] - c * y) % p
    return _trim(quo, p), _trim(rem, p)


def _xgcd(a, b, p):
    r0, s0, t0 = _trim(a, p), [1], []
    r1, s1, t1 = _trim(b, p), [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _trim([x - y for x, y in _pad(s0, _mul(q, s1, p))], p)
        t0, t1 = t1, _trim([x - y for x, y in _pad(t0, _mul(q, t1, p))], p)
    return r0, s0, t0


def _pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _factor_fp(f, p):
    """Exhaustive trial-division factorization over F_p."""
    f = _trim(list(f), p)
    inv = pow(f[-1], -1, p)
    f = [(c * inv) % p for c in f]
    factors = {}
    deg = 1
    while len(f) - 1 >= 2 * deg:
        for tail in product(range(p), repeat=deg):
            cand = list(tail) + [1]
            if len(_trim(cand, p)) - 1 != deg:
                continue
            while True:
                quo, rem = _divmod(f, cand, p)
                if rem:
                    break
                key = tuple(cand)
                factors[key] = factors.get(key, 0) + 1
                f = quo
            if len(f) - 1 < 2 * deg:
                break
        deg += 1
    if len(f) > 1:
        factors[tuple(f)] = factors.get(tuple(f), 0) + 1
    return factors


# -- Hensel lifting of a coprime split ----------------------------------------


def _hensel_pair(m_int, a0, b0, p, K):
    """Lift m = a*b (coprime mod p) to mod p^K; returns a mod p^K."""
    g, s, t = _xgcd(a0, b0, p)
    assert len(g) == 1
    ginv = pow(g[0], -1, p)
    s = [(c * ginv) % p for c in s]
    t = [(c * ginv) % p for c in t]
    mod = p
    a, b = list(a0), list(b0)
    while mod < p**K:
        mod *= p
        # error = m - a*b, dividedступ implicitly via arithmetic mod 'mod'
        ab = _poly_mul_int(a, b)
        err = [(x - y) % mod for x, y in _pad_int(m_int, ab)]
        # a += t*err, b += s*err, reduced so deg stays put
        da = _poly_mul_int(t, err)
        db = _poly_mul_int(s, err)
        _, da = _poly_divmod_int(da, a, mod)
        a = [(x + y) % mod for x, y in _pad_int(a, da)]
        b = _poly_balance(m_int, a, b, mod)
    return a


def _poly_mul_int(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pad_int(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _poly_divmod_int(a, b, mod):
    # b must be monic after reduction mod 'mod'
    a = [c % mod for c in a]
    b = [c % mod for c in b]
    while b and b[-1] % mod == 0:
        b.pop()
    inv = pow(b[-1], -1, mod)
    quo = [0] * max(0, len(a) - len(b) + 1)
    rem = a[:]
    for k in range(len(rem) - len(b), -1, -1):
        c = (rem[k + len(b) - 1] * inv) % mod
        if c:
            quo[k] = c
            for j, y in enumerate(b):
                rem[k + j] = (rem[k + j] - c * y) % mod
    while rem and rem[-1] % mod == 0:
        rem.pop()
    return quo, rem


def _poly_balance(m_int, a, b, mod):
    quo, _ = _poly_divmod_int([c % mod for c in m_int], a, mod)
    return quo


def _vp_int(n, p, cap):
    n = int(n)
    if n == 0:
        return None
    v = 0
    while n % p == 0 and v < cap:
        n //= p
        v += 1
    if v >= cap:
        raise OracleDepthError("valuation exceeds working precision")
    return v


def _lower_hull(points):
    pts = sorted(points)
    hull = []
    for x, y in pts:
        while len(hull) >= 2:
            x1, y1 = hull[-2]
            x2, y2 = hull[-1]
            if (y2 - y1) * (x - x1) >= (y - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append((x, y))
    return hull


def _shift_int(coeffs, c, mod):
    out = [0]
    for a in reversed(coeffs):
        out = _poly_mul_int(out, [c, 1])
        out = [x % mod for x in out]
        out[0] = (out[0] + a) % mod
    return out


def _count_center(coeffs, center, p, K, floor):
    """Factors of the primary part attached to centers refining 'center'."""
    mod = p**K
    shifted = _shift_int(coeffs, center, mod)
    pts = []
    for j, c in enumerate(shifted):
        v = _vp_int(c, p, K)
        if v is not None:
            pts.append((j, v))
    count = 0
    hull = _lower_hull(pts)
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        lam = Fraction(y1 - y2, x2 - x1)
        if lam <= floor:
            continue
        h, e = lam.numerator, lam.denominator
        length = x2 - x1
        if length == 1:
            count += 1
            continue
        # residual polynomial of the face, over F_p
        res = []
        for k in range(length // e + 1):
            j = x1 + k * e
            val = y1 - k * h
            coeff = shifted[j] // p**val if _vp_int(shifted[j], p, K) == val else 0
            res.append(coeff % p)
        for sigma, mult in _factor_fp(res, p).items():
            if mult == 1:
                count += 1
                continue
            if e == 1 and len(sigma) == 2:
                root = (-sigma[0] * pow(sigma[1], -1, p)) % p
                count += _count_center(coeffs, center + root * p**h, p, K, lam)
            else:
                raise OracleDepthError("repeated residual on a ramified or inert face")
    return count


def count_padic_factors(coeffs, p, K=64):
    """Number of irreducible p-adic factors of a monic integer polynomial.

    ``coeffs`` is the little-endian integer coefficient list.  Raises
    OracleDepthError when the input needs machinery beyond first-order
    analysis with digit refinement.
    """
    if coeffs[-1] != 1:
        raise ValueError("oracle expects a monic integer polynomial")
    base = _factor_fp([c % p for c in coeffs], p)
    total = 0
    mod = p**K
    for rho, mult in base.items():
        if mult == 1:
            total += 1
            continue
        if len(rho) - 1 == 1:
            # primary part over a linear residual: lift it out and refine
            rho_power = [1]
            for _ in range(mult):
                rho_power = _mul(rho_power, list(rho), p)
            rest, _ = _divmod([c % p for c in coeffs], rho_power, p)
            if len(rest) > 1:
                primary = _hensel_pair([c % mod for c in coeffs], rho_power, rest, p, K)
            else:
                primary = [c % mod for c in coeffs]
            center = (-rho[0] * pow(rho[1], -1, p)) % p
            total += _count_center(primary, center, p, K, Fraction(0))
        else:
            raise OracleDepthError("repeated residual factor of degree above one")
    return total
