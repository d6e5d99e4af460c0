"""Certified Tristram d-signatures.

For a knot with Seifert matrix V and a prime d, the d-signature is the
signature of the Hermitian form

    H = (1 - z) V + (1 - conj(z)) V^T,   z = exp(2*pi*i*a/d),  a = [d/2],

so sigma_2 is the ordinary signature (z = -1 gives H = 2(V + V^T)).  Torus
knot forms at prime d are always nonsingular: every root of their Alexander
polynomial is a root of unity of composite order, while z has prime order d.
That arithmetic fact certifies the nullity; the remaining eigenvalue signs
are certified by interval arithmetic (see `certify`), escalating precision
until every sign resolves or a cap is hit.

For torus knots there is also an exact integer fast path: writing
x(i,j) = i/p + j/q over 0 < i < p, 0 < j < q and s = a/d, the form's
eigenvalue on the (i,j) monodromy line is negative exactly when
s < x(i,j) < 1 + s, positive otherwise, and never zero for prime d.  This
reproduces the half-turn lattice count at d = 2 and is validated against
the Hermitian route across the whole test range; the Hermitian route stays
authoritative.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from . import cyclotomic
from .certify import Inertia, MRMatrix, certified_inertia
from .core import TorusKnotParams, normalize
from .errors import DomainError
from .lattice import sigma_closed
from .seifert import SeifertForm, seifert_matrix, torus_braid

DEFAULT_PRECISION_CAP = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_divisors(n: int):
    out = []
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out.append(m)
    return out


@dataclass(frozen=True, eq=False)
class HermitianForm:
    """Exact Hermitian form with entries in Z[zeta_d].

    coeffs[i, j, k] is the integer coefficient of zeta^k in entry (i, j);
    conjugate symmetry holds by construction.  `source` carries (p, q) when
    the form came from a torus knot, enabling the arithmetic nullity
    certificate.
    """

    d: int
    dimension: int
    coeffs: np.ndarray
    source: tuple = None

    @property
    def a(self) -> int:
        return self.d // 2


def build_form(f: SeifertForm, d: int, source=None) -> HermitianForm:
    """H = (1-z)V + (1-conj(z))V^T at z = exp(2*pi*i*[d/2]/d), exactly.

    Entry (i,j) = (V_ij + V_ji) - V_ij * zeta - V_ji * zeta^{d-1} with
    zeta = z; at d = 2 this evaluates to 2(V + V^T).
    """
    if not is_prime(d):
        raise DomainError(f"d={d}: need a prime")
    v = f.matrix
    n = f.dimension
    coeffs = np.zeros((n, n, d), dtype=np.int64)
    coeffs[:, :, 0] = v + v.T
    coeffs[:, :, 1 % d] -= v
    coeffs[:, :, (d - 1) % d] -= v.T
    return HermitianForm(d, n, coeffs, source)


@lru_cache(maxsize=None)
def _root_enclosures(d: int):
    """Outward double enclosures of cos/sin(2*pi*k/d), k = 0..d-1."""
    import math

    from mpmath import iv

    old = iv.prec
    iv.prec = 80
    try:
        cm = np.zeros(d)
        cr = np.zeros(d)
        sm = np.zeros(d)
        sr = np.zeros(d)
        for k in range(d):
            ang = 2 * iv.pi * k / d
            for val, mid_arr, rad_arr in ((iv.cos(ang), cm, cr), (iv.sin(ang), sm, sr)):
                lo = math.nextafter(float(val.a), -math.inf)
                hi = math.nextafter(float(val.b), math.inf)
                mid_arr[k] = 0.5 * (lo + hi)
                rad_arr[k] = max(hi - mid_arr[k], mid_arr[k] - lo) * (1 + 2 ** -50)
        if d == 2:  # exact
            cm[:] = [1.0, -1.0]
            sm[:] = [0.0, 0.0]
            cr[:] = sr[:] = 0.0
        cm[0], sm[0], cr[0], sr[0] = 1.0, 0.0, 0.0, 0.0
        return cm, cr, sm, sr
    finally:
        iv.prec = old


def _float_enclosure(h: HermitianForm) -> MRMatrix:
    cm, cr, sm, sr = _root_enclosures(h.d)
    # entries are zeta^{a*k} combinations: z = zeta^a, but coeffs are stored
    # against zeta^k with zeta = z already, so index directly
    a = h.a
    idx = [(a * k) % h.d for k in range(h.d)]
    cmid = cm[idx] + 1j * sm[idx]
    crad = cr[idx] + sr[idx]
    c = h.coeffs.astype(np.float64)
    mid = c @ cmid
    rad = np.abs(c) @ crad + 8 * 2.0 ** -53 * (np.abs(c) @ np.abs(cmid)) + 1e-300
    return MRMatrix(mid, rad)


def _mp_entry_fn(h: HermitianForm):
    from mpmath import iv

    a = h.a

    def entry(i, j):
        re = iv.mpf(0)
        im = iv.mpf(0)
        for k in range(h.d):
            c = int(h.coeffs[i, j, k])
            if c:
                ang = 2 * iv.pi * ((a * k) % h.d) / h.d
                re += c * iv.cos(ang)
                im += c * iv.sin(ang)
        return re, im

    return entry


def _nullity(h: HermitianForm) -> int:
    if h.source is not None:
        p, q = h.source
        # z has prime order d; a root of the Alexander polynomial of T(p,q)
        # is a pq-th root of unity whose order divides neither p nor q, so
        # its order has prime factors from both p and q and is composite.
        # Hence H(z) is nonsingular.
        assert gcd(p, q) == 1 and is_prime(h.d)
        return 0
    return cyclotomic.hermitian_nullity_exact(h.coeffs, h.d)


def inertia(h: HermitianForm, precision_cap: int = None) -> Inertia:
    """Certified inertia (n_plus, n_zero, n_minus) of the form."""
    cap = DEFAULT_PRECISION_CAP if precision_cap is None else precision_cap
    z = _nullity(h)
    return certified_inertia(lambda: _float_enclosure(h), _mp_entry_fn(h),
                             h.dimension, z, precision_cap=cap)


# ---------------------------------------------------------------------------
# signatures of torus knots
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _sigma_hermitian(p: int, q: int, d: int, cap) -> int:
    form = build_form(seifert_matrix(torus_braid(p, q)), d, source=(p, q))
    ine = inertia(form, precision_cap=cap)
    assert ine.n_zero == 0
    return ine.signature


@lru_cache(maxsize=None)
def sigma_d_counting(p: int, q: int, d: int) -> int:
    """Exact integer fast path for sigma_d(T(p,q)), 0 < p < q coprime.

    Counts lattice pairs against the window (s, 1+s), s = [d/2]/d, with
    integer cross-multiplication only; asserts the window boundary is never
    attained (true for prime d).
    """
    if not is_prime(d):
        raise DomainError(f"d={d}: need a prime")
    if not 0 < p < q:
        raise DomainError(f"need 0 < p < q, got ({p},{q})")
    a = d // 2
    pq = p * q
    lo_num = a * pq          # x < s      <->  d(iq + jp) < lo_num
    hi_num = (d + a) * pq    # x > 1 + s  <->  d(iq + jp) > hi_num
    den = d * p
    pos = 0
    for i in range(1, p):
        base = d * i * q
        # j < (lo_num - base) / den
        t = lo_num - base
        if t > 0:
            jmax = t // den
            if t % den == 0:
                if 1 <= jmax <= q - 1:
                    raise AssertionError(
                        f"window boundary attained at ({p},{q},{d})")
                jmax -= 1
            pos += min(jmax, q - 1)
        # j > (hi_num - base) / den; hi_num > base always
        t = hi_num - base
        jlo = t // den + 1
        if t % den == 0:
            if 1 <= t // den <= q - 1:
                raise AssertionError(f"window boundary attained at ({p},{q},{d})")
        if jlo <= q - 1:
            pos += q - 1 - jlo + 1
    return 2 * pos - (p - 1) * (q - 1)


def _sigma_counting_brute(p: int, q: int, d: int) -> int:
    """O(pq) reference for the fast path (test fixture)."""
    a = d // 2
    pq = p * q
    pos = neg = 0
    for i in range(1, p):
        for j in range(1, q):
            x = d * (i * q + j * p)
            assert x != a * pq and x != (d + a) * pq
            if x < a * pq or x > (d + a) * pq:
                pos += 1
            else:
                neg += 1
    return pos - neg


def tristram_sigma(k: TorusKnotParams, d: int, method: str = "hermitian",
                   precision_cap: int = None) -> int:
    """sigma_d of a torus knot; negated under the mirror flag.

    The default Hermitian route builds the exact form from the braid Seifert
    matrix and certifies the inertia.  method="counting" uses the integer
    fast path (validated against the Hermitian route in the test suite).
    """
    nk, mirror = normalize(k)
    if nk.is_trivial:
        raise DomainError(f"{k} is trivial")
    if not is_prime(d):
        raise DomainError(f"d={d}: need a prime")
    if method == "counting":
        s = sigma_d_counting(nk.p, nk.q, d)
    elif method == "hermitian":
        s = _sigma_hermitian(nk.p, nk.q, d, precision_cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    assert s % 2 == 0
    return -s if mirror else s


def sigma_d(k: TorusKnotParams, d: int, method: str = "auto",
            precision_cap: int = None) -> int:
    """Dispatcher used by the classifier: "auto" takes the integer fast
    path, anything else defers to tristram_sigma."""
    nk, _ = normalize(k)
    if nk.is_trivial:
        return 0
    if method in ("auto", "counting"):
        return tristram_sigma(k, d, method="counting")
    return tristram_sigma(k, d, method=method, precision_cap=precision_cap)


def prop35_bound_check(k: TorusKnotParams, d: int, method: str = "auto") -> bool:
    """sigma_d <= -4 holds for every nontrivial torus knot except T(2,3);
    the classifier treats a violation as an internal-consistency failure."""
    nk, _ = normalize(k)
    if nk.is_trivial or (nk.p, nk.q) == (2, 3):
        raise DomainError(f"{k} is outside the bound's domain")
    return sigma_d(k, d, method=method) <= -4
