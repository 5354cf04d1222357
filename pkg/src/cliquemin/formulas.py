"""Closed-form layer: every numeric quantity is exact (integers, or square
roots carried as radicand/denominator pairs compared by cross-squaring).
Floats appear only as display views.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ParameterError(ValueError):
    pass


def _check_st(s, t):
    if not (s > t >= 1):
        raise ParameterError(f"need s > t >= 1, got s={s}, t={t}")


def parity_term(n):
    """n^2 - 4*floor(n^2/4): 0 for even n, 1 for odd n."""
    return n * n - 4 * (n * n // 4)


def balanced_sizes(n, parts):
    """Part sizes of the balanced partition of n into `parts` classes,
    nonincreasing."""
    if parts < 1:
        raise ParameterError("parts must be >= 1")
    q, r = divmod(n, parts)
    return tuple([q + 1] * r + [q] * (parts - r))


def turan_edge_count(n, parts):
    """Edge count of the balanced complete multipartite graph on n vertices."""
    if n < 0:
        raise ParameterError("n must be >= 0")
    sizes = balanced_sizes(n, parts)
    total = sum(sizes)
    return (total * total - sum(x * x for x in sizes)) // 2


def _isqrt_exact(x):
    if x < 0:
        return None
    r = math.isqrt(x)
    return r if r * r == x else None


@dataclass(frozen=True)
class TriangleParams:
    n: int
    s: int
    t: int
    parity_term: int
    m_st: int
    r3: int
    n_plus: int
    n_minus: int


def triangle_params(n, s, t):
    """Minimal m with 4(s-t-m)+parity a perfect square, and the derived
    bipartite part sizes."""
    _check_st(s, t)
    if n < 1:
        raise ParameterError("n must be >= 1")
    e = parity_term(n)
    for m in range(s - t + 1):
        r3 = _isqrt_exact(4 * (s - t - m) + e)
        if r3 is not None:
            return TriangleParams(
                n=n, s=s, t=t, parity_term=e, m_st=m, r3=r3,
                n_plus=(n + r3) // 2, n_minus=(n - r3) // 2,
            )
    raise AssertionError("unreachable: m = s-t always yields a square")


def surplus(n, s, t):
    """n_plus - n_minus - m_st; zero exactly in the two square-family cases."""
    p = triangle_params(n, s, t)
    return p.r3 - p.m_st


def triangle_lower_bound(n, s, t):
    p = triangle_params(n, s, t)
    return s * p.n_minus - p.m_st


def conjecture1_bound(n, s, t):
    _check_st(s, t)
    return (s - 1) * (n // 2) + (n + 1) // 2 - 2 * (s - t)


def y_vector(n, k):
    """Near-balanced (k-1)-partition minimizing the product of all but the
    largest part, by remainder case."""
    if k < 4:
        raise ParameterError("k must be >= 4")
    if n < k - 1:
        raise ParameterError("n must be >= k-1")
    q, r = divmod(n, k - 1)
    if r == 0:
        return tuple([q + 1] + [q] * (k - 3) + [q - 1])
    if r == 1:
        return tuple([q + 1] + [q] * (k - 2))
    return tuple([q + 2] + [q + 1] * (r - 2) + [q] * (k - r))


def min_kk_count(n, k, s):
    """Minimum K_k count for graphs with t_{k-1}(n)+s-1 edges and covering
    number s, by remainder case."""
    if k < 4:
        raise ParameterError("k must be >= 4")
    if s < 2:
        raise ParameterError("s must be >= 2")
    q, r = divmod(n, k - 1)
    if r == 0:
        return s * q ** (k - 3) * (q - 1)
    if r == 1:
        return s * q ** (k - 2) - q ** (k - 3)
    return s * (q + 1) ** (r - 2) * q ** (k - r)


def conjecture2_bound(n, k):
    """(x1 + x2 - 2) * prod(x3..x_{k-1}) on the balanced partition."""
    if k < 4:
        raise ParameterError("k must be >= 4")
    sizes = balanced_sizes(n, k - 1)
    value = sizes[0] + sizes[1] - 2
    for x in sizes[2:]:
        value *= x
    return value


@dataclass(frozen=True)
class Surd:
    """Exact nonnegative value sqrt(radicand)/denom.  Comparisons go through
    cross-squaring, never floats."""

    radicand: int
    denom: int

    def __post_init__(self):
        if self.radicand < 0 or self.denom <= 0:
            raise ParameterError("Surd needs radicand >= 0 and denom > 0")

    def is_integer(self):
        r = _isqrt_exact(self.radicand)
        return r is not None and r % self.denom == 0

    def as_integer(self):
        r = _isqrt_exact(self.radicand)
        if r is None or r % self.denom:
            raise ParameterError(f"sqrt({self.radicand})/{self.denom} is not an integer")
        return r // self.denom

    def __float__(self):
        return math.sqrt(self.radicand) / self.denom

    def same_value(self, other):
        return (self.radicand * other.denom ** 2 == other.radicand * self.denom ** 2)

    def __lt__(self, other):
        return self.radicand * other.denom ** 2 < other.radicand * self.denom ** 2

    def __le__(self, other):
        return self.radicand * other.denom ** 2 <= other.radicand * self.denom ** 2


@dataclass(frozen=True)
class CliqueParams:
    n: int
    k: int
    s: int
    t: int
    q: int
    r: int
    rk: Surd               # R_k = sqrt(radicand)/(k-2), radicand = A*(k-2)
    n_minus_is_integer: bool
    n_minus_int: int | None
    n_minus_float: float
    n_plus_float: float


def clique_params(n, k, s, t):
    """Exact representation of R_k and the derived part sizes."""
    if k < 4:
        raise ParameterError("k must be >= 4")
    _check_st(s, t)
    q, r = divmod(n, k - 1)
    a = 2 * (k - 1) * (s - t) + (k - 1 - r) * r
    # R_k = sqrt(a/(k-2)) = sqrt(a*(k-2))/(k-2)
    rk = Surd(a * (k - 2), k - 2)
    if rk.is_integer():
        r0 = rk.as_integer()
        n_minus_ok = (n - r0) % (k - 1) == 0
        n_minus_int = (n - r0) // (k - 1) if n_minus_ok else None
    else:
        n_minus_ok = False
        n_minus_int = None
    rk_f = float(rk)
    return CliqueParams(
        n=n, k=k, s=s, t=t, q=q, r=r, rk=rk,
        n_minus_is_integer=n_minus_ok, n_minus_int=n_minus_int,
        n_minus_float=(n - rk_f) / (k - 1),
        n_plus_float=(n + (k - 2) * rk_f) / (k - 1),
    )


def delta_m(n, k, s, t, m):
    """Displacement of the optimal part sizes from n/(k-1) after m removed
    cross pairs, as an exact Surd."""
    if k < 4:
        raise ParameterError("k must be >= 4")
    _check_st(s, t)
    if not 0 <= m <= s - t:
        raise ParameterError(f"need 0 <= m <= s-t, got m={m}")
    _, r = divmod(n, k - 1)
    rad = 2 * (k - 1) * (k - 2) * (s - t - m) + (k - 2) * (k - 1 - r) * r
    return Surd(rad, (k - 1) * (k - 2))


def opt_c_value(n, k, s, t, m):
    """Float view of the relaxed optimum (n/(k-1) - delta_m)^(k-2)."""
    return (n / (k - 1) - float(delta_m(n, k, s, t, m))) ** (k - 2)


# ---------------------------------------------------------------------------
# proof-internal offset functions (n-independent given parity)

@dataclass(frozen=True)
class OffsetValue:
    """Value of a bound function minus s*n/2, stored doubled to stay integral."""
    doubled: int

    def halves(self):
        return self.doubled / 2


def fg_valid_ms(s, t, parity):
    """All m in [0, s-t] whose discriminant root is a nonnegative integer,
    with the root."""
    _check_st(s, t)
    e = {"even": 0, "odd": 1}[parity]
    out = []
    for m in range(s - t + 1):
        root = _isqrt_exact(4 * (s - t - m) + e)
        if root is not None:
            out.append((m, root))
    return out


def fg_offsets(s, t, parity, m):
    """Doubled offsets (f(m) - sn/2, g(m) - sn/2) for one valid m."""
    for mm, root in fg_valid_ms(s, t, parity):
        if mm == m:
            f2 = -s * root - 2 * m
            g2 = -(s - 2) * root - 4 * m
            return OffsetValue(f2), OffsetValue(g2)
    raise ParameterError(f"m={m} is not a valid removal count for (s={s}, t={t}, {parity})")
