"""The infinite reduced word ``s_{j_1} s_{j_2} ...`` and its coordinates.

Positions p >= 1 are grouped into blocks by ``a(t) = t(2t + 1)`` for
half-integers t.  We pass ``u = 2t`` so that ``a_val(u) = u(u + 1) / 2``
stays integral.  Each position also carries a coordinate ``(ell, m)``;
``coord`` and ``coord_inv`` are inverse bijections between positions and
pairs of positive integers.
"""

from math import isqrt

from artifact.lattice import alpha_w, apply_word, eps_w


def a_val(u):
    if u < 0:
        raise ValueError("u must be nonnegative")
    return u * (u + 1) // 2


def _block(p):
    """Largest integer t with a(t) < p."""
    if p < 1:
        raise ValueError(f"position must be >= 1, got {p}")
    return (isqrt(8 * (p - 1) + 1) - 1) // 4


def jp(p):
    """Index of the simple reflection in position p."""
    t = _block(p)
    at, ah = a_val(2 * t), a_val(2 * t + 1)
    if p <= ah + 1:
        return p - at - t - 1
    return t + 2 + ah - p


def coord(p):
    t = _block(p)
    at, ah, a1 = a_val(2 * t), a_val(2 * t + 1), a_val(2 * t + 2)
    if p <= ah:
        return (p - at, ah - p + 1)
    if p == ah + 1:
        return (2 * t + 2, 1)
    return (a1 + 1 - p, p - ah)


def coord_inv(ell, m):
    if ell < 1 or m < 1:
        raise ValueError(f"coordinates must be positive, got ({ell}, {m})")
    return a_val(ell + m - 2) + (ell if (ell + m) % 2 == 0 else m)


def jp_from_coord(ell, m):
    return (ell - m + 1) // 2


def window_size(cap):
    """Number of positions whose coordinate satisfies ``ell + m <= cap``."""
    return a_val(cap - 1) if cap >= 2 else 0


def prefix(p):
    return [jp(k) for k in range(1, p + 1)]


def p_plus_j(p, j):
    """Smallest k > p with ``jp(k) == j``; every letter recurs, so this ends."""
    k = p + 1
    while jp(k) != j:
        k += 1
    return k


def p_minus_j(p, j):
    """Largest k < p with ``jp(k) == j``, or 0 if there is none."""
    for k in range(p - 1, 0, -1):
        if jp(k) == j:
            return k
    return 0


def p_plus(p):
    return p_plus_j(p, jp(p))


def p_minus(p):
    return p_minus_j(p, jp(p))


def p_plus_closed(p):
    ell, m = coord(p)
    return coord_inv(ell, m + 1) if (ell + m) % 2 == 0 else coord_inv(ell + 1, m)


def p_minus_closed(p):
    """Closed form for ``p_minus``; 0 when the predecessor falls off the grid."""
    ell, m = coord(p)
    ell, m = (ell - 1, m) if (ell + m) % 2 == 0 else (ell, m - 1)
    return coord_inv(ell, m) if ell >= 1 and m >= 1 else 0


def prefix_root(p):
    """The root ``s_{j_1} ... s_{j_{p-1}} alpha_{j_p}`` in closed form."""
    t = _block(p)
    at, ah = a_val(2 * t), a_val(2 * t + 1)
    if p <= ah:
        return eps_w(-t) - eps_w(t + 2 - p + at)
    return eps_w(-t - 1 + p - ah) - eps_w(t + 2)


def prefix_root_direct(p):
    return apply_word(prefix(p - 1), alpha_w(jp(p)))


def first_non_reduced(word):
    """Position k (1-based) where ``word`` stops being reduced, or None.

    The prefix of length k is reduced iff ``s_{i_1}...s_{i_{k-1}} alpha_{i_k}``
    is a positive root.  Tracking sigma, the product of the transpositions
    applied so far, that root is ``eps_{sigma(j)} - eps_{sigma(j+1)}``.
    """
    sigma = {}
    for k, j in enumerate(word, start=1):
        x, y = sigma.get(j, j), sigma.get(j + 1, j + 1)
        if x > y:
            return k
        sigma[j], sigma[j + 1] = y, x
    return None


def is_reduced_prefix(p):
    return first_non_reduced(prefix(p)) is None


def perm_of_prefix(p):
    """``s_{j_1} ... s_{j_p}`` as a permutation of the integers.

    Returned as a dict on the moved points only.
    """
    sigma = {}
    for j in prefix(p):
        x, y = sigma.get(j, j), sigma.get(j + 1, j + 1)
        sigma[j], sigma[j + 1] = y, x
    return {a: b for a, b in sigma.items() if a != b}


def coxeter_length(perm):
    """Number of inversions of a finitely supported permutation."""
    if not perm:
        return 0
    pts = range(min(perm), max(perm) + 1)
    vals = [perm.get(a, a) for a in pts]
    return sum(1 for i, x in enumerate(vals) for y in vals[i + 1:] if x > y)


def longest_interval(u):
    """Interval reversed by the prefix of length ``a_val(u)``."""
    hi = u // 2 + 1
    return (hi - u, hi)


def reversal(lo, hi):
    return {a: lo + hi - a for a in range(lo, hi + 1) if a != lo + hi - a}


def coord_array(ps):
    """Vectorized ``coord`` over an integer array; returns (ell, m) arrays."""
    import numpy as np

    p = np.asarray(ps, dtype=np.int64)
    t = (np.floor(np.sqrt(8 * (p - 1) + 1)).astype(np.int64) - 1) // 4
    # guard against rounding in the float square root
    t -= (2 * t * t + t >= p)
    t += (2 * (t + 1) ** 2 + (t + 1) < p)
    u = 2 * t
    at, ah, a1 = u * (u + 1) // 2, (u + 1) * (u + 2) // 2, (u + 2) * (u + 3) // 2
    first = p <= ah
    ell = np.where(first, p - at, np.where(p == ah + 1, u + 2, a1 + 1 - p))
    m = np.where(first, ah - p + 1, np.where(p == ah + 1, 1, p - ah))
    return ell, m


def coord_inv_array(ell, m):
    import numpy as np

    ell = np.asarray(ell, dtype=np.int64)
    m = np.asarray(m, dtype=np.int64)
    s = ell + m - 2
    return s * (s + 1) // 2 + np.where((ell + m) % 2 == 0, ell, m)


def jp_array(ps):
    import numpy as np

    p = np.asarray(ps, dtype=np.int64)
    t = (np.floor(np.sqrt(8 * (p - 1) + 1)).astype(np.int64) - 1) // 4
    t -= (2 * t * t + t >= p)
    t += (2 * (t + 1) ** 2 + (t + 1) < p)
    at, ah = t * (2 * t + 1), (2 * t + 1) * (2 * t + 2) // 2
    return np.where(p <= ah + 1, p - at - t - 1, t + 2 + ah - p)
