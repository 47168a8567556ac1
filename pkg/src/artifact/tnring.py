"""Grothendieck-level model of the truncated category with period N.

Simple classes are multisegments whose segments are all shorter than N;
length-N segments become trivial and longer ones kill the class.
"""

from dataclasses import dataclass

from artifact.lattice import Weight, eps_w, pair_doubled
from artifact.multiseg import Multisegment


@dataclass(frozen=True)
class ClassTN:
    """A simple class, or zero when ``ms`` is None.

    ``shift`` is a grading shift in half powers of q, meaningful only up to
    an overall power of q.
    """

    ms: Multisegment = None
    shift: int = 0

    @property
    def is_zero(self):
        return self.ms is None

    @property
    def is_unit(self):
        return self.ms is not None and len(self.ms) == 0

    def to_json(self):
        if self.ms is None:
            return "ZERO"
        return {"ms": self.ms.to_json(), "shift": self.shift}

    def describe(self):
        if self.ms is None:
            return "ZERO"
        if not len(self.ms):
            return "UNIT"
        return "SIMPLE " + repr(self.ms)


ZERO_CLASS = ClassTN(None)


def omega_n(ms, N, shift=0):
    """Image of a simple class: zero, unit, or the class with length-N segments removed."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if any(len(s) > N for s in ms):
        return ZERO_CLASS
    return ClassTN(Multisegment(s for s in ms if len(s) < N), shift)


def omega_merge(x, y):
    if x.is_zero or y.is_zero:
        return ZERO_CLASS
    return ClassTN(Multisegment(x.ms.segs + y.ms.segs), x.shift + y.shift)


def _eps_form(x):
    if x.level() != 0:
        raise ValueError(f"{x!r} is not in the root lattice")
    return x.to_eps().eps


def shift_n(x, N, k=1):
    """``S_N^k``: every eps_a goes to eps_{a + kN}."""
    return Weight(eps={a + k * N: c for a, c in _eps_form(x).items()})


def b_form_n(x, y, N):
    """``B_N(x, y) = -sum_{k > 0} (S_N^k x, y)``; only finitely many terms are nonzero."""
    ex, ey = _eps_form(x), _eps_form(y)
    if not ex or not ey:
        return 0
    total = 0
    k = 1
    while min(ex) + k * N <= max(ey):
        total += sum(c * ey.get(a + k * N, 0) for a, c in ex.items())
        k += 1
    return -total


def c_a(a, beta, N):
    """``c_a(beta) = (eps_a + eps_{a+N}, beta)``."""
    d = pair_doubled(eps_w(a) + eps_w(a + N), beta)
    return d // 2


def star_degree(alpha, beta, N):
    """Exponent of q in ``X * Y = q^{B_N(alpha, beta)} X o Y``."""
    return b_form_n(alpha, beta, N)


def f_aj(a, j, N):
    """``f_{a,j}(z)`` as ``(sign, exponent)`` of a signed monomial in z."""
    delta = 1 if j == a + N else 0
    inside = 1 if a <= j < a + N - 1 else 0
    return (-1) ** delta, -inside - delta


def grade_project(beta, N):
    """Image in the lattice of eps indices taken mod N, as a dict residue -> coeff."""
    out = {}
    for a, c in _eps_form(beta).items():
        out[a % N] = out.get(a % N, 0) + c
    return {r: c for r, c in sorted(out.items()) if c}


def pairing_n(a, b, N):
    return 1 if (a - b) % N == 0 else 0


def dual_star_degree(alpha, beta, N):
    """``(alpha, beta)_N`` computed on the residues mod N."""
    pa, pb = grade_project(alpha, N), grade_project(beta, N)
    return sum(c * pb.get(r, 0) for r, c in pa.items())
