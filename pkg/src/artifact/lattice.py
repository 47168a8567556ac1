"""Weights of the type A-infinity lattice.

A weight is a finite integer combination of fundamental weights ``Lambda_i``
and of ``eps_a = Lambda_a - Lambda_{a-1}``.  The bilinear form is defined on
the Lambda basis only, by ``(Lambda_i, Lambda_j) = -|i - j| / 2``; every other
pairing goes through the Lambda expansion.
"""

from fractions import Fraction

from artifact.errors import NonIntegral
from artifact.kernels import form_doubled


def _clean(d):
    return {k: v for k, v in sorted(d.items()) if v}


class Weight:
    """Immutable weight with separately stored Lambda and eps coefficients.

    Two weights are equal when their Lambda expansions agree, so
    ``eps_w(3) == lambda_w(3) - lambda_w(2)``.
    """

    __slots__ = ("lam", "eps", "_expansion")

    def __init__(self, lam=None, eps=None):
        object.__setattr__(self, "lam", _clean(dict(lam or {})))
        object.__setattr__(self, "eps", _clean(dict(eps or {})))
        object.__setattr__(self, "_expansion", None)

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    def expansion(self):
        """Coefficients in the Lambda basis, as a sorted tuple of pairs."""
        if self._expansion is None:
            out = dict(self.lam)
            for a, c in self.eps.items():
                out[a] = out.get(a, 0) + c
                out[a - 1] = out.get(a - 1, 0) - c
            object.__setattr__(self, "_expansion", tuple(_clean(out).items()))
        return self._expansion

    def level(self):
        """Sum of the Lambda coefficients; zero exactly on the root lattice."""
        return sum(c for _, c in self.expansion())

    def to_eps(self):
        """Rewrite a level-zero weight using eps vectors only."""
        exp = self.expansion()
        if sum(c for _, c in exp) != 0:
            raise ValueError("weight has nonzero level and no pure eps form")
        # coefficient of eps_a is the tail sum of Lambda coefficients from a up
        eps = {}
        if exp:
            coeff = dict(exp)
            running = 0
            for a in range(exp[-1][0], exp[0][0], -1):
                running += coeff.get(a, 0)
                eps[a] = running
        return Weight(eps=eps)

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.expansion() == other.expansion()

    def __hash__(self):
        return hash(self.expansion())

    def __add__(self, other):
        lam = dict(self.lam)
        for k, v in other.lam.items():
            lam[k] = lam.get(k, 0) + v
        eps = dict(self.eps)
        for k, v in other.eps.items():
            eps[k] = eps.get(k, 0) + v
        return Weight(lam, eps)

    def __neg__(self):
        return Weight({k: -v for k, v in self.lam.items()}, {k: -v for k, v in self.eps.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return Weight({k: n * v for k, v in self.lam.items()}, {k: n * v for k, v in self.eps.items()})

    def __bool__(self):
        return bool(self.expansion())

    def __repr__(self):
        terms = [f"{c:+d}*L{i}" for i, c in self.lam.items()]
        terms += [f"{c:+d}*e{a}" for a, c in self.eps.items()]
        return "Weight(" + (" ".join(terms) or "0") + ")"

    def to_json(self):
        return {"lam": {str(k): v for k, v in self.lam.items()},
                "eps": {str(k): v for k, v in self.eps.items()}}

    @classmethod
    def from_json(cls, data):
        return cls({int(k): v for k, v in data.get("lam", {}).items()},
                   {int(k): v for k, v in data.get("eps", {}).items()})


ZERO = Weight()


def lambda_w(i):
    return Weight(lam={i: 1})


def eps_w(a):
    return Weight(eps={a: 1})


def alpha_w(j):
    """Simple root ``eps_j - eps_{j+1}``."""
    return Weight(eps={j: 1, j + 1: -1})


def pair_doubled(x, y):
    """Twice the pairing ``(x, y)``, as an exact integer."""
    ex, ey = x.expansion(), y.expansion()
    if not ex or not ey:
        return 0
    if len(ex) * len(ey) <= 64:
        return -sum(c * d * abs(i - j) for i, c in ex for j, d in ey)
    return form_doubled([i for i, _ in ex], [c for _, c in ex],
                        [j for j, _ in ey], [d for _, d in ey])


def pair(x, y):
    """Exact value of the invariant form, as a Fraction."""
    return Fraction(pair_doubled(x, y), 2)


def coroot(k, x):
    """``<h_k, x>``, which equals ``(alpha_k, x)`` in simply-laced type A."""
    d = pair_doubled(alpha_w(k), x)
    if d % 2:
        raise NonIntegral(f"<h_{k}, {x!r}> = {d}/2")
    return d // 2


def reflect(j, x):
    """Apply the simple reflection ``s_j``."""
    eps = {}
    for a, c in x.eps.items():
        b = j + 1 if a == j else j if a == j + 1 else a
        eps[b] = eps.get(b, 0) + c
    lam = dict(x.lam)
    c = lam.pop(j, 0)
    if c:
        lam[j + 1] = lam.get(j + 1, 0) + c
        eps[j] = eps.get(j, 0) - c
    return Weight(lam, eps)


def apply_word(word, x):
    """Apply ``s_{i_1} ... s_{i_r}`` to x, rightmost letter first."""
    for j in reversed(list(word)):
        x = reflect(j, x)
    return x
