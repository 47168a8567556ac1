"""Quantum seeds: compatible pairs, quantum torus arithmetic and mutation.

Powers of q are kept in half units and stored doubled, so the integer ``e``
in a coefficient dict stands for ``q^{e/2}``.  Cluster variables are always
expanded in the initial quantum torus, whose commutation matrix ``L0`` is
fixed when the seed is created.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

import numpy as np

from artifact.errors import NonIntegral, NonLaurent, WindowTooSmall
from artifact.kernels import mutate_exchange, mutate_lambda
from artifact.lattice import ZERO, apply_word, lambda_w, pair_doubled
from artifact.multiseg import EMPTY, Multisegment, det_label, merge_commuting, w_label_or_empty, wt_of
from artifact.quiver import closed_form_targets, grid_window, initial_quiver, truncate, window
from artifact.word import coord, coord_inv, jp, prefix


# --- Laurent polynomials in q^{1/2} -------------------------------------------

def l_clean(x):
    return {e: c for e, c in x.items() if c}


def l_add(x, y, sign=1):
    out = dict(x)
    for e, c in y.items():
        out[e] = out.get(e, 0) + sign * c
    return l_clean(out)


def l_mul(x, y, shift=0):
    out = {}
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            e = e1 + e2 + shift
            out[e] = out.get(e, 0) + c1 * c2
    return l_clean(out)


def l_div(x, y):
    """Exact quotient x / y of Laurent polynomials with integer coefficients."""
    if not y:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = dict(x)
    out = {}
    ytop = max(y)
    ylow = min(y)
    lead = y[ytop]
    while rem:
        top = max(rem)
        if top - ytop < (min(x) - ylow if x else 0):
            raise NonLaurent("coefficient division is not exact")
        c, r = divmod(rem[top], lead)
        if r:
            raise NonLaurent("coefficient division is not exact")
        e = top - ytop
        out[e] = c
        for ey, cy in y.items():
            rem[e + ey] = rem.get(e + ey, 0) - c * cy
        rem = l_clean(rem)
    return out


def l_format(x):
    if not x:
        return "0"
    parts = []
    for e in sorted(x, reverse=True):
        c = x[e]
        q = "" if e == 0 else f"q^{e // 2}" if e % 2 == 0 else f"q^({e}/2)"
        if not q:
            parts.append(f"{c}")
        else:
            parts.append(q if c == 1 else f"-{q}" if c == -1 else f"{c}*{q}")
    return " + ".join(parts).replace("+ -", "- ")


# --- quantum torus ------------------------------------------------------------

class TorusElement:
    """Finite sum of normalized monomials ``X^a`` with Laurent coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {a: l_clean(c) for a, c in (terms or {}).items() if l_clean(c)}

    @classmethod
    def monomial(cls, a, coeff=None):
        return cls({tuple(a): dict(coeff or {0: 1})})

    @classmethod
    def unit(cls, n):
        return cls.monomial((0,) * n)

    def __add__(self, other):
        out = {a: dict(c) for a, c in self.terms.items()}
        for a, c in other.terms.items():
            out[a] = l_add(out.get(a, {}), c)
        return TorusElement(out)

    def __sub__(self, other):
        out = {a: dict(c) for a, c in self.terms.items()}
        for a, c in other.terms.items():
            out[a] = l_add(out.get(a, {}), c, -1)
        return TorusElement(out)

    def shift(self, e):
        """Multiply by ``q^{e/2}``."""
        return TorusElement({a: {k + e: v for k, v in c.items()} for a, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TorusElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_positive(self):
        """All coefficients lie in Z_{>=0}[q^{1/2}, q^{-1/2}]."""
        return all(v > 0 for c in self.terms.values() for v in c.values())

    def support(self):
        return sorted(self.terms)

    def to_json(self):
        return {",".join(map(str, a)): {str(e): v for e, v in sorted(c.items())}
                for a, c in sorted(self.terms.items())}

    def __repr__(self):
        return " + ".join(f"({l_format(c)})X^{a}" for a, c in sorted(self.terms.items())) or "0"


def torus_mul(x, y, L):
    """``X^a X^b = q^{(1/2) a L b} X^{a+b}``, extended bilinearly."""
    L = np.asarray(L, dtype=np.int64)
    out = {}
    ys = list(y.terms.items())
    for a, ca in x.terms.items():
        aL = (np.asarray(a, dtype=np.int64) @ L).tolist()
        for b, cb in ys:
            shift = sum(u * v for u, v in zip(aL, b))
            s = tuple(u + v for u, v in zip(a, b))
            out[s] = l_add(out.get(s, {}), l_mul(ca, cb, shift))
    return TorusElement(out)


def _order_key(a):
    return (sum(a), a)


def exact_divide(num, den, L):
    """Right quotient Q with ``torus_mul(Q, den, L) == num``.

    Greedy leading-term elimination under the degree-lex order.  Quotient
    exponents are confined to the coordinate box forced by the extremes of
    ``num`` and ``den``; leaving it, or an inexact coefficient division,
    raises NonLaurent.
    """
    if not den:
        raise ZeroDivisionError("division by zero torus element")
    if not num:
        return TorusElement()
    L = np.asarray(L, dtype=np.int64)
    n = len(next(iter(den.terms)))
    lo = [min(a[i] for a in num.terms) - min(b[i] for b in den.terms) for i in range(n)]
    hi = [max(a[i] for a in num.terms) - max(b[i] for b in den.terms) for i in range(n)]
    d = max(den.terms, key=_order_key)
    cd = den.terms[d]
    rem = TorusElement(num.terms)
    quot = {}
    while rem:
        r = max(rem.terms, key=_order_key)
        e = tuple(u - v for u, v in zip(r, d))
        if any(x < l or x > h for x, l, h in zip(e, lo, hi)):
            raise NonLaurent(f"quotient exponent {e} leaves the admissible box")
        shift = int(np.asarray(e, dtype=np.int64) @ L @ np.asarray(d, dtype=np.int64))
        c = l_div(rem.terms[r], {k + shift: v for k, v in cd.items()})
        quot[e] = c
        rem = rem - torus_mul(TorusElement.monomial(e, c), den, L)
    return TorusElement(quot)


def torus_power(x, k, L, n):
    out = TorusElement.unit(n)
    for _ in range(k):
        out = torus_mul(out, x, L)
    return out


# --- compatible pairs -----------------------------------------------------------

def compatible(L, B, d, columns):
    """Per-column verdict of ``sum_k L[i,k] B[k,j] == d * delta_ij``."""
    L = np.asarray(L, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    prod = L @ B[:, columns]
    target = np.zeros_like(prod)
    for c, j in enumerate(columns):
        target[j, c] = d
    return {j: bool((prod[:, c] == target[:, c]).all()) for c, j in enumerate(columns)}


def mutate_pair(L, B, k):
    """Mutation of a compatible pair at index k: returns ``(L', B')``."""
    return mutate_lambda(L, B, k), mutate_exchange(B, k)


@lru_cache(maxsize=None)
def _lambda_vec(k):
    return apply_word(prefix(k), lambda_w(jp(k)))


def lambda_init(s, t):
    """Entry of the initial commutation matrix between positions s and t."""
    if s > t:
        return -lambda_init(t, s)
    ls, lt = _lambda_vec(s), _lambda_vec(t)
    d = pair_doubled(lt + lambda_w(jp(t)), ls - lambda_w(jp(s)))
    if d % 2:
        raise NonIntegral(f"lambda({s},{t}) = {-d}/2")
    return -d // 2


def lambda_matrix(vertices):
    n = len(vertices)
    L = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a + 1, n):
            L[a, b] = lambda_init(vertices[a], vertices[b])
            L[b, a] = -L[a, b]
    return L


# --- label tracking -------------------------------------------------------------

def parse_w_label(ms):
    """Recover ``(ell, m, j)`` from a KR-type label, or None."""
    if not isinstance(ms, Multisegment) or not len(ms):
        return None
    segs = ms.segs
    ell = len(segs[0])
    m = len(segs)
    j = segs[0].b - m + 1
    if w_label_or_empty(ell, m, j) != ms:
        return None
    return ell, m, j


def t_system_labels(ell, m, k, N=None):
    """Labels ``(sub, quot)`` in ``W_{m,k} W_{m,k+1} = sub + quot``.

    With N given, factors in column N are trivial.
    """
    def w(e, mm, j):
        return EMPTY if e == N else w_label_or_empty(e, mm, j)
    sub = merge_commuting(w(ell, m - 1, k + 1), w(ell, m + 1, k))
    quot = merge_commuting(w(ell - 1, m, k), w(ell + 1, m, k + 1))
    return sub, quot


def _trivial_at(label, N):
    parsed = parse_w_label(label)
    return EMPTY if parsed is not None and parsed[0] == N else label


def _power_merge(labels, mult):
    out = Multisegment()
    for lab, c in zip(labels, mult):
        if c > 0:
            if lab is None:
                return None
            out = merge_commuting(out, *([lab] * c))
    return out


def t_system_rule(labels, col, k, N=None):
    """New label at index k, when the exchange matches a T-system; else None.

    ``col`` is column k of B.  The two neighbour products must be the two
    outer terms of ``W_{m,c} W_{m,c+1} = sub + quot`` with the current label
    one of the middle factors; the new label is the other middle factor.
    With N given, labels in column N count as trivial.
    """
    if N is not None:
        labels = [_trivial_at(lab, N) for lab in labels]
    parsed = parse_w_label(labels[k])
    if parsed is None:
        return None
    ell, m, j = parsed
    pos = _power_merge(labels, [max(0, int(b)) for b in col])
    neg = _power_merge(labels, [max(0, -int(b)) for b in col])
    if pos is None or neg is None:
        return None
    for c, other in ((j - 1, j - 1), (j, j + 1)):
        sub, quot = t_system_labels(ell, m, c, N)
        if {pos, neg} == {sub, quot} and pos != neg:
            return w_label_or_empty(ell, m, other)
    return None


def truncated_rule(N):
    """Label rule for truncated seeds, where column N is trivial."""
    def rule(labels, col, k):
        return t_system_rule(labels, col, k, N)
    return rule


# --- seeds ------------------------------------------------------------------------

@dataclass(frozen=True)
class QuantumSeed:
    vertices: tuple
    frozen: frozenset
    B: np.ndarray
    L: np.ndarray
    L0: np.ndarray
    vars: tuple = None
    labels: tuple = None
    weights: tuple = None
    ell_max: int = None

    def index(self, v):
        return self.vertices.index(v)

    def exchangeable(self):
        return [v for v in self.vertices if v not in self.frozen]

    def var(self, v):
        return self.vars[self.index(v)]

    def label(self, v):
        return self.labels[self.index(v)]

    def equal_to(self, other):
        return (self.vertices == other.vertices and self.frozen == other.frozen
                and (self.B == other.B).all() and (self.L == other.L).all()
                and self.vars == other.vars and self.labels == other.labels
                and self.weights == other.weights)


def make_seed(vertices, B, L, frozen=(), quantum=True, labels=None, weights=None, ell_max=None):
    vertices = tuple(vertices)
    n = len(vertices)
    B = np.array(B, dtype=np.int64)
    L = np.array(L, dtype=np.int64)
    vars_ = None
    if quantum:
        vars_ = tuple(TorusElement.monomial(tuple(int(i == a) for i in range(n))) for a in range(n))
    return QuantumSeed(vertices, frozenset(frozen), B, L, L.copy(), vars_,
                       None if labels is None else tuple(labels),
                       None if weights is None else tuple(weights), ell_max)


def _grid_seed(quiver, frozen, quantum, ell_max):
    verts = quiver.vertices
    B = np.array(quiver.B)
    idx = [verts.index(v) for v in frozen]
    B[np.ix_(idx, idx)] = 0
    labels = [det_label(p) for p in verts]
    weights = [wt_of(lab) for lab in labels]
    return make_seed(verts, B, lambda_matrix(verts), frozen, quantum, labels, weights, ell_max)


def initial_seed(cap, quantum=False):
    """Initial seed on ``ell + m <= cap`` with the boundary diagonal frozen."""
    q = initial_quiver(cap)
    frozen = [p for p in window(cap) if sum(coord(p)) == cap]
    return _grid_seed(q, frozen, quantum, None)


def truncated_seed(N, m_cap, quantum=False):
    """Seed on ``ell <= N, m <= m_cap``; column N and row m_cap are frozen."""
    q = truncate(initial_quiver(vertices=grid_window(N, m_cap)), N)
    frozen = [p for p in q.vertices if coord(p)[0] == N or coord(p)[1] == m_cap]
    return _grid_seed(q, frozen, quantum, N)


def _neighbour_coords(ell, m):
    out = [c for c in closed_form_targets(ell, m)]
    for c in ((ell + 1, m), (ell - 1, m), (ell, m + 1), (ell, m - 1)):
        if c[0] >= 1 and c[1] >= 1 and (ell, m) in closed_form_targets(*c):
            out.append(c)
    return out


def seed_compatible(seed, d=2):
    """Check compatibility on every exchangeable column of a grid seed."""
    cols = []
    vset = set(seed.vertices)
    for v in seed.exchangeable():
        for c in _neighbour_coords(*coord(v)):
            if seed.ell_max is not None and c[0] > seed.ell_max:
                continue
            if coord_inv(*c) not in vset:
                raise WindowTooSmall(f"column {coord(v)} reaches {c} outside the window")
        cols.append(seed.index(v))
    return all(compatible(seed.L, seed.B, d, cols).values())


def exchange_binomial(seed, k):
    """The two terms whose sum equals ``X'_k * X_k`` (right factor ``X_k``)."""
    col = seed.B[:, k]
    n = len(seed.vertices)
    terms = []
    for sign in (1, -1):
        b = [max(0, sign * int(x)) if i != k else 0 for i, x in enumerate(col)]
        mono = TorusElement.unit(n)
        for i in range(n):
            if b[i]:
                mono = torus_mul(mono, torus_power(seed.vars[i], b[i], seed.L0, n), seed.L0)
        norm = sum(b[s] * b[t] * int(seed.L[s, t]) for s in range(n) for t in range(s) if b[s] and b[t])
        shift = sum(b[i] * int(seed.L[i, k]) for i in range(n) if b[i])
        terms.append(mono.shift(norm + shift))
    return terms


def mutate_seed(seed, v, label_rule=t_system_rule):
    """Mutate at vertex v; returns a new seed.

    Labels are updated by ``label_rule(labels, column, k)``; pass None to
    clear them.
    """
    if v in seed.frozen:
        raise ValueError(f"vertex {v} is frozen")
    k = seed.index(v)
    col = seed.B[:, k]
    new_vars = seed.vars
    if seed.vars is not None:
        plus, minus = exchange_binomial(seed, k)
        xk = exact_divide(plus + minus, seed.vars[k], seed.L0)
        new_vars = seed.vars[:k] + (xk,) + seed.vars[k + 1:]
    L, B = mutate_pair(seed.L, seed.B, k)
    fr = [seed.index(u) for u in seed.frozen]
    B[np.ix_(fr, fr)] = 0
    new_weights = seed.weights
    if seed.weights is not None:
        d = -seed.weights[k]
        for i, b in enumerate(col):
            if b > 0:
                d = d + int(b) * seed.weights[i]
        new_weights = seed.weights[:k] + (d,) + seed.weights[k + 1:]
    new_labels = None
    if seed.labels is not None and label_rule is not None:
        lab = label_rule(seed.labels, col, k)
        new_labels = seed.labels[:k] + (lab,) + seed.labels[k + 1:]
    return replace(seed, B=B, L=L, vars=new_vars, labels=new_labels, weights=new_weights)


def mutate_along(seed, schedule, label_rule=t_system_rule):
    """Mutate along a sequence of coordinates."""
    for c in schedule:
        seed = mutate_seed(seed, coord_inv(*c), label_rule)
    return seed


def mutation_degrees(seed, v):
    """The shifts ``(m_k, m'_k)`` as Fractions."""
    k = seed.index(v)
    col = seed.B[:, k]
    d = seed.weights
    zeta = -d[k]
    for i, b in enumerate(col):
        if b > 0:
            zeta = zeta + int(b) * d[i]
    base = Fraction(pair_doubled(d[k], zeta), 4)
    neg = sum(int(seed.L[k, i]) * int(b) for i, b in enumerate(col) if b < 0)
    pos = sum(int(seed.L[k, i]) * int(b) for i, b in enumerate(col) if b > 0)
    return base + Fraction(neg, 2), base + Fraction(pos, 2)


def commutation_ok(seed, v):
    """``X'_v X_i = q^{L_{vi}} X_i X'_v`` for every i, checked in the initial torus."""
    k = seed.index(v)
    xk = seed.vars[k]
    for i, xi in enumerate(seed.vars):
        lhs = torus_mul(xk, xi, seed.L0)
        rhs = torus_mul(xi, xk, seed.L0).shift(2 * int(seed.L[k, i]))
        if lhs != rhs:
            return False
    return True


def principal_seed(B, d=2, quantum=True):
    """Seed with principal coefficients for a skew-symmetric n x n matrix B.

    Frozen vertices n..2n-1; ``L = d [[0, I], [-I, B]]`` is compatible.
    """
    B = np.asarray(B, dtype=np.int64)
    n = B.shape[0]
    eye = np.eye(n, dtype=np.int64)
    zero = np.zeros((n, n), dtype=np.int64)
    full = np.block([[B, -eye], [eye, zero]])
    L = d * np.block([[zero, eye], [-eye, B]])
    return make_seed(range(1, 2 * n + 1), full, L, frozen=range(n + 1, 2 * n + 1), quantum=quantum)


__all__ = [
    "TorusElement", "torus_mul", "exact_divide", "compatible", "mutate_pair",
    "lambda_init", "lambda_matrix", "QuantumSeed", "make_seed", "initial_seed",
    "truncated_seed", "seed_compatible", "mutate_seed", "mutate_along",
    "mutation_degrees", "commutation_ok", "principal_seed", "exchange_binomial",
    "t_system_rule", "truncated_rule", "t_system_labels", "parse_w_label", "ZERO",
]
