"""Affine-type dictionaries: denominators, the families V_a, and label images.

Spectral parameters are ``zeta^z q^{e/2}`` with zeta a fixed primitive 12th
root of unity, so -1 = zeta^6, sqrt(-1) = zeta^3 and omega = zeta^4.
Rank conventions: A1 and A2 with rank n mean the affine algebra A_{n-1}
(untwisted or twisted) with N = n; B1 rank n gives N = 2n; C1 rank n gives
N = n + 1; D1, D2, D3 rank n give N = n.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from artifact.errors import BadRank, NotStated, OutOfStatedDomain, UnknownPair
from artifact.multiseg import Segment


@dataclass(frozen=True, order=True)
class SpectralParam:
    zeta: int = 0
    e: int = 0

    def __post_init__(self):
        object.__setattr__(self, "zeta", self.zeta % 12)

    def __mul__(self, other):
        return SpectralParam(self.zeta + other.zeta, self.e + other.e)

    def __truediv__(self, other):
        return SpectralParam(self.zeta - other.zeta, self.e - other.e)

    def __pow__(self, k):
        return SpectralParam(self.zeta * k, self.e * k)

    def __neg__(self):
        return SpectralParam(self.zeta + 6, self.e)

    def __repr__(self):
        z = f"zeta^{self.zeta}" if self.zeta else ""
        if self.e == 0:
            qq = ""
        elif self.e % 2 == 0:
            qq = f"q^{self.e // 2}"
        else:
            qq = f"q^({self.e}/2)"
        return "*".join(x for x in (z, qq) if x) or "1"


ONE = SpectralParam(0, 0)
Q = SpectralParam(0, 2)
MINUS_Q = SpectralParam(6, 2)
QS = SpectralParam(0, 1)
MINUS_QS = SpectralParam(6, 1)
MINUS_ONE = SpectralParam(6, 0)
SQRT_MINUS_ONE = SpectralParam(3, 0)
OMEGA = SpectralParam(4, 0)


def qpow(k):
    return Q ** k


def mq(k):
    """``(-q)^k``."""
    return MINUS_Q ** k


def _sqrt_roots(c):
    """The two square roots of a parameter whose q-exponent is even."""
    if c.e % 2 or c.zeta % 2:
        raise ValueError(f"no square root of {c!r} in the parameter group")
    r = SpectralParam(c.zeta // 2, c.e // 2)
    return [r, -r]


# --- module labels ----------------------------------------------------------------

@dataclass(frozen=True)
class ModuleLabel:
    """Unit, Zero, Fund(node, x), KR(node, m, x) or HeadPair(two Fund labels)."""

    kind: str
    node: int = None
    m: int = None
    param: SpectralParam = None
    parts: tuple = None

    def to_json(self):
        out = {"kind": self.kind}
        if self.node is not None:
            out["node"] = self.node
        if self.m is not None:
            out["m"] = self.m
        if self.param is not None:
            out["zeta"] = self.param.zeta
            out["e"] = self.param.e
        if self.parts is not None:
            out["parts"] = [p.to_json() for p in self.parts]
        return out

    def __repr__(self):
        if self.kind in ("Unit", "Zero"):
            return self.kind
        if self.kind == "Fund":
            return f"V({self.node})_{self.param!r}"
        if self.kind == "KR":
            return f"W({self.node})_{self.m},{self.param!r}"
        return "hd(" + " x ".join(map(repr, self.parts)) + ")"


UNIT = ModuleLabel("Unit")
ZERO = ModuleLabel("Zero")


def fund(node, x):
    return ModuleLabel("Fund", node=node, param=x)


def kr(node, m, x):
    """KR label; trivial for m = 0 and fundamental for m = 1."""
    if m == 0:
        return UNIT
    if m == 1:
        return fund(node, x)
    return ModuleLabel("KR", node=node, m=m, param=x)


def head_pair(x, y):
    return ModuleLabel("HeadPair", parts=(x, y))


def _scale(label, c):
    if label.param is not None:
        return ModuleLabel(label.kind, label.node, label.m, label.param * c)
    if label.parts is not None:
        return ModuleLabel(label.kind, parts=tuple(_scale(p, c) for p in label.parts))
    return label


# --- denominators --------------------------------------------------------------------

FAMILIES = ("A1", "A2", "B1", "C1", "D1", "D2", "D3")


def denom(tag, n, k, l):
    """Root multiset (a Counter) of the denominator ``d_{k,l}(z)``."""
    if k > l:
        k, l = l, k
    roots = Counter()
    if tag == "A1":
        if not (1 <= k <= n - 1 and 1 <= l <= n - 1):
            raise UnknownPair((tag, n, k, l))
        for s in range(1, min(k, l, n - k, n - l) + 1):
            roots[mq(abs(k - l) + 2 * s)] += 1
    elif tag == "A2":
        if not (1 <= k <= n // 2 and 1 <= l <= n // 2):
            raise UnknownPair((tag, n, k, l))
        for s in range(1, min(k, l) + 1):
            roots[mq(abs(k - l) + 2 * s)] += 1
            roots[-(qpow(n) * mq(-k - l + 2 * s))] += 1
    elif tag == "B1":
        if not (1 <= k <= n and 1 <= l <= n):
            raise UnknownPair((tag, n, k, l))
        if l <= n - 1:
            for s in range(1, min(k, l) + 1):
                roots[mq(abs(k - l) + 2 * s)] += 1
                roots[-mq(2 * n - k - l - 1 + 2 * s)] += 1
        elif k <= n - 1:
            for s in range(1, k + 1):
                roots[MINUS_ONE ** (n + k) * QS ** (2 * n - 2 * k - 1 + 4 * s)] += 1
        else:
            for s in range(1, n + 1):
                roots[QS ** (4 * s - 2)] += 1
    elif tag == "C1":
        if not (1 <= k <= n and 1 <= l <= n):
            raise UnknownPair((tag, n, k, l))
        for i in range(1, min(k, l, n - k, n - l) + 1):
            roots[MINUS_QS ** (abs(k - l) + 2 * i)] += 1
        for i in range(1, min(k, l) + 1):
            roots[MINUS_QS ** (2 * n + 2 - k - l + 2 * i)] += 1
    elif tag == "D1":
        if (k, l) == (1, 1):
            roots.update([qpow(2), mq(2 * n - 2)])
        elif (k, l) == (1, n):
            roots[mq(n)] += 1
        elif (k, l) == (n, n):
            for s in range(1, n // 2 + 1):
                roots[mq(4 * s - 2)] += 1
        else:
            raise UnknownPair((tag, n, k, l))
    elif tag == "D2":
        q2 = SpectralParam(6, 4)  # -q^2
        if (k, l) == (1, 1):
            roots.update(_sqrt_roots(qpow(4)))
            roots.update(_sqrt_roots(q2 ** (2 * n - 2)))
        elif (k, l) == (1, n - 1):
            roots.update(_sqrt_roots(-(q2 ** n)))
        elif (k, l) == (n - 1, n - 1):
            for s in range(1, n):
                roots[-(q2 ** s)] += 1
        else:
            raise UnknownPair((tag, n, k, l))
    elif tag == "D3":
        if (k, l) == (1, 1):
            roots.update([qpow(2), qpow(6), OMEGA * qpow(4), OMEGA ** 2 * qpow(4)])
        else:
            raise UnknownPair((tag, n, k, l))
    else:
        raise ValueError(f"unknown family {tag!r}")
    return roots


# --- families ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineTypeSpec:
    tag: str
    n: int
    N: int
    i_map: Callable = field(repr=False)
    x_map: Callable = field(repr=False)
    p_star_sq: SpectralParam = None

    def i(self, a):
        return self.i_map(a)

    def x(self, a):
        return self.x_map(a)


def _periodic(N, p_star_sq, base):
    def x(a):
        k, j = divmod(a, N)
        return base(j) * p_star_sq ** k
    return x


def family_spec(tag, n):
    if tag == "A1" or tag == "A2":
        if n < (2 if tag == "A1" else 3):
            raise BadRank(f"{tag} needs rank >= {2 if tag == 'A1' else 3}")
        N = n
        return AffineTypeSpec(tag, n, N, lambda a: 1, lambda a: qpow(2 * a), qpow(2 * N))
    if tag == "B1":
        if n < 2:
            raise BadRank("B1 needs rank >= 2")
        N = 2 * n
        q_kappa = MINUS_ONE ** (n + 1) * QS ** (2 * n + 1)

        def base(j):
            if j == 0:
                return ONE
            if j <= N - 2:
                return q_kappa * qpow(2 * (j - 1))
            return qpow(3 * N - 5)
        pss = qpow(2 * N - 2)
        return AffineTypeSpec(tag, n, N, lambda a: n if a % N in (N - 1, 0) else 1,
                              _periodic(N, pss, base), pss)
    if tag == "C1":
        if n < 3:
            raise BadRank("C1 needs rank >= 3")
        N = n + 1
        q_kappa = MINUS_QS ** (n + 3)
        pss = QS ** (4 * n + 4)

        def base(j):
            return ONE if j == 0 else q_kappa * QS ** (2 * (j - 1))
        return AffineTypeSpec(tag, n, N, lambda a: n if a % N == 0 else 1,
                              _periodic(N, pss, base), pss)
    if tag in ("D1", "D2", "D3"):
        t = int(tag[1])
        if (t < 3 and n < 4) or (t == 3 and n != 4):
            raise BadRank(f"{tag} rank {n} is not supported")
        N = n
        q_kappa = {1: mq(n), 2: SQRT_MINUS_ONE ** (n - 1) * qpow(n), 3: OMEGA * qpow(4)}[t]
        pss = qpow(12) if t == 3 else qpow(4 * n - 4)

        def base(j):
            if j == 0:
                return ONE
            if j == 1:
                return qpow(2)
            return q_kappa * qpow(2 * (j - 1))
        special = n + 1 - t if t < 3 else 1
        return AffineTypeSpec(tag, n, N, lambda a: special if a % N in (0, 1) else 1,
                              _periodic(N, pss, base), pss)
    raise ValueError(f"unknown family {tag!r}")


def dual_node(spec, i):
    """The involution i -> i* on nodes."""
    if spec.tag == "A1":
        return spec.N - i
    if spec.tag == "D1" and spec.n % 2 == 1 and i in (spec.n - 1, spec.n):
        return 2 * spec.n - 1 - i
    return i


def d_arrow(a, b, spec):
    """Order of zero of ``d_{i_a, i_b}`` at ``X(b) / X(a)``."""
    return denom(spec.tag, spec.n, spec.i(a), spec.i(b))[spec.x(b) / spec.x(a)]


def gamma_quiver(spec, window):
    """Arrows ``(a, b, multiplicity)`` among ``|a|, |b| <= window``."""
    out = []
    rng = range(-window, window + 1)
    for a in rng:
        for b in rng:
            if a != b:
                d = d_arrow(a, b, spec)
                if d:
                    out.append((a, b, d))
    return out


@dataclass
class AffineVerdict:
    ok: bool
    counterexample: object = None

    def __bool__(self):
        return self.ok


def check_a_infinity(spec, window):
    """``d_ab + d_ba == 1`` exactly when ``|a - b| == 1``, and 0 otherwise."""
    rng = range(-window, window + 1)
    for a in rng:
        for b in rng:
            if a < b:
                total = d_arrow(a, b, spec) + d_arrow(b, a, spec)
                want = 1 if b - a == 1 else 0
                if total != want:
                    return AffineVerdict(False, (a, b, total))
    return AffineVerdict(True)


def check_dual_period(spec, window):
    for a in range(-window, window + 1):
        if spec.i(a + spec.N) != spec.i(a):
            return AffineVerdict(False, ("node", a))
        if spec.x(a + spec.N) != spec.x(a) * spec.p_star_sq:
            return AffineVerdict(False, ("param", a))
    return AffineVerdict(True)


# --- segment images --------------------------------------------------------------------

def _image_a(spec, a, b):
    ell = b - a + 1
    x = mq(a + b)
    if spec.tag == "A2" and ell > spec.N // 2:
        return fund(spec.N - ell, MINUS_ONE ** spec.N * x)
    return fund(ell, x)


def _image_b(spec, a, b):
    n, N = spec.n, spec.N
    q_kappa = MINUS_ONE ** (n + 1) * QS ** (2 * n + 1)
    ell = b - a + 1
    if a == 0 and b <= N - 2:
        return fund(n, qpow(2 * b))
    if 1 <= a <= N - 1 and b == N - 1:
        return fund(n, qpow(2 * a + N - 3))
    if 1 <= a <= b <= N - 2:
        if ell < n:
            return fund(ell, MINUS_ONE ** (b - a) * q_kappa * qpow(a + b - 2))
        return head_pair(fund(n, qpow(2 * b)), fund(n, qpow(2 * a + N - 3)))
    if 1 <= a <= N - 1 < b:
        if ell <= n:
            return head_pair(fund(n, qpow(2 * a + N - 3)), fund(n, qpow(2 * b - 2)))
        return fund(N - b + a - 1, MINUS_ONE ** (b - a) * q_kappa * qpow(a + b - 3))
    raise OutOfStatedDomain((spec.tag, a, b))


def _image_c(spec, a, b):
    n, N = spec.n, spec.N
    q_kappa = MINUS_QS ** (n + 3)
    if a == 0 and b <= N - 1:
        return fund(n - b, MINUS_QS ** b)
    if 1 <= a <= b <= N - 1:
        return fund(b - a + 1, q_kappa * MINUS_QS ** (a + b - 2))
    raise OutOfStatedDomain((spec.tag, a, b))


def _image_d(spec, a, b):
    n, N = spec.n, spec.N
    t = int(spec.tag[1])
    q_kappa = {1: mq(n), 2: SQRT_MINUS_ONE ** (n - 1) * qpow(n), 3: OMEGA * qpow(4)}[t]
    if a == 0 and b <= N - 2:
        delta = 1 if (b != 0 and t == 1) else 0
        return fund(N + 1 - t - b - delta, qpow(b))
    if a == 1 and b <= N - 1:
        eps = (b - 1) % 2
        if t == 1:
            return fund(n - eps, qpow(2 * (b - 1)))
        if t == 2:
            return fund(n - 1, MINUS_ONE ** eps * qpow(2 * (b - 1)))
        return fund(1, OMEGA ** eps * qpow(2 * (b - 1)))
    if 2 <= a <= b <= N - 1:
        return fund(b - a + 1, q_kappa * mq(a + b - 2))
    raise OutOfStatedDomain((spec.tag, a, b))


def segment_image(spec, seg):
    """Image of the simple ``L[a, b]`` under the family's dictionary."""
    if isinstance(seg, tuple):
        seg = Segment(*seg)
    N = spec.N
    ell = len(seg)
    if ell > N:
        return ZERO
    if ell == N:
        return UNIT
    if spec.tag in ("A1", "A2"):
        return _image_a(spec, seg.a, seg.b)
    k, a = divmod(seg.a, N)
    b = seg.b - k * N
    handler = {"B1": _image_b, "C1": _image_c}.get(spec.tag, _image_d)
    return _scale(handler(spec, a, b), spec.p_star_sq ** k)


def canonical(label, spec):
    """Normal form honoring isomorphisms ``V(i)_x = V(i)_y`` for ``x^t = y^t``."""
    if label.param is None:
        if label.parts is not None:
            return ModuleLabel(label.kind, parts=tuple(canonical(p, spec) for p in label.parts))
        return label
    x = label.param
    tag, n = spec.tag, spec.n
    if tag == "A2" and spec.N % 2 == 0 and label.node == spec.N // 2:
        x = SpectralParam(x.zeta % 6, x.e)
    elif tag == "D2" and label.node <= n - 2:
        x = SpectralParam(x.zeta % 6, x.e)
    elif tag == "D3" and label.node == 2:
        x = SpectralParam(x.zeta % 4, x.e)
    return ModuleLabel(label.kind, label.node, label.m, x)


def check_unit_heads(spec, window):
    """Split each length-N segment at a period boundary and test the duality.

    With ``[a, a+N-1] = [a, kN-1] + [kN, a+N-1]``, the two images must be
    ``V(i)_x`` and ``V(i*)_y`` with ``(y/x)^2 = p*^2`` for the head to be trivial.
    """
    N = spec.N
    for a in range(-window, window + 1):
        if a % N == 0:
            continue
        cut = (a // N + 1) * N
        left = segment_image(spec, Segment(a, cut - 1))
        right = segment_image(spec, Segment(cut, a + N - 1))
        if left.kind != "Fund" or right.kind != "Fund":
            return AffineVerdict(False, (a, left, right))
        if right.node != dual_node(spec, left.node) or (right.param / left.param) ** 2 != spec.p_star_sq:
            return AffineVerdict(False, (a, left, right))
    return AffineVerdict(True)


# --- KR images and T-systems ------------------------------------------------------------

def kr_image(t, N, ell, m, j):
    """Image of ``W^{(ell)}_{m,j}`` under the type A^{(t)}_{N-1} dictionary."""
    if t not in (1, 2):
        raise NotStated("KR images are stated for type A only")
    if ell in (0, N) or m == 0:
        return UNIT
    if not 1 <= ell < N:
        raise ValueError(f"ell must lie in [0, {N}], got {ell}")
    x = mq(2 * j - ell + 1)
    if t == 2 and ell > N // 2:
        return kr(N - ell, m, MINUS_ONE ** N * x)
    return kr(ell, m, x)


def _pi2(N, ell, m, r):
    if ell in (0, N) or m == 0:
        return UNIT
    if ell <= N // 2:
        return kr(ell, m, r)
    return kr(N - ell, m, MINUS_ONE ** (N - 1) * r)


def t_system_triple(t, N, ell, m, k):
    """``(sub, middle, quotient)`` label pairs of the (twisted) T-system."""
    if not 1 <= ell <= N - 1:
        raise ValueError(f"need 1 <= ell <= {N - 1}")
    if t == 1:
        def w(e, mm, r):
            return UNIT if e in (0, N) or mm == 0 else kr(e, mm, r)
        lo, hi = k + 1, k + 1
    elif t == 2:
        def w(e, mm, r):
            return _pi2(N, e, mm, r)
        lo, hi = k + 1, k - 1
    else:
        raise NotStated("T-systems are stated for t = 1, 2")
    sub = (w(ell, m - 1, mq(k + 2)), w(ell, m + 1, mq(k)))
    mid = (w(ell, m, mq(k)), w(ell, m, mq(k + 2)))
    quot = (w(ell - 1, m, mq(lo)), w(ell + 1, m, mq(hi)))
    return sub, mid, quot
