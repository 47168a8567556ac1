"""Segments, multisegments and the labels of the distinguished simples."""

from dataclasses import dataclass

from artifact.lattice import ZERO, eps_w
from artifact.word import coord, jp


@dataclass(frozen=True, order=True)
class Segment:
    """The interval ``[a, b]`` with ``a <= b``; compared by ``(a, b)``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a > self.b:
            raise ValueError(f"segment needs a <= b, got [{self.a}, {self.b}]")

    def __len__(self):
        return self.b - self.a + 1

    def weight(self):
        return eps_w(self.b + 1) - eps_w(self.a)

    def __repr__(self):
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True)
class RevSegment:
    """Reversed segment with ``a > b``.

    Only its weight is used; no multisegment expansion is attached.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a <= self.b:
            raise ValueError(f"reversed segment needs a > b, got ({self.a}, {self.b})")

    def weight(self):
        # letters a, a-1, ..., b contribute -(alpha_b + ... + alpha_a)
        return eps_w(self.a + 1) - eps_w(self.b)

    def __repr__(self):
        return f"Rev[{self.a},{self.b}]"


class Multisegment:
    """Multisegment kept in descending canonical order."""

    __slots__ = ("segs",)

    def __init__(self, segs=()):
        segs = tuple(s if isinstance(s, Segment) else Segment(*s) for s in segs)
        object.__setattr__(self, "segs", tuple(sorted(segs, reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("Multisegment is immutable")

    def __iter__(self):
        return iter(self.segs)

    def __len__(self):
        return len(self.segs)

    def __eq__(self, other):
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.segs == other.segs

    def __hash__(self):
        return hash(self.segs)

    def __repr__(self):
        return "(" + ",".join(map(repr, self.segs)) + ")"

    def lengths(self):
        return [len(s) for s in self.segs]

    def to_json(self):
        return [[s.a, s.b] for s in self.segs]

    @classmethod
    def from_json(cls, data):
        return cls(Segment(a, b) for a, b in data)


EMPTY = Multisegment()


def w_label(ell, m, j):
    """Label of W^{(ell)}_{m,j}: the m segments ``[j-ell+k, j+k-1]``."""
    if ell < 1 or m < 1:
        raise ValueError(f"need ell, m >= 1, got ({ell}, {m})")
    return Multisegment(Segment(j - ell + k, j + k - 1) for k in range(1, m + 1))


def w_label_or_empty(ell, m, j):
    """Like ``w_label`` but with ell = 0 or m = 0 giving the empty label."""
    if ell == 0 or m == 0:
        return EMPTY
    return w_label(ell, m, j)


def det_label(p):
    ell, m = coord(p)
    return w_label(ell, m, jp(p))


def wt_of(x):
    """Weight of a segment, reversed segment or multisegment."""
    if isinstance(x, (Segment, RevSegment)):
        return x.weight()
    total = ZERO
    for s in x:
        total = total + s.weight()
    return total


def cusp_label(p):
    """Label of the cuspidal module between p and ``p_plus(p)``.

    When ``ell + m`` is odd and m = 1 the reversed segment has a single
    letter and is returned as an ordinary segment.
    """
    ell, m = coord(p)
    j = jp(p)
    if (ell + m) % 2 == 0:
        return Segment(j - ell + m + 1, j + m)
    a, b = j - ell + m - 1, j - ell
    if a == b:
        return Segment(a, a)
    return RevSegment(a, b)


def mutated_det_label(p):
    ell, m = coord(p)
    step = 1 if (ell + m) % 2 == 0 else -1
    return w_label(ell, m, jp(p) + step)


def shift_label(ell, m, j, r):
    return w_label(ell, m, j + r)


def merge_commuting(*labels):
    """Label of the head of a product of mutually commuting simples."""
    segs = []
    for x in labels:
        segs.extend(x.segs)
    return Multisegment(segs)
