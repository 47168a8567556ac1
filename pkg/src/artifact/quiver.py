"""Quivers on the grid of coordinates (ell, m), their mutation and truncation.

Vertices are positions p of the infinite word, each carrying ``coord(p)``.
A quiver is stored through its skew-symmetric exchange matrix over an
ordered vertex list, which is enough since quivers here never have loops
or 2-cycles.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from artifact.errors import WindowTooSmall
from artifact.kernels import mutate_exchange
from artifact.word import coord, coord_inv, jp, window_size


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    frozen: frozenset
    B: np.ndarray = field(compare=False, repr=False)

    def __post_init__(self):
        B = np.array(self.B, dtype=np.int64)
        n = len(self.vertices)
        if B.shape != (n, n):
            raise ValueError(f"B has shape {B.shape}, expected {(n, n)}")
        if (B != -B.T).any():
            raise ValueError("B must be skew-symmetric")
        B.setflags(write=False)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "frozen", frozenset(self.frozen))
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(self.vertices)})

    @classmethod
    def from_arrows(cls, vertices, arrows, frozen=()):
        vertices = tuple(sorted(vertices))
        pos = {v: i for i, v in enumerate(vertices)}
        B = np.zeros((len(vertices), len(vertices)), dtype=np.int64)
        for s, t in arrows:
            B[pos[s], pos[t]] += 1
            B[pos[t], pos[s]] -= 1
        return cls(vertices, frozenset(frozen), B)

    def index(self, v):
        return self._pos[v]

    def __contains__(self, v):
        return v in self._pos

    def arrows(self):
        """Arrow multiset as a dict ``(source, target) -> multiplicity``."""
        src, dst = np.nonzero(self.B > 0)
        return {(self.vertices[i], self.vertices[j]): int(self.B[i, j]) for i, j in zip(src, dst)}

    def exchangeable(self):
        return [v for v in self.vertices if v not in self.frozen]

    def op(self):
        return Quiver(self.vertices, self.frozen, -self.B)

    def restrict(self, keep, frozen=None):
        keep = tuple(v for v in self.vertices if v in set(keep))
        idx = [self._pos[v] for v in keep]
        fr = self.frozen & set(keep) if frozen is None else frozenset(frozen)
        return Quiver(keep, fr, self.B[np.ix_(idx, idx)])

    def mutate(self, v):
        if v in self.frozen:
            raise ValueError(f"vertex {v} is frozen")
        return Quiver(self.vertices, self.frozen, mutate_exchange(self.B, self._pos[v]))

    def degree(self, v):
        return int(np.abs(self.B[self._pos[v]]).sum())


def to_b(q):
    """Exchange matrix ``b_ij = #(i -> j) - #(j -> i)`` over ``q.vertices``."""
    return np.array(q.B)


def from_b(vertices, B, frozen=()):
    return Quiver(tuple(vertices), frozenset(frozen), B)


# --- vertex windows ---------------------------------------------------------

def window(cap):
    """Positions with ``ell + m <= cap``; these form a prefix of the word."""
    return list(range(1, window_size(cap) + 1))


def grid_window(ell_max, m_max):
    return sorted(coord_inv(ell, m) for ell in range(1, ell_max + 1) for m in range(1, m_max + 1))


def closed_form_targets(ell, m):
    """Heads of the arrows leaving (ell, m) in the infinite initial quiver."""
    if (ell + m) % 2 == 0:
        out = [(ell + 1, m)]
        if ell > 1:
            out.append((ell - 1, m))
    else:
        out = [(ell, m + 1)]
        if m > 1:
            out.append((ell, m - 1))
    return out


def initial_quiver(cap=None, vertices=None):
    """The infinite initial quiver restricted to a finite vertex set.

    Either ``cap`` (keep ``ell + m <= cap``) or an explicit vertex list.
    No vertex is frozen; boundary effects are handled by trust regions.
    """
    if vertices is None:
        vertices = window(cap)
    vset = set(vertices)
    arrows = []
    for p in vertices:
        for tgt in closed_form_targets(*coord(p)):
            t = coord_inv(*tgt)
            if t in vset:
                arrows.append((p, t))
    return Quiver.from_arrows(vertices, arrows)


def word_quiver(r):
    """Quiver of the reduced prefix of length r.

    Ordinary arrow s -> t when ``s < t < s+ < t+`` and ``|j_s - j_t| = 1``;
    horizontal arrow s -> s-.  Here ``k+`` is the next occurrence of the
    same letter inside the prefix, or ``r + 1``.  Vertices with ``k+ > r``
    are frozen.
    """
    letters = [jp(k) for k in range(1, r + 1)]
    nxt = [r + 1] * (r + 1)
    last = {}
    for k in range(r, 0, -1):
        nxt[k] = last.get(letters[k - 1], r + 1)
        last[letters[k - 1]] = k
    prev = {}
    arrows = []
    for k in range(1, r + 1):
        j = letters[k - 1]
        if j in prev:
            arrows.append((k, prev[j]))
        prev[j] = k
    for s in range(1, r + 1):
        for t in range(s + 1, nxt[s]):
            if abs(letters[s - 1] - letters[t - 1]) == 1 and nxt[s] < nxt[t]:
                arrows.append((s, t))
    frozen = [k for k in range(1, r + 1) if nxt[k] > r]
    return Quiver.from_arrows(range(1, r + 1), arrows, frozen)


# --- truncation ---------------------------------------------------------------

def truncate(q, N):
    """Delete vertices with ``ell > N``; freeze ``ell = N``; drop frozen-frozen arrows."""
    if N < 2:
        raise ValueError("N must be at least 2")
    keep = [v for v in q.vertices if coord(v)[0] <= N]
    frozen = {v for v in keep if coord(v)[0] == N}
    sub = q.restrict(keep, frozen)
    B = np.array(sub.B)
    idx = [sub.index(v) for v in frozen]
    B[np.ix_(idx, idx)] = 0
    return Quiver(sub.vertices, frozen, B)


def drop_frozen(q):
    return q.restrict([v for v in q.vertices if v not in q.frozen], frozen=())


def truncated_window(N, m_cap):
    """The truncated quiver on ``ell <= N``, ``m <= m_cap``, with ell = N frozen."""
    return truncate(initial_quiver(vertices=grid_window(N, m_cap)), N)


# --- schedules ----------------------------------------------------------------

def _by_diagonal(coords):
    return sorted(coords, key=lambda c: (c[0] + c[1], c[0]))


def _grid(cap, ell_max=None, m_max=None):
    out = []
    for s in range(2, cap + 1):
        for ell in range(1, s):
            m = s - ell
            if (ell_max is None or ell <= ell_max) and (m_max is None or m <= m_max):
                out.append((ell, m))
    return out


def sigma_even(cap, ell_max=None, m_max=None):
    return _by_diagonal(c for c in _grid(cap, ell_max, m_max) if sum(c) % 2 == 0)


def sigma_odd(cap, ell_max=None, m_max=None):
    return _by_diagonal(c for c in _grid(cap, ell_max, m_max) if sum(c) % 2 == 1)


def sigma_plus(cap, ell_max=None, m_max=None):
    return sigma_even(cap, ell_max, m_max) + sigma_odd(cap, ell_max, m_max)


def sigma_minus(cap, ell_max=None, m_max=None):
    return sigma_odd(cap, ell_max, m_max) + sigma_even(cap, ell_max, m_max)


def sigma_plus_n(N, m_cap):
    """Plus schedule restricted to exchangeable vertices ``ell <= N - 1``."""
    return sigma_plus(N - 1 + m_cap, ell_max=N - 1, m_max=m_cap)


def sigma_minus_n(N, m_cap):
    return sigma_minus(N - 1 + m_cap, ell_max=N - 1, m_max=m_cap)


def sigma_even_n(N, m_cap):
    return sigma_even(N - 1 + m_cap, ell_max=N - 1, m_max=m_cap)


def sigma_odd_n(N, m_cap):
    return sigma_odd(N - 1 + m_cap, ell_max=N - 1, m_max=m_cap)


def sigma_blocks(N, m_cap):
    """Blocks r = 1, 2, ...: rows s = r+1, r+2, ... alternating odd/even ell.

    Row s with parity e mutates ``{(ell, s) : ell <= N-1, ell = e mod 2}``
    in ascending order; the first row of each block uses odd ell.
    """
    out = []
    for r in range(1, m_cap):
        for k, s in enumerate(range(r + 1, m_cap + 1)):
            parity = 1 if k % 2 == 0 else 0
            out.extend((ell, s) for ell in range(1, N) if ell % 2 == parity)
    return out


def apply_schedule(q, schedule, after_each=None):
    """Mutate along a sequence of coordinates.

    ``after_each(quiver, step)`` is called after every mutation when given.
    """
    B = np.array(q.B)
    for step, c in enumerate(schedule):
        v = coord_inv(*c)
        if v not in q:
            raise WindowTooSmall(f"schedule vertex {c} is outside the window")
        if v in q.frozen:
            raise ValueError(f"schedule vertex {c} is frozen")
        B = mutate_exchange(B, q.index(v))
        if after_each is not None:
            after_each(Quiver(q.vertices, q.frozen, B), step)
    return Quiver(q.vertices, q.frozen, B)


# --- comparison ---------------------------------------------------------------

@dataclass(frozen=True)
class TrustRegion:
    """Vertices far enough from the window boundary to be trusted.

    With ``cap_sum`` set, trust ``ell + m <= cap_sum - margin``; with
    ``m_cap`` set, trust ``m <= m_cap - margin``.
    """

    cap_sum: int = None
    m_cap: int = None
    margin: int = 0

    def __post_init__(self):
        if self.margin < 0:
            raise ValueError("margin must be nonnegative")

    def contains(self, v):
        ell, m = coord(v)
        if self.cap_sum is not None and ell + m > self.cap_sum - self.margin:
            return False
        if self.m_cap is not None and m > self.m_cap - self.margin:
            return False
        return True


@dataclass
class Verdict:
    ok: bool
    checked: int = 0
    mismatches: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def compare_labeled(q1, q2, trust):
    """Compare arrows whose endpoints both lie in the trusted region."""
    common = [v for v in q1.vertices if v in q2 and trust.contains(v)]
    if not common:
        raise WindowTooSmall("trust region is empty")
    i1 = [q1.index(v) for v in common]
    i2 = [q2.index(v) for v in common]
    b1, b2 = q1.B[np.ix_(i1, i1)], q2.B[np.ix_(i2, i2)]
    bad = []
    for a, b in zip(*np.nonzero(b1 != b2)):
        if a < b:
            bad.append((coord(common[a]), coord(common[b]), int(b1[a, b]), int(b2[a, b])))
    return Verdict(not bad, len(common), bad)


def equals_labeled(q1, q2, trust):
    return compare_labeled(q1, q2, trust).ok


def crossing_arrows(q, N):
    """Arrows joining ``ell <= N - 1`` to ``ell >= N + 1``."""
    return [(coord(s), coord(t)) for (s, t) in q.arrows()
            if (coord(s)[0] <= N - 1 and coord(t)[0] >= N + 1)
            or (coord(t)[0] <= N - 1 and coord(s)[0] >= N + 1)]


# --- verifications --------------------------------------------------------------

def verify_word_quiver(cap, margin):
    trust = TrustRegion(cap_sum=cap, margin=margin)
    return compare_labeled(word_quiver(window_size(cap)), initial_quiver(cap), trust)


def verify_reversing(cap, margin):
    """Both bipartite half-schedules turn the initial quiver into its opposite."""
    q = initial_quiver(cap)
    trust = TrustRegion(cap_sum=cap, margin=margin)
    v_even = compare_labeled(apply_schedule(q, sigma_even(cap - 1)), q.op(), trust)
    v_odd = compare_labeled(apply_schedule(q, sigma_odd(cap - 1)), q.op(), trust)
    return Verdict(v_even.ok and v_odd.ok, v_even.checked, v_even.mismatches + v_odd.mismatches)


def verify_periodicity(cap, margin, reps=1):
    q = initial_quiver(cap)
    trust = TrustRegion(cap_sum=cap, margin=margin * reps)
    bad = []
    for sched in (sigma_plus(cap - 1), sigma_minus(cap - 1)):
        out = q
        for _ in range(reps):
            out = apply_schedule(out, sched)
        bad += compare_labeled(out, q, trust).mismatches
    return Verdict(not bad, sum(trust.contains(v) for v in q.vertices), bad)


def verify_periodicity_n(N, m_cap, margin):
    """Truncated periodicity, plus the no-crossing property along the way.

    The schedules run on the untruncated grid ``ell <= N + 2`` so that the
    crossing check sees columns beyond N; the bar quiver is then read off.
    """
    wide = initial_quiver(vertices=grid_window(N + 2, m_cap))
    qbar = drop_frozen(truncated_window(N, m_cap))
    trust = TrustRegion(m_cap=m_cap, margin=margin)
    bad = []
    crossings = []

    def watch(qq, step):
        crossings.extend(crossing_arrows(qq, N))

    for sched in (sigma_plus_n(N, m_cap - 1), sigma_minus_n(N, m_cap - 1)):
        out_wide = apply_schedule(wide, sched, after_each=watch)
        out_bar = apply_schedule(qbar, sched)
        bad += compare_labeled(out_bar, qbar, trust).mismatches
        # the truncated computation must agree with the wide one on ell <= N-1
        part = out_wide.restrict(qbar.vertices, frozen=())
        bad += compare_labeled(part, out_bar, trust).mismatches
    return Verdict(not bad and not crossings, len(qbar.vertices), bad + crossings)


def block_target(N, m_cap):
    """Expected result of the block schedule on columns ``ell <= N - 1``.

    Each vertex points down its column; even columns also point sideways,
    odd columns point diagonally up into their neighbours.
    """
    arrows = []
    verts = grid_window(N - 1, m_cap)
    vset = set(verts)
    for ell in range(1, N):
        for m in range(1, m_cap + 1):
            cand = [(ell, m - 1)]
            if ell % 2 == 0:
                cand += [(ell - 1, m), (ell + 1, m)]
            else:
                cand += [(ell - 1, m + 1), (ell + 1, m + 1)]
            for c in cand:
                if c[0] >= 1 and c[1] >= 1 and c[0] <= N - 1:
                    t = coord_inv(*c)
                    if t in vset:
                        arrows.append((coord_inv(ell, m), t))
    return Quiver.from_arrows(verts, arrows)


def verify_blocks(N, m_cap, margin):
    qbar = drop_frozen(truncated_window(N, m_cap))
    out = apply_schedule(qbar, sigma_even_n(N, m_cap - 1) + sigma_blocks(N, m_cap - 1))
    return compare_labeled(out, block_target(N, m_cap), TrustRegion(m_cap=m_cap, margin=margin))


# --- export ---------------------------------------------------------------------

def export_dot(q):
    lines = ["digraph Q {"]
    for v in q.vertices:
        ell, m = coord(v)
        shape = "box" if v in q.frozen else "ellipse"
        lines.append(f'  {v} [label="({ell},{m})", shape={shape}];')
    for (s, t), k in sorted(q.arrows().items()):
        for _ in range(k):
            lines.append(f"  {s} -> {t};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(q):
    verts = [{"p": v, "ell": coord(v)[0], "m": coord(v)[1], "frozen": v in q.frozen}
             for v in q.vertices]
    arrows = []
    for (s, t), k in sorted(q.arrows().items()):
        arrows.extend([[s, t]] * k)
    return json.dumps({"vertices": verts, "arrows": arrows}, sort_keys=True)


def import_json(text):
    data = json.loads(text)
    verts = [d["p"] for d in data["vertices"]]
    frozen = [d["p"] for d in data["vertices"] if d["frozen"]]
    return Quiver.from_arrows(verts, [tuple(a) for a in data["arrows"]], frozen)
