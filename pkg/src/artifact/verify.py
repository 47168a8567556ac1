"""Batch checks shared by the command line and the acceptance suite.

Each function returns a ``Report`` with a verdict and a short summary.
"""

import random
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from artifact import affine, quiver, tnring
from artifact.errors import NonLaurent
from artifact.lattice import alpha_w, apply_word, eps_w
from artifact.multiseg import Multisegment, Segment, mutated_det_label, shift_label, wt_of
from artifact.qcluster import (
    commutation_ok, initial_seed, mutate_along, mutate_seed,
    parse_w_label, seed_compatible, truncated_rule, truncated_seed,
)
from artifact.word import (
    a_val, coord, coord_array, coord_inv_array, first_non_reduced, jp, jp_array,
    longest_interval, perm_of_prefix, prefix_root, reversal, coxeter_length,
)


@dataclass
class Report:
    ok: bool
    summary: str
    details: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def combine(*reports):
    """One report that passes only when every part passes."""
    return Report(all(r.ok for r in reports), "; ".join(r.summary for r in reports),
                  [d for r in reports for d in r.details])


def reduced_word(pmax=210):
    """Every prefix is reduced and its new root matches the closed form."""
    letters = [jp(p) for p in range(1, pmax + 1)]
    bad = []
    if first_non_reduced(letters) is not None:
        bad.append(("not reduced at", first_non_reduced(letters)))
    for p in range(1, pmax + 1):
        beta = apply_word(letters[:p - 1], alpha_w(letters[p - 1]))
        if beta != prefix_root(p):
            bad.append(("root", p))
    good = pmax - len({b[1] for b in bad})
    return Report(not bad, f"{good}/{pmax}", bad)


def coordinates(pmax=10 ** 5, cap=450):
    p = np.arange(1, pmax + 1)
    ell, m = coord_array(p)
    ok1 = bool((coord_inv_array(ell, m) == p).all())
    ok2 = bool((jp_array(p) == (ell - m + 1) // 2).all())
    s = np.concatenate([np.full(k - 1, k) for k in range(2, cap + 1)])
    ells = np.concatenate([np.arange(1, k) for k in range(2, cap + 1)])
    l2, m2 = coord_array(coord_inv_array(ells, s - ells))
    ok3 = bool((l2 == ells).all() and (m2 == s - ells).all())
    return Report(ok1 and ok2 and ok3, f"inverse on p<={pmax}: {ok1}; jp formula: {ok2}; "
                  f"inverse on ell+m<={cap}: {ok3}")


def longest_elements(umax=10):
    bad = []
    for u in range(1, umax + 1):
        perm = perm_of_prefix(a_val(u))
        if perm != reversal(*longest_interval(u)) or coxeter_length(perm) != a_val(u):
            bad.append(u)
    return Report(not bad, f"{umax - len(bad)}/{umax} interval reversals", bad)


def seed_compatibility(cap=12, N=None):
    seed = initial_seed(cap) if N is None else truncated_seed(N, cap)
    L = seed.L
    skew = bool((L == -L.T).all() and (np.diag(L) == 0).all())
    ok = seed_compatible(seed, 2)
    return Report(skew and ok, f"{len(seed.vertices)} vertices, "
                  f"{len(seed.exchangeable())} exchangeable columns, skew={skew}, d=2 compatible={ok}")


def quiver_identities(cap=14, margin_word=2, margin=4):
    checks = {
        "word quiver": quiver.verify_word_quiver(cap, margin_word),
        "reversing": quiver.verify_reversing(cap, margin),
        "periodicity": quiver.verify_periodicity(cap, margin),
    }
    ok = all(v.ok for v in checks.values())
    return Report(ok, ", ".join(f"{k}={'PASS' if v.ok else 'FAIL'}" for k, v in checks.items()),
                  [(k, v.mismatches) for k, v in checks.items() if not v.ok])


def truncated_periodicity(Ns=(3, 4, 5), m_cap=10, margin=3):
    res = {N: quiver.verify_periodicity_n(N, m_cap, margin) for N in Ns}
    ok = all(v.ok for v in res.values())
    return Report(ok, ", ".join(f"N={N}:{'PASS' if v.ok else 'FAIL'}" for N, v in res.items()),
                  [(N, v.mismatches) for N, v in res.items() if not v.ok])


def label_mutation(cap=10, label_cap=8, reps=(1, 2)):
    """Single mutations reproduce the mutated labels; Sigma+- shift labels by +-r."""
    seed = initial_seed(cap, quantum=True)
    bad = []
    checked = 0
    for p in seed.vertices:
        ell, m = coord(p)
        if ell + m > label_cap or p in seed.frozen:
            continue
        checked += 1
        out = mutate_seed(seed, p)
        k = seed.index(p)
        if out.labels[k] != mutated_det_label(p):
            bad.append(("label", (ell, m), out.labels[k]))
        if out.weights[k] != wt_of(mutated_det_label(p)):
            bad.append(("weight", (ell, m)))
        # the two exchange terms are supported on the two neighbour sets
        col = seed.B[:, k]
        supports = {tuple(sorted(i for i, a in enumerate(e) if a)) for e in out.vars[k].terms}
        want = {tuple(sorted([i for i in range(len(col)) if col[i] > 0] + [k])),
                tuple(sorted([i for i in range(len(col)) if col[i] < 0] + [k]))}
        if supports != want:
            bad.append(("support", (ell, m)))
    plain = initial_seed(cap)
    for r in reps:
        for sched, sign in ((quiver.sigma_plus(cap - 1), 1), (quiver.sigma_minus(cap - 1), -1)):
            out = plain
            for _ in range(r):
                out = mutate_along(out, sched)
            trust = quiver.TrustRegion(cap_sum=cap, margin=2 * r)
            for p in plain.vertices:
                if trust.contains(p):
                    ell, m = coord(p)
                    if out.label(p) != shift_label(ell, m, jp(p), sign * r):
                        bad.append(("shift", r, sign, (ell, m)))
    return Report(not bad, f"{checked} single mutations, shifts r={list(reps)}", bad)


def truncated_label_shift(Ns=(3, 4, 5), m_cap=9, reps=(1, 2)):
    """Sigma+- on a truncated seed shift labels by +-r, column N counting as trivial."""
    bad = []
    for N in Ns:
        seed = truncated_seed(N, m_cap)
        rule = truncated_rule(N)
        for sched, sign in ((quiver.sigma_plus_n(N, m_cap - 1), 1),
                            (quiver.sigma_minus_n(N, m_cap - 1), -1)):
            for r in reps:
                out = seed
                for _ in range(r):
                    out = mutate_along(out, sched, rule)
                trust = quiver.TrustRegion(m_cap=m_cap, margin=2 * r)
                for p in seed.exchangeable():
                    if trust.contains(p) and out.label(p) != shift_label(*coord(p), jp(p), sign * r):
                        bad.append((N, sign, r, coord(p)))
    return Report(not bad, f"N in {list(Ns)}, shifts r={list(reps)}", bad)


def quantum_laurent(trials=100, max_len=8, N=3, m_cap=5, seed_value=2024):
    rng = random.Random(seed_value)
    seed = truncated_seed(N, m_cap, quantum=True)
    ex = seed.exchangeable()
    bad = []
    mutations = 0
    for trial in range(trials):
        cur = seed
        for _ in range(rng.randint(1, max_len)):
            v = rng.choice(ex)
            try:
                nxt = mutate_seed(cur, v)
            except NonLaurent as exc:
                bad.append(("non-laurent", trial, str(exc)))
                break
            mutations += 1
            if not nxt.var(v).is_positive():
                bad.append(("positivity", trial, coord(v)))
            if not commutation_ok(nxt, v):
                bad.append(("commutation", trial, coord(v)))
            if not seed_compatible(nxt, 2):
                bad.append(("compatibility", trial, coord(v)))
            back = mutate_seed(nxt, v)
            if not (back.vars == cur.vars and (back.B == cur.B).all()
                    and (back.L == cur.L).all() and back.weights == cur.weights):
                bad.append(("involution", trial, coord(v)))
            cur = nxt
    return Report(not bad, f"{trials} schedules, {mutations} mutations", bad)


def _images(labels, t, N):
    out = []
    for lab in labels:
        parsed = parse_w_label(lab)
        if parsed is None:
            return None
        img = affine.kr_image(t, N, *parsed)
        if img != affine.UNIT:
            out.append(img)
    return out


def _norm(labels, spec):
    return Counter(affine.canonical(x, spec) for x in labels if x != affine.UNIT)


def t_system_translation(t, N=5, label_cap=8):
    """Translate each exchange relation of the initial seed through the dictionary."""
    seed = truncated_seed(N, label_cap + 1)
    spec = affine.family_spec("A1" if t == 1 else "A2", N)
    bad = []
    checked = 0
    for p in seed.exchangeable():
        ell, m = coord(p)
        if ell + m > label_cap:
            continue
        checked += 1
        k = seed.index(p)
        col = seed.B[:, k]
        new = mutate_seed(seed, p).labels[k]
        j, j2 = jp(p), parse_w_label(new)[2]
        c = min(j, j2)
        pos = [seed.labels[i] for i in range(len(col)) for _ in range(max(0, int(col[i])))]
        neg = [seed.labels[i] for i in range(len(col)) for _ in range(max(0, -int(col[i])))]
        mid = _images([seed.labels[k], new], t, N)
        terms = [_images(pos, t, N), _images(neg, t, N)]
        sub, want_mid, quot = affine.t_system_triple(t, N, ell, m, 2 * c - ell + 1)
        got = sorted((_norm(x, spec) for x in terms), key=str)
        want = sorted((_norm(sub, spec), _norm(quot, spec)), key=str)
        if _norm(mid, spec) != _norm(want_mid, spec) or got != want:
            bad.append(((ell, m), terms, (sub, quot)))
    return Report(not bad, f"t={t}: {checked - len(bad)}/{checked} exchange relations match", bad)


REPRESENTATIVE_RANKS = (("A1", 5), ("A2", 5), ("A2", 6), ("B1", 3), ("C1", 4),
                        ("D1", 4), ("D1", 5), ("D2", 4), ("D2", 5), ("D3", 4))


def families(window=8, ranks=REPRESENTATIVE_RANKS):
    bad = []
    for tag, n in ranks:
        spec = affine.family_spec(tag, n)
        a_inf = affine.check_a_infinity(spec, window)
        period = affine.check_dual_period(spec, window)
        units = all(affine.segment_image(spec, Segment(a, a + spec.N - 1)) == affine.UNIT
                    for a in range(-window, window + 1))
        if not (a_inf and period and units):
            bad.append((tag, n, a_inf.counterexample, period.counterexample, units))
    return Report(not bad, f"{len(ranks) - len(bad)}/{len(ranks)} families pass", bad)


def random_multisegment(rng, N, max_segs=5, span=8):
    segs = []
    for _ in range(rng.randint(0, max_segs)):
        a = rng.randint(-span, span)
        segs.append(Segment(a, a + rng.randint(0, N + 2)))
    return Multisegment(segs)


def tn_combinatorics(samples=1000, seed_value=11):
    rng = random.Random(seed_value)
    bad = []
    for _ in range(samples):
        N = rng.choice((2, 3, 4, 5))
        ms = random_multisegment(rng, N)
        cls = tnring.omega_n(ms, N)
        lengths = ms.lengths()
        if any(x > N for x in lengths):
            good = cls.is_zero
        else:
            rest = [s for s in ms if len(s) < N]
            good = (not cls.is_zero and list(cls.ms) == sorted(rest, reverse=True)
                    and all(len(s) < N for s in cls.ms))
            if all(x == N for x in lengths):
                good = good and cls.is_unit
        if not good:
            bad.append(("omega", N, ms))
    for N in (2, 3, 5):
        for a in range(-8, 9):
            x = eps_w(a) - eps_w(a + N)
            for j in range(-6, 7):
                beta = alpha_w(j)
                lhs = tnring.c_a(a, beta, N)
                rhs = -tnring.b_form_n(x, beta, N) + tnring.b_form_n(beta, x, N)
                if lhs != rhs:
                    bad.append(("c_a", N, a, j))
    return Report(not bad, f"{samples} multisegments classified, c_a identity for N in 2,3,5", bad)


__all__ = [
    "Report", "combine", "reduced_word", "coordinates", "longest_elements", "seed_compatibility",
    "quiver_identities", "truncated_periodicity", "label_mutation", "truncated_label_shift", "quantum_laurent",
    "t_system_translation", "families", "tn_combinatorics",
]
