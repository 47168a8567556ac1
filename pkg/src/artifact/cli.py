"""Command line entry point: ``artifact <command> ...``.

Exit status is 0 when a check passes, 1 when it fails and 2 on bad usage or
a request outside the implemented domain.  ``--json`` switches every command
to a single JSON document on stdout.
"""

import argparse
import json
import sys

from artifact import affine, quiver, tnring, verify
from artifact.errors import ArtifactError
from artifact.lattice import Weight
from artifact.multiseg import Multisegment, Segment
from artifact.qcluster import (
    initial_seed, mutate_along, seed_compatible, t_system_rule, truncated_rule, truncated_seed,
)
from artifact.word import coord, coord_inv, jp, prefix_root

SCHEDULES = ("even", "odd", "plus", "minus", "hl")


class UsageError(Exception):
    pass


class Output:
    def __init__(self, as_json):
        self.as_json = as_json
        self.lines = []
        self.doc = {}

    def line(self, text):
        self.lines.append(text)

    def put(self, key, value):
        self.doc[key] = value

    def flush(self, stream=None):
        stream = stream or sys.stdout
        if self.as_json:
            stream.write(json.dumps(self.doc, sort_keys=True, default=str) + "\n")
        else:
            for text in self.lines:
                stream.write(text + "\n")


def _weight_arg(text):
    data = json.loads(text)
    if isinstance(data, dict) and ("lam" in data or "eps" in data):
        return Weight.from_json(data)
    return Weight(eps={int(k): v for k, v in data.items()})


def _report(out, report):
    out.line(("OK " if report.ok else "FAIL ") + report.summary)
    out.put("ok", report.ok)
    out.put("summary", report.summary)
    if not report.ok:
        out.put("details", [repr(d) for d in report.details[:20]])
    return 0 if report.ok else 1


def cmd_word_check(args, out):
    return _report(out, verify.reduced_word(args.pmax))


def cmd_coord(args, out):
    if args.p is not None:
        p = args.p
        ell, m = coord(p)
    elif args.ell is not None and args.m is not None:
        ell, m = args.ell, args.m
        p = coord_inv(ell, m)
    else:
        raise UsageError("coord: give --p or both --ell and --m")
    root = prefix_root(p).to_eps()
    out.line(f"p={p} ell={ell} m={m} jp={jp(p)} root={root!r}")
    out.doc.update({"p": p, "ell": ell, "m": m, "jp": jp(p), "root": root.to_json()})
    return 0


def _seed(args, quantum=False):
    if args.N is None:
        return initial_seed(args.cap, quantum=quantum)
    return truncated_seed(args.N, args.cap, quantum=quantum)


def cmd_seed_verify(args, out):
    return _report(out, verify.seed_compatibility(args.cap, args.N))


def _schedule(args):
    if args.schedule == "hl":
        if args.N is None:
            raise UsageError("mutate: the hl schedule needs --N")
        return quiver.sigma_even_n(args.N, args.cap - 1) + quiver.sigma_blocks(args.N, args.cap - 1)
    if args.N is None:
        make = {"even": quiver.sigma_even, "odd": quiver.sigma_odd,
                "plus": quiver.sigma_plus, "minus": quiver.sigma_minus}[args.schedule]
        return make(args.cap - 1)
    make = {"even": quiver.sigma_even_n, "odd": quiver.sigma_odd_n,
            "plus": quiver.sigma_plus_n, "minus": quiver.sigma_minus_n}[args.schedule]
    return make(args.N, args.cap - 1)


def cmd_mutate(args, out):
    seed = _seed(args, quantum=args.quantum)
    sched = _schedule(args)
    rule = t_system_rule if args.N is None else truncated_rule(args.N)
    for _ in range(args.reps):
        seed = mutate_along(seed, sched, rule)
    rows = []
    for v in seed.vertices:
        ell, m = coord(v)
        lab = seed.label(v)
        row = {"ell": ell, "m": m, "frozen": v in seed.frozen,
               "label": None if lab is None else repr(lab)}
        if args.quantum:
            row["terms"] = len(seed.var(v))
        rows.append(row)
        extra = f" terms={row['terms']}" if args.quantum else ""
        out.line(f"({ell},{m}) {row['label'] or '?'}{extra}")
    out.put("mutations", len(sched) * args.reps)
    out.put("vertices", rows)
    if args.quantum and not seed_compatible(seed, 2):
        out.line("FAIL compatibility lost")
        out.put("ok", False)
        return 1
    out.put("ok", True)
    return 0


def cmd_quiver_export(args, out):
    q = quiver.initial_quiver(args.cap) if args.N is None else quiver.truncated_window(args.N, args.cap)
    text = quiver.export_dot(q) if args.format == "dot" else quiver.export_json(q)
    if out.as_json:
        out.doc.update(json.loads(quiver.export_json(q)))
    else:
        out.line(text.rstrip("\n"))
    return 0


def cmd_quiver_verify(args, out):
    return _report(out, verify.quiver_identities(args.cap, args.margin_word, args.margin))


def cmd_tn_omega(args, out):
    ms = Multisegment.from_json(json.loads(args.ms))
    cls = tnring.omega_n(ms, args.N)
    out.line(cls.describe())
    out.put("class", cls.to_json())
    return 0


def cmd_tn_bform(args, out):
    value = tnring.b_form_n(_weight_arg(args.x), _weight_arg(args.y), args.N)
    out.line(str(value))
    out.put("value", str(value))
    return 0


def cmd_affine_gamma(args, out):
    spec = affine.family_spec(args.type, args.rank)
    ok = True
    for name, check in (("A-infinity", affine.check_a_infinity),
                        ("dual period", affine.check_dual_period)):
        verdict = check(spec, args.window)
        ok = ok and verdict.ok
        out.line(f"{name}: {'PASS' if verdict.ok else 'FAIL'}")
        out.put(name, {"ok": verdict.ok, "counterexample": verdict.counterexample})
    out.put("ok", ok)
    return 0 if ok else 1


def cmd_affine_seg(args, out):
    spec = affine.family_spec(args.type, args.rank)
    img = affine.segment_image(spec, Segment(args.a, args.b))
    out.line(repr(img))
    out.put("image", repr(img))
    return 0


def cmd_affine_tsys(args, out):
    sub, mid, quot = affine.t_system_triple(args.t, args.N, args.ell, args.m, args.k)
    for name, pair in (("sub", sub), ("mid", mid), ("quot", quot)):
        text = " x ".join(map(repr, pair))
        out.line(f"{name}: {text}")
        out.put(name, [repr(x) for x in pair])
    return 0


CHECKS = (
    ("reduced word", verify.reduced_word),
    ("coordinates", verify.coordinates),
    ("longest elements", verify.longest_elements),
    ("seed compatibility", verify.seed_compatibility),
    ("quiver identities", verify.quiver_identities),
    ("truncated periodicity", verify.truncated_periodicity),
    ("label mutation", verify.label_mutation),
    ("quantum Laurent", verify.quantum_laurent),
    ("T-system t=1", lambda: verify.t_system_translation(1)),
    ("T-system t=2", lambda: verify.t_system_translation(2)),
    ("affine families", verify.families),
    ("T_N combinatorics", verify.tn_combinatorics),
)


def cmd_verify(args, out):
    ok = True
    for name, fn in CHECKS:
        report = fn()
        ok = ok and report.ok
        out.line(f"{'PASS' if report.ok else 'FAIL'} {name}: {report.summary}")
        out.put(name, {"ok": report.ok, "summary": report.summary})
    out.put("ok", ok)
    return 0 if ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document")
    parser = argparse.ArgumentParser(prog="artifact", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    word = sub.add_parser("word").add_subparsers(dest="action", required=True)
    p = word.add_parser("check", parents=[common], help="check the reduced word and its roots")
    p.add_argument("--pmax", type=int, default=210)
    p.set_defaults(func=cmd_word_check)

    p = sub.add_parser("coord", parents=[common], help="convert between p and (ell, m)")
    p.add_argument("--p", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_coord)

    seed = sub.add_parser("seed").add_subparsers(dest="action", required=True)
    p = seed.add_parser("verify", parents=[common], help="check the commutation matrix")
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--N", type=int)
    p.set_defaults(func=cmd_seed_verify)

    p = sub.add_parser("mutate", parents=[common], help="run a mutation schedule and print labels")
    p.add_argument("--schedule", choices=SCHEDULES, required=True,
                   help="hl is the even sweep followed by the column blocks; needs --N")
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--N", type=int)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--quantum", action="store_true")
    p.set_defaults(func=cmd_mutate)

    qv = sub.add_parser("quiver").add_subparsers(dest="action", required=True)
    p = qv.add_parser("export", parents=[common])
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--N", type=int)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_quiver_export)
    p = qv.add_parser("verify", parents=[common], help="check the schedule identities on a window")
    p.add_argument("--cap", type=int, default=14)
    p.add_argument("--margin", type=int, default=4)
    p.add_argument("--margin-word", type=int, default=2)
    p.set_defaults(func=cmd_quiver_verify)

    tn = sub.add_parser("tn").add_subparsers(dest="action", required=True)
    p = tn.add_parser("omega", parents=[common], help="image of a multisegment at period N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--ms", required=True, help='JSON list of [a, b] pairs')
    p.set_defaults(func=cmd_tn_omega)
    p = tn.add_parser("bform", parents=[common], help="the twisted form at period N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--x", required=True, help='JSON eps coefficients, e.g. {"1": 1, "2": -1}')
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_tn_bform)

    af = sub.add_parser("affine").add_subparsers(dest="action", required=True)
    p = af.add_parser("gamma", parents=[common], help="check a family's quiver data on a window")
    p.add_argument("--type", choices=affine.FAMILIES, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--window", type=int, default=8)
    p.set_defaults(func=cmd_affine_gamma)
    p = af.add_parser("seg", parents=[common], help="image of a segment")
    p.add_argument("--type", choices=affine.FAMILIES, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_affine_seg)
    p = af.add_parser("tsys", parents=[common], help="print a T-system triple")
    p.add_argument("--t", type=int, choices=(1, 2), default=1)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_affine_tsys)

    p = sub.add_parser("verify", parents=[common], help="run every batch check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    out = Output(getattr(args, "json", False))
    try:
        code = args.func(args, out)
    except (UsageError, ArtifactError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
