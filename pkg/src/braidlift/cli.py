"""``braidlift`` command line.

Braid words are read in application order: ``--braid "s1 s2^-1"`` applies s1
first.  Exit status: 0 on success, 1 on a domain error (a JSON object is
written to stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import (
    BraidError,
    ColoredBraid,
    canonical_label,
    hurwitz_apply,
    is_liftable,
    orbit,
    parse_braid,
    parse_labels,
    remove_same_label_crossings,
    same_label_crossings,
    total_monodromy,
)
from .complex import build_xg_ball, build_xm, check_covering, export_dot, two_cell_inventory
from .cover import cover_info
from .graphical import apply_morphism, canonical_object, validate_object
from .lift import LiftError, compose_lifts, compute_lift, invert_lift, is_identity, lift_json
from .perm import cycles


class UsageError(Exception):
    pass


def _labels(args):
    return parse_labels(args.labels, args.d)


def _braid(args, tau, required=True):
    if args.braid is None:
        if required:
            raise UsageError("--braid is required for this command")
        return None
    return ColoredBraid(tau, parse_braid(args.braid, tau.n))


def cmd_hurwitz(args):
    b = _braid(args, _labels(args))
    return {
        "initial_labels": str(b.initial),
        "braid": str(b.word),
        "terminal_labels": str(b.terminal),
        "total_monodromy": str(total_monodromy(b.initial)),
    }


def cmd_liftable(args):
    b = _braid(args, _labels(args))
    return {
        "initial_labels": str(b.initial),
        "terminal_labels": str(b.terminal),
        "liftable": is_liftable(b),
    }


def cmd_cover_info(args):
    return cover_info(_labels(args))


def cmd_lift(args):
    return lift_json(_braid(args, _labels(args)))


def cmd_canonical(args):
    tau = _labels(args)
    mu = total_monodromy(tau)
    return {
        "labels": str(tau),
        "total_monodromy": str(mu),
        "cycle_type": sorted((len(c) for c in cycles(mu)), reverse=True),
        "canonical_label": str(canonical_label(tau)),
    }


def cmd_orbit(args):
    tau = _labels(args)
    verts = orbit(tau)
    return {
        "labels": str(tau),
        "total_monodromy": str(total_monodromy(tau)),
        "size": len(verts),
        "vertices": [str(v) for v in verts],
    }


def _graph(args):
    tau = _labels(args)
    if args.graph == "xg":
        return tau, build_xg_ball(tau, args.radius)
    return tau, build_xm(tau)


def cmd_complex(args):
    tau, g = _graph(args)
    if args.format == "dot":
        return export_dot(g, "xg" if args.graph == "xg" else "xm")
    out = g.to_json()
    if args.graph == "xm":
        out["two_cells"] = two_cell_inventory(tau, g).to_json()
    else:
        out["radius"] = args.radius
    return out


def cmd_verify(args):
    tau = _labels(args)
    xm = build_xm(tau)
    ball = build_xg_ball(tau, args.radius)
    checks = {"covering": check_covering(ball, xm).to_json()}
    b = _braid(args, tau, required=False)
    if b is not None:
        moved = apply_morphism(canonical_object(tau), b.word)
        checks["graphical_object"] = validate_object(moved).to_json()
        f = compute_lift(b)
        round_trip = compose_lifts(invert_lift(f), f)
        checks["inverse"] = {"ok": is_identity(round_trip)}
        rewritten = remove_same_label_crossings(b)
        checks["rewrite"] = {
            "ok": not same_label_crossings(rewritten) and compute_lift(rewritten) == f,
            "length": len(rewritten.word),
        }
    ok = all(c["ok"] for c in checks.values())
    return {"labels": str(tau), "ok": ok, "checks": checks}


def cmd_rewrite(args):
    b = _braid(args, _labels(args))
    r = remove_same_label_crossings(b)
    return {
        "initial_labels": str(b.initial),
        "input": str(b.word),
        "output": str(r.word),
        "same_label_crossings_before": len(same_label_crossings(b)),
        "same_label_crossings_after": len(same_label_crossings(r)),
        "terminal_labels": str(hurwitz_apply(b.initial, r.word)),
        "lift_equal": compute_lift(b) == compute_lift(r),
    }


COMMANDS = {
    "hurwitz": (cmd_hurwitz, "apply a braid to a label tuple by the Hurwitz action"),
    "liftable": (cmd_liftable, "whether initial and terminal labels agree"),
    "cover-info": (cmd_cover_info, "topology and spine of the branched cover"),
    "lift": (cmd_lift, "lift a coloured braid to a spine substitution"),
    "canonical": (cmd_canonical, "normal-form label with the same cover type"),
    "orbit": (cmd_orbit, "Hurwitz orbit of a label tuple"),
    "complex": (cmd_complex, "label complex or a ball of the arc-system complex"),
    "verify": (cmd_verify, "run the local structural checks"),
    "rewrite": (cmd_rewrite, "remove crossings between equally labelled strands"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidlift",
        description="Lift coloured braids to simple branched covers of the disc. "
        "Braid words are in application order: the leftmost generator acts first.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_fn, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--d", type=int, default=None, help="degree of the cover (or a 'd=<int>' prefix in --labels)")
        p.add_argument("--labels", required=True, help='label tuple, e.g. "(1 2),(2 3)"')
        p.add_argument("--braid", default=None, help='braid word, e.g. "s1 s2^-1 s1^3"')
        p.add_argument("--radius", type=int, default=2, help="ball radius for the arc-system complex")
        p.add_argument("--format", choices=("json", "text", "dot"), default="json")
        p.add_argument("--out", default=None, help="write output to this file")
        if name == "complex":
            p.add_argument("--graph", choices=("xm", "xg"), default="xm", help="label complex or arc-system ball")
    return parser


def _as_text(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_as_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format == "dot" and args.command != "complex":
        parser.print_usage(stderr)
        print("braidlift: error: --format dot is only valid for 'complex'", file=stderr)
        return 2
    fn = COMMANDS[args.command][0]
    try:
        result = fn(args)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"braidlift: error: {exc}", file=stderr)
        return 2
    except (BraidError, LiftError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "command": args.command, "message": str(exc)}), file=stderr)
        return 1

    if isinstance(result, str):
        text = result
    elif args.format == "text":
        text = _as_text(result) + "\n"
    else:
        text = json.dumps(result, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if args.command == "verify" and not result["ok"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
