"""Command-line front end over the JSON interchange format.

Exit status: 0 on success, 1 on domain errors (JSON error on stderr),
2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import dhar, divisor, potential, reduction, uniform
from .errors import DivisorError
from .serialize import (
    dumps,
    load_divisor,
    load_rdivisor,
    rational_map,
    read_graph,
    read_json,
)


class UsageError(Exception):
    pass


def _vertex_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _unwrap(g, raw):
    # accept the output of `reduce`/`effective` wherever a divisor is expected
    if isinstance(raw, dict) and "representative" in raw and "representative" not in g:
        return raw["representative"]
    return raw


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{args.command} requires --{name.replace('_', '-')}")
    return value


def _divisor(args, g):
    return load_divisor(g, _unwrap(g, read_json(_need(args, "divisor"))))


def _rdivisor(args, g, name="divisor"):
    return load_rdivisor(g, _unwrap(g, read_json(_need(args, name))))


def _set(args, g):
    return g.vertex_set(_vertex_list(_need(args, "set")))


def cmd_validate(args, g):
    return g.to_json()


def cmd_canonical(args, g):
    return divisor.canonical_divisor(g).as_dict()


def cmd_residual(args, g):
    return divisor.residual(g, _divisor(args, g)).as_dict()


def cmd_fire(args, g):
    return divisor.fire_set(g, _divisor(args, g), _set(args, g)).as_dict()


def cmd_dhar(args, g):
    return dhar.dhar_decomposition(g, _divisor(args, g), _set(args, g)).to_json()


def cmd_reduce(args, g):
    d = _divisor(args, g)
    if args.vertex is not None:
        rep, script = reduction.v_reduced(g, d, args.vertex)
    elif args.set is not None:
        rep, script = reduction.make_V_reduced_from(g, d, _set(args, g))
    else:
        raise UsageError("reduce requires --vertex or --set")
    return {"representative": rep.as_dict(), "script": script.as_dict()}


def cmd_effective(args, g):
    cert = reduction.find_effective(g, _divisor(args, g), trace_limit=args.trace_limit)
    logging.getLogger(__name__).info("Dhar firings: %d", cert.dhar_firings)
    return cert.to_json(include_trace=args.trace)


def cmd_qfun(args, g):
    return potential.q_function(g, _rdivisor(args, g, "target"), _rdivisor(args, g)).to_json()


def cmd_witness_e(args, g):
    return rational_map(potential.construct_witness_E(g, _divisor(args, g), _set(args, g)))


def cmd_ereduced(args, g):
    E = _rdivisor(args, g, "target")
    d = _divisor(args, g)
    vs = _set(args, g)
    bound = args.bound if args.bound is not None else potential.default_bound(g, d)
    if not divisor.is_effective_away_from(d, vs):
        better = None
        ok = potential.is_E_reduced_bounded(g, E, d, vs, 0)
    else:
        better = potential.find_improvement(g, E, d, vs, bound, jobs=args.jobs)
        ok = better is None
    return {
        "e_reduced": ok,
        "bound": bound,
        "q_total": str(potential.q_total_of_class_member(g, E, d)),
        "improvement": None if better is None else {
            "divisor": better.divisor.as_dict(),
            "q_total": str(better.total),
        },
    }


def cmd_uniform(args, g):
    return {
        "uniform": uniform.is_uniform(g, _divisor(args, g)),
        "semistable": uniform.is_semistable(g),
        "uniform_guarantee": uniform.has_uniform_guarantee(g),
    }


def cmd_special(args, g):
    return uniform.specialness(g, _divisor(args, g)).to_json(include_trace=args.trace)


def cmd_quasi_uniform(args, g):
    d = _divisor(args, g)
    if args.residual_form:
        return uniform.residual_bounded_representative(g, d).as_dict()
    return uniform.quasi_uniform_representative(g, d).as_dict()


COMMANDS = {
    "validate": (cmd_validate, "check a graph and print it in canonical form"),
    "canonical": (cmd_canonical, "canonical divisor"),
    "residual": (cmd_residual, "residual divisor k - d"),
    "fire": (cmd_fire, "chip-firing move along --set"),
    "dhar": (cmd_dhar, "Dhar decomposition with respect to --set"),
    "reduce": (cmd_reduce, "reduced representative for --vertex or --set"),
    "effective": (cmd_effective, "decide effectiveness of the class, with certificate"),
    "qfun": (cmd_qfun, "potential q_E(D) for E = --target, D = --divisor"),
    "witness-e": (cmd_witness_e, "rational E supported on --set witnessing reducedness"),
    "ereduced": (cmd_ereduced, "bounded E-reducedness check"),
    "uniform": (cmd_uniform, "uniformity of the divisor"),
    "special": (cmd_special, "whether the class is special"),
    "quasi-uniform": (cmd_quasi_uniform, "quasi-uniform representative of a special class"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vreduced", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, metavar="PATH")
        p.add_argument("--divisor", metavar="PATH")
        p.add_argument("--target", metavar="PATH", help="rational divisor E (qfun, ereduced)")
        p.add_argument("--set", metavar="V1,V2,...")
        p.add_argument("--vertex", metavar="V")
        p.add_argument("--bound", type=int, metavar="N")
        p.add_argument("--trace", action="store_true")
        p.add_argument("--trace-limit", type=int, metavar="N")
        p.add_argument("--jobs", type=int, default=1, metavar="N")
        p.add_argument("--residual-form", action="store_true",
                       help="quasi-uniform: return the residual-form representative")
        p.add_argument("--pretty", action="store_true")
    return parser


def _fail(payload: dict, status: int) -> int:
    sys.stderr.write(dumps(payload) + "\n")
    return status


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if args.jobs < 1 or (args.bound is not None and args.bound < 0):
        return _fail({"error": "usage", "message": "--jobs must be >= 1 and --bound >= 0"}, 2)
    handler = COMMANDS[args.command][0]
    try:
        g = read_graph(args.graph)
        result = handler(args, g)
    except UsageError as exc:
        return _fail({"error": "usage", "message": str(exc)}, 2)
    except OSError as exc:
        return _fail({"error": "usage", "message": f"cannot read {exc.filename}: {exc.strerror}"}, 2)
    except DivisorError as exc:
        return _fail(exc.to_json(), 1)
    sys.stdout.write(dumps(result, pretty=args.pretty) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
