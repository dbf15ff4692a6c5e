"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 precondition violated (witness on
stderr), 4 size or budget limit, 5 audit counterexample found.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import audit as audit_mod
from .classify import classify
from .dimension import dimension, interval_dim
from .errors import InputError, LimitError, PreconditionError
from .extend import (
    DEFAULT_BUDGET,
    PartnerClass,
    decompose,
    interval_extension,
    linear_extension,
    semiorder_extension,
    strong_interval_extension,
)
from .geometry import (
    box_embedding,
    interval_representation,
    triangle_representation,
    unit_interval_representation,
)
from .io import canonical_json, emit, parse_relation
from .realize import MemberClass, realizer

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_LIMIT, EXIT_COUNTEREXAMPLE = 0, 2, 3, 4, 5

REALIZE_CLASSES = {
    "strict-linear": MemberClass.STRICT_LINEAR,
    "linear": MemberClass.LINEAR,
    "interval": MemberClass.INTERVAL_ORDER,
    "semiorder": MemberClass.SEMIORDER,
    "strong-interval": MemberClass.STRONG_INTERVAL,
    "linear-interval": MemberClass.LINEAR_INTERVAL,
    "linear-semiorder": MemberClass.LINEAR_SEMIORDER,
}
REALIZE_CLASSES.update({m.value: m for m in MemberClass})


def build_parser() -> argparse.ArgumentParser:
    def common(suppress: bool) -> argparse.ArgumentParser:
        # Subcommand copies use SUPPRESS so flags given before the
        # subcommand are not reset to their defaults.
        def d(value):
            return argparse.SUPPRESS if suppress else value

        c = argparse.ArgumentParser(add_help=False)
        c.add_argument("--format", choices=["json", "dot", "svg", "edgelist"], default=d("json"))
        c.add_argument("--out", default=d(None), help="write the result here instead of stdout")
        c.add_argument("--max-n", type=int, default=d(None), help="element cap for exhaustive searches")
        c.add_argument("--budget", type=int, default=d(None), help="search node budget")
        c.add_argument("--input-format", choices=["auto", "json", "edgelist"], default=d("auto"))
        return c

    p = argparse.ArgumentParser(prog="hybridorder", description=__doc__.splitlines()[0], parents=[common(False)])
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common(True)])

    cmd("check", "classify a relation").add_argument("file")

    c = cmd("extend", "construct an extension")
    c.add_argument("--class", dest="cls", required=True, choices=["linear", "interval", "strong-interval", "semiorder"])
    c.add_argument("--reflexive", action="store_true", help="reflexive linear extension")
    c.add_argument("file")

    c = cmd("decompose", "split the closure as linear order meet partner")
    c.add_argument("--class", dest="cls", required=True, choices=["linear-interval", "linear-semiorder"])
    c.add_argument("file")

    c = cmd("realize", "build a verified realizer")
    c.add_argument("--class", dest="cls", required=True, choices=sorted(REALIZE_CLASSES))
    c.add_argument("file")

    c = cmd("dim", "exact dimension with certificate")
    c.add_argument("--quantity", required=True, choices=["dim", "idim", "sdim", "lidim", "lsdim"])
    c.add_argument("file")

    c = cmd("represent", "geometric representation")
    c.add_argument("--kind", required=True, choices=["interval", "unit", "triangle", "unit-triangle", "box"])
    c.add_argument("file")

    c = cmd("audit", "randomized check of a claim")
    c.add_argument("--theorem", required=True, choices=list(audit_mod.THEOREMS))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--count", type=int, required=True)
    c.add_argument("--seed", type=int, required=True)
    return p


def _read(args):
    path = Path(args.file)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    fmt = args.input_format
    if fmt == "auto":
        fmt = "json" if path.suffix.lower() == ".json" or text.lstrip().startswith("{") else "edgelist"
    return parse_relation(text, fmt)


def _budget(args):
    return args.budget if args.budget is not None else DEFAULT_BUDGET


def _dispatch(args):
    if args.command == "audit":
        return audit_mod.run_audit(args.theorem, args.n, args.count, args.seed)
    r = _read(args)
    if args.command == "check":
        return classify(r)
    if args.command == "extend":
        if args.cls == "linear":
            return linear_extension(r, "reflexive" if args.reflexive else "strict")
        return {
            "interval": interval_extension,
            "strong-interval": strong_interval_extension,
            "semiorder": semiorder_extension,
        }[args.cls](r)
    if args.command == "decompose":
        partner = PartnerClass.SEMIORDER if args.cls == "linear-semiorder" else PartnerClass.INTERVAL_ORDER
        return decompose(r, partner, budget=_budget(args))
    if args.command == "realize":
        return realizer(r, REALIZE_CLASSES[args.cls], budget=_budget(args))
    kwargs = {"budget": _budget(args)}
    if args.max_n is not None:
        kwargs["max_n"] = args.max_n
    if args.command == "dim":
        return dimension(r, args.quantity, **kwargs)
    if args.command == "represent":
        kind = args.kind
        if kind == "interval":
            return interval_representation(r)
        if kind == "unit":
            return unit_interval_representation(r)
        if kind in ("triangle", "unit-triangle"):
            partner = PartnerClass.SEMIORDER if kind == "unit-triangle" else PartnerClass.INTERVAL_ORDER
            return triangle_representation(r, partner, budget=_budget(args))
        return box_embedding(r, interval_dim(r, **kwargs).witness)
    raise AssertionError(args.command)


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = _dispatch(args)
        _write(args, emit(result, args.format))
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print("witness: " + canonical_json(exc.witness.to_dict()).strip(), file=sys.stderr)
        return EXIT_PRECONDITION
    except LimitError as exc:
        print(f"limit reached: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    if args.command == "audit":
        print(f"audit {result.theorem}: {result.passed}/{result.count} pass", file=sys.stderr)
        if result.failed:
            return EXIT_COUNTEREXAMPLE
    if args.command == "dim":
        v = result.value
        print(f"{result.quantity} = {tuple(v) if isinstance(v, tuple) else v}", file=sys.stderr)
    return EXIT_OK


def run(argv=None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
