"""Command-line front end.

Exit codes: 0 success (or "yes"), 1 a checked property is false, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import binomial
from .category import boundedness, is_measure_preserving
from .completion import complete_space
from .dsl import DescriptionError, Document, parse
from .errors import ProbCatError
from .expectation import cond_exp
from .independence import are_independent, is_independent_of
from .measurability import is_f_measurable
from .spaces import RandomVariable, as_rational, expectation

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str) -> tuple[Document, str]:
    if path == "-":
        return parse(sys.stdin.read()), "<stdin>"
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: cannot read: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path}: not valid UTF-8") from None
    return parse(text), path


def _directions(doc: Document, name: str) -> str:
    d = doc.maps[name]
    return f"arrow {name}- : {d.target} -> {d.source}, underlying {name} : {d.source} -> {d.target}"


def _atom_table(space, values, out):
    nulls = set(space.null_atoms())
    for k in range(len(space.sigma)):
        note = "  (null atom)" if k in nulls else ""
        out.append(f"{space.atom_label(k)}: {values[k]}{note}")


def cmd_check(args, out) -> int:
    doc, _ = _load(args.file)
    for name in doc.spaces:
        sp = doc.space(name)
        nulls = [sp.atom_label(k) for k in sp.null_atoms()]
        out.append(
            f"space {name}: {len(sp.outcomes)} outcomes, {len(sp.sigma)} atoms, "
            f"null atoms: {', '.join(nulls) if nulls else 'none'}"
        )
    for name in doc.maps:
        f = doc.arrow(name)
        out.append(f"map {name}: {_directions(doc, name)}")
        out.append(f"  measure-preserving: {'yes' if is_measure_preserving(f) else 'no'}")
        out.append(f"  least bound M: {boundedness(f)}")
    for name, d in doc.rvs.items():
        v = doc.rv(name)
        out.append(f"rv {name} on {d.space}: mean {expectation(v)}")
    return EXIT_OK


def cmd_condexp(args, out) -> int:
    doc, _ = _load(args.file)
    f, v = doc.arrow(args.arrow), doc.rv(args.rv)
    e = cond_exp(f, v)
    out.append(f"E^{{{args.arrow}-}}({args.rv}) on {doc.maps[args.arrow].target}  ({_directions(doc, args.arrow)})")
    _atom_table(f.dom, e.atom_values(), out)
    return EXIT_OK


def cmd_measurable(args, out) -> int:
    doc, _ = _load(args.file)
    f, v = doc.arrow(args.arrow), doc.rv(args.rv)
    w = is_f_measurable(f, v)
    if w is None:
        out.append(f"NOT measurable along {args.arrow}-: {args.rv} varies within a positive fibre")
        return EXIT_FALSE
    out.append(f"{args.rv} is measurable along {args.arrow}-; witness on {doc.maps[args.arrow].target}:")
    _atom_table(f.dom, w.atom_values(), out)
    return EXIT_OK


def cmd_indep(args, out) -> int:
    doc, _ = _load(args.file)
    f = doc.arrow(args.arrow)
    if (args.rv is None) == (args.arrow2 is None):
        raise InputError("indep needs exactly one of --rv or --arrow2")
    if args.rv is not None:
        ok = is_independent_of(doc.rv(args.rv), f)
        subject = f"{args.rv}"
    else:
        ok = are_independent(f, doc.arrow(args.arrow2))
        subject = f"{args.arrow2}-"
    out.append(f"{subject} is {'' if ok else 'NOT '}independent of {args.arrow}-")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_complete(args, out) -> int:
    doc, _ = _load(args.file)
    sp = complete_space(doc.space(args.space))
    out.append(f"completion of {args.space}: {len(sp.sigma)} atoms")
    _atom_table(sp, sp.measure, out)
    return EXIT_OK


def _payoff(text: str, p, t: int) -> RandomVariable:
    if text == "countones":
        return binomial.count_ones(p, t)
    if text.startswith("asset:"):
        try:
            up, down = text[len("asset:"):].split(",")
            return binomial.asset_price(p, t, as_rational(up), as_rational(down))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad asset payoff {text!r}; expected asset:<u>,<d>") from None
    if text.startswith("@"):
        path, sep, name = text[1:].rpartition(":")
        if not sep or not path:
            raise InputError(f"bad payoff {text!r}; expected @<file>:<rv>")
        doc, _ = _load(path)
        v = doc.rv(name)
        target = binomial.space_at(p, t)
        if set(v.space.outcomes) != set(target.outcomes):
            raise InputError(f"rv {name!r} is not defined on the bit strings of length {t}")
        return RandomVariable.from_function(target, v.__getitem__)
    raise InputError(f"unknown payoff {text!r}")


def cmd_binomial(args, out) -> int:
    try:
        p = as_rational(args.p)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--p {args.p!r} is not a rational") from None
    payoff = _payoff(args.payoff, p, args.t)
    v = binomial.binomial_cond_exp(p, args.s, args.t, payoff)
    for o, val in zip(v.space.outcomes, v.values):
        out.append(f"{o if o else '(root)'}: {val}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="probcat",
        description="Exact computations on finite probability spaces and their arrows.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a description file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("condexp", help="conditional expectation along an arrow")
    p.add_argument("file")
    p.add_argument("--arrow", required=True)
    p.add_argument("--rv", required=True)
    p.set_defaults(func=cmd_condexp)

    p = sub.add_parser("measurable", help="measurability of a variable w.r.t. an arrow")
    p.add_argument("file")
    p.add_argument("--arrow", required=True)
    p.add_argument("--rv", required=True)
    p.set_defaults(func=cmd_measurable)

    p = sub.add_parser("indep", help="independence of a variable or arrow from an arrow")
    p.add_argument("file")
    p.add_argument("--arrow", required=True)
    p.add_argument("--rv")
    p.add_argument("--arrow2")
    p.set_defaults(func=cmd_indep)

    p = sub.add_parser("complete", help="completion of a space")
    p.add_argument("file")
    p.add_argument("--space", required=True)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("binomial", help="conditional expectation in the binomial model")
    p.add_argument("--p", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--payoff", required=True, help="countones | asset:<u>,<d> | @<file>:<rv>")
    p.set_defaults(func=cmd_binomial)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    source = getattr(args, "file", None) or "probcat"
    try:
        code = args.func(args, out)
    except DescriptionError as exc:
        print(exc.format(source), file=stderr)
        return EXIT_INPUT
    except (InputError, ProbCatError) as exc:
        print(f"{source}: error: {exc}", file=stderr)
        return EXIT_INPUT
    stdout.write("".join(line + "\n" for line in out))
    return code


if __name__ == "__main__":
    sys.exit(main())
