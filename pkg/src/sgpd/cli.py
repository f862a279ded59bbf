"""Command-line interface: ``sgpd <command> ...``.

Exit codes: 0 success, 1 validation failure, 2 syntax error.
"""

from __future__ import annotations

import argparse
import sys

from .action import PartialAction, degeneracy_split, is_global, restrict
from .errors import BudgetExceeded, InfiniteSemigroupoidError, ParseError, SgpdError, ValidationError
from .globalization import build_globalization, compute_R
from .oracle import EnumerationBudget, enumerate_partial_actions, enumerate_semigroupoids
from .semigroupoid import Semigroupoid, identities, is_categorical, markov_from_matrix
from .specializations import compare_tensor_universal, tensor_globalization, tensor_label
from .textio import emit_dot, load_file, read_token, serialize_action, serialize_globalization, serialize_semigroupoid

EXIT_OK, EXIT_INVALID, EXIT_SYNTAX = 0, 1, 2


class CliFailure(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _fmt(items) -> str:
    return "{" + ", ".join(str(i) for i in items) + "}"


def _docs(path: str):
    docs = load_file(path)
    if not docs:
        raise CliFailure(f"{path}: no semigroupoid or action block", EXIT_SYNTAX)
    for d in docs:
        if d.kind == "semigroupoid" and not d.value.elements:
            raise CliFailure(f"{path}:{d.line}: empty semigroupoid is not accepted here")
    return docs


def _action(path: str) -> PartialAction:
    acts = [d.value for d in _docs(path) if d.kind == "action"]
    if not acts:
        raise CliFailure(f"{path}: no action block", EXIT_SYNTAX)
    return acts[-1]


def _semigroupoid_info(S: Semigroupoid) -> list[str]:
    R = compute_R(S)
    lines = [
        f"elements: {len(S)}",
        f"composable pairs: {len(S.composable)}",
        f"categorical: {'yes' if is_categorical(S) else 'no'}",
        f"identities: {_fmt(S.sorted(identities(S)))}",
        "R-classes: " + " ".join(_fmt(m) for m in R),
    ]
    for s in S.elements:
        lines.append(f"right {s}: {_fmt(S.sorted(S.right(s)))}")
    return lines


def cmd_validate(args) -> int:
    for d in _docs(args.file):
        v = d.value
        if d.kind == "semigroupoid":
            print(f"ok: semigroupoid with {len(v)} elements and {len(v.composable)} composable pairs")
        else:
            g = "global" if is_global(v) else "partial"
            print(f"ok: {g} action on {len(v.carrier)} points")
    return EXIT_OK


def cmd_info(args) -> int:
    docs = _docs(args.file)
    shown = set()
    for d in docs:
        v = d.value
        if d.kind == "semigroupoid":
            shown.add(id(v))
            print("\n".join(["semigroupoid"] + _semigroupoid_info(v)))
        else:
            if id(v.sgpd) not in shown:
                print("\n".join(["semigroupoid"] + _semigroupoid_info(v.sgpd)))
                shown.add(id(v.sgpd))
            report = is_global(v)
            split = degeneracy_split(v)
            print("action")
            print(f"points: {len(v.carrier)}")
            print(f"global: {'yes' if report else 'no'}" + ("" if report else f" ({report.witness})"))
            print(f"degenerate part: {_fmt(split.x0)}")
    return EXIT_OK


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_globalize(args) -> int:
    G = build_globalization(_action(args.file))
    _write(args.output, serialize_globalization(G))
    if args.dot:
        _write(args.dot, emit_dot(G))
    return EXIT_OK


def cmd_restrict(args) -> int:
    act = _action(args.file)
    subset = [read_token(t.strip()) for t in args.subset.split(",") if t.strip()]
    if not is_global(act):
        raise CliFailure(f"restriction needs a global action: {is_global(act).witness}")
    _write(args.output, serialize_action(restrict(act, subset)))
    return EXIT_OK


def cmd_tensor(args) -> int:
    T = tensor_globalization(_action(args.file))
    lines = ["tensor", f"size: {len(T.classes)}"]
    for rep, members in T.classes.classes.items():
        lines.append(f"class {tensor_label(rep)}: " + " ".join(tensor_label(m) for m in members))
    for s in T.base.sgpd.elements:
        lines.append(f"gamma {s}: " + " ".join(f"{tensor_label(a)}->{tensor_label(b)}" for a, b in T.action.maps[s].items()))
    lines.append("i: " + " ".join(f"{x}->{tensor_label(c)}" for x, c in T.i.items()))
    _write(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_compare(args) -> int:
    r = compare_tensor_universal(_action(args.file))
    lines = [
        f"universal size: {len(r.universal.E)}",
        f"tensor size: {len(r.tensor.action.carrier)}",
        f"non-degenerate: {'yes' if r.nondegenerate else 'no'}",
        f"map injective: {'yes' if r.injective else 'no'}",
        f"map surjective: {'yes' if r.surjective else 'no'}",
        f"map is a morphism: {'yes' if r.phi_is_morphism else 'no'}",
        f"inverse is a morphism: {'yes' if r.inverse_is_morphism else 'no'}",
        f"verdict: {r.level}",
    ]
    print("\n".join(lines))
    return EXIT_OK


def cmd_markov(args) -> int:
    alphabet = [read_token(a.strip()) for a in args.alphabet.split(",") if a.strip()]
    matrix = {}
    for e in (args.edges or "").split(","):
        if not e.strip():
            continue
        x, sep, y = e.partition(":")
        if not sep:
            raise CliFailure(f"edge {e!r} must look like x:y", EXIT_SYNTAX)
        x, y = read_token(x.strip()), read_token(y.strip())
        if x not in alphabet or y not in alphabet:
            raise CliFailure(f"edge {e!r} uses a letter outside the alphabet")
        matrix[(x, y)] = 1
    try:
        S = markov_from_matrix(alphabet, matrix)
    except InfiniteSemigroupoidError as exc:
        raise CliFailure(str(exc)) from None
    _write(args.output, serialize_semigroupoid(S))
    return EXIT_OK


def cmd_oracle(args) -> int:
    budget = EnumerationBudget.from_env()
    sgpds = list(enumerate_semigroupoids(args.order, budget))
    print(f"semigroupoids of order {args.order}: {len(sgpds)}")
    if args.carrier is not None:
        total = glob = 0
        for S in sgpds:
            for act in enumerate_partial_actions(S, args.carrier, budget):
                total += 1
                glob += bool(is_global(act))
        print(f"partial actions on {args.carrier} points: {total}")
        print(f"global actions on {args.carrier} points: {glob}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sgpd", description="Finite semigroupoids, partial actions and their globalizations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check every block in a file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("info", help="categoricity, identities, R-classes, globality")
    s.add_argument("file")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("globalize", help="universal globalization report")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.add_argument("--dot", help="also write a DOT graph here")
    s.set_defaults(func=cmd_globalize)

    s = sub.add_parser("restrict", help="restrict a global action to a subset")
    s.add_argument("file")
    s.add_argument("--subset", required=True, help="comma-separated points")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_restrict)

    s = sub.add_parser("tensor", help="tensor product globalization of a semigroup action")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("compare", help="compare tensor and universal globalizations")
    s.add_argument("file")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("markov", help="Markov semigroupoid of an acyclic 0-1 matrix")
    s.add_argument("--alphabet", required=True, help="comma-separated letters")
    s.add_argument("--edges", default="", help="comma-separated x:y pairs with A(x,y)=1")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_markov)

    s = sub.add_parser("oracle", help="exhaustive counts at tiny sizes")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--carrier", type=int)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (BudgetExceeded, SgpdError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
