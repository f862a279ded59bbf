"""Line-oriented text format, globalization reports and DOT output.

Grammar (``#`` starts a comment, blank lines are ignored)::

    semigroupoid
    elements: s1 s2 t1 t2 0
    compose: s1 t1 -> 0

    action
    over: other-file.sgpd      # optional; otherwise the preceding block
    set: 1 2 3 4
    dom s1: 1 2
    map s1: 1->2 2->3

Identifiers match ``[A-Za-z0-9_!]+``; purely decimal ones are read as ints.
"""

from __future__ import annotations

import os
import re
from collections.abc import Callable, Hashable
from dataclasses import dataclass

from .action import PartialAction, degeneracy_split, validate_partial_action
from .errors import ParseError
from .globalization import Globalization, class_label
from .semigroupoid import Semigroupoid, validate_semigroupoid

TOKEN = re.compile(r"[A-Za-z0-9_!]+\Z")
ARROW = re.compile(r"([^\s>-]+)\s*->\s*([^\s>-]+)")


def read_token(tok: str, line: int | None = None, column: int | None = None) -> Hashable:
    if not TOKEN.match(tok):
        raise ParseError(f"bad identifier {tok!r}", line, column)
    if tok.isdigit() and (tok == "0" or not tok.startswith("0")):
        return int(tok)
    return tok


def write_token(v: Hashable) -> str:
    s = str(v)
    if not TOKEN.match(s):
        raise ValueError(f"{v!r} cannot be written as an identifier")
    if isinstance(v, str) and s.isdigit() and (s == "0" or not s.startswith("0")):
        raise ValueError(f"string {v!r} would read back as a number")
    return s


@dataclass
class _Line:
    no: int
    text: str
    col: int  # column of the first non-blank character


@dataclass(frozen=True)
class StructureDocument:
    kind: str  # "semigroupoid" | "action"
    value: object
    line: int


def _lines(text: str) -> list[_Line]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            out.append(_Line(no, body.strip(), len(body) - len(body.lstrip()) + 1))
    return out


def _blocks(lines: list[_Line]) -> list[tuple[_Line, list[_Line]]]:
    blocks: list[tuple[_Line, list[_Line]]] = []
    for ln in lines:
        if ln.text in ("semigroupoid", "action"):
            blocks.append((ln, []))
        elif not blocks:
            raise ParseError(f"expected 'semigroupoid' or 'action', got {ln.text!r}", ln.no, ln.col)
        else:
            blocks[-1][1].append(ln)
    return blocks


def _tokens(ln: _Line, rest: str, offset: int) -> list[Hashable]:
    out = []
    for m in re.finditer(r"\S+", rest):
        out.append(read_token(m.group(), ln.no, ln.col + offset + m.start()))
    return out


def _semigroupoid_block(head: _Line, body: list[_Line]) -> Semigroupoid:
    elements = None
    product: dict = {}
    compose_lines: dict = {}
    for ln in body:
        key, sep, rest = ln.text.partition(":")
        off = len(key) + 1
        if not sep:
            raise ParseError(f"expected 'keyword: ...', got {ln.text!r}", ln.no, ln.col)
        key = key.strip()
        if key == "elements":
            if elements is not None:
                raise ParseError("duplicate 'elements:' line", ln.no, ln.col)
            elements = _tokens(ln, rest, off)
        elif key == "compose":
            m = re.fullmatch(r"\s*(\S+)\s+(\S+)\s*->\s*(\S+)\s*", rest)
            if not m:
                raise ParseError("expected 'compose: a b -> c'", ln.no, ln.col + off)
            a, b, c = (read_token(m.group(i), ln.no, ln.col + off + m.start(i)) for i in (1, 2, 3))
            if (a, b) in product:
                raise ParseError(f"pair ({a}, {b}) composed twice", ln.no, ln.col)
            product[(a, b)] = c
            compose_lines[(a, b)] = ln
        else:
            raise ParseError(f"unknown keyword {key!r} in semigroupoid block", ln.no, ln.col)
    if elements is None:
        raise ParseError("semigroupoid block needs an 'elements:' line", head.no, head.col)
    known = set(elements)
    for pair, c in product.items():
        for v in (*pair, c):
            if v not in known:
                ln = compose_lines[pair]
                raise ParseError(f"unknown element {v!r}", ln.no, ln.col)
    return validate_semigroupoid(elements, product.keys(), product)


def _action_block(
    head: _Line,
    body: list[_Line],
    previous: Semigroupoid | None,
    resolve: Callable[[str], Semigroupoid] | None,
) -> PartialAction:
    S = previous
    carrier = None
    dom: dict = {}
    maps: dict = {}
    where: dict = {}
    for ln in body:
        key, sep, rest = ln.text.partition(":")
        off = len(key) + 1
        if not sep:
            raise ParseError(f"expected 'keyword: ...', got {ln.text!r}", ln.no, ln.col)
        words = key.split()
        if words == ["over"]:
            if resolve is None:
                raise ParseError("'over:' needs a way to load the referenced semigroupoid", ln.no, ln.col)
            S = resolve(rest.strip())
        elif words == ["set"]:
            carrier = _tokens(ln, rest, off)
        elif len(words) == 2 and words[0] in ("dom", "map"):
            s = read_token(words[1], ln.no, ln.col)
            table = dom if words[0] == "dom" else maps
            if s in table:
                raise ParseError(f"duplicate '{words[0]} {s}:' line", ln.no, ln.col)
            where[(words[0], s)] = ln
            if words[0] == "dom":
                dom[s] = _tokens(ln, rest, off)
            else:
                pairs = {}
                pos = 0
                for m in ARROW.finditer(rest):
                    if rest[pos:m.start()].strip():
                        raise ParseError("expected 'a->b' entries", ln.no, ln.col + off + pos)
                    x = read_token(m.group(1), ln.no, ln.col + off + m.start(1))
                    y = read_token(m.group(2), ln.no, ln.col + off + m.start(2))
                    if x in pairs:
                        raise ParseError(f"{x!r} mapped twice", ln.no, ln.col + off + m.start())
                    pairs[x] = y
                    pos = m.end()
                if rest[pos:].strip():
                    raise ParseError("expected 'a->b' entries", ln.no, ln.col + off + pos)
                maps[s] = pairs
        else:
            raise ParseError(f"unknown keyword {key!r} in action block", ln.no, ln.col)
    if S is None:
        raise ParseError("action block has no semigroupoid (add 'over:' or a preceding block)", head.no, head.col)
    if carrier is None:
        raise ParseError("action block needs a 'set:' line", head.no, head.col)
    points = set(carrier)
    for kind, table in (("dom", dom), ("map", maps)):
        for s, vals in table.items():
            ln = where[(kind, s)]
            if s not in S:
                raise ParseError(f"unknown element {s!r}", ln.no, ln.col)
            items = vals.items() if isinstance(vals, dict) else ((v, v) for v in vals)
            for x, y in items:
                for v in (x, y):
                    if v not in points:
                        raise ParseError(f"unknown carrier point {v!r} in the entry for {s!r}", ln.no, ln.col)
    for s in maps:
        dom.setdefault(s, list(maps[s]))
    for s in dom:
        maps.setdefault(s, {})
    return validate_partial_action(S, carrier, dom, maps)


def parse_document(
    text: str, resolve: Callable[[str], Semigroupoid] | None = None
) -> list[StructureDocument]:
    """Parse every block; validation errors propagate as :class:`ValidationError`."""
    out = []
    last: Semigroupoid | None = None
    for head, body in _blocks(_lines(text)):
        if head.text == "semigroupoid":
            last = _semigroupoid_block(head, body)
            out.append(StructureDocument("semigroupoid", last, head.no))
        else:
            act = _action_block(head, body, last, resolve)
            out.append(StructureDocument("action", act, head.no))
    return out


def parse_semigroupoid(text: str) -> Semigroupoid:
    docs = [d for d in parse_document(text) if d.kind == "semigroupoid"]
    if len(docs) != 1:
        raise ParseError(f"expected exactly one semigroupoid block, found {len(docs)}")
    return docs[0].value


def parse_action(
    text: str,
    sgpd: Semigroupoid | None = None,
    resolve: Callable[[str], Semigroupoid] | None = None,
) -> PartialAction:
    """Parse the (single) action block.

    The semigroupoid comes from ``over:``, a preceding block, or ``sgpd``.
    """
    blocks = _blocks(_lines(text))
    last = sgpd
    found = []
    for head, body in blocks:
        if head.text == "semigroupoid":
            last = _semigroupoid_block(head, body)
        else:
            found.append(_action_block(head, body, last, resolve))
    if len(found) != 1:
        raise ParseError(f"expected exactly one action block, found {len(found)}")
    return found[0]


def serialize_semigroupoid(S: Semigroupoid) -> str:
    lines = ["semigroupoid", "elements: " + " ".join(write_token(e) for e in S.elements)]
    lines += [f"compose: {write_token(s)} {write_token(t)} -> {write_token(S.product[(s, t)])}" for s, t in S.pairs]
    return "\n".join(lines) + "\n"


def serialize_action(act: PartialAction, with_semigroupoid: bool = True) -> str:
    lines = []
    if with_semigroupoid:
        lines.append(serialize_semigroupoid(act.sgpd))
    body = ["action", "set:" + "".join(" " + write_token(x) for x in act.carrier)]
    for s in act.sgpd.elements:
        m = act.maps[s]
        if not m:
            continue
        body.append(f"dom {write_token(s)}:" + "".join(" " + write_token(x) for x in m))
        body.append(f"map {write_token(s)}:" + "".join(f" {write_token(x)}->{write_token(y)}" for x, y in m.items()))
    lines.append("\n".join(body) + "\n")
    return "\n".join(lines)


# -- globalization reports ---------------------------------------------------

@dataclass(frozen=True)
class GlobalizationReport:
    """Plain-text view of a globalization, all entries as strings."""

    classes: tuple[tuple[str, tuple[str, ...]], ...]
    domains: tuple[tuple[str, tuple[str, ...]], ...]
    beta: tuple[tuple[str, tuple[tuple[str, str], ...]], ...]
    delta: tuple[tuple[str, str], ...]
    degenerate_x: tuple[str, ...]
    degenerate_e: tuple[str, ...]


def globalization_report(G: Globalization) -> GlobalizationReport:
    S = G.base.sgpd
    lab = class_label
    classes = tuple((lab(rep), tuple(str(m) for m in members)) for rep, members in G.classes.classes.items())
    domains = tuple((str(s), tuple(lab(c) for c in G.E if c in G.sE(s))) for s in S.elements)
    beta = tuple((str(s), tuple((lab(c), lab(d)) for c, d in G.beta(s).items())) for s in S.elements)
    delta = tuple((str(x), lab(G.delta[x])) for x in G.base.carrier)
    dx = tuple(str(x) for x in degeneracy_split(G.base).x0)
    de = tuple(lab(c) for c in degeneracy_split(G.action).x0)
    return GlobalizationReport(classes, domains, beta, delta, dx, de)


def _join(items) -> str:
    return "".join(" " + i for i in items)


def render_report(r: GlobalizationReport) -> str:
    lines = ["globalization", f"size: {len(r.classes)}"]
    lines += [f"class {c}:{_join(m)}" for c, m in r.classes]
    lines += [f"domain {s}:{_join(d)}" for s, d in r.domains]
    lines += [f"beta {s}:{_join(f'{a}->{b}' for a, b in m)}" for s, m in r.beta]
    lines.append("delta:" + _join(f"{x}->{c}" for x, c in r.delta))
    lines.append("degenerate X:" + _join(r.degenerate_x))
    lines.append("degenerate E:" + _join(r.degenerate_e))
    return "\n".join(lines) + "\n"


def serialize_globalization(G: Globalization) -> str:
    return render_report(globalization_report(G))


def parse_globalization_report(text: str) -> GlobalizationReport:
    lines = _lines(text)
    if not lines or lines[0].text != "globalization":
        raise ParseError("expected a 'globalization' header", lines[0].no if lines else 1, 1)
    classes, domains, beta = [], [], []
    delta: tuple = ()
    dx: tuple = ()
    de: tuple = ()
    size = None
    for ln in lines[1:]:
        key, sep, rest = ln.text.partition(":")
        if not sep:
            raise ParseError(f"expected 'keyword: ...', got {ln.text!r}", ln.no, ln.col)
        words = key.split(" ", 1)
        items = tuple(rest.split())
        if key == "size":
            size = int(rest)
        elif words[0] == "class" and len(words) == 2:
            classes.append((words[1], items))
        elif words[0] == "domain" and len(words) == 2:
            domains.append((words[1], items))
        elif words[0] == "beta" and len(words) == 2:
            beta.append((words[1], tuple(tuple(i.split("->", 1)) for i in items)))
        elif key == "delta":
            delta = tuple(tuple(i.split("->", 1)) for i in items)
        elif key == "degenerate X":
            dx = items
        elif key == "degenerate E":
            de = items
        else:
            raise ParseError(f"unknown report line {key!r}", ln.no, ln.col)
    if size != len(classes):
        raise ParseError(f"size {size} does not match the {len(classes)} classes listed")
    return GlobalizationReport(tuple(classes), tuple(domains), tuple(beta), delta, dx, de)


# -- DOT --------------------------------------------------------------------

def _q(s: object) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(value: Semigroupoid | Globalization) -> str:
    """DOT digraph: for a semigroupoid an edge ``s -> st`` labelled ``t``;
    for a globalization an edge ``c -> beta_s(c)`` labelled ``s``."""
    if isinstance(value, Semigroupoid):
        nodes = [str(e) for e in value.elements]
        edges = [(str(s), str(value.product[(s, t)]), str(t)) for s, t in value.pairs]
    elif isinstance(value, Globalization):
        nodes = [class_label(c) for c in value.E]
        edges = [
            (class_label(c), class_label(d), str(s))
            for s in value.base.sgpd.elements
            for c, d in value.beta(s).items()
        ]
    else:
        raise TypeError(f"cannot draw {type(value).__name__}")
    if not nodes:
        return "digraph { }\n"
    lines = ["digraph {"]
    lines += [f"  {_q(n)};" for n in nodes]
    lines += [f"  {_q(a)} -> {_q(b)} [label={_q(lab)}];" for a, b, lab in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_file(path: str) -> list[StructureDocument]:
    """Parse a file, resolving ``over:`` relative to its directory."""
    base = os.path.dirname(os.path.abspath(path))

    def resolve(ref: str) -> Semigroupoid:
        with open(os.path.join(base, ref), encoding="utf-8") as fh:
            return parse_semigroupoid(fh.read())

    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read(), resolve)

