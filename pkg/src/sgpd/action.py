"""Partial actions of a semigroupoid on a finite set."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import ActionError, ConsistencyError, Violation
from .semigroupoid import Element, Semigroupoid, identities

Point = Hashable


def _shape_violations(S: Semigroupoid, carrier: Sequence[Point], maps: Mapping) -> list[Violation]:
    out = []
    points = set(carrier)
    if len(points) != len(carrier):
        out.append(Violation("carrier", "carrier has duplicate points"))
    for s, m in maps.items():
        if s not in S:
            out.append(Violation("unknown", f"domain given for {s!r}, which is not an element", {"element": s}))
            continue
        for x, y in m.items():
            if x not in points:
                out.append(Violation("carrier", f"domain of {s!r} contains {x!r}, outside the carrier", {"element": s, "point": x}))
            if y not in points:
                out.append(Violation("carrier", f"map of {s!r} sends {x!r} to {y!r}, outside the carrier", {"element": s, "point": y}))
    return out


def _law_violations(S: Semigroupoid, carrier: Sequence[Point], maps: Mapping) -> list[Violation]:
    """P1 and P2 for every composable pair, in pair order then carrier order."""
    out = []
    empty: dict = {}
    for s, t in S.pairs:
        st = S.product[(s, t)]
        a_s, a_t, a_st = maps.get(s, empty), maps.get(t, empty), maps.get(st, empty)
        pulled = {x for x in a_t if a_t[x] in a_s}
        meet = {x for x in a_t if x in a_st}
        if pulled != meet:
            x = next(p for p in carrier if p in pulled ^ meet)
            side = "lands in" if x in pulled else "does not land in"
            out.append(
                Violation(
                    "P1",
                    f"pair {(s, t)!r}: {t!r} maps {x!r} to {a_t[x]!r}, which {side} the domain of {s!r}, "
                    f"but {x!r} is {'not ' if x not in meet else ''}in the domains of both {t!r} and {st!r}",
                    {"pair": (s, t), "point": x},
                )
            )
        for x in carrier:
            if x not in meet:
                continue
            y = a_t[x]
            if y not in a_s:
                out.append(
                    Violation("P2", f"pair {(s, t)!r}: {t!r} maps {x!r} to {y!r}, outside the domain of {s!r}", {"pair": (s, t), "point": x})
                )
            elif a_s[y] != a_st[x]:
                out.append(
                    Violation(
                        "P2",
                        f"pair {(s, t)!r} at {x!r}: {st!r} gives {a_st[x]!r} but {s!r} after {t!r} gives {a_s[y]!r}",
                        {"pair": (s, t), "point": x},
                    )
                )
    return out


@dataclass(frozen=True)
class PartialAction:
    """A family of partial maps ``alpha_s: dom(s) -> carrier`` satisfying P1 and P2.

    ``maps[s]`` is a dict whose keys are the domain of ``s``; every element
    of the semigroupoid has an entry (possibly empty).  Images are derived.
    """

    sgpd: Semigroupoid
    carrier: tuple
    maps: dict

    def __post_init__(self) -> None:
        object.__setattr__(self, "carrier", tuple(self.carrier))
        raw = dict(self.maps)
        bad = _shape_violations(self.sgpd, self.carrier, raw)
        if bad:
            raise ActionError(bad)
        order = {x: i for i, x in enumerate(self.carrier)}
        maps = {
            s: {x: raw[s][x] for x in sorted(raw.get(s, {}), key=order.__getitem__)}
            for s in self.sgpd.elements
        }
        object.__setattr__(self, "maps", maps)
        bad = _law_violations(self.sgpd, self.carrier, maps)
        if bad:
            raise ActionError(bad)

    def __hash__(self) -> int:
        return hash((self.sgpd, self.carrier))

    def dom(self, s: Element) -> frozenset:
        return frozenset(self.maps[s])

    def image(self, s: Element) -> frozenset:
        return frozenset(self.maps[s].values())

    def apply(self, s: Element, x: Point) -> Point:
        try:
            return self.maps[s][x]
        except KeyError:
            raise ActionError(f"{x!r} is not in the domain of {s!r}") from None

    @cached_property
    def position(self) -> dict:
        return {x: i for i, x in enumerate(self.carrier)}

    def sorted(self, points: Iterable[Point]) -> list:
        return sorted(points, key=self.position.__getitem__)

    def __repr__(self) -> str:
        doms = {s: sorted(m, key=repr) for s, m in self.maps.items() if m}
        return f"PartialAction(carrier={list(self.carrier)!r}, domains={doms!r})"


def action_violations(
    sgpd: Semigroupoid, carrier: Sequence[Point], maps: Mapping[Element, Mapping[Point, Point]]
) -> list[Violation]:
    bad = _shape_violations(sgpd, carrier, maps)
    return bad or _law_violations(sgpd, carrier, maps)


def validate_partial_action(
    sgpd: Semigroupoid,
    carrier: Sequence[Point],
    dom: Mapping[Element, Iterable[Point]],
    map: Mapping[Element, Mapping[Point, Point]],
) -> PartialAction:
    """Build a partial action from separate domains and maps.

    Elements missing from both ``dom`` and ``map`` get an empty domain.
    """
    maps: dict = {}
    for s in set(dom) | set(map):
        d = set(dom.get(s, ()))
        m = dict(map.get(s, {}))
        if s in dom and set(m) != d:
            extra = sorted(set(m) ^ d, key=repr)[0]
            raise ActionError(
                Violation("map", f"map of {s!r} must be defined exactly on its domain; mismatch at {extra!r}", {"element": s, "point": extra})
            )
        maps[s] = m
    return PartialAction(sgpd, tuple(carrier), maps)


@dataclass(frozen=True)
class GlobalityReport:
    is_global: bool
    witnesses: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.is_global

    @property
    def witness(self) -> Violation | None:
        return self.witnesses[0] if self.witnesses else None


def _g1_violations(act: PartialAction) -> list[Violation]:
    S = act.sgpd
    out = []
    for i, s in enumerate(S.elements):
        for t in S.elements[i + 1:]:
            if S.right(s) and S.right(s) == S.right(t) and act.dom(s) != act.dom(t):
                out.append(Violation("G1", f"{s!r} and {t!r} have the same right-composable set but different domains", {"pair": (s, t)}))
    return out


def global_violations(act: PartialAction) -> list[Violation]:
    S = act.sgpd
    out = _g1_violations(act)
    for s, t in S.pairs:
        st = S.product[(s, t)]
        if act.dom(t) != act.dom(st):
            out.append(
                Violation("G2", f"{st} = {s}·{t} but the domains of {t} and {st} differ", {"pair": (s, t), "product": st})
            )
    return out


def _characterized_global(act: PartialAction) -> bool:
    """Globality via G1 plus, per composable pair: equal domains of t and st,
    image of t inside the domain of s, and alpha_s o alpha_t = alpha_st."""
    if _g1_violations(act):
        return False
    S = act.sgpd
    for s, t in S.pairs:
        st = S.product[(s, t)]
        if act.dom(t) != act.dom(st) or not act.image(t) <= act.dom(s):
            return False
        a_s, a_t, a_st = act.maps[s], act.maps[t], act.maps[st]
        if any(a_s[a_t[x]] != a_st[x] for x in a_t):
            return False
    return True


def is_global(act: PartialAction) -> GlobalityReport:
    bad = global_violations(act)
    report = GlobalityReport(not bad, tuple(bad))
    if report.is_global != _characterized_global(act):
        raise ConsistencyError("the two globality checks disagree")
    return report


def left_regular(S: Semigroupoid) -> PartialAction:
    """``S`` acting on itself: ``dom(s) = S^s`` and ``s . x = sx``."""
    maps = {s: {t: S.product[(s, t)] for t in S.sorted(S.right(s))} for s in S.elements}
    act = PartialAction(S, S.elements, maps)
    if not is_global(act):
        raise ConsistencyError("left regular action is not global")
    return act


def restrict(glob: PartialAction, subset: Iterable[Point], check_global: bool = True) -> PartialAction:
    """Restriction of a global action to ``subset``.

    A point stays in the domain of ``s`` when both it and its image lie in
    ``subset``.
    """
    sub = set(subset)
    unknown = sub - set(glob.carrier)
    if unknown:
        raise ActionError(f"subset point {sorted(unknown, key=repr)[0]!r} is not in the carrier")
    if check_global:
        report = is_global(glob)
        if not report:
            raise ActionError(list(report.witnesses))
    carrier = tuple(x for x in glob.carrier if x in sub)
    maps = {
        s: {x: y for x, y in m.items() if x in sub and y in sub}
        for s, m in glob.maps.items()
    }
    try:
        return PartialAction(glob.sgpd, carrier, maps)
    except ActionError as exc:
        raise ConsistencyError(f"restriction of a global action is not a partial action: {exc}") from exc


@dataclass(frozen=True)
class DegeneracySplit:
    x1: tuple
    x0: tuple

    @property
    def nondegenerate(self) -> bool:
        return not self.x0


def degeneracy_split(act: PartialAction) -> DegeneracySplit:
    covered: set = set()
    for s in act.sgpd.elements:
        covered |= act.dom(s) | act.image(s)
    x1 = tuple(x for x in act.carrier if x in covered)
    x0 = tuple(x for x in act.carrier if x not in covered)
    return DegeneracySplit(x1, x0)


def identity_action_violations(act: PartialAction) -> list[Violation]:
    """Projection behaviour of identities: for ``e`` an identity, the image of
    ``e`` sits inside its domain and ``e`` fixes it; and for (e, s) composable
    the image of ``s`` sits inside the image of ``e``."""
    S = act.sgpd
    out = []
    for e in S.sorted(identities(S)):
        a_e = act.maps[e]
        for y in act.sorted(act.image(e)):
            if y not in a_e or a_e[y] != y:
                out.append(Violation("identity", f"identity {e!r} does not fix {y!r} in its image", {"element": e, "point": y}))
        for s in S.sorted(S.right(e)):
            if not act.image(s) <= act.image(e):
                out.append(Violation("identity", f"image of {s!r} is not inside the image of {e!r}", {"pair": (e, s)}))
    return out
