"""Text formats: lattice expressions, element literals and ramification profiles.

Lattice expressions are sums of Z[G]-spans::

    Z[S4] + (1/2)Z[S4]Tr(V2) + (1/4)Z[S4]Tr(sub: (1,2,3,4))

The bracket shorthand ``<1, 1/2Tr(V2)>`` is accepted when the group is known.
Element literals look like ``1 + 1/2*Tr(V4) - 3*(1,2)(3,4)``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .catalog import named_subgroups, standard_group
from .classifier import RamificationProfile, required_primes
from .group_algebra import AlgebraElement, trace_element
from .groups import Group, GroupError, Subgroup, format_perm, make_group
from .lattices import GroupLattice, PresentationError, TracePresentation, lattice_from_generators


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text, self.pos = text, pos
        where = f" at position {pos}" if text else ""
        super().__init__(f"{message}{where}")

    def pointer(self) -> str:
        return f"{self.text}\n{' ' * self.pos}^"


def read_spec(arg: str) -> str:
    """``@path`` reads the spec from a file; anything else is returned unchanged."""
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text().strip()
        except OSError as exc:
            raise ParseError(f"cannot read {arg[1:]}: {exc.strerror}") from None
    return arg


def resolve_group(label: str) -> Group:
    label = label.strip()
    try:
        if re.fullmatch(r"[A-Z]\w*", label):
            return standard_group(label)
        return make_group(label)
    except GroupError as exc:
        raise ParseError(str(exc)) from None


def resolve_subgroup(G: Group, text: str) -> Subgroup:
    """A catalogued name, ``G``, ``1``, or a generator list (``sub: (1,2), (3,4)``)."""
    t = text.strip()
    if t in ("G", G.name):
        return G.whole
    if t in ("1", "e", "{e}"):
        return G.trivial
    try:
        subs = named_subgroups(G.name) if standard_group(G.name) is G else {}
    except GroupError:
        subs = {}
    if t in subs:
        return subs[t]
    if t.startswith(("sub:", "<", "(")):
        return G.parse_subgroup(t)
    raise GroupError(f"unknown subgroup {t!r} in {G.name or 'the group'}")


class _Scanner:
    def __init__(self, text: str):
        self.text, self.pos = text, 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def eat(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.eat(s):
            self.fail(f"expected {s!r}")

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def fail(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def number(self) -> Fraction:
        self.skip()
        m = re.compile(r"\d+(?:\s*/\s*\d+)?").match(self.text, self.pos)
        if not m:
            self.fail("expected a number")
        a, _, b = m.group(0).partition("/")
        if b and int(b) == 0:
            self.fail("zero denominator")
        self.pos = m.end()
        return Fraction(int(a), int(b)) if b else Fraction(int(a))

    def balanced(self, open_: str, close: str) -> str:
        """Text up to the matching close bracket; the open bracket was consumed."""
        depth, start = 1, self.pos
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c == open_:
                depth += 1
            elif c == close:
                depth -= 1
                if depth == 0:
                    body = self.text[start:self.pos]
                    self.pos += 1
                    return body
            self.pos += 1
        self.pos = start
        self.fail(f"unbalanced {open_!r}")

    def coefficient(self) -> Fraction | None:
        """``(a/b)``, ``a/b`` or ``a``, optionally followed by ``*``."""
        self.skip()
        save = self.pos
        if self.eat("("):
            if re.compile(r"\s*\d").match(self.text, self.pos):
                c = self.number()
                if self.eat(")"):
                    self.eat("*")
                    return c
            self.pos = save
            return None
        if self.pos < len(self.text) and self.text[self.pos].isdigit():
            c = self.number()
            self.eat("*")
            return c
        return None


def _subgroup_at(sc: _Scanner, G: Group, body: str, at: int) -> Subgroup:
    try:
        return resolve_subgroup(G, body)
    except GroupError as exc:
        raise ParseError(str(exc), sc.text, at) from None


def parse_terms(text: str, group: Group | None = None) -> tuple[Group, list[tuple[Fraction, Subgroup]]]:
    """The ``(coefficient, subgroup)`` terms of a lattice expression; ``1`` is ``Tr`` of the trivial group."""
    sc = _Scanner(text)
    if sc.peek("<"):
        if group is None:
            sc.fail("the bracket form needs an explicit group")
        return group, _bracket_terms(sc, group)
    terms: list[tuple[Fraction, Subgroup]] = []
    G = group
    while True:
        sign = -1 if sc.eat("-") else 1
        c = sc.coefficient()
        c = Fraction(1) if c is None else c
        sc.skip()
        if not sc.eat("Z["):
            sc.fail("expected 'Z[G]'")
        at = sc.pos
        label = sc.balanced("[", "]")
        try:
            H = resolve_group(label) if G is None else G
            if G is not None and label.strip() not in (G.name, "G") and resolve_group(label) is not G:
                raise ParseError(f"group {label.strip()!r} differs from {G.name}")
        except ParseError as exc:
            raise ParseError(str(exc), text, at) from None
        G = H
        P = G.trivial
        if sc.eat("Tr("):
            at = sc.pos
            P = _subgroup_at(sc, G, sc.balanced("(", ")"), at)
        terms.append((sign * c, P))
        if sc.at_end():
            break
        sc.expect("+")
    return G, terms


def _bracket_terms(sc: _Scanner, G: Group) -> list[tuple[Fraction, Subgroup]]:
    sc.expect("<")
    terms = []
    while True:
        c = sc.coefficient()
        if sc.eat("Tr("):
            at = sc.pos
            P = _subgroup_at(sc, G, sc.balanced("(", ")"), at)
            terms.append((Fraction(1) if c is None else c, P))
        elif c is not None:
            terms.append((c, G.trivial))
        else:
            sc.fail("expected a coefficient or Tr(...)")
        if sc.eat(">"):
            break
        sc.expect(",")
    if not sc.at_end():
        sc.fail("trailing input")
    return terms


def parse_lattice(text: str, group: Group | None = None) -> GroupLattice:
    """Parse a lattice expression; the group comes from ``Z[...]`` or ``group``."""
    G, terms = parse_terms(text, group)
    return lattice_from_generators([trace_element(P).scale(c) for c, P in terms], "ZG")


def parse_presentation(text: str, group: Group | None = None, p: int | None = None) -> TracePresentation:
    """A lattice expression whose terms are ``1`` and ``p^-n Tr(P)`` for one prime p."""
    G, terms = parse_terms(text, group)
    levels = []
    for c, P in terms:
        if c.numerator != 1:
            raise ParseError(f"coefficient {c} is not of the form 1/p^n")
        d = c.denominator
        if d == 1:
            n = 0
        else:
            q = p or next(k for k in range(2, d + 1) if d % k == 0)
            p = q
            n = 0
            while d % q == 0:
                d //= q
                n += 1
            if d != 1:
                raise ParseError(f"coefficient {c} is not a power of 1/{q}")
        levels.append((n, P))
    levels.sort(key=lambda t: (t[0], t[1].order))
    if not levels or levels[0] != (0, G.trivial):
        levels.insert(0, (0, G.trivial))
    try:
        return TracePresentation(G, p or 2, levels)
    except PresentationError as exc:
        raise ParseError(str(exc)) from None


def parse_element(text: str, G: Group) -> AlgebraElement:
    """``1 + 1/2*Tr(V4) - (1,2)(3,4)`` as an element of Q[G]."""
    sc = _Scanner(text)
    total = AlgebraElement.zero(G)
    first = True
    while True:
        sign = 1
        if sc.eat("-"):
            sign = -1
        elif not first:
            sc.expect("+")
            if sc.eat("-"):
                sign = -1
        first = False
        c = sc.coefficient()
        sc.skip()
        at = sc.pos
        if sc.eat("Tr("):
            atom = trace_element(_subgroup_at(sc, G, sc.balanced("(", ")"), at))
        elif sc.peek("("):
            m = re.compile(r"(\([^()]*\))+").match(sc.text, sc.pos)
            if not m:
                sc.fail("malformed permutation")
            sc.pos = m.end()
            try:
                atom = AlgebraElement.basis(G, G.element(m.group(0)))
            except GroupError as exc:
                raise ParseError(str(exc), text, at) from None
        elif sc.eat("e") or sc.eat("1"):
            atom = AlgebraElement.one(G)
        elif c is not None:
            atom = AlgebraElement.one(G)
        else:
            sc.fail("expected a term")
        total = total + atom.scale(sign * (Fraction(1) if c is None else c))
        if sc.at_end():
            return total


# ---------------------------------------------------------------------------
# profiles

def _json_subgroup(G: Group, spec, what: str) -> Subgroup:
    try:
        if isinstance(spec, str):
            return resolve_subgroup(G, spec)
        if isinstance(spec, list):
            if not spec:
                return G.trivial
            return G.subgroup([str(g) for g in spec])
    except GroupError as exc:
        raise ParseError(f"{what}: {exc}") from None
    raise ParseError(f"{what}: expected a subgroup name or a list of generators")


def profile_from_dict(obj: dict, group: str | None = None) -> RamificationProfile:
    """``{group, p, decomposition: [gens], filtration: [[gens], ...]}``."""
    label = obj.get("group", group)
    if label is None:
        raise ParseError("profile without a group")
    G = resolve_group(str(label))
    try:
        p = int(obj["p"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("profile needs an integer 'p'") from None
    D = _json_subgroup(G, obj.get("decomposition", "G"), "decomposition")
    filt = []
    if "filtration" in obj:
        filt = [_json_subgroup(G, s, f"G_{t}") for t, s in enumerate(obj["filtration"])]
    elif "steps" in obj:
        for step in obj["steps"]:
            H = _json_subgroup(G, step["group"], "step")
            filt.extend([H] * (int(step["until"]) + 1 - len(filt)))
    return RamificationProfile(p, G, D, filt)


def load_profiles(text: str) -> tuple[str, dict[int, RamificationProfile]]:
    """One profile object, or ``{group, profiles: [...]}`` with several primes."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", text, exc.pos) from None
    if not isinstance(obj, dict) or "group" not in obj:
        raise ParseError("expected a JSON object with a 'group' field")
    label = str(obj["group"])
    required_primes(label)
    items = obj["profiles"] if "profiles" in obj else [obj]
    out = {}
    for item in items:
        pr = profile_from_dict(item, label)
        out[pr.p] = pr
    return label, out


def profile_to_dict(pr: RamificationProfile) -> dict:
    G = pr.group

    def gens(H: Subgroup):
        return [format_perm(G.elements[g]) for g in H.generators()]

    return {"group": G.name, "p": pr.p, "decomposition": gens(pr.decomposition),
            "filtration": [gens(H) for H in pr.filtration]}


__all__ = [
    "ParseError", "read_spec", "resolve_group", "resolve_subgroup", "parse_terms", "parse_lattice",
    "parse_presentation",
    "parse_element", "profile_from_dict", "load_profiles", "profile_to_dict",
]
