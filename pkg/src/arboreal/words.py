"""Algebra of graph products of cyclic groups.

Elements are syllable sequences ``(vertex, exponent)``. Reduction deletes
identity syllables and joins same-vertex syllables that can see each other
through commuting material; the canonical form is the greedy
smallest-vertex-first representative of the shuffle orbit, which coincides
with the lexicographic minimum of the orbit. Two words represent the same
group element iff their canonical forms are identical sequences.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, NamedTuple

from .errors import DegeneratePresentationError, InputError, ResourceCapError
from .graphs import INFINITY, SimpleGraph, induced_subgraph, is_complete

DEFAULT_BALL_CAP = 200_000


class Syllable(NamedTuple):
    vertex: str
    exponent: int


Word = tuple  # tuple[Syllable, ...]; may be unreduced


class Presentation:
    """A graph of cyclic groups: finite order n >= 2 or INFINITY per vertex.

    Rejects degenerate products (trivial vertex groups, fewer than two
    vertices). All operations are pure; instances are immutable by
    convention.
    """

    def __init__(self, graph: SimpleGraph, orders: dict[str, int | float]):
        if len(graph.vertices) < 2:
            raise DegeneratePresentationError("a graph product needs at least two vertices")
        for v in graph.vertices:
            if v not in orders:
                raise DegeneratePresentationError(f"vertex {v} has no order entry")
            n = orders[v]
            if n != INFINITY and (not isinstance(n, int) or n < 2):
                raise DegeneratePresentationError(
                    f"vertex {v} has order {n}; orders must be integers >= 2 or INFINITY"
                )
        self.graph = graph
        self.orders = {v: orders[v] for v in graph.vertices}

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.graph == other.graph
            and self.orders == other.orders
        )

    def __hash__(self):
        return hash((self.graph, tuple(sorted(self.orders.items()))))

    def __repr__(self):
        return f"Presentation({self.graph!r}, {self.orders!r})"

    # --- syllables -------------------------------------------------------

    def normalize_exponent(self, vertex: str, exponent: int) -> int:
        """Exponent reduced into {1,...,n-1} for finite order n; 0 = identity."""
        if vertex not in self.graph.index:
            raise InputError(f"unknown vertex: {vertex}")
        n = self.orders[vertex]
        return exponent % n if n != INFINITY else exponent

    def syllable(self, vertex: str, exponent: int) -> Syllable:
        e = self.normalize_exponent(vertex, exponent)
        if e == 0:
            raise InputError(f"identity syllable at vertex {vertex}")
        return Syllable(vertex, e)

    def make_word(self, pairs: Iterable[tuple[str, int]]) -> Word:
        """Word from (vertex, exponent) pairs, dropping identity syllables."""
        out = []
        for v, e in pairs:
            e = self.normalize_exponent(v, e)
            if e != 0:
                out.append(Syllable(v, e))
        return tuple(out)

    # --- reduction and canonical form -------------------------------------

    def reduce(self, word: Word) -> Word:
        """Reduced word for the same element (identity deletions + joins)."""
        sylls = list(self.make_word(word))
        adjacency = self.graph.adjacency
        changed = True
        while changed:
            changed = False
            for i in range(len(sylls)):
                v = sylls[i].vertex
                lk = adjacency[v]
                for j in range(i + 1, len(sylls)):
                    u = sylls[j].vertex
                    if u == v:
                        e = self.normalize_exponent(v, sylls[i].exponent + sylls[j].exponent)
                        del sylls[j]
                        if e == 0:
                            del sylls[i]
                        else:
                            sylls[i] = Syllable(v, e)
                        changed = True
                        break
                    if u not in lk:
                        break
                if changed:
                    break
        return tuple(sylls)

    def canonical(self, word: Word) -> Word:
        """Greedy smallest-movable-vertex-first shuffle of the reduced word."""
        rem = list(self.reduce(word))
        adjacency = self.graph.adjacency
        index = self.graph.index
        out = []
        while rem:
            best = None
            blocked: set[str] = set()
            for pos, syll in enumerate(rem):
                v = syll.vertex
                if v not in blocked and all(s.vertex in adjacency[v] for s in rem[:pos]):
                    if best is None or index[v] < index[rem[best].vertex]:
                        best = pos
                blocked.add(v)
            out.append(rem.pop(best))
        return tuple(out)

    def is_canonical(self, word: Word) -> bool:
        return tuple(word) == self.canonical(word)

    # --- group operations --------------------------------------------------

    def multiply(self, *words: Word) -> Word:
        return self.canonical(tuple(s for w in words for s in w))

    def inverse(self, word: Word) -> Word:
        return self.canonical(tuple(Syllable(v, -e) for v, e in reversed(tuple(word))))

    def power(self, word: Word, n: int) -> Word:
        g = self.canonical(word)
        if n < 0:
            g, n = self.inverse(g), -n
        return self.multiply(*([g] * n)) if n else ()

    def identity(self) -> Word:
        return ()

    # --- supports ------------------------------------------------------------

    def support(self, word: Word) -> set[str]:
        return {s.vertex for s in self.reduce(word)}

    def first_vertices(self, word: Word) -> set[str]:
        """Vertices whose syllable can begin some reduced word for the element."""
        sylls = self.reduce(word)
        adjacency = self.graph.adjacency
        out = set()
        for pos, syll in enumerate(sylls):
            v = syll.vertex
            if v not in out and all(s.vertex in adjacency[v] for s in sylls[:pos]):
                out.add(v)
        return out

    def last_vertices(self, word: Word) -> set[str]:
        sylls = self.reduce(word)
        adjacency = self.graph.adjacency
        out = set()
        for pos, syll in enumerate(reversed(sylls)):
            v = syll.vertex
            if v not in out and all(
                s.vertex in adjacency[v] for s in sylls[len(sylls) - pos:]
            ):
                out.add(v)
        return out

    # --- full subgroups --------------------------------------------------------

    def in_full_subgroup(self, word: Word, subset: Iterable[str]) -> bool:
        """Membership in G_S, decided by support containment."""
        return self.support(word) <= self.graph.check_vertices(subset)

    def full_subgroup_order(self, subset: Iterable[str]) -> int | float:
        """|G_S|: finite iff S induces a complete graph of finite-order vertices."""
        subset = self.graph.check_vertices(subset)
        if not subset:
            return 1
        if not is_complete(induced_subgraph(self.graph, subset)):
            return INFINITY
        total = 1
        for v in subset:
            n = self.orders[v]
            if n == INFINITY:
                return INFINITY
            total *= n
        return total

    def induced(self, subset: Iterable[str]) -> "Presentation":
        """Sub-presentation on ``subset`` with inherited orders."""
        subset = self.graph.check_vertices(subset)
        return Presentation(
            induced_subgraph(self.graph, subset),
            {v: self.orders[v] for v in subset},
        )

    # --- bounded enumeration ------------------------------------------------

    def generators(self, exp_bound: int = 1, subset: Iterable[str] | None = None) -> list[Word]:
        """Single-syllable generators: all nontrivial exponents for finite
        vertices, exponents in {-exp_bound..-1, 1..exp_bound} for infinite ones.

        With ``subset`` given, only generators of the full subgroup G_S.
        """
        allowed = self.graph.check_vertices(subset) if subset is not None else None
        gens = []
        for v in self.graph.vertices:
            if allowed is not None and v not in allowed:
                continue
            n = self.orders[v]
            if n == INFINITY:
                exps = [e for k in range(1, exp_bound + 1) for e in (k, -k)]
            else:
                exps = range(1, n)
            gens.extend((Syllable(v, e),) for e in exps)
        return gens

    def enumerate_ball(
        self,
        radius: int,
        exp_bound: int = 1,
        cap: int = DEFAULT_BALL_CAP,
        subset: Iterable[str] | None = None,
    ) -> set[Word]:
        """Canonical forms reachable in <= radius generator multiplications."""
        return self.enumerate_ball_info(radius, exp_bound=exp_bound, cap=cap, subset=subset)[0]

    def enumerate_ball_info(
        self,
        radius: int,
        exp_bound: int = 1,
        cap: int = DEFAULT_BALL_CAP,
        subset: Iterable[str] | None = None,
    ) -> tuple[set[Word], bool]:
        """Ball plus a saturation flag (True iff the whole subgroup was reached).

        With ``subset`` given, the ball of the full subgroup G_S.
        """
        gens = self.generators(exp_bound, subset=subset)
        seen = {()}
        frontier = [()]
        for _ in range(radius):
            new = []
            for g in frontier:
                for s in gens:
                    h = self.canonical(g + s)
                    if h not in seen:
                        seen.add(h)
                        new.append(h)
            if len(seen) > cap:
                raise ResourceCapError(
                    f"ball exceeded cap of {cap} elements at radius {radius}"
                )
            frontier = new
            if not frontier:
                return seen, True
        # saturated iff one more step adds nothing
        for g in frontier:
            for s in gens:
                if self.canonical(g + s) not in seen:
                    return seen, False
        return seen, True


# --- compact word syntax ------------------------------------------------------

_SYLLABLE_RE = re.compile(r"^(?P<vertex>[^\s^]+?)(\^(?P<exp>-?\d+))?$")


def parse_word(pres: Presentation, text: str) -> Word:
    """Parse ``a^2 b c^-1`` style text into a word over ``pres``.

    ``1`` (alone) denotes the identity. Zero exponents are rejected.
    """
    text = text.strip()
    if text in ("", "1"):
        return ()
    pairs = []
    for token in text.split():
        m = _SYLLABLE_RE.match(token)
        if not m:
            raise InputError(f"bad syllable syntax: {token!r}")
        vertex = m.group("vertex")
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        if exp == 0:
            raise InputError(f"zero exponent in syllable {token!r}")
        if vertex not in pres.graph.index:
            raise InputError(f"unknown vertex: {vertex}")
        pairs.append((vertex, exp))
    return pres.make_word(pairs)


def format_word(word: Word) -> str:
    """Inverse of parse_word on canonical forms; identity prints as ``1``."""
    if not word:
        return "1"
    return " ".join(v if e == 1 else f"{v}^{e}" for v, e in word)


def word_to_json(word: Word) -> list[list]:
    return [[v, e] for v, e in word]


def word_from_json(pres: Presentation, data: list) -> Word:
    try:
        pairs = [(str(v), int(e)) for v, e in data]
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad word JSON: {data!r}") from exc
    if any(e == 0 for _, e in pairs):
        raise InputError("zero exponent in word JSON")
    return pres.make_word(pairs)


def order_is_finite(n: int | float) -> bool:
    return n != INFINITY


__all__ = [
    "DEFAULT_BALL_CAP",
    "INFINITY",
    "Presentation",
    "Syllable",
    "Word",
    "format_word",
    "order_is_finite",
    "parse_word",
    "word_from_json",
    "word_to_json",
]
