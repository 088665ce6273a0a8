"""Prime graphs: construction, compact forms, components, cocliques, I/O.

Two distinct vertices r, s of the prime graph of G are adjacent exactly when
G has an element of order rs.  For the exceptional families in the scope of
this package (G2 over powers of 3, F4 and 2F4 in characteristic 2, E8
anywhere) the edge set is given by explicit adjacency criteria in terms of
the orders e(r, q); for Alt, PSL2 and Sz it comes from closed-form spectra;
a few further groups ship as tabulated data.

Criterion graphs are built twice over: once straight from the pairwise
nonadjacency conditions (``graph_of``), and once by expanding the compact
class-level form (``compact_form`` / ``expand_compact``).  The test suite
checks the two constructions coincide.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .groups import (
    GroupId,
    Spectrum,
    UnsupportedGroupError,
    parse_group_id,
    prime_spectrum,
    spectrum_alt,
    spectrum_psl2,
    spectrum_sz,
)
from .numtheory import PrimeSet, is_prime, mult_order, prime_divisors

Edge = tuple[int, int]
ClassInfo = tuple[tuple[str, PrimeSet], ...]


class MissingDataError(LookupError):
    """No tabulated graph is available for the requested group."""


def _norm_edge(r: int, s: int) -> Edge:
    if r == s:
        raise ValueError(f"loop at vertex {r}")
    return (r, s) if r < s else (s, r)


@dataclass(frozen=True)
class PrimeGraph:
    """A finite graph on prime vertices.

    ``classes`` is optional display metadata (label -> primes) recording the
    clique classes a criterion construction used; it does not take part in
    graph equality as defined by :func:`graphs_equal`.
    """

    name: str
    vertices: PrimeSet
    edges: frozenset[Edge]
    classes: ClassInfo | None = None

    def __post_init__(self) -> None:
        vs = set(self.vertices)
        if tuple(sorted(vs)) != self.vertices:
            raise ValueError("vertices must be strictly ascending")
        for v in self.vertices:
            if not is_prime(v):
                raise ValueError(f"vertex {v} is not prime")
        for r, s in self.edges:
            if r >= s:
                raise ValueError(f"edge ({r}, {s}) not normalized")
            if r not in vs or s not in vs:
                raise ValueError(f"edge ({r}, {s}) has an endpoint outside the vertex set")

    def has_edge(self, r: int, s: int) -> bool:
        return _norm_edge(r, s) in self.edges

    def neighbors(self, v: int) -> PrimeSet:
        if v not in self.vertices:
            raise ValueError(f"{v} is not a vertex")
        out = [s for r, s in self.edges if r == v] + [r for r, s in self.edges if s == v]
        return tuple(sorted(out))

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)


def make_graph(name: str, vertices, edges, classes: ClassInfo | None = None) -> PrimeGraph:
    return PrimeGraph(
        name,
        tuple(sorted(set(vertices))),
        frozenset(_norm_edge(r, s) for r, s in edges),
        classes,
    )


def graphs_equal(a: PrimeGraph, b: PrimeGraph) -> bool:
    """Labeled-graph equality: same vertex set and same edge set."""
    return a.vertices == b.vertices and a.edges == b.edges


def graph_from_spectrum(w: Spectrum, name: str = "") -> PrimeGraph:
    """Graph on the primes of the spectrum; r ~ s iff rs is an element order."""
    verts = w.primes
    edges = [(r, s) for i, r in enumerate(verts) for s in verts[i + 1 :] if r * s in w]
    return make_graph(name, verts, edges)


# Adjacency criteria.  Each function takes the e(., q)-classes of two
# distinct vertices and reports nonadjacency per the published criterion for
# the family.  The characteristic p carries the class "p" (its order modulo
# itself is undefined); primes sharing a class are always adjacent, as the
# compact forms dictate.


def _g2_nonadjacent(cr, cs) -> bool:
    # nonadjacent iff either order-class is 3 or 6
    return cr in (3, 6) or cs in (3, 6)


def _f4_nonadjacent(r: int, cr, s: int, cs) -> bool:
    if cr == "p" or r == 2:
        return cs in (8, 12)
    if cs == "p" or s == 2:
        return cr in (8, 12)
    k, l = sorted((cr, cs))
    return l in (8, 12) or (l == 6 and k in (3, 4)) or (l == 4 and k == 3)


def _e8_nonadjacent(r: int, cr, s: int, cs, q: int) -> bool:
    if cr == "p" or r == 2:
        return cs in (15, 20, 24, 30)
    if cs == "p" or s == 2:
        return cr in (15, 20, 24, 30)
    (k, rk), (l, _) = sorted(((cr, r), (cs, s)))
    if k == l:
        return False
    if l == 6:
        return k == 5
    if l in (7, 14):
        return k >= 3
    if l == 9:
        return k >= 4
    if l in (8, 12):
        return k >= 5 and k != 6
    if l == 10:
        return k >= 3 and k not in (4, 6)
    if l == 18:
        return k not in (1, 2, 6)
    if l == 20:
        return rk * k != 20
    if l in (15, 24, 30):
        return True
    return False


_E8_ORDER_CLASSES = frozenset({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30})
_F4_ORDER_CLASSES = frozenset({1, 2, 3, 4, 6, 8, 12})
_G2_ORDER_CLASSES = frozenset({1, 2, 3, 6})


def _order_classes(g: GroupId, allowed: frozenset[int]) -> dict[int, object]:
    """Map each vertex of pi(G) to its e(., q)-class ("p" for the characteristic)."""
    classes: dict[int, object] = {}
    for r in prime_spectrum(g):
        if r == g.p:
            classes[r] = "p"
            continue
        e = mult_order(r, g.q)
        if e not in allowed:
            raise AssertionError(f"unexpected order class e({r}, {g.q}) = {e} in {g}")
        classes[r] = e
    return classes


def _class_info(classes: dict[int, object], char_label: str) -> ClassInfo:
    by_class: dict[object, list[int]] = {}
    for v, c in classes.items():
        by_class.setdefault(c, []).append(v)

    def label(c) -> str:
        return char_label if c == "p" else f"R_{c}"

    def sort_key(c):
        return (0, 0) if c == "p" else (1, c)

    return tuple(
        (label(c), tuple(sorted(by_class[c]))) for c in sorted(by_class, key=sort_key)
    )


def _criterion_graph(g: GroupId, classes: dict[int, object], nonadj) -> PrimeGraph:
    verts = sorted(classes)
    edges = []
    for i, r in enumerate(verts):
        for s in verts[i + 1 :]:
            if classes[r] == classes[s] or not nonadj(r, classes[r], s, classes[s]):
                edges.append((r, s))
    return make_graph(str(g), verts, edges, _class_info(classes, "{" + str(g.p) + "}"))


def _graph_g2(g: GroupId) -> PrimeGraph:
    if g.p != 3:
        raise UnsupportedGroupError(f"{g}: the G2 adjacency criterion needs q a power of 3")
    classes = _order_classes(g, _G2_ORDER_CLASSES)
    return _criterion_graph(
        g, classes, lambda r, cr, s, cs: _g2_nonadjacent(cr, cs)
    )


def _graph_f4(g: GroupId) -> PrimeGraph:
    if g.p != 2:
        raise UnsupportedGroupError(f"{g}: the F4 adjacency criterion needs q even")
    classes = _order_classes(g, _F4_ORDER_CLASSES)
    return _criterion_graph(g, classes, lambda r, cr, s, cs: _f4_nonadjacent(r, cr, s, cs))


def _graph_e8(g: GroupId) -> PrimeGraph:
    classes = _order_classes(g, _E8_ORDER_CLASSES)
    return _criterion_graph(
        g, classes, lambda r, cr, s, cs: _e8_nonadjacent(r, cr, s, cs, g.q)
    )


def _2f4_torus_factors(q: int) -> list[int]:
    """The six pairwise-coprime-away-from-3 torus factors of 2F4(q)."""
    g = GroupId("2F4", q=q)
    root = 2 ** ((g.k + 1) // 2)          # sqrt(2q)
    root3 = 2 ** ((3 * g.k + 1) // 2)     # sqrt(2q^3)
    return [
        q - 1,
        q + 1,
        q * q + 1,
        q * q - q + 1,
        q * q - root3 + q - root + 1,
        q * q + root3 + q + root + 1,
    ]


def _graph_2f4(g: GroupId) -> PrimeGraph:
    q = g.q
    factors = _2f4_torus_factors(q)
    classes: dict[int, object] = {}
    for r in prime_spectrum(g):
        if r == 2:
            classes[r] = "p"
        elif r == 3:
            classes[r] = "3"
        else:
            ks = [k for k, m in enumerate(factors, start=1) if m % r == 0]
            if len(ks) != 1:
                raise AssertionError(f"vertex {r} lies in torus factors {ks} of {g}")
            classes[r] = ks[0]

    def nonadj(cr, cs) -> bool:
        if cr == "p":
            return cs in (4, 5, 6)
        if cs == "p":
            return cr in (4, 5, 6)
        if cr == "3":
            return cs in (3, 5, 6)
        if cs == "3":
            return cr in (3, 5, 6)
        return {cr, cs} not in ({1, 2}, {1, 3})

    verts = sorted(classes)
    edges = []
    for i, r in enumerate(verts):
        for s in verts[i + 1 :]:
            if classes[r] == classes[s] or not nonadj(classes[r], classes[s]):
                edges.append((r, s))

    labels = {
        "p": "{2}",
        "3": "{3}",
        1: "pi(q-1)",
        2: "pi(q+1)-{3}",
        3: "pi(q^2+1)",
        4: "pi(q^2-q+1)-{3}",
        5: "pi(q^2-sqrt(2q^3)+q-sqrt(2q)+1)",
        6: "pi(q^2+sqrt(2q^3)+q+sqrt(2q)+1)",
    }
    by_class: dict[object, list[int]] = {}
    for v, c in classes.items():
        by_class.setdefault(c, []).append(v)
    order_keys = ["p", "3", 1, 2, 3, 4, 5, 6]
    info = tuple(
        (labels[c], tuple(sorted(by_class[c]))) for c in order_keys if c in by_class
    )
    return make_graph(str(g), verts, edges, info)


@lru_cache(maxsize=None)
def graph_of(g: GroupId | str) -> PrimeGraph:
    """The prime graph of a supported group.

    Dispatch: adjacency criteria for G2 / F4 / 2F4 / E8, closed-form spectra
    for Alt / PSL2 / Sz, shipped tabulated data for the rest (or
    ``MissingDataError`` when there is none).
    """
    if isinstance(g, str):
        g = parse_group_id(g)
    fam = g.family
    if fam == "Alt":
        return graph_from_spectrum(spectrum_alt(g.n), str(g))
    if fam == "PSL" and g.n == 2:
        return graph_from_spectrum(spectrum_psl2(g.q), str(g))
    if fam == "Sz":
        return graph_from_spectrum(spectrum_sz(g.q), str(g))
    if fam == "G2":
        return _graph_g2(g)
    if fam == "F4":
        return _graph_f4(g)
    if fam == "2F4":
        return _graph_2f4(g)
    if fam == "E8":
        return _graph_e8(g)
    from .tabulated import shipped_graph

    got = shipped_graph(str(g))
    if got is None:
        raise MissingDataError(
            f"{g}: no adjacency criterion applies and no tabulated graph is shipped")
    return got


# Compact forms: the class-level pictures of the criterion graphs.


@dataclass(frozen=True)
class CompactClass:
    """One labeled vertex class of a compact form.

    kind: "ppd" (the primitive-divisor class R_index), "char" (the defining
    characteristic), "char_union" (R_1 and R_2 merged with the
    characteristic), "torus" (prime support of 2F4 torus factor #index) or
    "special" (a single named prime governed by a conditional rule).
    ``drop`` lists primes excluded from the class by the figure.
    """

    label: str
    kind: str
    index: int = 0
    drop: tuple[int, ...] = ()


@dataclass(frozen=True)
class ConditionalRule:
    """Split ``prime`` out of ``host`` when it lands there, adding the edges
    from the split vertex to ``target``'s class on top of the host adjacency."""

    description: str
    prime: int
    host: str
    target: str


@dataclass(frozen=True)
class CompactGraph:
    family: str
    classes: tuple[CompactClass, ...]
    class_edges: frozenset[tuple[str, str]]
    rules: tuple[ConditionalRule, ...] = ()

    def __post_init__(self) -> None:
        labels = {c.label for c in self.classes}
        if len(labels) != len(self.classes):
            raise ValueError("duplicate class labels")
        for a, b in self.class_edges:
            if a not in labels or b not in labels:
                raise ValueError(f"class edge ({a}, {b}) names an unknown class")
        for rule in self.rules:
            if rule.host not in labels or rule.target not in labels:
                raise ValueError(f"rule {rule.description!r} names an unknown class")

    def class_labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.classes)


def _edges(*pairs: tuple[str, str]) -> frozenset[tuple[str, str]]:
    return frozenset(pairs)


def _ppd(i: int) -> CompactClass:
    return CompactClass(f"R_{i}", "ppd", i)


@lru_cache(maxsize=None)
def compact_form(family: str) -> CompactGraph:
    """The compact (class-level) form of the prime graph of a family.

    Transcribed from the published figures: every class is a clique, drawn
    edges join whole classes, and the E8 form carries the conditional rule
    that the vertex 5, when it lies in R_4, is joined to R_20.
    """
    if family == "G2":
        return CompactGraph(
            "G2",
            (_ppd(1), _ppd(2), CompactClass("{3}", "char"), _ppd(3), _ppd(6)),
            _edges(("R_1", "R_2"), ("R_1", "{3}"), ("R_2", "{3}")),
        )
    if family == "F4":
        return CompactGraph(
            "F4",
            (_ppd(1), _ppd(2), _ppd(3), _ppd(4), _ppd(6),
             CompactClass("{2}", "char"), _ppd(8), _ppd(12)),
            _edges(
                ("R_1", "R_2"), ("R_2", "R_6"), ("R_1", "R_6"), ("R_2", "R_3"),
                ("R_1", "R_3"), ("R_1", "R_4"), ("R_2", "R_4"),
                ("R_1", "{2}"), ("R_2", "{2}"), ("R_3", "{2}"), ("R_6", "{2}"), ("R_4", "{2}"),
            ),
        )
    if family in ("2F4", "TwoF4"):
        m5 = "pi(q^2-sqrt(2q^3)+q-sqrt(2q)+1)"
        m6 = "pi(q^2+sqrt(2q^3)+q+sqrt(2q)+1)"
        return CompactGraph(
            "2F4",
            (
                CompactClass("{2}", "char"),
                CompactClass("{3}", "special", 3),
                CompactClass("pi(q-1)", "torus", 1),
                CompactClass("pi(q+1)-{3}", "torus", 2, drop=(3,)),
                CompactClass("pi(q^2+1)", "torus", 3),
                CompactClass("pi(q^2-q+1)-{3}", "torus", 4, drop=(3,)),
                CompactClass(m5, "torus", 5),
                CompactClass(m6, "torus", 6),
            ),
            _edges(
                ("{2}", "pi(q^2+1)"), ("{2}", "pi(q-1)"), ("pi(q-1)", "{3}"),
                ("{3}", "pi(q^2-q+1)-{3}"), ("pi(q-1)", "pi(q+1)-{3}"),
                ("{2}", "pi(q+1)-{3}"), ("{3}", "pi(q+1)-{3}"), ("{3}", "{2}"),
                ("pi(q^2+1)", "pi(q-1)"),
            ),
        )
    if family == "E8":
        middles = [3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18]
        classes = (
            (CompactClass("R", "char_union"),)
            + tuple(_ppd(i) for i in middles)
            + (CompactClass("{5}", "special", 5),)
            + tuple(_ppd(i) for i in (15, 20, 24, 30))
        )
        return CompactGraph(
            "E8",
            classes,
            _edges(
                ("R", "R_7"), ("R", "R_14"), ("R_4", "R_8"), ("R_10", "R_6"),
                ("R_10", "R_4"), ("R_10", "R"), ("R", "R_6"), ("R_6", "R_4"),
                ("R_6", "R_18"), ("R_6", "R_8"), ("R_6", "R_12"), ("R_6", "R_3"),
                ("R", "R_18"), ("R", "R_8"), ("R_3", "R_8"), ("R", "R_12"),
                ("R_4", "R_12"), ("R_3", "R_12"), ("R", "R_9"), ("R_3", "R_9"),
                ("R", "R_3"), ("R_4", "R_3"), ("R_5", "R_3"), ("R_5", "R"),
                ("R", "R_4"), ("R_5", "R_4"),
            ),
            (
                ConditionalRule(
                    "when 5 lies in R_4 (q^2 = -1 mod 5) it gains edges to R_20",
                    prime=5,
                    host="R_4",
                    target="R_20",
                ),
            ),
        )
    raise UnsupportedGroupError(f"no compact form for family {family!r}")


def _expand_class(c: CompactClass, family: str, q: int) -> PrimeSet:
    from .numtheory import prime_power, primitive_divisors

    p = prime_power(q)[0]
    if c.kind == "ppd":
        return primitive_divisors(c.index, q)
    if c.kind == "char":
        return (p,)
    if c.kind == "char_union":
        merged = set(primitive_divisors(1, q)) | set(primitive_divisors(2, q)) | {p}
        return tuple(sorted(merged))
    if c.kind == "torus":
        m = _2f4_torus_factors(q)[c.index - 1]
        return tuple(r for r in prime_divisors(m) if r not in c.drop)
    if c.kind == "special":
        # materialized by the family-specific handling below
        return ()
    raise AssertionError(f"unknown class kind {c.kind!r}")


def expand_compact(compact: CompactGraph, q: int) -> PrimeGraph:
    """Instantiate a compact form at a concrete field size.

    Classes become concrete prime sets (empty ones are dropped), each class
    expands to a clique, drawn class edges become complete bipartite edge
    sets, and conditional rules are applied.
    """
    fam = compact.family
    gid = GroupId(fam, q=q)  # validates q for the family
    if fam == "G2" and gid.p != 3:
        raise UnsupportedGroupError(f"G2 compact form needs q a power of 3, got {q}")
    if fam == "F4" and gid.p != 2:
        raise UnsupportedGroupError(f"F4 compact form needs q even, got {q}")

    members: dict[str, PrimeSet] = {}
    for c in compact.classes:
        members[c.label] = _expand_class(c, fam, q)
    for rule in compact.rules:
        host = members[rule.host]
        if rule.prime in host:
            members[rule.host] = tuple(v for v in host if v != rule.prime)
            members[f"{{{rule.prime}}}"] = (rule.prime,)

    # the 2F4 figure keeps 3 as its own class; it divides q+1 and q^2-q+1
    if fam == "2F4":
        members["{3}"] = (3,)

    edges: list[Edge] = []
    for vs in members.values():
        edges.extend((vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))
    label_edges = set(compact.class_edges)
    for rule in compact.rules:
        split = f"{{{rule.prime}}}"
        if split in members and members[split]:
            # the split vertex keeps the host adjacency and gains the target
            label_edges.add((split, rule.host))
            label_edges.add((split, rule.target))
            for a, b in compact.class_edges:
                if a == rule.host:
                    label_edges.add((split, b))
                if b == rule.host:
                    label_edges.add((a, split))
    for a, b in label_edges:
        for r in members.get(a, ()):
            for s in members.get(b, ()):
                if r != s:
                    edges.append(_norm_edge(r, s))

    verts = sorted(set().union(*members.values())) if members else []
    info = tuple(
        (label, vs) for label, vs in members.items() if vs
    )
    return make_graph(f"{fam}({q})", verts, edges, info)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components; the component containing 2 comes first, the rest
    are ordered by their smallest vertex."""

    components: tuple[PrimeSet, ...]

    @property
    def count(self) -> int:
        return len(self.components)


def components(g: PrimeGraph) -> ComponentPartition:
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for r, s in g.edges:
        adj[r].add(s)
        adj[s].add(r)
    seen: set[int] = set()
    parts: list[PrimeSet] = []
    for v in g.vertices:
        if v in seen:
            continue
        stack = [v]
        comp = set()
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u] - comp)
        seen |= comp
        parts.append(tuple(sorted(comp)))
    parts.sort(key=lambda c: (0 if 2 in c else 1, c[0] if c else 0))
    return ComponentPartition(tuple(parts))


@dataclass(frozen=True)
class CocliqueResult:
    """An exact maximum coclique: its size and the lexicographically least
    witness (as an ascending prime tuple)."""

    size: int
    witness: PrimeSet


def _adjacency_masks(g: PrimeGraph) -> tuple[list[int], dict[int, int]]:
    index = {v: i for i, v in enumerate(g.vertices)}
    masks = [0] * len(g.vertices)
    for r, s in g.edges:
        masks[index[r]] |= 1 << index[s]
        masks[index[s]] |= 1 << index[r]
    return masks, index


def _mis_size(cand: int, masks: list[int], memo: dict[int, int]) -> int:
    """Exact maximum independent set size within the candidate bitmask."""
    if cand == 0:
        return 0
    hit = memo.get(cand)
    if hit is not None:
        return hit
    # pivot on the candidate vertex of largest degree inside cand
    best_v, best_deg = -1, -1
    m = cand
    while m:
        low = m & -m
        v = low.bit_length() - 1
        deg = (masks[v] & cand).bit_count()
        if deg > best_deg:
            best_v, best_deg = v, deg
        m ^= low
    if best_deg == 0:
        out = cand.bit_count()
    else:
        with_v = 1 + _mis_size(cand & ~masks[best_v] & ~(1 << best_v), masks, memo)
        without_v = _mis_size(cand & ~(1 << best_v), masks, memo)
        out = max(with_v, without_v)
    memo[cand] = out
    return out


def _lex_witness(g: PrimeGraph, cand: int, target: int, masks: list[int],
                 memo: dict[int, int], forced: int = -1) -> list[int]:
    """Lexicographically least coclique of the target size within cand.

    Single ascending pass: a vertex is taken whenever taking it still allows
    a completion of the required size (containing the forced vertex, if any);
    otherwise it is discarded for good.
    """

    def completion(c: int, need_forced: int) -> int:
        if need_forced < 0:
            return _mis_size(c, masks, memo)
        if not (c >> need_forced) & 1:
            return -1
        return 1 + _mis_size(c & ~masks[need_forced] & ~(1 << need_forced), masks, memo)

    chosen: list[int] = []
    need = target
    for i, v in enumerate(g.vertices):
        if need == 0:
            break
        bit = 1 << i
        if not cand & bit:
            continue
        rest = cand & ~bit & ~masks[i]
        if completion(rest, -1 if i == forced else forced) == need - 1:
            chosen.append(v)
            cand = rest
            need -= 1
            if i == forced:
                forced = -1
        else:
            cand &= ~bit
    if need:
        raise AssertionError("witness reconstruction failed")
    return chosen


def max_coclique(g: PrimeGraph) -> CocliqueResult:
    """Exact maximum coclique (independence number) with lex-least witness."""
    if not g.vertices:
        return CocliqueResult(0, ())
    masks, _ = _adjacency_masks(g)
    memo: dict[int, int] = {}
    full = (1 << len(g.vertices)) - 1
    size = _mis_size(full, masks, memo)
    witness = _lex_witness(g, full, size, masks, memo)
    return CocliqueResult(size, tuple(witness))


def max_coclique_at(r: int, g: PrimeGraph) -> CocliqueResult:
    """Largest coclique containing the vertex r, lex-least witness."""
    masks, index = _adjacency_masks(g)
    if r not in index:
        raise ValueError(f"{r} is not a vertex of {g.name or 'the graph'}")
    memo: dict[int, int] = {}
    i = index[r]
    cand = ((1 << len(g.vertices)) - 1) & ~masks[i]
    size = 1 + _mis_size(cand & ~(1 << i), masks, memo)
    witness = _lex_witness(g, cand, size, masks, memo, forced=i)
    return CocliqueResult(size, tuple(witness))


def verify_coclique(g: PrimeGraph, witness: PrimeSet) -> bool:
    """Check a witness is pairwise nonadjacent and inside the vertex set."""
    vs = set(g.vertices)
    ws = list(witness)
    if len(set(ws)) != len(ws) or not set(ws) <= vs:
        return False
    return all(not g.has_edge(r, s) for i, r in enumerate(ws) for s in ws[i + 1 :])


# Serialization.


def to_json(g: PrimeGraph) -> str:
    """Deterministic JSON: vertices ascending, edges lexicographic."""
    doc: dict = {
        "group": g.name,
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edge_list()],
    }
    if g.classes is not None:
        doc["classes"] = [
            {"label": label, "primes": list(primes)} for label, primes in g.classes
        ]
    return json.dumps(doc, indent=2, sort_keys=False)


def graph_from_json(text: str) -> PrimeGraph:
    doc = json.loads(text)
    classes = None
    if "classes" in doc:
        classes = tuple((c["label"], tuple(c["primes"])) for c in doc["classes"])
    return make_graph(doc.get("group", ""), doc["vertices"],
                      [tuple(e) for e in doc["edges"]], classes)


def to_dot(g: PrimeGraph) -> str:
    """DOT output; class metadata becomes subgraph clusters."""
    lines = [f'graph "{g.name or "prime graph"}" {{']
    lines.append("  node [shape=circle];")
    emitted: set[int] = set()
    if g.classes:
        for idx, (label, primes) in enumerate(g.classes):
            lines.append(f"  subgraph cluster_{idx} {{")
            lines.append(f'    label="{label}";')
            for v in primes:
                lines.append(f"    {v};")
                emitted.add(v)
            lines.append("  }")
    for v in g.vertices:
        if v not in emitted:
            lines.append(f"  {v};")
    for r, s in g.edge_list():
        lines.append(f"  {r} -- {s};")
    lines.append("}")
    return "\n".join(lines) + "\n"
