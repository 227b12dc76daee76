"""Brute-force ground truth for small graphs and 2-pole networks.

Enumerates automorphisms of explicit graphs by exhaustive backtracking,
classifies the induced edge cycles as cylindrical or Moebius, and sums
Walsh monomials straight from the definitions.  Nothing here tries to
be fast beyond degree-partition pruning; every instance has at most
ten vertices or so, and auditability of the sums is the whole point.

Cylindrical versus Moebius: an edge orbit of length l under an
automorphism s is cylindrical when s^l fixes both endpoints of each of
its edges, and Moebius when s^l swaps them.  Exactly one of the two
holds for every orbit; this is asserted, not assumed.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

from .series import A, B, C, BETA, GAMMA, IndexSeries, Mono

AUTOMORPHISM_VERTEX_LIMIT = 10
MATCHING_VERTEX_LIMIT = 12
BURNSIDE_VERTEX_LIMIT = 7


class SmallGraph:
    """Simple graph on explicit vertex labels, optionally with two poles.

    For a 2-pole network the poles are distinguished vertex labels and
    every other vertex is internal; the graph with the pole edge added
    must be 2-connected, which is checked on construction.
    """

    def __init__(self, vertices, edges, poles=None):
        self.vertices = tuple(sorted(set(vertices)))
        vset = set(self.vertices)
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u},{v}) leaves the vertex set")
            es.add(frozenset((u, v)))
        self.edges = frozenset(es)
        self.adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            self.adj[u].add(v)
            self.adj[v].add(u)
        self.poles = None
        if poles is not None:
            p0, p1 = poles
            if p0 not in vset or p1 not in vset or p0 == p1:
                raise ValueError("poles must be two distinct vertices")
            self.poles = (p0, p1)
            closed = SmallGraph(self.vertices,
                                [tuple(e) for e in self.edges] + [(p0, p1)])
            if not closed._is_biconnected():
                raise ValueError("network plus pole edge must be 2-connected")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def internal_vertices(self) -> tuple:
        if self.poles is None:
            return self.vertices
        ps = set(self.poles)
        return tuple(v for v in self.vertices if v not in ps)

    def degree(self, v) -> int:
        return len(self.adj[v])

    def _is_connected(self, skip=frozenset()) -> bool:
        left = [v for v in self.vertices if v not in skip]
        if not left:
            return True
        seen = {left[0]}
        stack = [left[0]]
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if w not in skip and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(left)

    def _is_biconnected(self) -> bool:
        if self.n == 2:
            return len(self.edges) == 1
        if self.n < 2 or not self._is_connected():
            return False
        return all(self._is_connected({v}) for v in self.vertices)

    def __repr__(self):
        pole = f", poles={self.poles}" if self.poles else ""
        return f"<SmallGraph n={self.n} m={len(self.edges)}{pole}>"


# -- explicit graph builders ------------------------------------------

def path_graph(n: int) -> SmallGraph:
    return SmallGraph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> SmallGraph:
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return SmallGraph(range(1, n + 1), edges)


def complete_graph(n: int) -> SmallGraph:
    return SmallGraph(range(1, n + 1),
                      itertools.combinations(range(1, n + 1), 2))


def k5e_network() -> SmallGraph:
    """K5 with poles 0, 1 and the pole edge removed; internals 2, 3, 4."""
    edges = [e for e in itertools.combinations(range(5), 2) if e != (0, 1)]
    return SmallGraph(range(5), edges, poles=(0, 1))


def m_graph() -> SmallGraph:
    """Two K5's glued along the edge {1,2} (the edge is kept)."""
    edges = set(itertools.combinations((1, 2, 3, 4, 5), 2))
    edges |= set(itertools.combinations((1, 2, 6, 7, 8), 2))
    return SmallGraph(range(1, 9), edges)


def mstar_graph() -> SmallGraph:
    """The M graph with the gluing edge {1,2} deleted."""
    g = m_graph()
    edges = [tuple(e) for e in g.edges if e != frozenset((1, 2))]
    return SmallGraph(range(1, 9), edges)


def parse_graph(text: str) -> SmallGraph:
    """Edge-list format: lines "u v", optional header "poles p q"."""
    poles = None
    edges = []
    vertices = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "poles":
            poles = (int(parts[1]), int(parts[2]))
            vertices.update(poles)
            continue
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        vertices.update((u, v))
    return SmallGraph(vertices, edges, poles=poles)


# -- automorphisms -----------------------------------------------------

def automorphisms(g: SmallGraph) -> list[dict]:
    """All vertex permutations preserving the edge set, as dicts.

    Exhaustive backtracking with degree pruning; guarded to at most
    ten vertices.
    """
    if g.n > AUTOMORPHISM_VERTEX_LIMIT:
        raise ValueError(f"automorphism search capped at "
                         f"{AUTOMORPHISM_VERTEX_LIMIT} vertices, got {g.n}")
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    result = []
    image = {}

    def extend(i):
        if i == len(order):
            result.append(dict(image))
            return
        v = order[i]
        dv = g.degree(v)
        taken = set(image.values())
        for w in g.vertices:
            if w in taken or g.degree(w) != dv:
                continue
            ok = True
            for u, wu in image.items():
                if ((u in g.adj[v]) != (wu in g.adj[w])):
                    ok = False
                    break
            if ok:
                image[v] = w
                extend(i + 1)
                del image[v]

    extend(0)
    return result


def is_automorphism(g: SmallGraph, perm: dict) -> bool:
    return all(frozenset((perm[u], perm[v])) in g.edges
               for e in g.edges for u, v in [tuple(e)])


def cycle_type(perm: dict) -> Counter:
    """Multiset of cycle lengths."""
    seen = set()
    lengths = Counter()
    for v in perm:
        if v in seen:
            continue
        l, w = 0, v
        while True:
            seen.add(w)
            w = perm[w]
            l += 1
            if w == v:
                break
        lengths[l] += 1
    return lengths


def _edge_orbits(g: SmallGraph, perm: dict):
    seen = set()
    for e in sorted(g.edges, key=sorted):
        if e in seen:
            continue
        orbit = []
        cur = e
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            u, v = tuple(cur)
            cur = frozenset((perm[u], perm[v]))
        yield orbit


def _apply_times(perm: dict, v, l: int):
    for _ in range(l):
        v = perm[v]
    return v


def edge_cycle_monomial(g: SmallGraph, perm: dict,
                        matching=None) -> Mono:
    """Walsh monomial of (g, perm): a's from vertex cycles, b/c from
    cylindrical/Moebius edge cycles.

    With ``matching`` given, edge orbits inside it are counted by b/c
    and the rest by beta/gamma (the two edge sorts of matched graphs).
    """
    if not is_automorphism(g, perm):
        raise ValueError("permutation is not an automorphism")
    exps = Counter()
    for l, cnt in cycle_type(perm).items():
        exps[(A, l)] += cnt
    for orbit in _edge_orbits(g, perm):
        l = len(orbit)
        u, v = tuple(orbit[0])
        iu, iv = _apply_times(perm, u, l), _apply_times(perm, v, l)
        if (iu, iv) == (u, v):
            fam = B
        elif (iu, iv) == (v, u):
            fam = C
        else:
            raise AssertionError("edge orbit neither cylindrical nor Moebius")
        if matching is not None and orbit[0] not in matching:
            fam = BETA if fam == B else GAMMA
        exps[(fam, l)] += 1
    return tuple(sorted(exps.items()))


def canonical_form(g: SmallGraph):
    """Minimum relabelled edge list over all vertex bijections."""
    vs = g.vertices
    best = None
    for perm in itertools.permutations(range(len(vs))):
        relabel = dict(zip(vs, perm))
        key = tuple(sorted(tuple(sorted((relabel[u], relabel[v])))
                           for e in g.edges for u, v in [tuple(e)]))
        if best is None or key < best:
            best = key
    return (len(vs), best)


# -- Walsh series straight from the definitions ------------------------

def walsh_bruteforce(representatives: list[SmallGraph]) -> IndexSeries:
    """Sum of (1/|Aut G|) sum_s w(G, s) over the given representatives."""
    if len(representatives) > 1 and all(g.n <= 8 for g in representatives):
        forms = [canonical_form(g) for g in representatives]
        if len(set(forms)) != len(forms):
            raise ValueError("representatives are not pairwise non-isomorphic")
    total = IndexSeries.zero()
    for g in representatives:
        auts = automorphisms(g)
        part = IndexSeries.zero()
        for perm in auts:
            part = part + IndexSeries.monomial(1, edge_cycle_monomial(g, perm))
        total = total + part / len(auts)
    return total


def matched_walsh_bruteforce(g: SmallGraph) -> IndexSeries:
    """Extended Walsh series of matched copies of g: for each
    automorphism, sum the two-sort monomial over the matchings it fixes."""
    auts = automorphisms(g)
    mus = matchings(g)
    total = IndexSeries.zero()
    for perm in auts:
        for mu in mus:
            if {frozenset((perm[u], perm[v])) for e in mu
                    for u, v in [tuple(e)]} == mu:
                total = total + IndexSeries.monomial(
                    1, edge_cycle_monomial(g, perm, matching=mu))
    return total / len(auts)


def network_walsh_bruteforce(g: SmallGraph, sign: str) -> IndexSeries:
    """Walsh series of a single 2-pole network from Definition-level sums.

    sign "+": permutations of the internal vertices extending to an
    automorphism fixing both poles; the two pole fixed points are
    divided out (a1^2).  sign "-": extensions swapping the poles,
    dividing out their 2-cycle (a2).  A network with no pole-swapping
    automorphism contributes the zero series to the "-" side.
    """
    if g.poles is None:
        raise ValueError("graph has no poles")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    p0, p1 = g.poles
    want = (p0, p1) if sign == "+" else (p1, p0)
    auts = [s for s in automorphisms(g)
            if (s[p0], s[p1]) == want]
    if not auts:
        return IndexSeries.zero()
    divisor = {(A, 1): 2} if sign == "+" else {(A, 2): 1}
    total = IndexSeries.zero()
    for perm in auts:
        w = IndexSeries.monomial(1, edge_cycle_monomial(g, perm))
        total = total + w.divide_exact(divisor)
    return total / len(auts)


# -- matchings and Burnside counting ------------------------------------

def matchings(g: SmallGraph) -> list[frozenset]:
    """All matchings of g, including the empty one, as edge sets."""
    if g.n > MATCHING_VERTEX_LIMIT:
        raise ValueError(f"matching enumeration capped at "
                         f"{MATCHING_VERTEX_LIMIT} vertices")
    edges = sorted(g.edges, key=sorted)
    out = []

    def rec(i, used, cur):
        if i == len(edges):
            out.append(frozenset(cur))
            return
        rec(i + 1, used, cur)
        e = edges[i]
        if not (e & used):
            cur.append(e)
            rec(i + 1, used | e, cur)
            cur.pop()

    rec(0, frozenset(), [])
    return out


def unlabelled_count_by_nm(graphs) -> dict[tuple[int, int], int]:
    """Isomorphism classes of the given graphs, keyed by (n, m)."""
    classes = {}
    for g in graphs:
        classes[canonical_form(g)] = (g.n, len(g.edges))
    counts = Counter(classes.values())
    return dict(counts)


def burnside_unlabelled_count(graphs, n: int) -> dict[int, int]:
    """Isomorphism classes among ``graphs`` (all on vertices 1..n),
    refined by edge count, via (1/n!) sum over S_n of fixed graphs.

    For each permutation the fixed graphs are exactly the unions of its
    edge-slot orbits, so those unions are enumerated and filtered for
    membership in the class.
    """
    if n > BURNSIDE_VERTEX_LIMIT:
        raise ValueError(f"Burnside counting capped at "
                         f"{BURNSIDE_VERTEX_LIMIT} vertices")
    domain = tuple(range(1, n + 1))
    class_set = {g.edges for g in graphs}
    for g in graphs:
        if g.vertices != domain:
            raise ValueError("all graphs must live on vertices 1..n")
    slots = [frozenset(p) for p in itertools.combinations(domain, 2)]
    totals: Counter = Counter()
    for images in itertools.permutations(domain):
        perm = dict(zip(domain, images))
        orbits = []
        seen = set()
        for s in slots:
            if s in seen:
                continue
            orbit = set()
            cur = s
            while cur not in orbit:
                orbit.add(cur)
                u, v = tuple(cur)
                cur = frozenset((perm[u], perm[v]))
            seen |= orbit
            orbits.append(frozenset(orbit))

        def unions(i, acc):
            if i == len(orbits):
                if acc in class_set:
                    totals[len(acc)] += 1
                return
            unions(i + 1, acc)
            unions(i + 1, acc | orbits[i])

        unions(0, frozenset())
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    out = {}
    for m, t in sorted(totals.items()):
        q, r = divmod(t, fact)
        if r:
            raise AssertionError("Burnside total not divisible by n!")
        out[m] = q
    return out
