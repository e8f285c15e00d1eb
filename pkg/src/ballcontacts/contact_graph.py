"""Contact graph of a packing and clique counting (pairs, triplets, quadruples)."""

from dataclasses import dataclass

from .euclid_core import Packing, TolerancePolicy, distance

__all__ = [
    "KISSING_NUMBER",
    "DegreeOverflow",
    "ContactGraph",
    "ContactCounts",
    "build_contact_graph",
    "count_triangles",
    "count_k4",
    "count_contacts",
    "per_vertex_triangle_max",
]

# Maximum number of non-overlapping unit balls tangent to one unit ball in E^3.
KISSING_NUMBER = 12


class DegreeOverflow(Exception):
    """A vertex has more than 12 tangent neighbors, so the input cannot be a
    valid unit-ball packing (or the tolerance is far too loose)."""


@dataclass(frozen=True)
class ContactGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]  # sorted neighbor lists
    edge_count: int


@dataclass(frozen=True)
class ContactCounts:
    pairs: int
    triplets: int
    quadruples: int


def build_contact_graph(p: Packing, tol: TolerancePolicy = TolerancePolicy()) -> ContactGraph:
    """Edge (i, j) iff |distance(c_i, c_j) - 2| <= tol.distance_eps."""
    cs = p.centers
    n = len(cs)
    adj: list[list[int]] = [[] for _ in range(n)]
    edges = 0
    for i in range(n):
        for j in range(i + 1, n):
            if abs(distance(cs[i], cs[j]) - 2.0) <= tol.distance_eps:
                adj[i].append(j)
                adj[j].append(i)
                edges += 1
    for i, nbrs in enumerate(adj):
        if len(nbrs) > KISSING_NUMBER:
            raise DegreeOverflow(
                f"vertex {i} has degree {len(nbrs)} > {KISSING_NUMBER}"
            )
    return ContactGraph(n, tuple(tuple(sorted(a)) for a in adj), edges)


def _forward_adjacency(g: ContactGraph) -> list[list[int]]:
    # Orient each edge from lower to higher rank in a degree-then-index
    # order; every triangle is then counted from exactly one root edge.
    rank = sorted(range(g.n), key=lambda v: (len(g.adjacency[v]), v))
    pos = [0] * g.n
    for r, v in enumerate(rank):
        pos[v] = r
    fwd: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        for w in g.adjacency[v]:
            if pos[w] > pos[v]:
                fwd[v].append(w)
    for v in range(g.n):
        fwd[v].sort(key=lambda w: pos[w])
    return fwd


def count_triangles(g: ContactGraph) -> int:
    """Number of 3-cliques, via forward neighbor-list intersection."""
    fwd = _forward_adjacency(g)
    fsets = [set(f) for f in fwd]
    total = 0
    for v in range(g.n):
        for w in fwd[v]:
            total += len(fsets[v] & fsets[w])
    return total


def count_k4(g: ContactGraph) -> int:
    """Number of 4-cliques: extend each oriented triangle by a common
    forward neighbor."""
    fwd = _forward_adjacency(g)
    fsets = [set(f) for f in fwd]
    total = 0
    for v in range(g.n):
        for w in fwd[v]:
            common = fsets[v] & fsets[w]
            for u in common:
                total += len(common & fsets[u])
    return total


def count_contacts(p: Packing, tol: TolerancePolicy = TolerancePolicy()) -> ContactCounts:
    """Pairs, triplets and quadruples of mutually tangent balls in p."""
    g = build_contact_graph(p, tol)
    return ContactCounts(g.edge_count, count_triangles(g), count_k4(g))


def per_vertex_triangle_max(g: ContactGraph, quadruples: bool = False) -> int:
    """Maximum over vertices of incident triangles (or K4s with the flag)."""
    if g.n == 0:
        return 0
    asets = [set(a) for a in g.adjacency]
    best = 0
    for v in range(g.n):
        nbrs = g.adjacency[v]
        count = 0
        for ai in range(len(nbrs)):
            for bi in range(ai + 1, len(nbrs)):
                a, b = nbrs[ai], nbrs[bi]
                if b not in asets[a]:
                    continue
                if not quadruples:
                    count += 1
                    continue
                for ci in range(bi + 1, len(nbrs)):
                    c = nbrs[ci]
                    if c in asets[a] and c in asets[b]:
                        count += 1
        best = max(best, count)
    return best
