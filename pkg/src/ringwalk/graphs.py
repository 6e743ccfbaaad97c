"""Undirected graphs, Cayley constructions, tensor products, isomorphism.

Graphs are simple except for optional loops (a loop contributes 1 to the
adjacency diagonal and 1 to the degree; the looped complete graph is what
tensor identities over odd local rings need).  Vertices are 0..n-1 with
optional hashable labels (ring elements, pairs, ...).

Isomorphism and automorphism enumeration are exact: joint colour
refinement for pruning, then backtracking with full adjacency checks on
the result.  No canonical-labelling dependency; sizes are capped.
"""

from __future__ import annotations

import numpy as np

from .errors import SizeCapExceeded
from .rings import ConnectionSet, ProductRing, quadratic_connection, units

ISO_CAP = 64
AUT_CAP = 16

__all__ = [
    "Graph", "Permutation", "cayley_graph", "unitary_cayley_graph",
    "quadratic_unitary_cayley_graph", "tensor_product", "all_ones",
    "is_isomorphic", "automorphism_group", "to_dot", "graph_json",
    "ISO_CAP", "AUT_CAP",
]


class Graph:
    """An undirected graph on 0..n-1, loops allowed when stated."""

    def __init__(self, n: int, edges, labels=None, allow_loops: bool = False,
                 vertex_transitive: bool | None = None, name: str = ""):
        self.n = n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v and not allow_loops:
                raise ValueError(f"loop at {u} in a loopless graph")
            seen.add((min(u, v), max(u, v)))
        self.edges = tuple(sorted(seen))
        self.allow_loops = allow_loops
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise ValueError("label count must match vertex count")
        self.vertex_transitive = vertex_transitive
        self.name = name
        nbrs = [set() for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.neighbors = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)
        self.degrees = tuple(len(s) for s in self.neighbors)

    # -- builders ----------------------------------------------------------

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)],
                   vertex_transitive=True, name=f"K{n}")

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)],
                   vertex_transitive=True, name=f"C{n}")

    @classmethod
    def complete_pseudograph(cls, n: int) -> "Graph":
        """K_n plus a loop at every vertex (n-regular, all-ones adjacency)."""
        edges = [(u, v) for u in range(n) for v in range(u, n)]
        return cls(n, edges, allow_loops=True, vertex_transitive=True,
                   name=f"K°{n}")

    @classmethod
    def from_adjacency(cls, mat, labels=None, **kw) -> "Graph":
        mat = np.asarray(mat)
        n = mat.shape[0]
        if mat.shape != (n, n) or (mat != mat.T).any():
            raise ValueError("adjacency must be square symmetric")
        if not np.isin(mat, (0, 1)).all():
            raise ValueError("adjacency entries must be 0/1")
        edges = [(u, v) for u in range(n) for v in range(u, n) if mat[u][v]]
        loops = any(mat[u][u] for u in range(n))
        return cls(n, edges, labels=labels, allow_loops=loops, **kw)

    # -- structure ---------------------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u][v] = 1
            a[v][u] = 1
        return a

    def has_loop(self, u: int) -> bool:
        return u in self._nbr_sets[u]

    def degree(self, u: int) -> int:
        return self.degrees[u]

    @property
    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    @property
    def regularity(self) -> int | None:
        return self.degrees[0] if self.is_regular and self.n else None

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1 if self.n else True

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.neighbors[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def induced_subgraph(self, vertices, vertex_transitive=None) -> "Graph":
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[v]) for u, v in self.edges
                 if u in pos and v in pos]
        return Graph(len(vs), edges, labels=[self.labels[v] for v in vs],
                     allow_loops=self.allow_loops,
                     vertex_transitive=vertex_transitive)

    def __repr__(self):
        tag = self.name or f"{self.n} vertices"
        return f"Graph({tag}, {len(self.edges)} edges)"


# -- ring graphs -----------------------------------------------------------

def cayley_graph(ring: ProductRing, connection: ConnectionSet) -> Graph:
    """The Cayley graph of (R, +) with respect to a connection set."""
    if connection.ring != ring:
        raise ValueError("connection set belongs to a different ring")
    elts = ring.elements()
    index = {e.comps: i for i, e in enumerate(elts)}
    edges = []
    for i, e in enumerate(elts):
        for c in connection:
            j = index[(e + c).comps]
            if i < j:
                edges.append((i, j))
    return Graph(ring.order, edges, labels=elts, vertex_transitive=True,
                 name=f"Cay({ring.token}; {connection.label})")


def unitary_cayley_graph(ring: ProductRing) -> Graph:
    """Cayley graph on the units of R."""
    return cayley_graph(ring, units(ring))


def quadratic_unitary_cayley_graph(ring: ProductRing) -> Graph:
    """Cayley graph on T_R = Q_R union -Q_R (symmetrized unit squares)."""
    return cayley_graph(ring, quadratic_connection(ring))


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Tensor (categorical) product; vertex (u, v) at index u*h.n + v."""
    a = np.kron(g.adjacency_matrix(), h.adjacency_matrix())
    labels = [(gu, hv) for gu in g.labels for hv in h.labels]
    vt = True if (g.vertex_transitive and h.vertex_transitive) else None
    return Graph.from_adjacency(a, labels=labels, vertex_transitive=vt,
                                name=f"{g.name or 'G'} (x) {h.name or 'H'}")


def all_ones(n: int) -> np.ndarray:
    """The n x n all-ones matrix J (adjacency of the looped complete graph)."""
    return np.ones((n, n), dtype=np.int64)


# -- isomorphism -----------------------------------------------------------

class Permutation:
    """A bijection of 0..n-1; mapping[v] is the image of v."""

    __slots__ = ("mapping",)

    def __init__(self, mapping):
        self.mapping = tuple(mapping)
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError("not a permutation")

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def __len__(self):
        return len(self.mapping)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.mapping)
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: v -> self(other(v))."""
        return Permutation(self.mapping[other.mapping[v]]
                           for v in range(len(self.mapping)))

    def matrix(self) -> np.ndarray:
        """M with M e_v = e_{mapping[v]}."""
        n = len(self.mapping)
        m = np.zeros((n, n), dtype=np.int64)
        for v, w in enumerate(self.mapping):
            m[w][v] = 1
        return m

    @property
    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.mapping))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.mapping == other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __repr__(self):
        return f"Permutation{self.mapping}"


def _twin_partition(g: Graph):
    """Partition vertices into interchangeable classes.

    Loopless vertices with identical open neighbourhoods form an
    independent class; vertices with identical closed neighbourhoods form a
    clique class.  Members of one class can be permuted freely by
    automorphisms, and adjacency between two classes is all-or-nothing, so
    isomorphism can be decided on the quotient.
    """
    open_key = {}
    for v in range(g.n):
        if not g.has_loop(v):
            open_key.setdefault(g._nbr_sets[v], []).append(v)
    classes = []
    leftover = []
    for members in open_key.values():
        if len(members) > 1:
            classes.append(("I", tuple(members)))
        else:
            leftover.append(members[0])
    leftover.extend(v for v in range(g.n) if g.has_loop(v))
    closed_key = {}
    for v in leftover:
        closed_key.setdefault((g.has_loop(v), g._nbr_sets[v] | {v}), []).append(v)
    for (loop, _), members in sorted(closed_key.items(),
                                     key=lambda kv: kv[1][0]):
        tag = "K" + ("o" if loop else "") if len(members) > 1 else "1"
        classes.append((tag, tuple(members)))
    classes.sort(key=lambda c: c[1][0])
    return classes


def _quotient(g: Graph, classes):
    """Quotient graph on twin classes plus per-class colour seeds."""
    rep = {}
    for i, (_, members) in enumerate(classes):
        for v in members:
            rep[v] = i
    edges = set()
    for u, v in g.edges:
        a, b = rep[u], rep[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    q = Graph(len(classes), sorted(edges))
    seeds = [(tag, len(members), g.has_loop(members[0]))
             for tag, members in classes]
    return q, seeds


def _joint_refinement(g: Graph, h: Graph, seed_g=None, seed_h=None):
    """Stable joint colouring of both vertex sets; None if multisets split."""
    cg = [(g.degrees[v], g.has_loop(v), seed_g[v] if seed_g else None)
          for v in range(g.n)]
    ch = [(h.degrees[v], h.has_loop(v), seed_h[v] if seed_h else None)
          for v in range(h.n)]
    while True:
        palette: dict = {}
        ng = [palette.setdefault((cg[v], tuple(sorted(cg[u] for u in g.neighbors[v]))),
                                 len(palette)) for v in range(g.n)]
        nh = [palette.setdefault((ch[v], tuple(sorted(ch[u] for u in h.neighbors[v]))),
                                 len(palette)) for v in range(h.n)]
        if sorted(ng) != sorted(nh):
            return None
        if ng == cg and nh == ch:
            return cg, ch
        cg, ch = ng, nh


def _match(g: Graph, h: Graph, colors, find_all: bool):
    """Backtracking search for colour/adjacency preserving bijections."""
    cg, ch = colors
    n = g.n
    class_size = {}
    for c in ch:
        class_size[c] = class_size.get(c, 0) + 1
    sigma = [None] * n
    used = [False] * n
    found: list[Permutation] = []

    def pick():
        best, score = None, None
        for v in range(n):
            if sigma[v] is not None:
                continue
            mapped = sum(1 for u in g.neighbors[v] if sigma[u] is not None)
            s = (-mapped, class_size[cg[v]], v)
            if score is None or s < score:
                best, score = v, s
        return best

    def extend(depth: int) -> bool:
        if depth == n:
            perm = Permutation(sigma)
            found.append(perm)
            return not find_all
        v = pick()
        # candidates: intersect the H-neighbourhoods of the images of v's
        # already-mapped neighbours (this is the forward adjacency check)
        cand = None
        mapped_nbrs = 0
        for u in g.neighbors[v]:
            t = sigma[u]
            if t is not None:
                mapped_nbrs += 1
                s = h._nbr_sets[t]
                cand = s if cand is None else cand & s
        pool = sorted(cand) if cand is not None else range(n)
        for w in pool:
            if used[w] or ch[w] != cg[v]:
                continue
            if g.has_loop(v) != h.has_loop(w):
                continue
            # reverse direction: counting suffices, the forward check maps
            # mapped G-neighbours injectively into mapped H-neighbours
            if mapped_nbrs != sum(1 for t in h.neighbors[w] if used[t]):
                continue
            sigma[v] = w
            used[w] = True
            if extend(depth + 1):
                return True
            sigma[v] = None
            used[w] = False
        return False

    extend(0)
    return found


def _verify_mapping(g: Graph, h: Graph, perm: Permutation) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    return all(h.adjacent(perm(u), perm(v)) for u, v in g.edges)


def is_isomorphic(g: Graph, h: Graph):
    """A Permutation mapping g onto h, or None.  Exact; capped at 64 vertices."""
    if max(g.n, h.n) > ISO_CAP:
        raise SizeCapExceeded(f"isomorphism test capped at {ISO_CAP} vertices")
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    if sorted(g.degrees) != sorted(h.degrees):
        return None
    classes_g = _twin_partition(g)
    classes_h = _twin_partition(h)
    profile = lambda cs, gr: sorted((tag, len(m), gr.has_loop(m[0])) for tag, m in cs)
    if profile(classes_g, g) != profile(classes_h, h):
        return None
    qg, seeds_g = _quotient(g, classes_g)
    qh, seeds_h = _quotient(h, classes_h)
    colors = _joint_refinement(qg, qh, seeds_g, seeds_h)
    if colors is None:
        return None
    found = _match(qg, qh, colors, find_all=False)
    if not found:
        return None
    qperm = found[0]
    mapping = [None] * g.n
    for i, (_, members) in enumerate(classes_g):
        for a, b in zip(sorted(members), sorted(classes_h[qperm(i)][1])):
            mapping[a] = b
    perm = Permutation(mapping)
    assert _verify_mapping(g, h, perm), "quotient search returned a bad mapping"
    return perm


def automorphism_group(g: Graph) -> list[Permutation]:
    """Every automorphism of g, sorted; capped at 16 vertices."""
    if g.n > AUT_CAP:
        raise SizeCapExceeded(f"automorphism enumeration capped at {AUT_CAP} vertices")
    colors = _joint_refinement(g, g)
    assert colors is not None
    found = _match(g, g, colors, find_all=True)
    for perm in found:
        assert _verify_mapping(g, g, perm)
    return sorted(found, key=lambda p: p.mapping)


# -- export ----------------------------------------------------------------

def to_dot(g: Graph, name: str = "G") -> str:
    head = f"{g.regularity}-regular" if g.is_regular else "irregular"
    conn = "connected" if g.is_connected() else \
        f"disconnected ({len(g.connected_components())} components)"
    lines = [f"// {head}, {conn}", f"graph \"{name}\" {{"]
    for v in range(g.n):
        lines.append(f"  {v} [label=\"{g.labels[v]}\"];")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(g: Graph) -> dict:
    return {
        "vertices": g.n,
        "labels": [str(x) for x in g.labels],
        "edges": [[u, v] for u, v in g.edges],
        "regular": g.is_regular,
        "regularity": g.regularity,
        "connected": g.is_connected(),
        "components": len(g.connected_components()),
    }
