"""Rooted labelled trees and the slither-game position classification.

Trees live on vertex labels 1..n with a designated root.  The slither game
moves a token from the root toward the leaves, one edge per move, and the
player who cannot move loses; in the capacity-b variant each vertex may be
entered up to b times before it is used up.  All variants collapse to one
classification rule on the rooted tree:

    a vertex is a P-position iff at most b-1 of its children are P-positions

with b=1 the plain game ("normal"), b=2 the constrained game ("comply"),
and b>=3 the general capacity game.  Leaves are always P.  The P-set under
b=1 is a maximum independent set, so |P| is the independence number and
n-|P| the matching number; under b=2 the induced strategic edge set
decomposes the tree into a minimum path cover.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

import numpy as np


class TreeError(ValueError):
    """Raised when input fails to describe a rooted tree on 1..n."""


@dataclass(frozen=True)
class Variant:
    """Game variant, determined entirely by the capacity b >= 1."""

    b: int

    def __post_init__(self):
        if not isinstance(self.b, int) or self.b < 1:
            raise ValueError(f"capacity must be a positive integer, got {self.b!r}")

    @property
    def name(self) -> str:
        if self.b == 1:
            return "normal"
        if self.b == 2:
            return "comply"
        return f"capacity({self.b})"

    @classmethod
    def parse(cls, text: str) -> "Variant":
        """Accepts 'normal', 'comply', 'b=K', or 'capacity(K)'."""
        t = text.strip().lower()
        if t == "normal":
            return cls(1)
        if t == "comply":
            return cls(2)
        if t.startswith("b="):
            body = t[2:]
        elif t.startswith("capacity(") and t.endswith(")"):
            body = t[len("capacity("):-1]
        else:
            raise ValueError(f"unknown variant {text!r} (expected normal, comply, or b=K)")
        try:
            b = int(body)
        except ValueError:
            raise ValueError(f"bad capacity in variant {text!r}") from None
        return cls(b)

    def __str__(self):
        return self.name


NORMAL = Variant(1)
COMPLY = Variant(2)


def capacity(b: int) -> Variant:
    return Variant(b)


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree on labels 1..n given by a child -> parent map.

    The parent map has exactly one entry per non-root vertex.  Instances are
    assumed valid; use validate_tree to build one from untrusted input.
    """

    n: int
    root: int
    parent: dict[int, int] = field(compare=True)

    def children_lists(self) -> list[list[int]]:
        """Adjacency indexed by label; entry 0 is unused padding."""
        ch: list[list[int]] = [[] for _ in range(self.n + 1)]
        for c, p in self.parent.items():
            ch[p].append(c)
        return ch

    def out_degree(self, v: int) -> int:
        d = 0
        for p in self.parent.values():
            if p == v:
                d += 1
        return d

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (child, parent) pairs, sorted by child."""
        return sorted(self.parent.items())

    def key(self):
        # hashable identity, handy for set-based sweeps
        return (self.n, self.root, tuple(sorted(self.parent.items())))


def validate_tree(data) -> RootedTree:
    """Build a RootedTree from a dict, a (n, root, parent) triple, or pairs.

    Accepted dict form: {"n": int, "root": int optional, "parent": {child: parent}}
    with string or int keys (JSON round-trips produce strings).  A list of
    (child, parent) pairs is also accepted in place of the parent dict.
    Raises TreeError naming the defect: label out of range, duplicate parent
    entry, multiple roots, root mismatch, or a cycle.
    """
    if isinstance(data, RootedTree):
        data = {"n": data.n, "root": data.root, "parent": data.parent}
    if isinstance(data, tuple) and len(data) == 3:
        data = {"n": data[0], "root": data[1], "parent": data[2]}
    if not isinstance(data, dict):
        raise TreeError(f"cannot interpret {type(data).__name__} as a rooted tree")

    try:
        n = int(data["n"])
    except (KeyError, TypeError, ValueError):
        raise TreeError("missing or non-integer vertex count n") from None
    if n < 1:
        raise TreeError(f"n must be >= 1, got {n}")

    raw = data.get("parent", {})
    if isinstance(raw, dict):
        pairs = [(c, p) for c, p in raw.items()]
    else:
        pairs = [(c, p) for c, p in raw]

    parent: dict[int, int] = {}
    for c, p in pairs:
        try:
            c, p = int(c), int(p)
        except (TypeError, ValueError):
            raise TreeError(f"non-integer labels in parent entry ({c!r}, {p!r})") from None
        if not (1 <= c <= n) or not (1 <= p <= n):
            raise TreeError(f"label out of range 1..{n} in parent entry ({c}, {p})")
        if c in parent:
            raise TreeError(f"duplicate parent entry for vertex {c}")
        if c == p:
            raise TreeError(f"vertex {c} listed as its own parent")
        parent[c] = p

    rootless = [v for v in range(1, n + 1) if v not in parent]
    if not rootless:
        raise TreeError("every vertex has a parent, so the parent map closes a cycle")
    if len(rootless) > 1:
        raise TreeError(f"multiple roots: vertices {rootless} have no parent")
    root = rootless[0]

    declared = data.get("root")
    if declared is not None and int(declared) != root:
        raise TreeError(f"declared root {declared} but vertex {root} has no parent")

    # each non-root vertex has exactly one parent, so any unreachable part
    # of the functional graph must close a cycle
    state = [0] * (n + 1)  # 0 unvisited, 1 on current walk, 2 done
    state[root] = 2
    for start in range(1, n + 1):
        if state[start]:
            continue
        walk = []
        v = start
        while state[v] == 0:
            state[v] = 1
            walk.append(v)
            v = parent[v]
        if state[v] == 1:
            cyc = walk[walk.index(v):]
            raise TreeError(f"cycle detected through vertices {cyc}")
        for w in walk:
            state[w] = 2

    return RootedTree(n=n, root=root, parent=parent)


@dataclass(frozen=True)
class PositionMap:
    """Classification of every vertex under one game variant.

    p_child_count[v] counts the P-children of v; v is P iff that count is
    at most b-1.  Labels follow the variant: P/N for normal, P0/P1/N for
    comply, Pk/N in general.
    """

    variant: Variant
    n: int
    p_child_count: dict[int, int]

    def is_p(self, v: int) -> bool:
        return self.p_child_count[v] <= self.variant.b - 1

    def p_set(self) -> frozenset[int]:
        return frozenset(v for v in self.p_child_count if self.is_p(v))

    def n_set(self) -> frozenset[int]:
        return frozenset(v for v in self.p_child_count if not self.is_p(v))

    def p_subset(self, k: int) -> frozenset[int]:
        """P-vertices with exactly k P-children (the Pk class)."""
        return frozenset(
            v for v, c in self.p_child_count.items() if c == k and self.is_p(v)
        )

    def label(self, v: int) -> str:
        c = self.p_child_count[v]
        if c > self.variant.b - 1:
            return "N"
        if self.variant.b == 1:
            return "P"
        return f"P{c}"

    def labels(self) -> dict[int, str]:
        return {v: self.label(v) for v in sorted(self.p_child_count)}


def classify(tree: RootedTree, variant: Variant = NORMAL) -> PositionMap:
    """Classify all vertices bottom-up.

    Iterative over a breadth-first order so million-vertex path graphs do
    not hit the recursion limit.
    """
    ch = tree.children_lists()
    order = []
    dq = deque([tree.root])
    while dq:
        v = dq.popleft()
        order.append(v)
        dq.extend(ch[v])
    if len(order) != tree.n:
        raise TreeError("tree walk did not reach every vertex")

    b = variant.b
    pcount = {v: 0 for v in range(1, tree.n + 1)}
    for v in reversed(order):
        if pcount[v] <= b - 1 and v != tree.root:
            pcount[tree.parent[v]] += 1
    return PositionMap(variant=variant, n=tree.n, p_child_count=pcount)


def independence_number(tree: RootedTree) -> int:
    """|P| under the normal variant; equals the maximum independent set size."""
    return len(classify(tree, NORMAL).p_set())


def matching_number(tree: RootedTree) -> int:
    """n - independence number; equals the maximum matching size."""
    return tree.n - independence_number(tree)


@dataclass(frozen=True)
class MatchingCertificate:
    """Explicit matching witnessing the matching number."""

    edges: tuple[tuple[int, int], ...]  # (n_vertex, p_child) pairs

    def size(self) -> int:
        return len(self.edges)


def matching_certificate(tree: RootedTree) -> MatchingCertificate:
    """Pair each N-vertex with its smallest-labelled P-child.

    Every N-vertex has a P-child by definition, and a P-child has a P or N
    parent but is itself paired at most once, so the edges are disjoint and
    there are exactly n - |P| of them.
    """
    pm = classify(tree, NORMAL)
    ch = tree.children_lists()
    edges = []
    for v in sorted(pm.n_set()):
        mate = min(c for c in ch[v] if pm.is_p(c))
        edges.append((v, mate))
    return MatchingCertificate(edges=tuple(edges))


def max_capacity_edges(tree: RootedTree, b: int) -> int:
    """Largest edge set in which every vertex has degree <= b.

    From the capacity-b classification: each N-vertex supports b edges,
    each P-vertex one per P-child.  b=1 gives the matching number.
    """
    if b < 1:
        raise ValueError(f"capacity must be >= 1, got {b}")
    pm = classify(tree, Variant(b))
    total = 0
    for v, c in pm.p_child_count.items():
        total += b if c > b - 1 else c
    return total


@dataclass(frozen=True)
class StrategicSet:
    """Edge set realizing max_capacity_edges, as (parent, child) pairs."""

    b: int
    edges: tuple[tuple[int, int], ...]

    def size(self) -> int:
        return len(self.edges)


def strategic_set(tree: RootedTree, b: int) -> StrategicSet:
    """Concrete optimal edge set for the degree-<=b problem.

    Each N-vertex takes edges to its b smallest-labelled P-children, each
    P-vertex an edge to every P-child.  N-vertices never receive an edge
    from above, giving them degree exactly b; P-vertices get at most one
    from above and b-1 at most from below.
    """
    if b < 1:
        raise ValueError(f"capacity must be >= 1, got {b}")
    pm = classify(tree, Variant(b))
    ch = tree.children_lists()
    edges = []
    for v in range(1, tree.n + 1):
        pkids = sorted(c for c in ch[v] if pm.is_p(c))
        take = pkids if pm.is_p(v) else pkids[:b]
        edges.extend((v, c) for c in take)
    return StrategicSet(b=b, edges=tuple(edges))


def path_cover_decomposition(tree: RootedTree) -> list[list[int]]:
    """Partition the vertices into a minimum number of paths.

    The b=2 strategic set has maximum degree 2 and no cycles, so its
    components are paths; uncovered vertices become singletons.  The number
    of paths is n - max_capacity_edges(tree, 2), which is minimum possible.
    Paths are returned oriented from their smaller-labelled endpoint and
    sorted by smallest contained vertex.
    """
    adj: dict[int, list[int]] = {v: [] for v in range(1, tree.n + 1)}
    for u, v in strategic_set(tree, 2).edges:
        adj[u].append(v)
        adj[v].append(u)

    seen = set()
    paths = []
    for v in range(1, tree.n + 1):
        if v in seen or len(adj[v]) > 1:
            continue
        # v is an endpoint (degree 0 or 1); walk to the other end
        path = [v]
        seen.add(v)
        prev, cur = None, v
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
            seen.add(cur)
        if path[0] > path[-1]:
            path.reverse()
        paths.append(path)
    if len(seen) != tree.n:
        raise AssertionError("strategic set contained a cycle")
    paths.sort(key=min)
    return paths


# --- brute-force oracles ----------------------------------------------------
#
# Exponential checks used to validate the game-theoretic formulas.  Subsets
# are enumerated as bit rows of a numpy matrix; degree constraints become one
# matrix product.

_BF_INDEP_LIMIT = 20
_BF_EDGES_LIMIT = 16


def _bit_rows(m: int) -> np.ndarray:
    rows = np.empty((1 << m, m), dtype=np.uint8)
    ar = np.arange(1 << m, dtype=np.uint32)
    for j in range(m):
        rows[:, j] = (ar >> j) & 1
    return rows


def bf_max_independent(tree: RootedTree) -> int:
    """Exhaustive maximum independent set size.  Guarded at n <= 20."""
    n = tree.n
    if n > _BF_INDEP_LIMIT:
        raise ValueError(f"brute force capped at n <= {_BF_INDEP_LIMIT}, got {n}")
    rows = _bit_rows(n)
    ok = np.ones(len(rows), dtype=bool)
    for c, p in tree.parent.items():
        ok &= ~(rows[:, c - 1] & rows[:, p - 1]).astype(bool)
    return int(rows[ok].sum(axis=1).max())


def bf_max_capacity_edges(tree: RootedTree, b: int) -> int:
    """Exhaustive largest degree-<=b edge subset.  Guarded at n <= 16."""
    n = tree.n
    if n > _BF_EDGES_LIMIT:
        raise ValueError(f"brute force capped at n <= {_BF_EDGES_LIMIT}, got {n}")
    if b < 1:
        raise ValueError(f"capacity must be >= 1, got {b}")
    edges = tree.edges()
    m = len(edges)
    if m == 0:
        return 0
    inc = np.zeros((m, n), dtype=np.uint8)
    for i, (c, p) in enumerate(edges):
        inc[i, c - 1] = 1
        inc[i, p - 1] = 1
    rows = _bit_rows(m)
    deg = rows.astype(np.int16) @ inc
    ok = (deg <= b).all(axis=1)
    return int(rows[ok].sum(axis=1).max())
