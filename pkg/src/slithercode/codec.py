"""Slither codes: bijections between rooted trees and integer sequences.

A slither code of a rooted tree on 1..n is a sequence of n-1 symbols from
1..n, one per non-root vertex, built by repeatedly deleting the
smallest-labelled leaf of the shrinking tree and recording its parent.
Unlike the classical Prufer code, the recording position depends on the
deleted vertex's game classification in the ORIGINAL tree: parents of
P-vertices fill the leftmost open slot, parents of N-vertices the
rightmost.  Every sequence in [n]^(n-1) arises from exactly one tree, for
every capacity variant, which is what makes uniform random sequences
uniform random rooted trees.

Decoding never looks at the variant's name, only its capacity b, and
recovers classifications on the fly: a vertex's class is known once its
whole subtree is restored, which happens before its own parent is needed.

The reading rules extract tree parameters from a code without decoding:
independence and matching numbers, the root and full P-set, and the
degree-constrained edge counts for b >= 2.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .trees import COMPLY, NORMAL, RootedTree, Variant, classify


class CodeError(ValueError):
    """Raised for malformed code input (bad length, symbol out of range)."""


@dataclass(frozen=True)
class SlitherCode:
    """A length n-1 symbol sequence tagged with its variant."""

    n: int
    variant: Variant
    symbols: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise CodeError(f"n must be >= 1, got {self.n}")
        try:
            sym = tuple(int(s) for s in self.symbols)
        except (TypeError, ValueError):
            raise CodeError(f"non-integer symbol in {self.symbols!r}") from None
        object.__setattr__(self, "symbols", sym)
        if len(sym) != self.n - 1:
            raise CodeError(f"expected {self.n - 1} symbols for n={self.n}, got {len(sym)}")
        for s in sym:
            if not (1 <= s <= self.n):
                raise CodeError(f"symbol {s} out of range 1..{self.n}")


def slither_encode(tree: RootedTree, variant: Variant = NORMAL):
    """Encode a rooted tree.  Returns (code, auxiliary).

    The auxiliary sequence lists the deleted vertices in deletion order
    rearranged to the slots their parents landed in, so auxiliary[i] is the
    child whose parent is code.symbols[i].  It is always a permutation of
    the non-root vertices.
    """
    n = tree.n
    pm = classify(tree, variant)
    nchild = [0] * (n + 1)
    for p in tree.parent.values():
        nchild[p] += 1

    code = [0] * (n - 1)
    aux = [0] * (n - 1)
    left, right = 0, n - 2
    heap = [v for v in range(1, n + 1) if nchild[v] == 0 and v != tree.root]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        p = tree.parent[v]
        if pm.is_p(v):
            code[left] = p
            aux[left] = v
            left += 1
        else:
            code[right] = p
            aux[right] = v
            right -= 1
        nchild[p] -= 1
        if nchild[p] == 0 and p != tree.root:
            heapq.heappush(heap, p)
    if left != right + 1:
        raise AssertionError("slot pointers did not meet")
    return SlitherCode(n=n, variant=variant, symbols=tuple(code)), tuple(aux)


def slither_decode(code: SlitherCode) -> RootedTree:
    """Invert slither_encode.  Total on [n]^(n-1) for every variant.

    The occurrence count of v in the code is its out-degree, so a vertex is
    ready to be deleted (in replay order) once all its children have been
    assigned.  Ready vertices are consumed smallest-first; whether the
    parent is read from the left or the right end follows from the restored
    subtree's classification.
    """
    n, b, sym = code.n, code.variant.b, code.symbols
    if n == 1:
        return RootedTree(n=1, root=1, parent={})

    occ = Counter(sym)
    drawn = [0] * (n + 1)
    pdrawn = [0] * (n + 1)
    parent: dict[int, int] = {}
    left, right = 0, n - 2

    ready = [v for v in range(1, n + 1) if occ[v] == 0]
    heapq.heapify(ready)
    for _ in range(n - 1):
        v = heapq.heappop(ready)
        if pdrawn[v] <= b - 1:
            p = sym[left]
            left += 1
            pdrawn[p] = pdrawn[p] + 1
        else:
            p = sym[right]
            right -= 1
        parent[v] = p
        drawn[p] += 1
        if drawn[p] == occ[p]:
            heapq.heappush(ready, p)

    roots = [v for v in range(1, n + 1) if v not in parent]
    if len(roots) != 1:
        raise AssertionError("decode left more than one parentless vertex")
    return RootedTree(n=n, root=roots[0], parent=parent)


def decode_sequence(symbols, n: int | None = None, variant: Variant = NORMAL) -> RootedTree:
    """Decode a bare symbol sequence; n defaults to len(symbols) + 1."""
    sym = tuple(symbols)
    if n is None:
        n = len(sym) + 1
    return slither_decode(SlitherCode(n=n, variant=variant, symbols=sym))


# --- reading rules ----------------------------------------------------------


def prefix_alpha(symbols, n: int) -> int:
    """Smallest a >= 1 with distinct(symbols[:a]) >= n - a; 1 if n <= 1.

    This is both the independence-number read on a normal code and the
    stopping rule of the family card games, which share this implementation
    on purpose.  Symbols may be any hashables; only distinctness matters.
    Raises if the sequence ends before the threshold is met.
    """
    if n <= 1:
        return 1
    if isinstance(symbols, np.ndarray) and symbols.shape[0] >= 64:
        _, first = np.unique(symbols, return_index=True)
        new = np.zeros(symbols.shape[0], dtype=np.int64)
        new[first] = 1
        distinct = np.cumsum(new)
        hit = distinct >= n - np.arange(1, symbols.shape[0] + 1)
        a = int(np.argmax(hit))
        if not hit[a]:
            raise ValueError("sequence exhausted before the distinct-count threshold")
        return a + 1
    seen = set()
    for a, s in enumerate(symbols, start=1):
        seen.add(s)
        if len(seen) >= n - a:
            return a
    raise ValueError("sequence exhausted before the distinct-count threshold")


def _require_variant(code: SlitherCode, want: Variant, rule: str):
    if code.variant != want:
        raise CodeError(
            f"{rule} reads {want.name} codes, got a {code.variant.name} code"
        )


def read_alpha(code: SlitherCode) -> int:
    """Independence number of the decoded tree, from a normal code."""
    _require_variant(code, NORMAL, "read_alpha")
    return prefix_alpha(code.symbols, code.n)


@dataclass(frozen=True)
class ReadResult:
    """Root, its class, and the full P-set read off a normal code."""

    n: int
    alpha: int
    root: int
    root_class: str
    p_set: frozenset[int]


def read_root_and_pset(code: SlitherCode) -> ReadResult:
    """Recover root, root class, and P-set from a normal code, no decode.

    With a = alpha, prefix(a) either hits distinct = n - a exactly (root is
    N, the P-set is everything absent from prefix(a)) or overshoots by one
    because symbol a was new (root is P, namely that symbol, and the P-set
    is everything absent from prefix(a-1)).  In the exact case the root is
    s_{a+1} when that symbol already occurred in prefix(a), else s_a; at
    a = n-1 it is s_a.
    """
    _require_variant(code, NORMAL, "read_root_and_pset")
    n, sym = code.n, code.symbols
    if n == 1:
        return ReadResult(n=1, alpha=1, root=1, root_class="P", p_set=frozenset({1}))

    a = prefix_alpha(sym, n)
    before = set(sym[:a - 1])
    overshoot = len(before) == n - a and sym[a - 1] not in before
    if overshoot:
        root = sym[a - 1]
        p_set = frozenset(range(1, n + 1)) - before
        return ReadResult(n=n, alpha=a, root=root, root_class="P", p_set=p_set)

    prefix = before | {sym[a - 1]}
    if a == n - 1:
        root = sym[a - 1]
    else:
        root = sym[a] if sym[a] in prefix else sym[a - 1]
    p_set = frozenset(range(1, n + 1)) - prefix
    return ReadResult(n=n, alpha=a, root=root, root_class="N", p_set=p_set)


def _saturation_read(symbols, n: int, b: int):
    """Smallest beta with #{symbols occurring >= b times in prefix} >= n-1-beta.

    Returns (beta, sum of min(count, b) over the prefix).  Terminates by
    beta = n-1 since the threshold then drops to zero.
    """
    counts: Counter = Counter()
    saturated = 0
    capped_total = 0
    beta = 0
    while saturated < n - 1 - beta:
        try:
            s = symbols[beta]
        except IndexError:
            raise ValueError("sequence exhausted before the saturation threshold") from None
        counts[s] += 1
        if counts[s] == b:
            saturated += 1
        if counts[s] <= b:
            capped_total += 1
        beta += 1
    return beta, capped_total


def read_matching_via_beta(code: SlitherCode):
    """(beta, matching number) from a normal code.

    beta is the smallest prefix length whose distinct count reaches
    n - 1 - beta; the distinct count itself is the matching number, which
    always equals n - read_alpha(code).
    """
    _require_variant(code, NORMAL, "read_matching_via_beta")
    return _saturation_read(code.symbols, code.n, 1)


def read_path_edges(code: SlitherCode):
    """(beta, edge count of an optimal path cover) from a comply code.

    Counts symbols occurring at least twice; n minus the edge count is the
    path cover number of the decoded tree.
    """
    _require_variant(code, COMPLY, "read_path_edges")
    return _saturation_read(code.symbols, code.n, 2)


def read_capacity_edges(code: SlitherCode, b: int):
    """(beta, max size of a degree-<=b edge set) from a capacity-b code."""
    if b < 1:
        raise ValueError(f"capacity must be >= 1, got {b}")
    _require_variant(code, Variant(b), "read_capacity_edges")
    return _saturation_read(code.symbols, code.n, b)


# --- classical Prufer, for unrooted uniform sampling ------------------------


def prufer_encode(n: int, edges) -> tuple[int, ...]:
    """Classical Prufer sequence of a labelled unrooted tree, length n-2."""
    if n < 2:
        return ()
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    count = 0
    for u, v in edges:
        u, v = int(u), int(v)
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise CodeError(f"bad edge ({u}, {v}) for n={n}")
        adj[u].add(v)
        adj[v].add(u)
        count += 1
    if count != n - 1:
        raise CodeError(f"expected {n - 1} edges, got {count}")

    heap = [v for v in range(1, n + 1) if len(adj[v]) == 1]
    heapq.heapify(heap)
    seq = []
    for _ in range(n - 2):
        u = heapq.heappop(heap)
        (v,) = adj[u]
        seq.append(v)
        adj[v].discard(u)
        adj[u].clear()
        if len(adj[v]) == 1:
            heapq.heappush(heap, v)
    return tuple(seq)


def prufer_decode(symbols) -> list[tuple[int, int]]:
    """Invert prufer_encode; n is inferred as len(symbols) + 2.

    Returns the edge list sorted with each edge as (min, max).
    """
    sym = tuple(int(s) for s in symbols)
    n = len(sym) + 2
    for s in sym:
        if not (1 <= s <= n):
            raise CodeError(f"symbol {s} out of range 1..{n}")
    degree = [1] * (n + 1)
    for s in sym:
        degree[s] += 1
    heap = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for s in sym:
        u = heapq.heappop(heap)
        edges.append((min(u, s), max(u, s)))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(heap, s)
    u = heapq.heappop(heap)
    v = heapq.heappop(heap)
    edges.append((min(u, v), max(u, v)))
    return sorted(edges)
