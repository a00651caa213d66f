"""Simple k-uniform hypergraphs: validation, text I/O, degrees, components, generators.

Vertices are labeled 1..n everywhere in the public API.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import binom

Edge = tuple[int, ...]

# below this many k-subsets, random-m samples ranks directly; above it, rejection
UNRANK_LIMIT = 1 << 20
CONNECT_ATTEMPTS = 1000


class HypergraphError(ValueError):
    """Invalid hypergraph data or malformed hypergraph file."""


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise HypergraphError(f"vertex count must be positive, got {self.n}")
        if self.k < 2:
            raise HypergraphError(f"uniformity k must be >= 2, got {self.k}")
        canon = []
        for edge in self.edges:
            members = tuple(sorted(edge))
            if len(members) != self.k:
                raise HypergraphError(f"edge {edge} has {len(members)} members, expected {self.k}")
            if len(set(members)) != self.k:
                raise HypergraphError(f"edge {edge} repeats a vertex")
            if members[0] < 1 or members[-1] > self.n:
                raise HypergraphError(f"edge {edge} has a vertex outside 1..{self.n}")
            canon.append(members)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise HypergraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Unsorted degree of each vertex, indexed by label - 1."""
        deg = [0] * self.n
        for edge in self.edges:
            for v in edge:
                deg[v - 1] += 1
        return deg

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Return the isomorphic copy where vertex v becomes perm[v - 1]."""
        return Hypergraph(self.n, self.k, tuple(tuple(perm[v - 1] for v in e) for e in self.edges))

    def induced(self, vertices: Sequence[int]) -> "Hypergraph":
        """Sub-hypergraph on `vertices` (must be a union of components), relabeled 1..len."""
        index = {v: i + 1 for i, v in enumerate(vertices)}
        edges = tuple(tuple(index[v] for v in e) for e in self.edges if e[0] in index)
        return Hypergraph(len(vertices), self.k, edges)


@dataclass(frozen=True)
class DegreeSequence:
    """Degrees sorted non-increasing; rank_of_vertex[v - 1] is the 1-based sorted position of v."""

    degrees: tuple[int, ...]
    rank_of_vertex: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]


@dataclass(frozen=True)
class ComponentPartition:
    """component_id[v - 1] is the smallest vertex label in v's component."""

    component_id: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(set(self.component_id))

    def groups(self) -> list[list[int]]:
        """Vertex lists per component, ordered by component id."""
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.component_id, start=1):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]


def degree_sequence(h: Hypergraph) -> DegreeSequence:
    deg = h.degrees()
    # stable: equal degrees keep label order
    order = sorted(range(h.n), key=lambda i: (-deg[i], i))
    rank = [0] * h.n
    for pos, i in enumerate(order, start=1):
        rank[i] = pos
    return DegreeSequence(tuple(deg[i] for i in order), tuple(rank))


def components(h: Hypergraph) -> ComponentPartition:
    parent = list(range(h.n + 1))

    def find(v: int) -> int:
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for edge in h.edges:
        a = find(edge[0])
        for v in edge[1:]:
            b = find(v)
            if a != b:
                # keep the smaller label as root so ids come out canonical
                if b < a:
                    a, b = b, a
                parent[b] = a
    return ComponentPartition(tuple(find(v) for v in range(1, h.n + 1)))


def is_connected(h: Hypergraph) -> bool:
    return components(h).count == 1


# -- text format -------------------------------------------------------------


def parse(text: str) -> Hypergraph:
    """Parse the `n k m` header plus m edge lines; `#` lines and blank lines are skipped."""
    lines = [
        (no, line.split())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise HypergraphError("empty input: missing 'n k m' header")
    no, header = lines[0]
    if len(header) != 3:
        raise HypergraphError(f"line {no}: header must be 'n k m'")
    try:
        n, k, m = (int(tok) for tok in header)
    except ValueError:
        raise HypergraphError(f"line {no}: header fields must be integers") from None
    if k < 2:
        raise HypergraphError(f"line {no}: uniformity k must be >= 2, got {k}")
    if n < 1 or m < 0:
        raise HypergraphError(f"line {no}: need n >= 1 and m >= 0")
    body = lines[1:]
    if len(body) != m:
        raise HypergraphError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    seen = set()
    for no, toks in body:
        if len(toks) != k:
            raise HypergraphError(f"line {no}: expected {k} vertices, got {len(toks)}")
        try:
            edge = tuple(int(t) for t in toks)
        except ValueError:
            raise HypergraphError(f"line {no}: vertex labels must be integers") from None
        if any(v < 1 or v > n for v in edge):
            raise HypergraphError(f"line {no}: vertex out of range 1..{n}")
        key = frozenset(edge)
        if len(key) != k:
            raise HypergraphError(f"line {no}: duplicate vertex within edge")
        if key in seen:
            raise HypergraphError(f"line {no}: duplicate edge {sorted(key)}")
        seen.add(key)
        edges.append(edge)
    return Hypergraph(n, k, tuple(edges))


def serialize(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.k} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def read(path) -> Hypergraph:
    with open(path, encoding="utf-8") as f:
        return parse(f.read())


# -- generators ----------------------------------------------------------------


def unrank_subset(rank: int, n: int, k: int) -> Edge:
    """The `rank`-th k-subset of 1..n in lexicographic order (0-based rank)."""
    out = []
    v = 1
    for slots in range(k, 0, -1):
        while True:
            # subsets that start with v at this slot
            block = binom(n - v, slots - 1)
            if rank < block:
                break
            rank -= block
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def _random_edges(rng: random.Random, n: int, k: int, m: int) -> list[Edge]:
    total = binom(n, k)
    if total < UNRANK_LIMIT:
        return [unrank_subset(r, n, k) for r in rng.sample(range(total), m)]
    seen: set[Edge] = set()
    out = []
    while len(out) < m:
        e = tuple(sorted(rng.sample(range(1, n + 1), k)))
        if e not in seen:
            seen.add(e)
            out.append(e)
    return out


def complete(n: int, k: int) -> Hypergraph:
    _check_nk(n, k)
    return Hypergraph(n, k, tuple(unrank_subset(r, n, k) for r in range(binom(n, k))))


def single_edge(n: int, k: int) -> Hypergraph:
    _check_nk(n, k)
    return Hypergraph(n, k, (tuple(range(1, k + 1)),))


def random_m(n: int, k: int, m: int, seed: int | None = None, connected: bool = False) -> Hypergraph:
    """m distinct k-subsets drawn uniformly without replacement.

    With connected=True, resample until the result is connected; gives up after
    CONNECT_ATTEMPTS draws.
    """
    _check_nk(n, k)
    total = binom(n, k)
    if not 0 <= m <= total:
        raise HypergraphError(f"m={m} outside 0..C({n},{k})={total}")
    rng = random.Random(seed)
    attempts = CONNECT_ATTEMPTS if connected else 1
    for _ in range(attempts):
        h = Hypergraph(n, k, tuple(_random_edges(rng, n, k, m)))
        if not connected or is_connected(h):
            return h
    raise HypergraphError(f"no connected sample for n={n} k={k} m={m} after {attempts} attempts")


def generate(kind: str, n: int, k: int, m: int | None = None, seed: int | None = None,
             connected: bool = False) -> Hypergraph:
    if kind == "complete":
        h = complete(n, k)
    elif kind == "single-edge":
        h = single_edge(n, k)
    elif kind == "random-m":
        if m is None:
            raise HypergraphError("random-m needs m")
        return random_m(n, k, m, seed, connected)
    else:
        raise HypergraphError(f"unknown generator kind {kind!r}")
    if connected and not is_connected(h):
        raise HypergraphError(f"{kind} hypergraph on n={n} k={k} is not connected")
    return h


def from_edges(n: int, k: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    return Hypergraph(n, k, tuple(tuple(e) for e in edges))


def _check_nk(n: int, k: int) -> None:
    if k < 2:
        raise HypergraphError(f"uniformity k must be >= 2, got {k}")
    if n < k:
        raise HypergraphError(f"need n >= k, got n={n} k={k}")
