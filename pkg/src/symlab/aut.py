"""Colored-graph automorphism engine.

The engine decides which vertex permutations preserve both adjacency and a
vertex coloring, using individualization-refinement backtracking:

* ``refine`` drives a coloring to its coarsest equitable refinement (every
  two vertices in a class see the same multiset of neighbor classes).
* The group search individualizes one vertex of the first smallest
  non-singleton class, recursively computes that vertex's stabilizer, and
  finds one coset representative per orbit point; the group order is the
  product of the fundamental orbit sizes along this chain.

All searches are deterministic (fixed cell selection, vertices branched in
index order) and guarded by a node budget: exhausting the budget raises,
it never degrades into a wrong answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph

DEFAULT_NODE_BUDGET = 10_000_000

# Groups at most this large are expanded into an explicit element list so
# that repeated colored queries on one graph become cheap filters.
ENUMERATE_LIMIT = 2048

Perm = tuple[int, ...]


class BudgetExceededError(RuntimeError):
    """Search-tree node budget exhausted; the query has no answer."""


class GroupTooLargeError(RuntimeError):
    """Element enumeration refused because the group order exceeds the cap."""


class ColoringError(ValueError):
    """Labels are not a total map onto a contiguous range 1..d."""


class Budget:
    """Mutable node counter shared across the searches of one operation."""

    __slots__ = ("cap", "used")

    def __init__(self, cap: int = DEFAULT_NODE_BUDGET):
        self.cap = cap
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.cap:
            raise BudgetExceededError(
                f"search budget of {self.cap} nodes exhausted"
            )


@dataclass(frozen=True)
class Coloring:
    """Total vertex labeling with labels 1..d; doubles as an ordered partition."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if not self.labels:
            raise ColoringError("coloring must label at least one vertex")
        seen = set(self.labels)
        d = max(seen)
        if seen != set(range(1, d + 1)):
            raise ColoringError(f"labels must form a contiguous range 1..d, got {sorted(seen)}")

    @classmethod
    def uniform(cls, n: int) -> "Coloring":
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_labels(self) -> int:
        return max(self.labels)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_labels)]
        for v, c in enumerate(self.labels):
            out[c - 1].append(v)
        return out

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes()]


@dataclass(frozen=True)
class PermGroup:
    """Permutation group given by generators, exact order, and orbit partition."""

    degree: int
    generators: tuple[Perm, ...]
    order: int
    orbits: tuple[tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @classmethod
    def from_generators(cls, degree: int, generators: Iterable[Perm], order: int) -> "PermGroup":
        gens = tuple(tuple(g) for g in generators)
        return cls(degree, gens, order, _orbit_partition(degree, gens))


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Permutation applying q first, then p."""
    return tuple(p[x] for x in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _orbit_partition(n: int, gens: Sequence[Perm]) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(m)) for m in sorted(groups.values()))


def _orbit_of(start: int, gens: Sequence[Perm]) -> set[int]:
    orbit = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = g[v]
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    return orbit


# ---------------------------------------------------------------------------
# the search engine
# ---------------------------------------------------------------------------

class _Engine:
    """One individualization-refinement search over a fixed graph + coloring."""

    def __init__(self, graph: Graph, root_colors: Sequence[int], budget: Budget):
        self.n = graph.n
        self.adj = graph.adj_lists
        self.bits = graph.adj_bits
        self.root = tuple(root_colors)
        self.budget = budget

    # -- partition primitives ------------------------------------------------

    def refine(self, colors: Sequence[int]) -> list[int]:
        """Coarsest equitable refinement; class ids renumbered 0..k-1 in an
        isomorphism-invariant order (old class first, then neighbor signature)."""
        self.budget.spend()
        adj = self.adj
        n = self.n
        colors = list(colors)
        ncells = len(set(colors))
        while True:
            sigs = [
                (colors[v], *sorted(colors[u] for u in adj[v]))
                for v in range(n)
            ]
            palette = sorted(set(sigs))
            lut = {s: i for i, s in enumerate(palette)}
            colors = [lut[s] for s in sigs]
            if len(palette) == ncells:
                return colors
            ncells = len(palette)

    @staticmethod
    def individualize(colors: Sequence[int], v: int) -> list[int]:
        out = list(colors)
        out[v] = max(colors) + 1
        return out

    @staticmethod
    def shape(colors: Sequence[int]) -> tuple[int, ...]:
        sizes = [0] * (max(colors) + 1)
        for c in colors:
            sizes[c] += 1
        return tuple(sizes)

    @staticmethod
    def target_cell(colors: Sequence[int]) -> list[int] | None:
        """First smallest non-singleton class, or None when discrete."""
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        best: tuple[int, int] | None = None
        for c, k in sizes.items():
            if k >= 2 and (best is None or (k, c) < best):
                best = (k, c)
        if best is None:
            return None
        return [v for v, c in enumerate(colors) if c == best[1]]

    # -- candidate verification ----------------------------------------------

    def _is_automorphism(self, sigma: Sequence[int]) -> bool:
        bits = self.bits
        root = self.root
        for v in range(self.n):
            if root[sigma[v]] != root[v]:
                return False
            m = bits[v]
            img = 0
            while m:
                b = m & -m
                img |= 1 << sigma[b.bit_length() - 1]
                m ^= b
            if img != bits[sigma[v]]:
                return False
        return True

    # -- complete search for one mapping between two configurations -----------

    def _find_iso(self, left: list[int], right: list[int]) -> Perm | None:
        if self.shape(left) != self.shape(right):
            return None
        cell = self.target_cell(left)
        if cell is None:
            pos = {c: v for v, c in enumerate(right)}
            sigma = tuple(pos[c] for c in left)
            return sigma if self._is_automorphism(sigma) else None
        color = left[cell[0]]
        sub_left = self.refine(self.individualize(left, cell[0]))
        for w in (v for v in range(self.n) if right[v] == color):
            sub_right = self.refine(self.individualize(right, w))
            found = self._find_iso(sub_left, sub_right)
            if found is not None:
                return found
        return None

    # -- group computation along the first-path stabilizer chain --------------

    def group(self) -> tuple[list[Perm], int]:
        return self._group_of(self.refine(self.root))

    def _group_of(self, colors: list[int]) -> tuple[list[Perm], int]:
        cell = self.target_cell(colors)
        if cell is None:
            return [], 1
        beta = cell[0]
        sub = self.refine(self.individualize(colors, beta))
        gens, order = self._group_of(sub)
        orbit = _orbit_of(beta, gens)
        for v in cell[1:]:
            if v in orbit:
                continue
            sigma = self._find_iso(sub, self.refine(self.individualize(colors, v)))
            if sigma is not None:
                gens.append(sigma)
                orbit = _orbit_of(beta, gens)
        return gens, order * len(orbit)

    def first_nontrivial(self) -> Perm | None:
        """Cheapest witness that the colored group is nontrivial, else None."""
        return self._first_nontrivial(self.refine(self.root))

    def _first_nontrivial(self, colors: list[int]) -> Perm | None:
        cell = self.target_cell(colors)
        if cell is None:
            return None
        beta = cell[0]
        sub = self.refine(self.individualize(colors, beta))
        found = self._first_nontrivial(sub)
        if found is not None:
            return found
        for v in cell[1:]:
            sigma = self._find_iso(sub, self.refine(self.individualize(colors, v)))
            if sigma is not None:
                return sigma
        return None


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def _root_colors(g: Graph, coloring: Coloring | None) -> list[int]:
    if coloring is None:
        return [0] * g.n
    if coloring.n != g.n:
        raise ColoringError(f"coloring has {coloring.n} labels for a graph of order {g.n}")
    return list(coloring.labels)


def automorphisms(g: Graph, coloring: Coloring | None = None, budget: Budget | None = None) -> PermGroup:
    """Exact group of adjacency- and color-preserving permutations."""
    budget = budget or Budget()
    gens, order = _Engine(g, _root_colors(g, coloring), budget).group()
    return PermGroup.from_generators(g.n, gens, order)


def is_color_rigid(g: Graph, coloring: Coloring, budget: Budget | None = None) -> bool:
    """True iff no nontrivial automorphism preserves every label."""
    budget = budget or Budget()
    return _Engine(g, _root_colors(g, coloring), budget).first_nontrivial() is None


def pointwise_stabilizer_is_trivial(g: Graph, vertices: Iterable[int], budget: Budget | None = None) -> bool:
    """True iff only the identity automorphism fixes every given vertex.

    Implemented by individualizing: each listed vertex gets a distinct fresh
    color, everything else shares one color.
    """
    budget = budget or Budget()
    colors = [0] * g.n
    for i, v in enumerate(sorted(set(vertices))):
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for order {g.n}")
        colors[v] = i + 1
    return _Engine(g, colors, budget).first_nontrivial() is None


def orbits_of(group: PermGroup) -> tuple[tuple[int, ...], ...]:
    return group.orbits


def enumerate_elements(group: PermGroup, cap: int) -> list[Perm]:
    """All group elements (sorted), refusing when order exceeds ``cap``."""
    if group.order > cap:
        raise GroupTooLargeError(f"group order {group.order} exceeds cap {cap}")
    ident = identity_perm(group.degree)
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for gen in group.generators:
                f = compose(gen, e)
                if f not in elements:
                    elements.add(f)
                    nxt.append(f)
        frontier = nxt
    return sorted(elements)


def brute_force_automorphisms(g: Graph, coloring: Coloring | None = None, max_order: int = 8) -> list[Perm]:
    """Oracle: filter all n! permutations for adjacency and color preservation.

    Independent of the refinement engine; only sensible for g.n <= max_order.
    """
    if g.n > max_order:
        raise ValueError(f"brute force limited to order {max_order}, got {g.n}")
    colors = _root_colors(g, coloring)
    bits = g.adj_bits
    n = g.n
    out = []
    for sigma in itertools.permutations(range(n)):
        ok = True
        for v in range(n):
            if colors[sigma[v]] != colors[v]:
                ok = False
                break
            m = bits[v]
            img = 0
            while m:
                b = m & -m
                img |= 1 << sigma[b.bit_length() - 1]
                m ^= b
            if img != bits[sigma[v]]:
                ok = False
                break
        if ok:
            out.append(sigma)
    return out


def refine(g: Graph, coloring: Coloring, budget: Budget | None = None) -> Coloring:
    """Coarsest equitable refinement of a coloring (stable, deterministic,
    automorphism-invariant; refines the input label classes in order)."""
    budget = budget or Budget()
    colors = _Engine(g, _root_colors(g, coloring), budget).refine(coloring.labels)
    return Coloring(tuple(c + 1 for c in colors))


# ---------------------------------------------------------------------------
# per-graph query context
# ---------------------------------------------------------------------------

class AutContext:
    """Caches one graph's automorphism group and answers colored queries.

    When the full group is small enough it is expanded once into an explicit
    element list, and every colored query becomes an exact filter over it;
    otherwise each query runs its own refinement search.  Both backends give
    identical answers, so callers stay deterministic either way.
    """

    def __init__(self, graph: Graph, budget: Budget | None = None,
                 enumerate_limit: int = ENUMERATE_LIMIT):
        self.graph = graph
        self.budget = budget or Budget()
        self.full = automorphisms(graph, budget=self.budget)
        self._elements: list[Perm] | None = None
        if self.full.order <= enumerate_limit:
            # elements are sorted, so the identity sits at index 0
            self._elements = enumerate_elements(self.full, cap=enumerate_limit)

    # colors below are arbitrary integer vectors: equal value = same class

    def first_nontrivial(self, colors: Sequence[int]) -> Perm | None:
        if self._elements is not None:
            n = self.graph.n
            for p in self._elements[1:]:
                if all(colors[p[v]] == colors[v] for v in range(n)):
                    return p
            return None
        return _Engine(self.graph, colors, self.budget).first_nontrivial()

    def is_rigid(self, colors: Sequence[int]) -> bool:
        return self.first_nontrivial(colors) is None

    def group(self, colors: Sequence[int]) -> PermGroup:
        if self._elements is not None:
            n = self.graph.n
            kept = [p for p in self._elements
                    if all(colors[p[v]] == colors[v] for v in range(n))]
            gens = tuple(p for p in kept if p != self._elements[0])
            return PermGroup(n, gens, len(kept), _orbit_partition(n, kept))
        gens, order = _Engine(self.graph, colors, self.budget).group()
        return PermGroup.from_generators(self.graph.n, gens, order)

    def pointwise_trivial(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(vertices))
        if self._elements is not None:
            for p in self._elements[1:]:
                if all(p[v] == v for v in vs):
                    return False
            return True
        colors = [0] * self.graph.n
        for i, v in enumerate(vs):
            colors[v] = i + 1
        return _Engine(self.graph, colors, self.budget).first_nontrivial() is None

    def subset_orbit(self, vertices: Iterable[int]) -> set[frozenset[int]]:
        """Orbit of a vertex set under the full group's generators."""
        start = frozenset(vertices)
        orbit = {start}
        frontier = [start]
        while frontier:
            s = frontier.pop()
            for gen in self.full.generators:
                t = frozenset(gen[v] for v in s)
                if t not in orbit:
                    orbit.add(t)
                    frontier.append(t)
        return orbit
