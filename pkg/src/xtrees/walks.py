"""Fast/slow walk detection in edge-colored bipartite graphs, and extraction
of large walk-free subgraphs.

A *walk* here is a directed traversal of four edges e1 e2 e3 e4 (vertices
v0..v4, consecutive edges sharing the intermediate vertex and distinct).
With a proper edge coloring c:

* fast:  c(e2) < c(e3) < c(e4) <= c(e1)
* slow:  c(e2) < c(e3) < c(e4)  and  c(e2) < c(e1) <= c(e4), with v0 on a
  designated start side.

Vertices may repeat along a walk; edge distinctness is only required for
consecutive edges (and already follows from the color constraints except for
the e1/e2 pair, which the color rules also separate).

``extract_walk_free`` returns a certified walk-free subgraph of size at least
``ceil(log2(d) / (480 d) * |E|)`` and never smaller than the largest single
color class.  The union of at most two color classes can never host a walk
(three strictly increasing colors are needed), which gives the search a safe
floor; an exhaustive branch-and-bound handles instances with at most 20
edges, a seeded greedy augmentation everything larger.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import InputError
from .order import _Graph

EXHAUSTIVE_EDGE_LIMIT = 20
ORACLE_EDGE_LIMIT = 14
LOG_BASE = 2

_KINDS = ("fast", "slow")


def _check_kind_side(kind: str, start_side: Optional[str]) -> Optional[str]:
    if kind not in _KINDS:
        raise InputError(f"walk kind must be 'fast' or 'slow', got {kind!r}")
    if kind == "fast":
        if start_side is not None:
            raise InputError("start_side only applies to slow walks")
        return None
    side = "B" if start_side is None else start_side
    if side not in ("A", "B"):
        raise InputError(f"start_side must be 'A' or 'B', got {start_side!r}")
    return side


class ColoredBipartite:
    """A bipartite graph with sides (A, B) and a proper edge coloring.

    ``edges`` is an iterable of ``(u, v, color)`` with ``u`` and ``v`` on
    opposite sides and colors positive integers; ``d`` defaults to the
    largest color used. Improper colorings and edges inside a side are
    rejected.
    """

    __slots__ = ("side_a", "side_b", "edges", "d", "_color", "_adj")

    def __init__(
        self,
        side_a: Iterable[int],
        side_b: Iterable[int],
        edges: Iterable[tuple[int, int, int]],
        d: Optional[int] = None,
    ) -> None:
        self.side_a = frozenset(side_a)
        self.side_b = frozenset(side_b)
        if self.side_a & self.side_b:
            raise InputError("sides A and B must be disjoint")
        norm = []
        for u, v, color in edges:
            if not isinstance(color, int) or color < 1:
                raise InputError(f"colors must be positive integers, got {color!r}")
            across = (u in self.side_a and v in self.side_b) or (
                u in self.side_b and v in self.side_a
            )
            if not across:
                raise InputError(f"edge ({u}, {v}) does not join A to B")
            norm.append((min(u, v), max(u, v), color))
        norm.sort()
        self.edges = tuple(norm)
        color = {}
        adj: dict[int, list[tuple[int, int]]] = {}
        for u, v, c in norm:
            e = (u, v)
            if e in color:
                raise InputError(f"duplicate edge ({u}, {v})")
            color[e] = c
            adj.setdefault(u, []).append((v, c))
            adj.setdefault(v, []).append((u, c))
        for v, nbrs in adj.items():
            seen = [c for _, c in nbrs]
            if len(seen) != len(set(seen)):
                raise InputError(f"coloring is not proper at vertex {v}")
        self._color = color
        self._adj = {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}
        maxc = max((c for _, _, c in norm), default=1)
        self.d = maxc if d is None else d
        if self.d < maxc:
            raise InputError(f"d = {self.d} below largest color {maxc}")

    def color_of(self, u: int, v: int) -> int:
        try:
            return self._color[(u, v) if u < v else (v, u)]
        except KeyError:
            raise InputError(f"({u}, {v}) is not an edge") from None

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """Sorted (neighbor, color) pairs at v."""
        return self._adj.get(v, ())

    def side_of(self, v: int) -> str:
        if v in self.side_a:
            return "A"
        if v in self.side_b:
            return "B"
        raise InputError(f"vertex {v} is on neither side")

    def color_classes(self) -> dict[int, tuple[tuple[int, int], ...]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for u, v, c in self.edges:
            out.setdefault(c, []).append((u, v))
        return {c: tuple(es) for c, es in sorted(out.items())}

    def subgraph(self, keep: Iterable[tuple[int, int]]) -> "ColoredBipartite":
        """Restriction to the given edges (same sides, same colors, same d)."""
        want = {tuple(sorted(e)) for e in keep}
        missing = want - set(self._color)
        if missing:
            raise InputError(f"not edges of this graph: {sorted(missing)}")
        sub = [(u, v, c) for u, v, c in self.edges if (u, v) in want]
        return ColoredBipartite(self.side_a, self.side_b, sub, d=self.d)

    @classmethod
    def from_colored_graph(
        cls,
        g: _Graph,
        sides: Optional[tuple[Iterable[int], Iterable[int]]] = None,
    ) -> "ColoredBipartite":
        """Adopt an edge-colored graph, inferring sides when not given.

        Inference two-colors each connected component and puts the class of
        the component's smallest vertex into A; isolated vertices land in A.
        """
        if g.colors is None:
            raise InputError("graph has no edge colors")
        if sides is not None:
            a, b = sides
            return cls(a, b, [(u, v, c) for (u, v), c in zip(g.edges, g.colors)])
        adj: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
        for u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        part = {}
        for start in range(1, g.n + 1):
            if start in part:
                continue
            part[start] = 0
            queue = [start]
            while queue:
                x = queue.pop()
                for y in adj[x]:
                    if y not in part:
                        part[y] = part[x] ^ 1
                        queue.append(y)
                    elif part[y] == part[x]:
                        raise InputError("graph is not bipartite")
        side_a = [v for v, p in part.items() if p == 0]
        side_b = [v for v, p in part.items() if p == 1]
        return cls(side_a, side_b, [(u, v, c) for (u, v), c in zip(g.edges, g.colors)])


@dataclass(frozen=True)
class Walk4:
    """A four-edge walk v0..v4 with its edge colors and kind."""

    vertices: tuple[int, int, int, int, int]
    colors: tuple[int, int, int, int]
    kind: str

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple(
            (min(vs[i], vs[i + 1]), max(vs[i], vs[i + 1])) for i in range(4)
        )

    def check(self, g: ColoredBipartite, start_side: Optional[str] = None) -> None:
        """Raise AssertionError unless this walk is valid in g."""
        side = _check_kind_side(self.kind, start_side)
        vs, cs = self.vertices, self.colors
        for i, e in enumerate(self.edges):
            assert e in g._color, f"{e} not an edge"
            assert g.color_of(*e) == cs[i], f"color mismatch on {e}"
        for i in range(3):
            assert self.edges[i] != self.edges[i + 1], "consecutive edges equal"
        c1, c2, c3, c4 = cs
        assert c2 < c3 < c4, "need c2 < c3 < c4"
        if self.kind == "fast":
            assert c4 <= c1, "fast needs c4 <= c1"
        else:
            assert c2 < c1 <= c4, "slow needs c2 < c1 <= c4"
            assert g.side_of(vs[0]) == side, f"slow walk must start in {side}"


def find_forbidden_walk(
    g: ColoredBipartite, kind: str, start_side: Optional[str] = None
) -> Optional[Walk4]:
    """First forbidden walk of the requested kind, or None.

    The search is deterministic: vertices and neighbor lists are scanned in
    sorted order, and the walk is grown from its second edge outward (e2,
    then e3, e4, then e1), which keeps the color filters sharpest early.
    """
    side = _check_kind_side(kind, start_side)
    for v1 in sorted(g._adj):
        for v2, c2 in g.neighbors(v1):
            for v3, c3 in g.neighbors(v2):
                if c3 <= c2:
                    continue
                for v4, c4 in g.neighbors(v3):
                    if c4 <= c3:
                        continue
                    for v0, c1 in g.neighbors(v1):
                        # c1 > c2 in both kinds, so e1 != e2 comes for free
                        if kind == "fast":
                            if c1 < c4:
                                continue
                        else:
                            if not (c2 < c1 <= c4):
                                continue
                            if g.side_of(v0) != side:
                                continue
                        return Walk4((v0, v1, v2, v3, v4), (c1, c2, c3, c4), kind)
    return None


def enumerate_all_walks(
    g: ColoredBipartite, kind: str, start_side: Optional[str] = None
) -> list[Walk4]:
    """Brute-force reference: every walk of the kind, via raw edge 4-tuples.

    Deliberately shares no search logic with find_forbidden_walk — it ranges
    over all ordered edge quadruples and all ways to chain them. Capped at
    14 edges.
    """
    side = _check_kind_side(kind, start_side)
    if len(g.edges) > ORACLE_EDGE_LIMIT:
        raise InputError(f"reference enumeration capped at {ORACLE_EDGE_LIMIT} edges")
    plain = [(u, v) for u, v, _ in g.edges]

    def other(e, x):
        return e[0] if e[1] == x else e[1]

    found = []
    for e1, e2, e3, e4 in itertools.product(plain, repeat=4):
        if e1 == e2 or e2 == e3 or e3 == e4:
            continue
        # e2 = {v1, v2}: choosing v1 fixes the whole vertex sequence
        for v1 in e1:
            if v1 not in e2:
                continue
            v0 = other(e1, v1)
            v2 = other(e2, v1)
            if v2 not in e3:
                continue
            v3 = other(e3, v2)
            if v3 not in e4:
                continue
            v4 = other(e4, v3)
            cs = tuple(g.color_of(*e) for e in (e1, e2, e3, e4))
            c1, c2, c3, c4 = cs
            if not c2 < c3 < c4:
                continue
            if kind == "fast":
                if not c4 <= c1:
                    continue
            else:
                if not c2 < c1 <= c4:
                    continue
                if g.side_of(v0) != side:
                    continue
            found.append(Walk4((v0, v1, v2, v3, v4), cs, kind))
    return found


def _walk_through(
    adj: dict[int, list[tuple[int, int]]],
    colors: dict[tuple[int, int], int],
    e_new: tuple[int, int],
    kind: str,
    side_of,
    side: Optional[str],
) -> bool:
    """Does adding e_new (already present in adj) close some forbidden walk?

    Only walks using e_new in at least one of the four slots can be new, so
    the scan fixes e_new's slot and direction and extends outward.
    """
    cn = colors[e_new]

    def nbrs(v):
        return adj.get(v, ())

    for a, b in (e_new, e_new[::-1]):
        # e_new as e2 = (v1=a, v2=b)
        for v3, c3 in nbrs(b):
            if c3 <= cn:
                continue
            for v4, c4 in nbrs(v3):
                if c4 <= c3:
                    continue
                for v0, c1 in nbrs(a):
                    if (v0, c1) == (b, cn):
                        continue
                    if kind == "fast":
                        if c1 >= c4:
                            return True
                    elif cn < c1 <= c4 and side_of(v0) == side:
                        return True
        # e_new as e3 = (v2=a, v3=b)
        for v1, c2 in nbrs(a):
            if c2 >= cn:
                continue
            for v4, c4 in nbrs(b):
                if c4 <= cn:
                    continue
                for v0, c1 in nbrs(v1):
                    if (v0, c1) == (a, c2):
                        continue
                    if kind == "fast":
                        if c1 >= c4:
                            return True
                    elif c2 < c1 <= c4 and side_of(v0) == side:
                        return True
        # e_new as e4 = (v3=a, v4=b)
        for v2, c3 in nbrs(a):
            if c3 >= cn:
                continue
            for v1, c2 in nbrs(v2):
                if c2 >= c3:
                    continue
                for v0, c1 in nbrs(v1):
                    if (v0, c1) == (v2, c2):
                        continue
                    if kind == "fast":
                        if c1 >= cn:
                            return True
                    elif c2 < c1 <= cn and side_of(v0) == side:
                        return True
        # e_new as e1 = (v0=a, v1=b)
        if kind == "slow" and side_of(a) != side:
            continue
        for v2, c2 in nbrs(b):
            if (v2, c2) == (a, cn):
                continue
            if kind == "fast":
                if c2 >= cn:
                    continue
            elif not c2 < cn:
                continue
            for v3, c3 in nbrs(v2):
                if c3 <= c2:
                    continue
                for v4, c4 in nbrs(v3):
                    if c4 <= c3:
                        continue
                    if kind == "fast":
                        if c4 <= cn:
                            return True
                    elif cn <= c4:
                        return True
    return False


@dataclass(frozen=True)
class Extraction:
    """A certified walk-free subgraph plus the metadata the bound refers to."""

    subgraph: ColoredBipartite
    kind: str
    start_side: Optional[str]
    seed: int
    bound: int
    largest_class: int
    method: str
    log_base: int = LOG_BASE

    @property
    def size(self) -> int:
        return len(self.subgraph.edges)

    def metadata(self) -> dict:
        return {
            "kind": self.kind,
            "start_side": self.start_side,
            "seed": self.seed,
            "bound": self.bound,
            "achieved": self.size,
            "largest_class": self.largest_class,
            "method": self.method,
            "log_base": self.log_base,
        }


def size_bound(num_edges: int, d: int) -> int:
    """ceil(log2(d) / (480 d) * |E|) — the guaranteed extraction size."""
    if d < 1:
        raise InputError("d must be positive")
    return math.ceil(math.log2(d) / (480 * d) * num_edges)


def extract_walk_free(
    g: ColoredBipartite,
    kind: str,
    start_side: Optional[str] = None,
    seed: int = 0,
) -> Extraction:
    side = _check_kind_side(kind, start_side)
    bound = size_bound(len(g.edges), g.d)
    classes = g.color_classes()
    largest = max((len(es) for es in classes.values()), default=0)

    def walk_free_greedy() -> tuple[list[tuple[int, int]], str]:
        by_size = sorted(classes.items(), key=lambda kv: (-len(kv[1]), kv[0]))
        start = [e for _, es in by_size[:2] for e in es]
        chosen = set(start)
        adj: dict[int, list[tuple[int, int]]] = {}
        colors = {}
        for u, v in chosen:
            c = g.color_of(u, v)
            colors[(u, v)] = colors[(v, u)] = c
            adj.setdefault(u, []).append((v, c))
            adj.setdefault(v, []).append((u, c))
        rest = [e for _, es in by_size[2:] for e in es]
        random.Random(seed).shuffle(rest)
        for u, v in rest:
            c = g.color_of(u, v)
            colors[(u, v)] = colors[(v, u)] = c
            adj.setdefault(u, []).append((v, c))
            adj.setdefault(v, []).append((u, c))
            if _walk_through(adj, colors, (u, v), kind, g.side_of, side):
                adj[u].remove((v, c))
                adj[v].remove((u, c))
                del colors[(u, v)], colors[(v, u)]
            else:
                chosen.add((u, v))
        return sorted(chosen), "greedy"

    def walk_free_exhaustive() -> tuple[list[tuple[int, int]], str]:
        edges = [(u, v) for u, v, _ in g.edges]
        best: list[tuple[int, int]] = []
        adj: dict[int, list[tuple[int, int]]] = {}
        colors: dict[tuple[int, int], int] = {}
        chosen: list[tuple[int, int]] = []

        def rec(idx: int) -> None:
            nonlocal best
            if len(chosen) + (len(edges) - idx) <= len(best):
                return
            if idx == len(edges):
                if len(chosen) > len(best):
                    best = list(chosen)
                return
            u, v = edges[idx]
            c = g.color_of(u, v)
            colors[(u, v)] = colors[(v, u)] = c
            adj.setdefault(u, []).append((v, c))
            adj.setdefault(v, []).append((u, c))
            if not _walk_through(adj, colors, (u, v), kind, g.side_of, side):
                chosen.append((u, v))
                rec(idx + 1)
                chosen.pop()
            adj[u].remove((v, c))
            adj[v].remove((u, c))
            del colors[(u, v)], colors[(v, u)]
            rec(idx + 1)

        rec(0)
        return best, "exhaustive"

    if len(g.edges) <= EXHAUSTIVE_EDGE_LIMIT:
        keep, method = walk_free_exhaustive()
    else:
        keep, method = walk_free_greedy()
    sub = g.subgraph(keep)
    witness = find_forbidden_walk(sub, kind, start_side)
    if witness is not None:
        raise RuntimeError(f"extraction not walk-free: {witness}")
    if len(keep) < max(bound, largest):
        raise RuntimeError(
            f"extraction size {len(keep)} below floor {max(bound, largest)}"
        )
    return Extraction(sub, kind, side, seed, bound, largest, method)
