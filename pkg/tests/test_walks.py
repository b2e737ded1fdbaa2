"""Walk detection and walk-free extraction in edge-colored bipartite graphs."""

import json
import random
from pathlib import Path

import pytest

from xtrees.constructions import f_n
from xtrees.errors import InputError
from xtrees.walks import (
    EXHAUSTIVE_EDGE_LIMIT,
    ColoredBipartite,
    Walk4,
    enumerate_all_walks,
    extract_walk_free,
    find_forbidden_walk,
    size_bound,
)

GOLDEN = Path(__file__).resolve().parents[1] / "golden" / "extraction_sizes.json"


def _f(n: int) -> ColoredBipartite:
    return ColoredBipartite.from_colored_graph(f_n(n))


class TestColoredBipartite:
    def test_sides_inferred_odd_even(self):
        g = _f(16)
        assert all(v % 2 == 1 for v in g.side_a if g.neighbors(v))
        assert all(v % 2 == 0 for v in g.side_b)

    def test_edges_must_join_the_sides(self):
        with pytest.raises(InputError):
            ColoredBipartite([1, 2], [3], [(1, 2, 1)])

    def test_improper_coloring_rejected(self):
        with pytest.raises(InputError):
            ColoredBipartite([1, 2], [3], [(1, 3, 1), (2, 3, 1)])

    def test_matching_in_one_color_is_fine(self):
        g = ColoredBipartite([1, 2], [3, 4], [(1, 3, 1), (2, 4, 1)])
        assert g.d == 1
        assert g.color_of(3, 1) == 1

    def test_color_of_non_edge(self):
        g = ColoredBipartite([1], [2], [(1, 2, 1)])
        with pytest.raises(InputError):
            g.color_of(2, 3)

    def test_subgraph_keeps_colors_and_d(self):
        g = _f(16)
        sub = g.subgraph([(1, 2), (1, 4)])
        assert sub.d == g.d
        assert sub.color_of(1, 4) == 2


class TestDetector:
    def test_pinned_fast_walk(self):
        """f_n(16) carries a fast walk; the deterministic first witness is
        10-3-4-1-8 with colors (3, 1, 2, 3) read e1..e4."""
        w = find_forbidden_walk(_f(16), "fast")
        assert w == Walk4((10, 3, 4, 1, 8), (3, 1, 2, 3), "fast")
        w.check(_f(16))

    def test_pinned_slow_walk_is_valid(self):
        g = _f(16)
        w = Walk4((8, 5, 6, 3, 10), (2, 1, 2, 3), "slow")
        w.check(g, "B")
        assert find_forbidden_walk(g, "slow", "B") is not None

    def test_fast_takes_no_side(self):
        with pytest.raises(InputError):
            find_forbidden_walk(_f(16), "fast", "A")

    def test_two_colors_cannot_walk(self):
        g = _f(16)
        classes = g.color_classes()
        sub = g.subgraph([e for c in (1, 2) for e in classes[c]])
        for kind, side in (("fast", None), ("slow", "A"), ("slow", "B")):
            assert find_forbidden_walk(sub, kind, side) is None
            assert enumerate_all_walks(sub, kind, side) == []

    def test_agreement_with_enumeration(self):
        rng = random.Random(99)
        for _ in range(120):
            na, nb = rng.randint(1, 4), rng.randint(1, 4)
            pairs = [(a, b) for a in range(1, na + 1) for b in range(na + 1, na + nb + 1)]
            rng.shuffle(pairs)
            d = rng.randint(1, 4)
            used = {}
            edges = []
            for a, b in pairs[: rng.randint(0, len(pairs))]:
                free = [
                    c
                    for c in range(1, d + 1)
                    if c not in used.get(a, ()) and c not in used.get(b, ())
                ]
                if free:
                    c = rng.choice(free)
                    edges.append((a, b, c))
                    used.setdefault(a, set()).add(c)
                    used.setdefault(b, set()).add(c)
            g = ColoredBipartite(range(1, na + 1), range(na + 1, na + nb + 1), edges, d=d)
            for kind, side in (("fast", None), ("slow", "A"), ("slow", "B")):
                walks = enumerate_all_walks(g, kind, side)
                witness = find_forbidden_walk(g, kind, side)
                assert (witness is not None) == bool(walks)
                if witness is not None:
                    assert witness in walks


class TestExtraction:
    def test_bound_values(self):
        assert size_bound(12, 3) == 1
        assert size_bound(80, 5) == 1
        assert size_bound(1000, 4) == 2
        with pytest.raises(InputError):
            size_bound(10, 0)

    def test_exhaustive_on_f16(self):
        g = _f(16)
        assert len(g.edges) <= EXHAUSTIVE_EDGE_LIMIT
        ext = extract_walk_free(g, "fast", seed=0)
        assert ext.method == "exhaustive"
        assert ext.size == 10
        assert find_forbidden_walk(ext.subgraph, "fast") is None

    def test_greedy_on_f64_certifies(self):
        g = _f(64)
        ext = extract_walk_free(g, "slow", "B", seed=0)
        assert ext.method == "greedy"
        assert ext.size >= max(size_bound(len(g.edges), g.d), ext.largest_class)
        assert find_forbidden_walk(ext.subgraph, "slow", "B") is None

    def test_golden_sizes_reproduce(self):
        entries = json.loads(GOLDEN.read_text())["entries"]
        assert len(entries) == 6
        for entry in entries:
            g = _f(entry["n"])
            ext = extract_walk_free(g, entry["kind"], entry["start"], seed=entry["seed"])
            assert ext.size == entry["size"], entry
            assert [list(e) for e in ext.subgraph.edges] == entry["edges"]

    def test_metadata_block(self):
        ext = extract_walk_free(_f(16), "slow", "A", seed=3)
        meta = ext.metadata()
        assert meta["kind"] == "slow" and meta["start_side"] == "A"
        assert meta["seed"] == 3 and meta["log_base"] == 2
        assert meta["achieved"] == ext.size

    def test_seed_changes_only_greedy(self):
        g = _f(16)
        a = extract_walk_free(g, "fast", seed=0)
        b = extract_walk_free(g, "fast", seed=123)
        assert a.size == b.size  # exhaustive search ignores the shuffle order
