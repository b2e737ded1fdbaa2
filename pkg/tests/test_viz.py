"""DOT and SVG exporters: structural markers, not pixel-level output."""

import xml.etree.ElementTree as ET

from xtrees.constructions import f_n
from xtrees.order import CgGraph, OrderedGraph
from xtrees.viz import to_dot, to_svg

P = OrderedGraph(4, [(1, 3), (1, 4), (2, 4)])
L = CgGraph(4, [(1, 2), (2, 3), (3, 4)])


class TestDot:
    def test_graph_block_and_edges(self):
        dot = to_dot(P)
        assert dot.startswith("graph {")
        assert dot.rstrip().endswith("}")
        assert "1 -- 3;" in dot and "1 -- 4;" in dot and "2 -- 4;" in dot

    def test_every_vertex_gets_a_pinned_position(self):
        dot = to_dot(L)
        for v in range(1, 5):
            assert f"{v} [pos=" in dot
        assert dot.count('!"]') == 4

    def test_colored_edges_carry_color_attributes(self):
        g = f_n(16)
        dot = to_dot(g)
        assert dot.count("[color=") == len(g.edges)
        # three distinct classes, three distinct colors
        assert len({ln.split('color="')[1][:7] for ln in dot.splitlines() if "color=" in ln}) == 3

    def test_uncolored_edges_have_no_color_attribute(self):
        assert "color=" not in to_dot(P)


class TestSvg:
    def test_ordered_uses_arcs(self):
        svg = to_svg(P)
        assert svg.count("<path") == 3
        assert "A " in svg  # elliptical-arc path command
        assert "<line" not in svg

    def test_cg_uses_chords_and_guide_circle(self):
        svg = to_svg(L)
        assert svg.count("<line") == 3
        assert 'stroke-dasharray="4 4"' in svg
        assert "<path" not in svg

    def test_vertex_labels_present(self):
        svg = to_svg(L)
        for v in range(1, 5):
            assert f">{v}</text>" in svg

    def test_is_well_formed_xml(self):
        for g in (P, L, f_n(8)):
            root = ET.fromstring(to_svg(g))
            assert root.tag.endswith("svg")

    def test_colored_graph_uses_palette(self):
        svg = to_svg(f_n(16))
        assert "#1f77b4" in svg and "#d62728" in svg and "#2ca02c" in svg
