import re

from gentzen.export import export_svg, export_text, svg_layout
from gentzen.parser import parse_sequent
from gentzen.prooftree import apply_at, load, new_proof
from gentzen.rules import RuleId as R, Selection as Sel


def conjunction_proof():
    tree = new_proof(parse_sequent("==> P & Q"))
    return apply_at(tree, 0, R.AndR, Sel(side="R", index=0))


def test_single_node_text_export_is_just_the_sequent():
    text = export_text(new_proof(parse_sequent("P ==> P")))
    assert text == "P ==> P\n"


def test_two_premiss_layout_with_rule_label():
    text = export_text(conjunction_proof())
    lines = text.splitlines()
    assert lines[-1].strip() == "==> P & Q"
    assert "AndR" in lines[-2]
    assert set(lines[-2].split(" ")[0]) == {"-"}
    assert "==> P" in lines[0] and "==> Q" in lines[0]


def test_axiom_gets_bar_without_premisses():
    tree = new_proof(parse_sequent("P ==> P"))
    tree = apply_at(tree, 0, R.AxiomId, Sel(side="L", index=0, partner=0))
    lines = export_text(tree).splitlines()
    assert lines[0].startswith("---")
    assert "AxiomId" in lines[0]
    assert lines[1].strip() == "P ==> P"


def test_text_export_deterministic(proof_files):
    for path in proof_files:
        tree = load(path.read_bytes())
        assert export_text(tree) == export_text(tree)
        assert export_text(tree).endswith("\n")


def test_svg_structure_and_determinism():
    svg = export_svg(conjunction_proof())
    assert svg.startswith("<svg ")
    assert svg == export_svg(conjunction_proof())
    assert svg.count("<line") == 1
    assert len(re.findall(r"<text", svg)) == 4  # 3 sequents + 1 label


def test_svg_escapes_markup():
    svg = export_svg(new_proof(parse_sequent("P & Q ==> R")))
    assert "P &amp; Q" in svg


def test_corpus_svg_sibling_boxes_disjoint(proof_files):
    for path in proof_files:
        tree = load(path.read_bytes())
        layout = svg_layout(tree)
        boxes = {b.node_id: b for b in layout.boxes}

        def walk(node):
            kids = node.children
            for i in range(len(kids)):
                for j in range(i + 1, len(kids)):
                    assert not boxes[kids[i].id].overlaps(boxes[kids[j].id]), (
                        path.name, kids[i].id, kids[j].id
                    )
                walk(kids[i])

        walk(tree.root)


def test_corpus_svg_texts_inside_viewbox(proof_files):
    for path in proof_files:
        svg = export_svg(load(path.read_bytes()))
        m = re.search(r'viewBox="0 0 (\d+) (\d+)"', svg)
        assert m
        width, height = int(m.group(1)), int(m.group(2))
        for xs, ys in re.findall(r'<text x="([\d.]+)" y="([\d.]+)"', svg):
            assert 0 <= float(xs) <= width
            assert 0 <= float(ys) <= height
