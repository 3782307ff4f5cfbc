"""Building the composite topic tree (the domain/genre norm) by aligning and
merging document topic trees from a reference corpus.

The build is a deterministic fold: the composite is seeded from the first
document (file-name order) and every further document is aligned against the
current composite, then merged in. Per node the composite tracks support
(how many documents contributed the topic), typicality (support / documents
seen) and position (mean normalized sibling rank over contributors).

Alignment is greedy and top-down. Roots always align. Every other document
node may only match among the children of its parent's matched composite
node, plus that node itself so a level skip in one document can be absorbed.
A match needs label similarity >= threshold; ties fall to the candidate with
the lower position, then the lower id.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .ingest import CorpusSet
from .model import (
    CompositeNode,
    CompositeTopicTree,
    DocumentTopicTree,
    LexicalForms,
    node_map,
    parent_map,
    sibling_rank_map,
    walk,
)

SCHEMA_VERSION = "1"


class EmptyCorpusError(ValueError):
    """A norm cannot be built from an empty corpus."""


class CompositeSchemaError(ValueError):
    """A composite file failed schema or invariant validation."""


@dataclass
class Alignment:
    """Mapping from document node ids to composite node ids.

    Every document node is either in pairs or in unmatched; a matched child
    always maps inside the subtree of its parent's match.
    """

    pairs: dict[int, int] = field(default_factory=dict)
    unmatched: set[int] = field(default_factory=set)


def label_similarity(a: LexicalForms, b: LexicalForms) -> float:
    """Similarity in [0, 1]: 1.0 when any normalized form is shared,
    otherwise the best token-level Jaccard over all form pairs."""
    forms_a = a.normal_forms()
    forms_b = b.normal_forms()
    if forms_a & forms_b:
        return 1.0
    best = 0.0
    for fa in forms_a:
        tokens_a = set(fa.split())
        for fb in forms_b:
            tokens_b = set(fb.split())
            union = tokens_a | tokens_b
            if not union:
                continue
            best = max(best, len(tokens_a & tokens_b) / len(union))
    return best


def align_tree(doc: DocumentTopicTree, composite: CompositeTopicTree, threshold: float) -> Alignment:
    """Greedily align a document tree against the composite."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError("threshold must be in [0, 1]")
    comp_nodes = node_map(composite.root)
    doc_parents = parent_map(doc.root)

    alignment = Alignment(pairs={doc.root.id: composite.root.id})
    for node in doc.nodes():
        if node.id == doc.root.id:
            continue
        parent = doc_parents[node.id]
        anchor_id = alignment.pairs.get(parent)
        if anchor_id is None:
            alignment.unmatched.add(node.id)
            continue
        anchor = comp_nodes[anchor_id]
        best: CompositeNode | None = None
        best_key: tuple[float, float, int] | None = None
        for candidate in (anchor, *anchor.children):
            similarity = label_similarity(node.label, candidate.label)
            if similarity < threshold:
                continue
            key = (-similarity, candidate.position, candidate.id)
            if best_key is None or key < best_key:
                best, best_key = candidate, key
        if best is None:
            alignment.unmatched.add(node.id)
        else:
            alignment.pairs[node.id] = best.id
    return alignment


def merge(composite: CompositeTopicTree, doc: DocumentTopicTree, alignment: Alignment) -> CompositeTopicTree:
    """Fold one document into the composite, in place.

    Matched composite nodes gain support and lexical variants (once per
    document, even if several document nodes collapsed onto them); unmatched
    document nodes are inserted as fresh children under their parent's
    composite node. Typicality and sibling order are recomputed afterwards.
    """
    comp_nodes = node_map(composite.root)
    doc_parents = parent_map(doc.root)
    doc_ranks = sibling_rank_map(doc.root)
    next_id = max(comp_nodes) + 1

    # first document node (pre-order) to hit a composite node carries the
    # support and rank contribution for this document
    contributions: dict[int, int] = {}
    for node in doc.nodes():
        target = alignment.pairs.get(node.id)
        if target is not None and target not in contributions:
            contributions[target] = node.id

    doc_nodes = node_map(doc.root)
    for comp_id, doc_node_id in contributions.items():
        comp = comp_nodes[comp_id]
        rank = doc_ranks[doc_node_id]
        comp.position = (comp.position * comp.support + rank) / (comp.support + 1)
        comp.support += 1
        comp.label = comp.label.merged(doc_nodes[doc_node_id].label)

    # insert unmatched nodes top-down: parents are processed before children,
    # so an unmatched parent already has its fresh composite node
    inserted: dict[int, CompositeNode] = {}
    for node in doc.nodes():
        if node.id in alignment.pairs:
            continue
        parent = doc_parents[node.id]
        if parent in alignment.pairs:
            comp_parent = comp_nodes[alignment.pairs[parent]]
        else:
            comp_parent = inserted[parent]
        fresh = CompositeNode(
            id=next_id,
            label=LexicalForms.of(*node.label.forms),
            typicality=0.0,
            position=doc_ranks[node.id],
            support=1,
        )
        next_id += 1
        comp_parent.children.append(fresh)
        inserted[node.id] = fresh

    composite.doc_count += 1
    for comp in walk(composite.root):
        comp.typicality = comp.support / composite.doc_count
        comp.children.sort(key=lambda child: child.position)
    return composite


def _seed_composite(doc: DocumentTopicTree, domain_genre: str) -> CompositeTopicTree:
    ranks = sibling_rank_map(doc.root)

    def convert(node) -> CompositeNode:
        return CompositeNode(
            id=node.id,
            label=LexicalForms.of(*node.label.forms),
            typicality=1.0,
            position=ranks[node.id],
            support=1,
            children=[convert(child) for child in node.children],
        )

    return CompositeTopicTree(root=convert(doc.root), domain_genre=domain_genre, doc_count=1)


def build_composite(corpus: CorpusSet, threshold: float, domain_genre: str | None = None) -> CompositeTopicTree:
    """Fold a whole corpus into a composite tree, in document (name) order."""
    if not corpus.docs:
        raise EmptyCorpusError("cannot build norm from empty corpus")
    if domain_genre is None:
        domain_genre = Path(corpus.origin).name or "corpus"
    composite = _seed_composite(corpus.docs[0], domain_genre)
    for doc in corpus.docs[1:]:
        composite = merge(composite, doc, align_tree(doc, composite, threshold))
    return composite


# ---------------------------------------------------------------------------
# serialization: versioned JSON with a deterministic writer. Support and
# doc_count round-trip bit-exactly as integers; typicality is written with 12
# decimals for readability but re-derived as support / doc_count on load.

def _emit_node(node: CompositeNode, out: list[str], indent: str) -> None:
    inner = indent + "  "
    out.append(indent + "{\n")
    out.append(f'{inner}"id": {node.id},\n')
    out.append(f'{inner}"forms": {json.dumps(list(node.label.forms), ensure_ascii=False)},\n')
    out.append(f'{inner}"typicality": {node.typicality:.12f},\n')
    out.append(f'{inner}"position": {json.dumps(node.position)},\n')
    out.append(f'{inner}"support": {node.support},\n')
    if node.children:
        out.append(f'{inner}"children": [\n')
        for index, child in enumerate(node.children):
            _emit_node(child, out, inner + "  ")
            out.append(",\n" if index < len(node.children) - 1 else "\n")
        out.append(f"{inner}]\n")
    else:
        out.append(f'{inner}"children": []\n')
    out.append(indent + "}")


def save_composite(composite: CompositeTopicTree, path: str | Path) -> None:
    """Write a composite tree; byte-identical for identical trees."""
    out: list[str] = ["{\n"]
    out.append(f'  "version": {json.dumps(SCHEMA_VERSION)},\n')
    out.append(f'  "domain_genre": {json.dumps(composite.domain_genre, ensure_ascii=False)},\n')
    out.append(f'  "doc_count": {composite.doc_count},\n')
    out.append('  "root":\n')
    _emit_node(composite.root, out, "  ")
    out.append("\n}\n")
    Path(path).write_text("".join(out), encoding="utf-8", newline="\n")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CompositeSchemaError(message)


def _parse_node(payload: object, doc_count: int, seen: set[int]) -> CompositeNode:
    _require(isinstance(payload, dict), "composite node must be an object")
    assert isinstance(payload, dict)
    node_id = payload.get("id")
    _require(isinstance(node_id, int) and not isinstance(node_id, bool), "node id must be an integer")
    _require(node_id not in seen, f"duplicate node id {node_id}")
    seen.add(node_id)
    forms = payload.get("forms")
    _require(
        isinstance(forms, list) and forms and all(isinstance(f, str) and f.strip() for f in forms),
        f"node {node_id}: forms must be a non-empty list of strings",
    )
    support = payload.get("support")
    _require(isinstance(support, int) and not isinstance(support, bool), f"node {node_id}: support must be an integer")
    _require(support >= 1, f"node {node_id}: support must be >= 1")
    _require(support <= doc_count, f"node {node_id}: support {support} exceeds doc_count {doc_count}")
    position = payload.get("position")
    _require(isinstance(position, (int, float)) and not isinstance(position, bool), f"node {node_id}: position must be a number")
    children = payload.get("children", [])
    _require(isinstance(children, list), f"node {node_id}: children must be a list")
    return CompositeNode(
        id=node_id,
        label=LexicalForms.of(*forms),
        typicality=support / doc_count,
        position=float(position),
        support=support,
        children=[_parse_node(child, doc_count, seen) for child in children],
    )


def load_composite(path: str | Path) -> CompositeTopicTree:
    """Load and validate a composite file; typicality is re-derived."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as exc:
        raise CompositeSchemaError(f"cannot read composite file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CompositeSchemaError(f"composite file {path} is not valid JSON: {exc}") from exc
    _require(isinstance(payload, dict), "composite file must hold an object")
    _require(payload.get("version") == SCHEMA_VERSION, f"unsupported composite schema version {payload.get('version')!r}")
    doc_count = payload.get("doc_count")
    _require(isinstance(doc_count, int) and not isinstance(doc_count, bool) and doc_count >= 1, "doc_count must be a positive integer")
    domain_genre = payload.get("domain_genre")
    _require(isinstance(domain_genre, str), "domain_genre must be a string")
    root = _parse_node(payload.get("root"), doc_count, set())
    _require(root.support == doc_count, "root support must equal doc_count (root typicality is 1.0 by construction)")
    return CompositeTopicTree(root=root, domain_genre=domain_genre, doc_count=doc_count)
