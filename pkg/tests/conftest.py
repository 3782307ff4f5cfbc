from __future__ import annotations

from pathlib import Path

import pytest

from topicsift import (
    DocumentMetadata,
    DocumentTopicTree,
    LexicalForms,
    TopicNode,
    TopicType,
)
from topicsift.topic_typing import TypedTree

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def make_node(spec, counter=None) -> TopicNode:
    """Build a TopicNode tree from nested specs: "Label" or ("Label", [children])."""
    if counter is None:
        counter = [0]
    label, children = (spec, []) if isinstance(spec, str) else spec
    node = TopicNode(id=counter[0], label=LexicalForms.of(label))
    counter[0] += 1
    node.children.extend(make_node(child, counter) for child in children)
    return node


def make_doc(spec, doc_id="doc", title=None, content_types=(), special_content=()) -> DocumentTopicTree:
    meta = DocumentMetadata(
        title=title,
        content_types=frozenset(content_types),
        special_content=frozenset(special_content),
        source_path="",
    )
    return DocumentTopicTree(doc_id=doc_id, root=make_node(spec), metadata=meta)


def make_typed(
    doc_id: str,
    child_types: list[tuple[str, TopicType]],
    root_type: TopicType = TopicType.TYPICAL,
    query: str = "angina",
    content_types=(),
    special_content=(),
) -> TypedTree:
    """Fabricate a typed flat document (root + one child per labeled type)."""
    doc = make_doc(
        (doc_id, [label for label, _ in child_types]),
        doc_id=doc_id,
        content_types=content_types,
        special_content=special_content,
    )
    types = {doc.root.id: root_type}
    for child, (_, topic_type) in zip(doc.root.children, child_types):
        types[child.id] = topic_type
    return TypedTree(doc=doc, query=query, query_node=doc.root.id, types=types)


def write_corpus(directory: Path, files: dict[str, str]) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (directory / name).write_text(text, encoding="utf-8")
    return directory


@pytest.fixture
def angina_reference() -> Path:
    return FIXTURES / "angina" / "reference"


@pytest.fixture
def angina_docs() -> Path:
    return FIXTURES / "angina" / "docs"
