"""Shared domain model: per-document topic trees, the composite norm tree,
and the elementary tree queries everything else builds on.

Labels keep their original surface strings for display; all comparison goes
through :func:`normalize` (case fold, whitespace collapse, trailing
punctuation strip) because section headers are noisy.

All types are treated as immutable once constructed; the composite builder
is the only code that mutates composite nodes, and only during a build fold.
"""
from __future__ import annotations

import re
import string
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum

_WS_RUN = re.compile(r"\s+")
_TRAILING_PUNCT = re.compile("[%s\\s]+$" % re.escape(string.punctuation))


class UnknownNodeError(LookupError):
    """A node id was used against a tree that does not contain it."""


def fold(text: str) -> str:
    """Case-fold and collapse internal whitespace (lexical-form dedup key)."""
    return _WS_RUN.sub(" ", text).strip().casefold()


def normalize(text: str) -> str:
    """Normal form for all label/string comparison.

    Case fold, trim, collapse whitespace, strip trailing punctuation, so
    "Symptoms:" and "symptoms" compare equal. May return "" for labels made
    of punctuation only; empty normal forms never count as a match.
    """
    return _TRAILING_PUNCT.sub("", fold(text))


@dataclass(frozen=True)
class LexicalForms:
    """Ordered set of surface strings naming one topic, canonical form first."""

    forms: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.forms:
            raise ValueError("a label needs at least one form")
        if any(not f.strip() for f in self.forms):
            raise ValueError("blank lexical form in %r" % (self.forms,))
        keys = [fold(f) for f in self.forms]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate lexical forms in %r" % (self.forms,))

    @classmethod
    def of(cls, *forms: str) -> "LexicalForms":
        """Build from raw strings, dropping blanks and duplicates (first spelling wins)."""
        unique: dict[str, str] = {}
        for form in forms:
            if form and form.strip():
                unique.setdefault(fold(form), form)
        return cls(tuple(unique.values()))

    @property
    def canonical(self) -> str:
        return self.forms[0]

    def normal_forms(self) -> frozenset[str]:
        """Non-empty normalized variants, used for comparison."""
        return frozenset(n for n in (normalize(f) for f in self.forms) if n)

    def merged(self, other: "LexicalForms") -> "LexicalForms":
        """Union of variants; this label's spellings keep their positions."""
        return LexicalForms.of(*self.forms, *other.forms)


@dataclass
class TopicNode:
    """One topic in a document tree. ids are pre-order indices, stable per parse."""

    id: int
    label: LexicalForms
    children: list["TopicNode"] = field(default_factory=list)
    composite_link: int | None = None
    source_span: tuple[int, int] | None = None


@dataclass
class CompositeNode:
    """One topic in the norm tree.

    typicality is always support / doc_count of the owning tree; position is
    the mean normalized sibling rank over the documents that contributed the
    topic. Siblings are kept sorted by ascending position.
    """

    id: int
    label: LexicalForms
    typicality: float
    position: float
    support: int
    children: list["CompositeNode"] = field(default_factory=list)


def walk(root) -> Iterator:
    """Pre-order traversal over TopicNode or CompositeNode trees."""
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def walk_depth(root) -> Iterator[tuple[object, int]]:
    """Pre-order traversal yielding (node, depth below root)."""
    stack = [(root, 0)]
    while stack:
        node, depth = stack.pop()
        yield node, depth
        stack.extend((child, depth + 1) for child in reversed(node.children))


def node_map(root) -> dict[int, object]:
    """id -> node for a whole tree; rejects duplicate ids."""
    nodes: dict[int, object] = {}
    for node in walk(root):
        if node.id in nodes:
            raise ValueError("duplicate node id %r" % (node.id,))
        nodes[node.id] = node
    return nodes


def parent_map(root) -> dict[int, int | None]:
    """id -> parent id (None for the root)."""
    parents: dict[int, int | None] = {root.id: None}
    for node in walk(root):
        for child in node.children:
            parents[child.id] = node.id
    return parents


def depth_map(root) -> dict[int, int]:
    return {node.id: depth for node, depth in walk_depth(root)}


def sibling_rank_map(root) -> dict[int, float]:
    """id -> sibling index / max(sibling count - 1, 1); root ranks 0.0."""
    ranks = {root.id: 0.0}
    for node in walk(root):
        denom = max(len(node.children) - 1, 1)
        for index, child in enumerate(node.children):
            ranks[child.id] = index / denom
    return ranks


def depth_below(root: TopicNode, ancestor: int, target: int) -> int | None:
    """Edges on the downward path ancestor -> target, or None if target is
    not in ancestor's subtree. Both ids must exist in the tree."""
    nodes = node_map(root)
    if ancestor not in nodes:
        raise UnknownNodeError("unknown ancestor id %r" % (ancestor,))
    if target not in nodes:
        raise UnknownNodeError("unknown target id %r" % (target,))
    for node, depth in walk_depth(nodes[ancestor]):
        if node.id == target:
            return depth
    return None


@dataclass(frozen=True)
class DocumentMetadata:
    """Extra document features carried alongside the topic tree."""

    title: str | None = None
    content_types: frozenset[str] = frozenset()
    special_content: frozenset[str] = frozenset()
    source_path: str = ""


@dataclass
class DocumentTopicTree:
    """A single document's topic hierarchy plus its metadata."""

    doc_id: str
    root: TopicNode
    metadata: DocumentMetadata

    def nodes(self) -> list[TopicNode]:
        return list(walk(self.root))

    def node(self, node_id: int) -> TopicNode:
        try:
            return node_map(self.root)[node_id]
        except KeyError:
            raise UnknownNodeError("no node %r in %s" % (node_id, self.doc_id)) from None

    def parent_id(self, node_id: int) -> int | None:
        parents = parent_map(self.root)
        if node_id not in parents:
            raise UnknownNodeError("no node %r in %s" % (node_id, self.doc_id))
        return parents[node_id]

    def display_title(self) -> str:
        """Title used when referring to this document in prose."""
        if self.metadata.title:
            return self.metadata.title
        if self.root.label.canonical:
            return self.root.label.canonical
        return self.doc_id


def topic_count(tree: DocumentTopicTree) -> int:
    """Number of topics in the document, root included."""
    return len(tree.nodes())


@dataclass
class CompositeTopicTree:
    """The norm for one domain/genre: merged topics over a reference corpus."""

    root: CompositeNode
    domain_genre: str
    doc_count: int

    def nodes(self) -> list[CompositeNode]:
        return list(walk(self.root))

    def node(self, node_id: int) -> CompositeNode:
        try:
            return node_map(self.root)[node_id]
        except KeyError:
            raise UnknownNodeError("no composite node %r" % (node_id,)) from None


@dataclass(frozen=True)
class TypingParams:
    """Knobs for query mapping and topic typing.

    k bounds how far below the query node a topic may sit and still count as
    relevant; alpha splits relevant topics into typical vs rare by norm
    typicality; tau is the minimum query/topic similarity for a query match.
    """

    k: int = 2
    alpha: float = 0.5
    tau: float = 0.3

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("alpha must be in [0, 1]")
        if not 0.0 <= self.tau <= 1.0:
            raise ValueError("tau must be in [0, 1]")


class TopicType(Enum):
    TYPICAL = "typical"
    RARE = "rare"
    INTRICATE = "intricate"
    IRRELEVANT = "irrelevant"


class DocumentCategory(Enum):
    """Document classes, in presentation order."""

    PROTOTYPICAL = "prototypical"
    COMPREHENSIVE = "comprehensive"
    SPECIALIZED = "specialized"
    ATYPICAL = "atypical"
    DEEP = "deep"
    IRRELEVANT = "irrelevant"
    GENERIC = "generic"


CATEGORY_ORDER: tuple[DocumentCategory, ...] = tuple(DocumentCategory)
