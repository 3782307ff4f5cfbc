"""Parsing of header-marked plain text into document topic trees.

Input format: UTF-8 text with ATX headers ("#" * n + space + text, n in
1..6) and an optional front-matter block at the very top, delimited by
lines containing only "---", holding "key: value" lines. Recognized keys:
title, content_types (comma separated), special_content (comma separated).

A level-n header becomes a child of the nearest preceding header of a
lower level; level jumps attach to the nearest valid ancestor. The root is
the front-matter title when present, else the first header when that
header is level 1, else a synthesized node labeled with the doc id.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from .model import (
    DocumentMetadata,
    DocumentTopicTree,
    LexicalForms,
    TopicNode,
    normalize,
)

log = logging.getLogger(__name__)

_HEADER = re.compile(r"^(#{1,6}) (.+?)\s*$")
_FENCE = re.compile(r"^---\s*$")
_META_LINE = re.compile(r"^([A-Za-z_][A-Za-z0-9_ -]*):\s*(.*)$")

SOURCE_EXTENSIONS = (".md", ".txt")


class CorpusReadError(OSError):
    """A corpus file or directory could not be read."""


@dataclass
class CorpusSet:
    """An ordered set of parsed documents loaded from one directory."""

    docs: list[DocumentTopicTree] = field(default_factory=list)
    origin: str = ""


def parse_metadata(front_matter: str, source_path: str = "") -> DocumentMetadata:
    """Parse a front-matter block into metadata.

    Unknown keys are ignored; malformed lines are skipped with a warning,
    never fatally. An empty block yields all-empty metadata.
    """
    title: str | None = None
    content_types: set[str] = set()
    special_content: set[str] = set()
    for raw in front_matter.splitlines():
        line = raw.strip()
        if not line:
            continue
        match = _META_LINE.match(line)
        if match is None:
            log.warning("skipping malformed metadata line %r in %s", raw, source_path or "<text>")
            continue
        key = match.group(1).strip().lower()
        value = match.group(2).strip()
        if key == "title":
            title = value or None
        elif key == "content_types":
            content_types.update(_tags(value))
        elif key == "special_content":
            special_content.update(_tags(value))
        # anything else is a foreign key: ignore
    return DocumentMetadata(
        title=title,
        content_types=frozenset(content_types),
        special_content=frozenset(special_content),
        source_path=source_path,
    )


def _tags(value: str) -> list[str]:
    return [n for n in (normalize(part) for part in value.split(",")) if n]


def _split_front_matter(text: str) -> tuple[str, int]:
    """Return (front-matter body, offset where the document body starts).

    An opening fence without a closing one is not front matter; the text is
    then treated as plain body (with a warning).
    """
    lines = text.splitlines(keepends=True)
    if not lines or not _FENCE.match(lines[0].rstrip("\n")):
        return "", 0
    offset = len(lines[0])
    block: list[str] = []
    for line in lines[1:]:
        if _FENCE.match(line.rstrip("\n")):
            return "".join(block), offset + len(line)
        block.append(line)
        offset += len(line)
    log.warning("unterminated front-matter fence; treating file as plain body")
    return "", 0


def parse_document(text: str, doc_id: str, source_path: str = "") -> DocumentTopicTree:
    """Build a document topic tree from header-marked text.

    Deterministic: identical text yields an identical tree with identical
    pre-order node ids. Documents without headers yield a single-node tree.
    """
    front, body_start = _split_front_matter(text)
    metadata = parse_metadata(front, source_path)

    headers: list[tuple[int, str, tuple[int, int]]] = []
    offset = body_start
    for line in text[body_start:].splitlines(keepends=True):
        stripped = line.rstrip("\n")
        match = _HEADER.match(stripped)
        if match:
            headers.append((len(match.group(1)), match.group(2), (offset, offset + len(stripped))))
        offset += len(line)

    next_id = 0

    def make(label: str, span: tuple[int, int] | None) -> TopicNode:
        nonlocal next_id
        node = TopicNode(id=next_id, label=LexicalForms.of(label), source_span=span)
        next_id += 1
        return node

    if metadata.title:
        root = make(metadata.title, None)
        root_level = 0
    elif headers and headers[0][0] == 1:
        level, text_, span = headers[0]
        root = make(text_, span)
        root_level = 1
        headers = headers[1:]
    else:
        root = make(doc_id, None)
        root_level = 0

    # stack of (level, node); never popped past the root, so level jumps and
    # repeated top-level headers land on the nearest valid ancestor
    stack: list[tuple[int, TopicNode]] = [(root_level, root)]
    for level, text_, span in headers:
        while len(stack) > 1 and stack[-1][0] >= level:
            stack.pop()
        node = make(text_, span)
        stack[-1][1].children.append(node)
        stack.append((level, node))

    return DocumentTopicTree(doc_id=doc_id, root=root, metadata=metadata)


def load_corpus(directory: str | Path) -> CorpusSet:
    """Parse every .md/.txt file in a directory, in file-name order.

    An unreadable or non-UTF-8 file aborts the load with an error naming the
    file. An empty directory yields an empty corpus.
    """
    root = Path(directory)
    if not root.is_dir():
        raise CorpusReadError(f"not a readable directory: {root}")
    docs: list[DocumentTopicTree] = []
    for path in sorted(root.iterdir(), key=lambda p: p.name):
        if not path.is_file() or path.suffix.lower() not in SOURCE_EXTENSIONS:
            continue
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise CorpusReadError(f"cannot read corpus file {path.name}: {exc}") from exc
        docs.append(parse_document(text, doc_id=path.name, source_path=str(path)))
    return CorpusSet(docs=docs, origin=str(root))
