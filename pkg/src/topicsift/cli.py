"""Command-line driver.

Two subcommands: ``build`` compiles a composite topic tree (the norm) from a
reference corpus; ``summarize`` characterizes a document set against a norm
for a query, emitting either the prose summary or a line-oriented trace of
every intermediate stage. All output is deterministic for fixed inputs and
seed; warnings go to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .classify import TypeDistribution, classify, distribution
from .composite import (
    Alignment,
    CompositeSchemaError,
    EmptyCorpusError,
    build_composite,
    load_composite,
    save_composite,
)
from .ingest import CorpusReadError, load_corpus
from .lexicon import Lexicon, LexiconError, LexiconGapError, default_lexicon, load_lexicon
from .model import CompositeTopicTree, DocumentCategory, TopicType, TypingParams, walk_depth
from .planner import HasFeature, HasTopics, SetElements, SummaryPlan, plan
from .realizer import NO_MATCH_NOTICE, RealizedCategory, realize_plan
from .topic_typing import TypedTree, type_document

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BAD_INPUT = 2
EXIT_LEXICON_GAP = 3

_REGION_OF_TYPE = {
    TopicType.TYPICAL: "relevant",
    TopicType.RARE: "relevant",
    TopicType.INTRICATE: "intricate",
    TopicType.IRRELEVANT: "irrelevant",
}


@dataclass
class DocResult:
    typed: TypedTree
    alignment: Alignment
    dist: TypeDistribution
    category: DocumentCategory


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topicsift",
        description="Characterize a document set by how its topic structure differs from a domain norm.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="compile a composite topic tree from a reference corpus")
    build.add_argument("corpus", help="directory of .md/.txt reference documents")
    build.add_argument("out", help="path for the composite file")
    build.add_argument("--align-threshold", type=float, default=0.5, help="label similarity needed to merge topics (default 0.5)")
    build.add_argument("--domain-genre", default=None, help="tag stored in the composite (default: corpus directory name)")

    summ = sub.add_parser("summarize", help="summarize a document set for a query")
    summ.add_argument("docs", help="directory of .md/.txt documents to summarize")
    summ.add_argument("--composite", required=True, help="composite file produced by build")
    summ.add_argument("--query", required=True, help="query text")
    summ.add_argument("--k", type=int, default=2, help="intricate beam depth (default 2)")
    summ.add_argument("--alpha", type=float, default=0.5, help="typicality threshold (default 0.5)")
    summ.add_argument("--tau", type=float, default=0.3, help="minimum query-match similarity (default 0.3)")
    summ.add_argument("--limit", type=int, default=5, help="max documents enumerated by title (default 5)")
    summ.add_argument("--seed", type=int, default=0, help="seed for lexical choice (default 0)")
    summ.add_argument("--align-threshold", type=float, default=0.5, help="label similarity for composite alignment (default 0.5)")
    summ.add_argument("--lexicon", default=None, help="lexicon file (default: built-in lexicon)")
    summ.add_argument("--format", choices=("text", "trace"), default="text", help="output format (default text)")
    summ.add_argument("--assume-extract", action="store_true", help="allow descriptions that reference a companion similarity extract")
    return parser


def cmd_build(args: argparse.Namespace, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        corpus = load_corpus(args.corpus)
    except CorpusReadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        composite = build_composite(corpus, args.align_threshold, domain_genre=args.domain_genre)
    except EmptyCorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    save_composite(composite, args.out)
    print(f"wrote {args.out} (documents={composite.doc_count}, topics={len(composite.nodes())})", file=out)
    return EXIT_OK


def _run_pipeline(corpus_docs, composite: CompositeTopicTree, query: str, params: TypingParams, align_threshold: float) -> list[DocResult]:
    results = []
    for doc in corpus_docs:
        typed, alignment = type_document(doc, composite, query, params, align_threshold)
        if typed.query_node is None:
            log.warning("query %r matched no topic in %s", query, doc.doc_id)
        dist = distribution(typed, composite, alignment, params)
        results.append(DocResult(typed=typed, alignment=alignment, dist=dist, category=classify(dist)))
    return results


def _trace_lines(
    query: str,
    params: TypingParams,
    args: argparse.Namespace,
    composite: CompositeTopicTree,
    results: list[DocResult],
    splan: SummaryPlan,
    realized: list[RealizedCategory],
) -> list[str]:
    lines = [
        "trace-version: 1",
        f"query: {query}",
        f"params: k={params.k} alpha={params.alpha:g} tau={params.tau:g} limit={args.limit}"
        f" seed={args.seed} align-threshold={args.align_threshold:g}",
        f"composite: domain-genre={composite.domain_genre} doc-count={composite.doc_count}"
        f" nodes={len(composite.nodes())}",
        f"documents: {len(results)}",
    ]
    for result in results:
        typed = result.typed
        lines.append(f"document: {typed.doc.doc_id}")
        lines.append(f"  title: {typed.doc.display_title()}")
        lines.append(f"  query-node: {'-' if typed.query_node is None else typed.query_node}")
        for node, depth in walk_depth(typed.doc.root):
            topic_type = typed.types[node.id]
            comp_id = result.alignment.pairs.get(node.id)
            typicality = composite.node(comp_id).typicality if comp_id is not None else 0.0
            lines.append(
                f"  node: id={node.id} depth={depth} region={_REGION_OF_TYPE[topic_type]}"
                f" type={topic_type.value} composite={'-' if comp_id is None else comp_id}"
                f" typicality={typicality:.10f} label={json.dumps(node.label.canonical, ensure_ascii=False)}"
            )
        d = result.dist
        lines.append(
            f"  distribution: typical={d.typical} rare={d.rare} intricate={d.intricate}"
            f" irrelevant={d.irrelevant} total={d.total}"
            f" covered-typical={d.covered_typical} possible-typical={d.possible_typical}"
        )
        lines.append(f"  category: {result.category.value}")
    lines.append(f"plan: categories={len(splan.categories)}")
    for item in realized:
        lines.append(f"category: {item.plan.category.value}")
        if item.plan.reordered:
            lines.append("  reordered: true")
        for message in item.plan.messages:
            if isinstance(message, SetElements):
                lines.append(
                    f"  message: set-elements count={len(message.members)}"
                    f" members={json.dumps(list(message.members), ensure_ascii=False)}"
                )
            elif isinstance(message, HasTopics):
                lines.append(f"  message: has-topics topics={json.dumps(list(message.topics), ensure_ascii=False)}")
            elif isinstance(message, HasFeature):
                lines.append(
                    f"  message: has-feature kind={message.kind}"
                    f" values={json.dumps(list(message.values), ensure_ascii=False)}"
                    f" members={json.dumps(list(message.members), ensure_ascii=False)}"
                )
            else:
                lines.append("  message: description")
        for sentence, text in zip(item.sentences, item.texts):
            variant = "-" if sentence.chosen_description is None else str(sentence.chosen_description)
            lines.append(
                f"  sentence: relation={sentence.relation} pattern={sentence.chosen_pattern}"
                f" description-variant={variant} text={json.dumps(text, ensure_ascii=False)}"
            )
        lines.append(f"  bullet: {item.bullet}")
    lines.append("summary:")
    if realized:
        lines.extend(item.bullet for item in realized)
    else:
        lines.append(NO_MATCH_NOTICE)
    return lines


def cmd_summarize(args: argparse.Namespace, out=None) -> int:
    out = out if out is not None else sys.stdout
    if not args.query.strip():
        print("error: query must be non-empty", file=sys.stderr)
        return EXIT_BAD_INPUT
    composite_path = Path(args.composite)
    if not composite_path.is_file():
        print(f"error: composite file not found: {composite_path}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        composite = load_composite(composite_path)
    except CompositeSchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.lexicon is None:
        lexicon: Lexicon = default_lexicon()
    else:
        try:
            lexicon = load_lexicon(args.lexicon)
        except LexiconError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BAD_INPUT
    try:
        corpus = load_corpus(args.docs)
    except CorpusReadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        params = TypingParams(k=args.k, alpha=args.alpha, tau=args.tau)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT

    results = _run_pipeline(corpus.docs, composite, args.query, params, args.align_threshold)
    splan = plan([(r.typed, r.category) for r in results])
    titles = {r.typed.doc.doc_id: r.typed.doc.display_title() for r in results}
    try:
        realized = realize_plan(
            splan,
            lexicon,
            args.seed,
            titles=titles,
            limit=args.limit,
            extract_exists=args.assume_extract,
        )
    except LexiconGapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LEXICON_GAP

    if args.format == "trace":
        for line in _trace_lines(args.query, params, args, composite, results, splan, realized):
            print(line, file=out)
    else:
        if realized:
            for item in realized:
                print(item.bullet, file=out)
        else:
            print(NO_MATCH_NOTICE, file=out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="warning: %(message)s", force=True)
    args = _build_parser().parse_args(argv)
    if args.command == "build":
        return cmd_build(args)
    return cmd_summarize(args)


if __name__ == "__main__":
    sys.exit(main())
