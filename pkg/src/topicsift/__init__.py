"""topicsift: query-based indicative characterization of document sets.

Documents are parsed into topic trees from their section headers, compared
against a composite norm built from a reference corpus, classified into
seven categories by their topic-type distribution, and described by a short
templated summary, one bullet per instantiated category.
"""
from .classify import TypeDistribution, classify, distribution, possible_typical_topics
from .composite import (
    Alignment,
    CompositeSchemaError,
    EmptyCorpusError,
    align_tree,
    build_composite,
    label_similarity,
    load_composite,
    merge,
    save_composite,
)
from .ingest import CorpusReadError, CorpusSet, load_corpus, parse_document, parse_metadata
from .lexicon import Lexicon, LexiconError, LexiconGapError, default_lexicon, load_lexicon, save_lexicon
from .model import (
    CATEGORY_ORDER,
    CompositeNode,
    CompositeTopicTree,
    DocumentCategory,
    DocumentMetadata,
    DocumentTopicTree,
    LexicalForms,
    TopicNode,
    TopicType,
    TypingParams,
    UnknownNodeError,
    depth_below,
    normalize,
    topic_count,
)
from .planner import (
    CategoryPlan,
    Description,
    HasFeature,
    HasTopics,
    Message,
    SetElements,
    SummaryPlan,
    instantiate,
    plan,
)
from .realizer import (
    NO_MATCH_NOTICE,
    Enumeration,
    Exemplar,
    OrdinalList,
    RangeRef,
    SentencePlan,
    build_sentence_plans,
    lexicalize,
    realize_plan,
    realize_summary,
    refer_to_set,
)
from .topic_typing import Region, TypedTree, assign_regions, assign_types, map_query, type_document

__version__ = "0.1.0"

__all__ = [
    "Alignment",
    "CATEGORY_ORDER",
    "CategoryPlan",
    "CompositeNode",
    "CompositeSchemaError",
    "CompositeTopicTree",
    "CorpusReadError",
    "CorpusSet",
    "Description",
    "DocumentCategory",
    "DocumentMetadata",
    "DocumentTopicTree",
    "EmptyCorpusError",
    "Enumeration",
    "Exemplar",
    "HasFeature",
    "HasTopics",
    "LexicalForms",
    "Lexicon",
    "LexiconError",
    "LexiconGapError",
    "Message",
    "NO_MATCH_NOTICE",
    "OrdinalList",
    "RangeRef",
    "Region",
    "SentencePlan",
    "SetElements",
    "SummaryPlan",
    "TopicNode",
    "TopicType",
    "TypeDistribution",
    "TypedTree",
    "TypingParams",
    "UnknownNodeError",
    "align_tree",
    "assign_regions",
    "assign_types",
    "build_composite",
    "build_sentence_plans",
    "classify",
    "default_lexicon",
    "depth_below",
    "distribution",
    "instantiate",
    "label_similarity",
    "lexicalize",
    "load_composite",
    "load_corpus",
    "load_lexicon",
    "map_query",
    "merge",
    "normalize",
    "parse_document",
    "parse_metadata",
    "plan",
    "possible_typical_topics",
    "realize_plan",
    "realize_summary",
    "refer_to_set",
    "save_composite",
    "save_lexicon",
    "topic_count",
    "type_document",
]
