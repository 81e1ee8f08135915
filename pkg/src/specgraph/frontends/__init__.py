"""Language frontends producing the shared SyntaxTree / SpecClause types."""

from .annotations import extract_annotations
from .brackets import extract_method_bodies
from .clike import parse_c, parse_java
from .dafny import parse_dafny, parse_dafny_with_specs
from .tree import (
    ATTACH_KINDS,
    CLAUSE_KINDS,
    DIALECT_KINDS,
    NODE_KINDS,
    Attachment,
    FrontendError,
    SpecClause,
    SyntaxTree,
)

__all__ = [
    "ATTACH_KINDS", "CLAUSE_KINDS", "DIALECT_KINDS", "NODE_KINDS",
    "Attachment", "FrontendError", "SpecClause", "SyntaxTree",
    "extract_annotations", "extract_method_bodies",
    "parse_c", "parse_java", "parse_dafny", "parse_dafny_with_specs",
]
