"""Shared pieces for the annotation generators."""

from __future__ import annotations

from dataclasses import dataclass

from ..frontends import SpecClause


@dataclass
class GeneratedContract:
    """One emitted annotation block.

    target_line / insertion are the 1-based line of the target's
    declaration: blocks go immediately above functions/methods/loops and
    immediately after class headers. For loop blocks target_name is the
    enclosing function.
    """

    target_name: str
    target_line: int
    clauses: list[SpecClause]
    insertion: int

    def __post_init__(self):
        if not self.clauses:
            raise ValueError("contract without clauses")
        if self.insertion != self.target_line:
            raise ValueError("insertion %d != target line %d"
                             % (self.insertion, self.target_line))


def indent_of(line: str) -> str:
    return line[:len(line) - len(line.lstrip())]


def has_annotation_above(lines: list[str], index: int) -> bool:
    """True when the line directly above index (0-based) already ends an
    annotation block or is an annotation line; regeneration is suppressed."""
    if index <= 0:
        return False
    prev = lines[index - 1].strip()
    return prev.startswith("//@") or prev.endswith("*/")


def splice(lines: list[str], insertions: list[tuple[int, list[str]]],
           ) -> list[str]:
    """Insert each block of lines before its 0-based index; indices refer to
    the original list. Blocks given for the same index keep their order."""
    grouped: dict[int, list[str]] = {}
    for index, block in insertions:
        grouped.setdefault(index, []).extend(block)
    out = list(lines)
    for index in sorted(grouped, reverse=True):
        out[index:index] = grouped[index]
    return out
