"""Dataset discovery: find, classify, and load program artefacts."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path, PurePosixPath
from typing import Optional

log = logging.getLogger("specgraph")


class Language(Enum):
    C = ".c"
    Java = ".java"
    CSharp = ".cs"
    Dafny = ".dfy"

    @property
    def extension(self) -> str:
        return self.value


CATEGORIES = ("basic", "famous", "mirror", "unique")
VARIANTS = ("correct", "obvious", "subtle")


class CorpusError(Exception):
    pass


@dataclass(frozen=True)
class ProgramArtifact:
    """One source file, path relative to the corpus root (forward slashes)."""

    path: str
    language: Language
    source: str
    category: Optional[str] = None
    variant: Optional[str] = None


def scan_corpus(root: str | os.PathLike, language: Language,
                ) -> list[ProgramArtifact]:
    """Every file under root with the language's extension, in lexicographic
    path order. Directory components named after a known category or variant
    set those fields; unreadable files are skipped with a warning."""
    root_path = Path(root)
    if not root_path.is_dir():
        raise CorpusError(f"corpus root does not exist: {root_path}")
    found: list[str] = []
    for dirpath, dirnames, filenames in os.walk(root_path):
        dirnames.sort()
        for name in filenames:
            if name.endswith(language.extension):
                rel = Path(dirpath, name).relative_to(root_path)
                found.append(PurePosixPath(rel).as_posix())
    artifacts: list[ProgramArtifact] = []
    for rel in sorted(found):
        full = root_path / rel
        try:
            source = full.read_text(encoding="utf-8", errors="replace")
        except OSError as exc:
            log.warning("skipping unreadable file %s: %s", full, exc)
            continue
        parts = PurePosixPath(rel).parts[:-1]
        category = next((p for p in parts if p in CATEGORIES), None)
        variant = next((p for p in parts if p in VARIANTS), None)
        artifacts.append(ProgramArtifact(rel, language, source,
                                         category, variant))
    return artifacts


def mirror_path(src_root: str | os.PathLike, dst_root: str | os.PathLike,
                artifact_path: str, new_extension: str) -> Path:
    """dst_root / artifact_path with the extension replaced. Pure path
    algebra; src_root only anchors the relative path's meaning."""
    rel = PurePosixPath(artifact_path)
    if rel.is_absolute():
        raise ValueError(f"artifact path must be relative: {artifact_path}")
    return Path(dst_root) / rel.with_suffix(new_extension)


def write_mirrored(dst_root: str | os.PathLike, artifact_path: str,
                   new_extension: str, content: str) -> Path:
    """mirror_path plus directory creation and the actual write."""
    target = mirror_path("", dst_root, artifact_path, new_extension)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(content, encoding="utf-8")
    return target
