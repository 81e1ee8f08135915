import os

import pytest

from specgraph.corpus import (CorpusError, Language, mirror_path, scan_corpus,
                              write_mirrored)


def test_nested_paths_sorted(tmp_path):
    (tmp_path / "a" / "b").mkdir(parents=True)
    (tmp_path / "a" / "c").mkdir(parents=True)
    (tmp_path / "a" / "b" / "x.c").write_text("int x;")
    (tmp_path / "a" / "c" / "y.c").write_text("int y;")
    paths = [a.path for a in scan_corpus(tmp_path, Language.C)]
    assert paths == ["a/b/x.c", "a/c/y.c"]


def test_empty_directory(tmp_path):
    assert scan_corpus(tmp_path, Language.C) == []


def test_extension_filter_and_source(tmp_path):
    (tmp_path / "p.c").write_text("int p;")
    (tmp_path / "p.java").write_text("class P {}")
    c_artifacts = scan_corpus(tmp_path, Language.C)
    assert [a.path for a in c_artifacts] == ["p.c"]
    assert c_artifacts[0].source == "int p;"
    assert c_artifacts[0].language is Language.C
    java = scan_corpus(tmp_path, Language.Java)
    assert [a.path for a in java] == ["p.java"]


def test_category_and_variant_inference(tmp_path):
    target = tmp_path / "famous" / "correct"
    target.mkdir(parents=True)
    (target / "kmp.c").write_text("")
    (tmp_path / "misc").mkdir()
    (tmp_path / "misc" / "other.c").write_text("")
    by_path = {a.path: a for a in scan_corpus(tmp_path, Language.C)}
    kmp = by_path["famous/correct/kmp.c"]
    assert kmp.category == "famous"
    assert kmp.variant == "correct"
    other = by_path["misc/other.c"]
    assert other.category is None
    assert other.variant is None


def test_missing_root_fatal(tmp_path):
    with pytest.raises(CorpusError):
        scan_corpus(tmp_path / "nope", Language.C)


def test_unreadable_file_skipped_with_warning(tmp_path, caplog):
    (tmp_path / "good.c").write_text("int g;")
    (tmp_path / "broken.c").symlink_to(tmp_path / "missing-target.c")
    with caplog.at_level("WARNING", logger="specgraph"):
        artifacts = scan_corpus(tmp_path, Language.C)
    assert [a.path for a in artifacts] == ["good.c"]
    assert any("broken.c" in rec.message for rec in caplog.records)


def test_scan_deterministic_and_complete(tmp_path):
    for name in ("z.c", "a.c", "m/q.c", "m/a.c"):
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(f"// {name}\n")
    first = scan_corpus(tmp_path, Language.C)
    second = scan_corpus(tmp_path, Language.C)
    assert first == second
    assert [a.path for a in first] == sorted(a.path for a in first)
    # independent count: plain os.walk
    expected = sum(
        name.endswith(".c")
        for _, _, files in os.walk(tmp_path) for name in files)
    assert len(first) == expected
    for artifact in first:
        assert (tmp_path / artifact.path).is_file()


def test_mirror_path_examples():
    assert str(mirror_path("/in", "/out", "basic/sort.c", ".java")) \
        == "/out/basic/sort.java"
    assert str(mirror_path("/in", "/out", "x.c", ".cs")) == "/out/x.cs"
    assert str(mirror_path("/in", "/out", "famous/correct/kmp.cs", ".dfy")) \
        == "/out/famous/correct/kmp.dfy"


def test_mirror_path_rejects_absolute():
    with pytest.raises(ValueError):
        mirror_path("/in", "/out", "/abs/x.c", ".java")


def test_write_mirrored_creates_directories(tmp_path):
    target = write_mirrored(tmp_path / "out", "deep/tree/f.c", ".java", "x")
    assert target.read_text() == "x"
    assert target == tmp_path / "out" / "deep" / "tree" / "f.java"
