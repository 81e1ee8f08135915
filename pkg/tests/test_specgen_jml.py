from specgraph.frontends import extract_annotations
from specgraph.specgen.jml import gen_jml

from test_specgen_acsl import strip_annotations

FIXTURE_CLASS = """\
import java.util.*;

public class Inventory {
    int count;
    boolean open;
    String label;

    static void describe(String text) {
        System.out.println(text);
    }
}
"""


def test_fixture_class_exact_clause_counts():
    annotated, contracts = gen_jml(FIXTURE_CLASS)
    kinds = [c.kind for contract in contracts for c in contract.clauses]
    assert kinds.count("invariant") == 3
    assert kinds.count("requires") == 1
    assert kinds.count("assignable") == 1
    assert len(kinds) == 5


def test_field_invariant_surface_forms():
    annotated, _ = gen_jml(FIXTURE_CLASS)
    assert "//@ public invariant count >= 0;" in annotated
    assert "//@ public invariant open == true || open == false;" in annotated
    assert "//@ public invariant label != null;" in annotated


def test_invariants_inserted_directly_after_class_header():
    annotated, _ = gen_jml(FIXTURE_CLASS)
    lines = annotated.split("\n")
    header = next(i for i, ln in enumerate(lines)
                  if ln.startswith("public class"))
    assert lines[header + 1].strip() == "//@ public invariant count >= 0;"


def test_reference_parameter_requires():
    annotated, _ = gen_jml(FIXTURE_CLASS)
    lines = annotated.split("\n")
    method = next(i for i, ln in enumerate(lines) if "static void describe" in ln)
    block = [ln.strip() for ln in lines[method - 2:method]]
    assert block == ["//@ requires text != null;",
                     "//@ assignable \\everything;"]


def test_numeric_result_ensures_only_for_hinted_names():
    source = ("public class Finder {\n"
              "    static int find(String s) {\n        return 0;\n    }\n"
              "    static int compute(String s) {\n        return 0;\n    }\n"
              "}\n")
    annotated, contracts = gen_jml(source)
    by_name = {c.target_name: [cl.kind for cl in c.clauses] for c in contracts}
    assert by_name["find"] == ["requires", "ensures", "assignable"]
    assert by_name["compute"] == ["requires", "assignable"]
    assert annotated.count("//@ ensures \\result >= 0;") == 1


def test_parameterless_void_method_gets_only_assignable():
    source = ("public class Quiet {\n"
              "    static void ping() {\n    }\n"
              "}\n")
    _, contracts = gen_jml(source)
    assert [c.kind for c in contracts[0].clauses] == ["assignable"]


def test_preprocessor_directives_removed():
    source = "#include <stdio.h>\npublic class P {\n    int x;\n}\n"
    annotated, _ = gen_jml(source)
    assert "#include" not in annotated
    assert "//@ public invariant x >= 0;" in annotated


def test_array_field_is_reference():
    source = "public class Buf {\n    int[] data;\n}\n"
    annotated, _ = gen_jml(source)
    assert "//@ public invariant data != null;" in annotated


def test_stripping_annotations_recovers_input():
    annotated, _ = gen_jml(FIXTURE_CLASS)
    assert strip_annotations(annotated) == FIXTURE_CLASS


def test_idempotent():
    once, _ = gen_jml(FIXTURE_CLASS)
    twice, again = gen_jml(once)
    assert twice == once
    assert again == []


def test_round_trip_kinds():
    annotated, contracts = gen_jml(FIXTURE_CLASS)
    reported = [c.kind for contract in contracts for c in contract.clauses]
    extracted = [c.kind for c in extract_annotations(annotated, "JML")]
    assert len(extracted) >= len(reported)
    it = iter(extracted)
    assert all(kind in it for kind in reported)


def test_contracts_sorted_by_insertion():
    _, contracts = gen_jml(FIXTURE_CLASS)
    insertions = [c.insertion for c in contracts]
    assert insertions == sorted(insertions)
