import re

from specgraph.frontends import extract_annotations
from specgraph.specgen.acsl import gen_acsl

# Five hand-written conditional-return functions; each must yield exactly
# the dual ensures pair with the condition verbatim.
DUAL_RETURN_FUNCTIONS = {
    "sign": ("int sign(int x) {\n    if (x > 0) return 1;\n"
             "    else return -1;\n}\n",
             "x > 0", "1", "-1"),
    "maxof": ("int maxof(int a, int b) {\n    if (a > b) {\n        return a;"
              "\n    } else {\n        return b;\n    }\n}\n",
              "a > b", "a", "b"),
    "minof": ("int minof(int a, int b) {\n    if (a < b) {\n        return a;"
              "\n    } else {\n        return b;\n    }\n}\n",
              "a < b", "a", "b"),
    "parity": ("int parity(int n) {\n    if (n % 2 == 0) return 0;\n"
               "    else return 1;\n}\n",
               "n % 2 == 0", "0", "1"),
    "clamp01": ("int clamp01(int v) {\n    if (v >= 1) {\n        return 1;"
                "\n    } else {\n        return 0;\n    }\n}\n",
                "v >= 1", "1", "0"),
}


def strip_annotations(text: str) -> str:
    """Test-side oracle: drop whole annotation lines, keep everything else."""
    out = []
    in_block = False
    for line in text.split("\n"):
        stripped = line.strip()
        if in_block:
            if stripped.endswith("*/"):
                in_block = False
            continue
        if stripped.startswith("/*@"):
            if not stripped.endswith("*/"):
                in_block = True
            continue
        if stripped.startswith("//@"):
            continue
        out.append(line)
    return "\n".join(out)


def test_dual_ensures_exact_form():
    for name, (source, cond, e1, e2) in DUAL_RETURN_FUNCTIONS.items():
        annotated, contracts = gen_acsl(source)
        assert len(contracts) == 1, name
        clauses = contracts[0].clauses
        assert [c.kind for c in clauses] == ["ensures", "ensures"], name
        assert clauses[0].text == f"({cond}) ==> \\result == {e1}", name
        assert clauses[1].text == f"!({cond}) ==> \\result == {e2}", name
        assert f"ensures ({cond}) ==> \\result == {e1};" in annotated
        assert f"ensures !({cond}) ==> \\result == {e2};" in annotated


def test_dual_ensures_condition_identical_in_both_polarities():
    for source, *_ in DUAL_RETURN_FUNCTIONS.values():
        _, contracts = gen_acsl(source)
        pos, neg = (c.text for c in contracts[0].clauses)
        match = re.match(r"\((.+)\) ==>", pos)
        assert match and neg.startswith(f"!({match.group(1)})")


def test_counting_loop_clauses():
    source = ("void zero(int *a, int n) {\n"
              "    int i;\n"
              "    for (i = 0; i < n; i++) a[i] = 0;\n"
              "}\n")
    annotated, contracts = gen_acsl(source)
    assert "loop invariant 0 <= i <= n;" in annotated
    assert "loop variant n - i;" in annotated
    assert "requires \\valid(a + (0 .. n-1));" in annotated
    assert ("ensures \\forall integer k; 0 <= k < n ==> "
            "\\initialized(&a[k]);" in annotated)
    kinds = [c.kind for contract in contracts for c in contract.clauses]
    assert kinds == ["requires", "ensures", "invariant", "decreases"]


def test_while_loop_with_prior_init():
    source = ("int total(int *a, int n) {\n"
              "    int s = 0;\n"
              "    int i = 0;\n"
              "    while (i < n) {\n"
              "        s = s + a[i];\n"
              "        i = i + 1;\n"
              "    }\n"
              "    return s;\n"
              "}\n")
    annotated, _ = gen_acsl(source)
    assert "loop invariant 0 <= i <= n;" in annotated
    assert "loop variant n - i;" in annotated
    assert "requires \\valid(a + (0 .. n-1));" in annotated


def test_unrecognized_loop_gets_variant_only_when_inferable():
    source = ("void shrink(int n) {\n"
              "    int i = 0;\n"
              "    while (i < n) {\n"
              "        i = i + 2;\n"
              "    }\n"
              "}\n")
    annotated, contracts = gen_acsl(source)
    assert "loop variant n - i;" in annotated
    assert "loop invariant" not in annotated
    kinds = [c.kind for contract in contracts for c in contract.clauses]
    assert kinds == ["decreases"]


def test_switch_case_ensures():
    source = ("int day_code(int d) {\n"
              "    switch (d) {\n"
              "        case 1: return 10;\n"
              "        case 2: return 20;\n"
              "        default: return 0;\n"
              "    }\n"
              "}\n")
    annotated, contracts = gen_acsl(source)
    assert "ensures (d == 1) ==> \\result == 10;" in annotated
    assert "ensures (d == 2) ==> \\result == 20;" in annotated
    assert len(contracts[0].clauses) == 2


def test_empty_body_gets_assigns_nothing():
    annotated, contracts = gen_acsl("void noop(void) {\n}\n")
    assert "/*@ assigns \\nothing; */" in annotated
    assert [(c.kind, c.text) for c in contracts[0].clauses] \
        == [("assigns", "\\nothing")]


def test_impure_function_assigns_written_names():
    source = ("void setter(int *p, int *q) {\n"
              "    *p = 1;\n"
              "    q[0] = 2;\n"
              "}\n")
    annotated, contracts = gen_acsl(source)
    assert "assigns *p, q[..];" in annotated
    assert contracts[0].clauses[0].kind == "assigns"


def test_main_gets_assert_after_literal_call():
    source = ("int twice(int v) { return v + v; }\n"
              "\n"
              "int main(void) {\n"
              "    int r = twice(21);\n"
              "    return 0;\n"
              "}\n")
    annotated, _ = gen_acsl(source)
    lines = annotated.split("\n")
    call_idx = next(i for i, ln in enumerate(lines) if "twice(21)" in ln)
    assert lines[call_idx + 1].strip() == "//@ assert r != -2147483648;"


def test_main_skips_nonliteral_and_unassigned_calls():
    source = ("int twice(int v) { return v + v; }\n"
              "\n"
              "int main(void) {\n"
              "    int x = 3;\n"
              "    int r = twice(x);\n"
              "    twice(21);\n"
              "    return 0;\n"
              "}\n")
    annotated, _ = gen_acsl(source)
    assert "//@ assert" not in annotated


def test_stripping_annotations_recovers_input():
    for source, *_ in DUAL_RETURN_FUNCTIONS.values():
        annotated, _ = gen_acsl(source)
        assert strip_annotations(annotated) == source


def test_idempotent():
    for source, *_ in DUAL_RETURN_FUNCTIONS.values():
        once, _ = gen_acsl(source)
        twice, again = gen_acsl(once)
        assert twice == once
        assert again == []


def test_round_trip_kinds_are_subsequence():
    source = "".join(src for src, *_ in DUAL_RETURN_FUNCTIONS.values())
    annotated, contracts = gen_acsl(source)
    reported = [c.kind for contract in contracts for c in contract.clauses]
    extracted = [c.kind for c in extract_annotations(annotated, "ACSL")]
    assert len(extracted) >= len(reported)
    it = iter(extracted)
    assert all(kind in it for kind in reported)


def test_no_redundant_clauses_per_target():
    source = ("void pair(int *a, int *b, int n) {\n"
              "    int i;\n"
              "    for (i = 0; i < n; i++) { a[i] = b[i]; }\n"
              "    int j;\n"
              "    for (j = 0; j < n; j++) { a[j] = a[j]; }\n"
              "}\n")
    _, contracts = gen_acsl(source)
    for contract in contracts:
        texts = [(c.kind, c.text) for c in contract.clauses]
        assert len(texts) == len(set(texts))
