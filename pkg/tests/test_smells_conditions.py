import itertools

from perfidiom.smells import SmellKind

from conftest import assert_equivalent_rewrite, detect, run_snippet


class TestChainCompare:
    def test_paper_orientation(self):
        dets = detect(SmellKind.CHAIN_COMPARE, "ok = i > n1 and i <= n1 + n2\n")
        assert len(dets) == 1
        assert dets[0].simple_code == ["n1 < i <= n1 + n2"]
        assert dets[0].compli_code == ["i > n1 and i <= n1 + n2"]

    def test_no_shared_operand(self):
        assert detect(SmellKind.CHAIN_COMPARE, "ok = a < b and c < d\n") == []

    def test_ascending_pair_truth_table(self):
        # Truth-table equality over all orderings of (a, b, c) in {0,1,2}^3.
        src_template = "results = []\nfor a in range(3):\n    for b in range(3):\n        for c in range(3):\n            results.append({expr})\nprint(results)\n"
        original = src_template.format(expr="a < b and b < c")
        dets = detect(SmellKind.CHAIN_COMPARE, original)
        assert len(dets) == 1
        assert dets[0].simple_code == ["a < b < c"]
        rewritten = assert_equivalent_rewrite(original, dets)
        out, _ = run_snippet(rewritten)
        expected = [a < b < c for a, b, c in itertools.product(range(3), repeat=3)]
        assert out == f"{expected}\n"

    def test_impure_shared_operand_blocks(self):
        assert detect(SmellKind.CHAIN_COMPARE, "ok = a < f() and f() < b\n") == []

    def test_equality_chain(self):
        dets = detect(SmellKind.CHAIN_COMPARE, "ok = x == 'pass' and y == 'pass'\n")
        assert len(dets) == 1
        assert dets[0].simple_code == ["x == 'pass' == y"]

    def test_maximal_run_folds_once(self):
        dets = detect(SmellKind.CHAIN_COMPARE, "ok = a < b and b < c and c < d\n")
        assert len(dets) == 1
        assert dets[0].simple_code == ["a < b < c < d"]

    def test_extra_operands_preserved_by_splice(self):
        src = "ok = ready and a < b and b < c\n"
        dets = detect(SmellKind.CHAIN_COMPARE, src)
        assert len(dets) == 1
        from perfidiom.smells import apply_detections

        assert apply_detections(src, dets) == "ok = ready and a < b < c\n"

    def test_already_chained_is_clean(self):
        assert detect(SmellKind.CHAIN_COMPARE, "ok = n1 < i <= n1 + n2\n") == []


class TestTruthValueTest:
    def test_mod_two_equals_one(self):
        dets = detect(SmellKind.TRUTH_VALUE_TEST, "if n % 2 == 1:\n    pass\n")
        assert len(dets) == 1
        assert dets[0].simple_code == ["n % 2"]

    def test_mod_k_equals_zero(self):
        dets = detect(SmellKind.TRUTH_VALUE_TEST, "if iter_num % K == 0:\n    pass\n")
        assert len(dets) == 1
        assert dets[0].simple_code == ["not iter_num % K"]

    def test_non_truthiness_comparison_is_clean(self):
        assert detect(SmellKind.TRUTH_VALUE_TEST, "if x == 0.5:\n    pass\n") == []

    def test_eq_and_ne_zero(self):
        assert detect(SmellKind.TRUTH_VALUE_TEST, "if x == 0:\n    pass\n")[0].simple_code == ["not x"]
        assert detect(SmellKind.TRUTH_VALUE_TEST, "while x != 0:\n    pass\n")[0].simple_code == ["x"]

    def test_len_rules(self):
        assert detect(SmellKind.TRUTH_VALUE_TEST, "if len(e) == 0:\n    pass\n")[0].simple_code == ["not len(e)"]
        assert detect(SmellKind.TRUTH_VALUE_TEST, "if len(e) != 0:\n    pass\n")[0].simple_code == ["len(e)"]

    def test_is_bool_restricted_to_allowlisted_calls(self):
        src = "if isinstance(x, int) is False:\n    pass\n"
        assert detect(SmellKind.TRUTH_VALUE_TEST, src)[0].simple_code == ["not isinstance(x, int)"]
        src = "if isinstance(x, int) is True:\n    pass\n"
        assert detect(SmellKind.TRUTH_VALUE_TEST, src)[0].simple_code == ["isinstance(x, int)"]
        assert detect(SmellKind.TRUTH_VALUE_TEST, "if flag is True:\n    pass\n") == []
        assert detect(SmellKind.TRUTH_VALUE_TEST, "if custom(x) is True:\n    pass\n") == []

    def test_custom_allowlist(self):
        from perfidiom.smells import detect_truth_value_test
        from perfidiom import parse_unit

        unit = parse_unit("f.py", "if custom(x) is True:\n    pass\n")
        dets = detect_truth_value_test(unit, allowlist=("custom",))
        assert len(dets) == 1
        assert dets[0].simple_code == ["custom(x)"]

    def test_boolean_contexts_only(self):
        # Value positions keep their exact value; only truth contexts rewrite.
        assert detect(SmellKind.TRUTH_VALUE_TEST, "ok = x != 0\n") == []
        assert detect(SmellKind.TRUTH_VALUE_TEST, "return_value = [x == 0]\n") == []
        assert len(detect(SmellKind.TRUTH_VALUE_TEST, "assert x != 0\n")) == 1
        assert len(detect(SmellKind.TRUTH_VALUE_TEST, "y = 1 if x != 0 else 2\n")) == 1
        assert len(detect(SmellKind.TRUTH_VALUE_TEST, "y = not (x % 2 == 1)\n")) == 1

    def test_boolop_operands_inside_condition(self):
        dets = detect(SmellKind.TRUTH_VALUE_TEST, "if x == 0 and len(y) != 0:\n    pass\n")
        assert [d.simple_code for d in dets] == [["not x"], ["len(y)"]]

    def test_boolop_in_value_position_excluded(self):
        assert detect(SmellKind.TRUTH_VALUE_TEST, "ok = x == 0 and len(y) != 0\n") == []

    def test_zero_on_left_not_rewritten(self):
        assert detect(SmellKind.TRUTH_VALUE_TEST, "if 0 == x:\n    pass\n") == []

    def test_float_and_bool_literals_excluded(self):
        assert detect(SmellKind.TRUTH_VALUE_TEST, "if x == 0.0:\n    pass\n") == []
        assert detect(SmellKind.TRUTH_VALUE_TEST, "if x == False:\n    pass\n") == []

    def test_paren_safety_for_low_precedence_operand(self):
        dets = detect(SmellKind.TRUTH_VALUE_TEST, "if (a or b) == 0:\n    pass\n")
        assert dets[0].simple_code == ["not (a or b)"]
