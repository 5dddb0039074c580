from perfidiom.smells import SmellKind

from conftest import assert_equivalent_rewrite, detect, unit_of


class TestListComprehension:
    def test_basic_loop_append(self):
        dets = detect(SmellKind.LIST_COMPREHENSION, "a = []\nfor e in range(10):\n    a.append(e)\n")
        assert len(dets) == 1
        assert dets[0].simple_code == ["a = [e for e in range(10)]"]
        assert dets[0].compli_code == ["a = []", "for e in range(10):", "    a.append(e)"]

    def test_already_idiomatic(self):
        assert detect(SmellKind.LIST_COMPREHENSION, "a = [e for e in range(10)]\n") == []

    def test_guarded_append(self):
        src = "a = []\nfor e in xs:\n    if e > 0:\n        a.append(e*e)\n"
        dets = detect(SmellKind.LIST_COMPREHENSION, src)
        assert len(dets) == 1
        assert dets[0].simple_code == ["a = [e * e for e in xs if e > 0]"]

    def test_guarded_differential(self):
        src = "xs = [1, -2, 3]\na = []\nfor e in xs:\n    if e > 0:\n        a.append(e*e)\nprint(a)\n"
        dets = detect(SmellKind.LIST_COMPREHENSION, src)
        assert_equivalent_rewrite(src, dets)

    def test_non_adjacent_init_is_skipped(self):
        src = "a = []\nx = 1\nfor e in range(3):\n    a.append(e)\n"
        assert detect(SmellKind.LIST_COMPREHENSION, src) == []

    def test_loop_var_used_after_blocks(self):
        src = "a = []\nfor e in range(3):\n    a.append(e)\nprint(e)\n"
        assert detect(SmellKind.LIST_COMPREHENSION, src) == []

    def test_two_statement_body_blocks(self):
        src = "a = []\nfor e in range(3):\n    a.append(e)\n    a.append(e)\n"
        assert detect(SmellKind.LIST_COMPREHENSION, src) == []

    def test_container_read_in_iter_blocks(self):
        src = "a = []\nfor e in a:\n    a.append(e)\n"
        assert detect(SmellKind.LIST_COMPREHENSION, src) == []

    def test_else_clause_blocks(self):
        src = "a = []\nfor e in range(3):\n    a.append(e)\nelse:\n    pass\n"
        assert detect(SmellKind.LIST_COMPREHENSION, src) == []


class TestSetComprehension:
    def test_basic_loop_add(self):
        dets = detect(SmellKind.SET_COMPREHENSION, "b = set()\nfor e in range(10):\n    b.add(e)\n")
        assert len(dets) == 1
        assert dets[0].simple_code == ["b = {e for e in range(10)}"]

    def test_two_statement_body_blocks(self):
        src = "b = set()\nfor e in range(3):\n    b.add(e)\n    print(e)\n"
        assert detect(SmellKind.SET_COMPREHENSION, src) == []

    def test_guarded_differential(self):
        src = "b = set()\nfor e in range(10):\n    if e % 2:\n        b.add(e)\nprint(sorted(b))\n"
        dets = detect(SmellKind.SET_COMPREHENSION, src)
        assert len(dets) == 1
        assert_equivalent_rewrite(src, dets)

    def test_set_call_with_args_is_not_empty_init(self):
        src = "b = set(seed)\nfor e in range(3):\n    b.add(e)\n"
        assert detect(SmellKind.SET_COMPREHENSION, src) == []


class TestDictComprehension:
    def test_items_copy_keeps_key_value_orientation(self):
        src = "b = {}\nfor k, v in a.items():\n    b[k] = v\n"
        dets = detect(SmellKind.DICT_COMPREHENSION, src)
        assert len(dets) == 1
        assert dets[0].simple_code == ["b = {k: v for k, v in a.items()}"]

    def test_no_following_loop(self):
        assert detect(SmellKind.DICT_COMPREHENSION, "b = {}\nx = 1\n") == []

    def test_computed_value_differential(self):
        src = "ks = [1, 2, 3]\nb = {}\nfor k in ks:\n    b[k] = str(k)\nprint(sorted(b.items()))\n"
        dets = detect(SmellKind.DICT_COMPREHENSION, src)
        assert len(dets) == 1
        assert dets[0].simple_code == ["b = {k: str(k) for k in ks}"]
        assert_equivalent_rewrite(src, dets)

    def test_nonempty_literal_init_blocks(self):
        src = "b = {1: 2}\nfor k in ks:\n    b[k] = k\n"
        assert detect(SmellKind.DICT_COMPREHENSION, src) == []

    def test_container_read_in_value_blocks(self):
        src = "b = {}\nfor k in ks:\n    b[k] = len(b)\n"
        assert detect(SmellKind.DICT_COMPREHENSION, src) == []


def test_detection_metadata_in_function_scope():
    src = (
        "def build():\n"
        "    a = []\n"
        "    for e in range(3):\n"
        "        a.append(e)\n"
        "    return a\n"
    )
    det = detect(SmellKind.LIST_COMPREHENSION, src)[0]
    assert det.scope.function_name == "build"
    assert det.scope.class_name == ""
    assert det.ranges[0].start_line == 2
    assert unit_of(src).slice(det.ranges[0]) == "a = []"
