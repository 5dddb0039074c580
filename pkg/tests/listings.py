"""The nine anti-idiom/idiom fixture pairs used by the golden rewrite tests.

Anti-idiom sources are scanned; each idiom source is what the single
suggested rewrite must produce when spliced in.
"""

from perfidiom.smells import SmellKind

LIST_COMP_ANTI = """\
a = []
for e in range(10):
    a.append(e)
"""
LIST_COMP_IDIOM = "a = [e for e in range(10)]\n"

SET_COMP_ANTI = """\
b = set()
for e in range(10):
    b.add(e)
"""
SET_COMP_IDIOM = "b = {e for e in range(10)}\n"

DICT_COMP_ANTI = """\
b = {}
for k, v in a.items():
    b[k] = v
"""
# The mapping orientation is key: value, preserving the loop's stores.
DICT_COMP_IDIOM = "b = {k: v for k, v in a.items()}\n"

CHAIN_COMPARE_ANTI = "i > n1 and i <= n1 + n2\n"
CHAIN_COMPARE_IDIOM = "n1 < i <= n1 + n2\n"

TRUTH_VALUE_ANTI = """\
if n % 2 == 1:
    pass
"""
TRUTH_VALUE_IDIOM = """\
if n % 2:
    pass
"""

FOR_ELSE_ANTI = """\
finishedForLoop = True
for x in range(2, n):
    if n % x == 0:
        finishedForLoop = False
        break
if finishedForLoop:
    pass
"""
FOR_ELSE_IDIOM = """\
for x in range(2, n):
    if n % x == 0:
        break
else:
    pass
"""

ASSIGN_MULTI_ANTI = """\
f = d[0]
d[0] = d[e]
d[e] = f
"""
ASSIGN_MULTI_IDIOM = "d[0], d[e] = d[e], d[0]\n"

CALL_STAR_ANTI = "dicts = load_crowdhuman_json(sys.argv[1], sys.argv[2], sys.argv[3])\n"
CALL_STAR_IDIOM = "dicts = load_crowdhuman_json(*sys.argv[1:4])\n"

FOR_MULTI_ANTI = "for item in sales: a = item[0], item[1]\n"
FOR_MULTI_IDIOM = """\
for e_0, e_1, *e in sales:
    a = e_0, e_1
"""

GOLDEN_PAIRS = {
    SmellKind.LIST_COMPREHENSION: (LIST_COMP_ANTI, LIST_COMP_IDIOM),
    SmellKind.SET_COMPREHENSION: (SET_COMP_ANTI, SET_COMP_IDIOM),
    SmellKind.DICT_COMPREHENSION: (DICT_COMP_ANTI, DICT_COMP_IDIOM),
    SmellKind.CHAIN_COMPARE: (CHAIN_COMPARE_ANTI, CHAIN_COMPARE_IDIOM),
    SmellKind.TRUTH_VALUE_TEST: (TRUTH_VALUE_ANTI, TRUTH_VALUE_IDIOM),
    SmellKind.FOR_ELSE: (FOR_ELSE_ANTI, FOR_ELSE_IDIOM),
    SmellKind.ASSIGN_MULTI_TARGETS: (ASSIGN_MULTI_ANTI, ASSIGN_MULTI_IDIOM),
    SmellKind.CALL_STAR: (CALL_STAR_ANTI, CALL_STAR_IDIOM),
    SmellKind.FOR_MULTI_TARGETS: (FOR_MULTI_ANTI, FOR_MULTI_IDIOM),
}

# The eight consecutive hyperparameter assignments that merge into one
# tuple assignment.
HYPERPARAMETER_RUN = """\
game_board_height = 11
game_board_width = 11
number_of_snakes = 4
self_play_games = 256
max_MCTS_depth = 8
max_MCTS_breadth = 128
initial_learning_rate = 0.0001
learning_rate_decay = 0.98
"""
