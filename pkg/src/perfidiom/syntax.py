"""Parsed source files with precise locations, scopes, and structural matching."""

from __future__ import annotations

import ast
from dataclasses import dataclass, field


class ParseError(Exception):
    """Raised when a source file does not parse under Python 3 grammar."""

    def __init__(self, path: str, line: int, col: int, message: str):
        self.path = path
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"{path}:{line}:{col}: {message}")


@dataclass(frozen=True, order=True)
class SourceRange:
    """A span of source text: 1-based lines, 0-based columns, end exclusive."""

    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __post_init__(self):
        if (self.start_line, self.start_col) > (self.end_line, self.end_col):
            raise ValueError(f"inverted range {self}")

    @classmethod
    def of(cls, node: ast.AST) -> "SourceRange":
        return cls(node.lineno, node.col_offset, node.end_lineno, node.end_col_offset)

    def contains(self, other: "SourceRange") -> bool:
        return (self.start_line, self.start_col) <= (other.start_line, other.start_col) and (
            other.end_line,
            other.end_col,
        ) <= (self.end_line, self.end_col)

    def as_pairs(self) -> list[list[int]]:
        return [[self.start_line, self.start_col], [self.end_line, self.end_col]]


@dataclass(frozen=True)
class ScopeInfo:
    """Innermost lexically enclosing class and function names ("" when absent)."""

    class_name: str = ""
    function_name: str = ""


@dataclass
class SourceUnit:
    """One parsed source file, immutable after construction."""

    path: str
    text: str
    tree: ast.Module
    line_offsets: list[int] = field(default_factory=list)
    _nodes: list | None = field(default=None, repr=False, compare=False)
    _blocks: list | None = field(default=None, repr=False, compare=False)
    _parents: dict | None = field(default=None, repr=False, compare=False)
    _scope_spans: list | None = field(default=None, repr=False, compare=False)
    _name_positions: dict | None = field(default=None, repr=False, compare=False)

    def slice(self, r: SourceRange) -> str:
        start = self.line_offsets[r.start_line - 1] + r.start_col
        end = self.line_offsets[r.end_line - 1] + r.end_col
        return self.text[start:end]

    def slice_lines(self, ranges: list[SourceRange]) -> list[str]:
        out: list[str] = []
        for r in ranges:
            out.extend(self.slice(r).splitlines() or [""])
        return out

    # The caches below are lazy and idempotent, so sharing a unit across
    # threads stays safe: a racing recompute produces the same value.

    def nodes(self) -> list[ast.AST]:
        """Every node in the tree, walked once and reused by all detectors."""
        if self._nodes is None:
            self._nodes = list(ast.walk(self.tree))
        return self._nodes

    def blocks(self) -> list[list[ast.stmt]]:
        """Every statement list (module body, suites, handlers, cases)."""
        if self._blocks is None:
            blocks = [self.tree.body]
            for node in self.nodes():
                if isinstance(node, ast.Module):
                    continue
                for attr in ("body", "orelse", "finalbody"):
                    block = getattr(node, attr, None)
                    if isinstance(block, list) and block and isinstance(block[0], ast.stmt):
                        blocks.append(block)
            self._blocks = blocks
        return self._blocks

    def parent_map(self) -> dict[ast.AST, ast.AST]:
        if self._parents is None:
            self._parents = {
                child: parent
                for parent in self.nodes()
                for child in ast.iter_child_nodes(parent)
            }
        return self._parents

    def scope_spans(self) -> list[tuple["SourceRange", bool, str]]:
        """(span, is_class, name) for every class/function def, document order."""
        if self._scope_spans is None:
            spans = [
                (SourceRange.of(node), isinstance(node, ast.ClassDef), node.name)
                for node in self.nodes()
                if isinstance(node, _SCOPE_NODES)
            ]
            spans.sort(key=lambda s: (s[0].start_line, s[0].start_col, -s[0].end_line, -s[0].end_col))
            self._scope_spans = spans
        return self._scope_spans

    def name_positions(self) -> dict[str, list[tuple[int, int]]]:
        """Sorted (line, col) occurrences of every Name in the file."""
        if self._name_positions is None:
            positions: dict[str, list[tuple[int, int]]] = {}
            for node in self.nodes():
                if isinstance(node, ast.Name):
                    positions.setdefault(node.id, []).append((node.lineno, node.col_offset))
            for spots in positions.values():
                spots.sort()
            self._name_positions = positions
        return self._name_positions


def _line_offsets(text: str) -> list[int]:
    offsets = [0]
    for i, ch in enumerate(text):
        if ch == "\n":
            offsets.append(i + 1)
    return offsets


def parse_unit(path: str, text: str) -> SourceUnit:
    """Parse Python 3 source into a SourceUnit; invalid syntax raises ParseError."""
    try:
        tree = ast.parse(text)
    except SyntaxError as e:
        raise ParseError(path, e.lineno or 0, (e.offset or 1) - 1, e.msg or "invalid syntax") from e
    except ValueError as e:  # e.g. null bytes
        raise ParseError(path, 0, 0, str(e)) from e
    return SourceUnit(path=path, text=text, tree=tree, line_offsets=_line_offsets(text))


_SCOPE_NODES = (ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef)


def enclosing_scope(unit: SourceUnit, r: SourceRange) -> ScopeInfo:
    """Innermost enclosing function and class names for a range, by lexical nesting."""
    class_name = ""
    function_name = ""
    # Spans come in document order, parents before children, so the last
    # containing span of each flavor is the innermost one.
    for span, is_class, name in unit.scope_spans():
        if span == r or not span.contains(r):
            continue
        if is_class:
            class_name = name
        else:
            function_name = name
    return ScopeInfo(class_name=class_name, function_name=function_name)


def _shape_dump(node: ast.AST) -> str:
    import copy

    clone = copy.deepcopy(node)
    for sub in ast.walk(clone):
        if "ctx" in sub._fields:
            sub.ctx = ast.Load()
    return ast.dump(clone, include_attributes=False)


def structural_equal(node_a: ast.AST, node_b: ast.AST) -> bool:
    """True iff two subtrees are identical up to whitespace, parenthesization,
    and load/store context."""
    return _shape_dump(node_a) == _shape_dump(node_b)


_PURE_UNARY = (ast.UAdd, ast.USub, ast.Invert, ast.Not)


def is_pure(node: ast.AST) -> bool:
    """Conservative purity: safe to re-evaluate, duplicate, or drop.

    Names, literals, attribute chains on pure values, subscripts with pure
    bases and indices, and unary/binary arithmetic of pure operands. Any
    call is impure.
    """
    if isinstance(node, (ast.Name, ast.Constant)):
        return True
    if isinstance(node, ast.Attribute):
        return is_pure(node.value)
    if isinstance(node, ast.Subscript):
        return is_pure(node.value) and is_pure(node.slice)
    if isinstance(node, ast.Slice):
        parts = [p for p in (node.lower, node.upper, node.step) if p is not None]
        return all(is_pure(p) for p in parts)
    if isinstance(node, ast.UnaryOp):
        return isinstance(node.op, _PURE_UNARY) and is_pure(node.operand)
    if isinstance(node, ast.BinOp):
        return is_pure(node.left) and is_pure(node.right)
    if isinstance(node, ast.Tuple):
        return all(is_pure(e) for e in node.elts)
    return False


class _FlatTupleUnparser(ast._Unparser):
    """Unparser that renders tuples without parentheses where grammar allows.

    Python 3.10's stdlib unparser parenthesizes every tuple; the rewrites
    here must read like hand-written code (`x, y = y, x`), so this backports
    the precedence-aware tuple rendering of later CPython versions.
    """

    def visit_Tuple(self, node):
        with self.delimit_if(
            "(", ")", len(node.elts) == 0 or self.get_precedence(node) > ast._Precedence.TUPLE
        ):
            self.items_view(self.traverse, node.elts)

    def visit_Assign(self, node):
        self.fill()
        for target in node.targets:
            self.set_precedence(ast._Precedence.TUPLE, target)
            self.traverse(target)
            self.write(" = ")
        self.set_precedence(ast._Precedence.TUPLE, node.value)
        self.traverse(node.value)

    def _for_helper(self, fill, node):
        self.fill(fill)
        self.set_precedence(ast._Precedence.TUPLE, node.target)
        self.traverse(node.target)
        self.write(" in ")
        self.traverse(node.iter)
        with self.block(extra=self.get_type_comment(node)):
            self.traverse(node.body)
        if node.orelse:
            self.fill("else")
            with self.block():
                self.traverse(node.orelse)


def render(node: ast.AST) -> str:
    """Source text for a (possibly synthesized) node, flat-tuple style."""
    return _FlatTupleUnparser().visit(ast.fix_missing_locations(node))
