"""
Graph sources for the command line: family expressions, graph6 strings and files.

Two family notations are accepted. The short grammar:
    expr    := [count "*"] name [":"] int ("," int)*      e.g. pnc:9,2  c3  2*k2
             | ("complement" | "union" | "join") "(" expr ("," expr)* ")"
A comma followed by a digit continues the parameter list; a comma followed by
a letter starts the next argument.

The label notation printed in reports (FamilySpec.label()):
    label   := union ("∨" union)*
    union   := term ("∪" term)*
    term    := [count] symbol "_" (int | "{" int ("," int)* "}")
             | ("complement" | "union" | "join") "(" label ("," label)* ")"
             | "(" label ")"
    symbol  := P | C | S | K | D | A | B | G | K̃ (or Kt)
e.g. P_{9,2}  complement(2C_3 ∪ 2K_2)  K̃_6  K_2 ∨ 3K_1
P with two parameters is P_{n,c}. An underscore followed by a digit never
occurs in graph6, so it marks the label notation.
"""
import re
from pathlib import Path
from typing import Optional

from distspec.core.exceptions import ParseError
from distspec.models.family import COMBINATORS, FamilyKind, FamilySpec
from distspec.models.graph import Graph
from distspec.services.graph_service import GraphService
from distspec.utils.graph6 import from_edge_list, from_graph6

ALIASES = {
    "p": FamilyKind.PATH,
    "c": FamilyKind.CYCLE,
    "s": FamilyKind.STAR,
    "k": FamilyKind.COMPLETE,
    "d": FamilyKind.DOUBLE_STAR,
    "a": FamilyKind.A_TREE,
    "b": FamilyKind.B_TREE,
    "kt": FamilyKind.KTILDE,
    "bh": FamilyKind.BH_GRAPH,
}
ALIASES.update({kind.value: kind for kind in FamilyKind})

LABEL_SYMBOLS = {
    "P": FamilyKind.PATH,
    "C": FamilyKind.CYCLE,
    "S": FamilyKind.STAR,
    "K": FamilyKind.COMPLETE,
    "D": FamilyKind.DOUBLE_STAR,
    "A": FamilyKind.A_TREE,
    "B": FamilyKind.B_TREE,
    "G": FamilyKind.BH_GRAPH,
    "K̃": FamilyKind.KTILDE,
    "Kt": FamilyKind.KTILDE,
}

_NAME = re.compile(r"[a-z_]+")
_INT = re.compile(r"\d+")
_LABEL_MARK = re.compile(r"_\{?\d|[∪∨̃]")
_LABEL_SYMBOL = re.compile(r"K̃|Kt|[PCSKDABG]")
_LABEL_COMBINATOR = re.compile(r"(complement|union|join)\(")


class _Cursor:
    def __init__(self, source: str, text: str):
        self.source = source
        self.text = text
        self.pos = 0

    def fail(self, reason: str) -> ParseError:
        return ParseError(self.source, f"{reason} at position {self.pos}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise self.fail(f"expected {char!r}")
        self.pos += 1

    def integer(self) -> int:
        match = _INT.match(self.text, self.pos)
        if not match:
            raise self.fail("expected an integer")
        self.pos = match.end()
        return int(match.group())

    def finish(self) -> None:
        if self.pos != len(self.text):
            raise self.fail("unexpected trailing input")


class _FamilyParser(_Cursor):
    def __init__(self, text: str):
        super().__init__(text, re.sub(r"\s+", "", text).lower())

    def parse(self) -> FamilySpec:
        specs = self.expr()
        self.finish()
        return specs[0] if len(specs) == 1 else FamilySpec.union(*specs)

    def expr(self) -> list[FamilySpec]:
        count = 1
        multiplicity = re.match(r"(\d+)\*", self.text[self.pos:])
        if multiplicity:
            count = int(multiplicity.group(1))
            self.pos += multiplicity.end()
            if count < 1:
                raise self.fail("multiplicity must be positive")
        match = _NAME.match(self.text, self.pos)
        if not match:
            raise self.fail("expected a family name")
        name = match.group()
        self.pos = match.end()
        if name not in ALIASES:
            raise self.fail(f"unknown family {name!r}")
        kind = ALIASES[name]
        if kind in COMBINATORS:
            spec = self.combinator(kind)
        else:
            spec = FamilySpec(kind, tuple(self.params()))
        return [spec] * count

    def combinator(self, kind: FamilyKind) -> FamilySpec:
        self.expect("(")
        children = self.expr()
        while self.peek() == ",":
            self.pos += 1
            children += self.expr()
        self.expect(")")
        return _combine(self, kind, children)

    def params(self) -> list[int]:
        if self.peek() == ":":
            self.pos += 1
        params = [self.integer()]
        while self.peek() == "," and self.text[self.pos + 1:self.pos + 2].isdigit():
            self.pos += 1
            params.append(self.integer())
        return params


class _LabelParser(_Cursor):
    """Reads the notation FamilySpec.label() writes, so report labels can be fed back in."""

    def __init__(self, text: str):
        super().__init__(text, re.sub(r"\s+", "", text))

    def parse(self) -> FamilySpec:
        spec = self.label()
        self.finish()
        return spec

    def label(self) -> FamilySpec:
        parts = [self.union()]
        while self.peek() == "∨":
            self.pos += 1
            parts.append(self.union())
        return parts[0] if len(parts) == 1 else FamilySpec.join(*parts)

    def union(self) -> FamilySpec:
        parts = self.term()
        while self.peek() == "∪":
            self.pos += 1
            parts += self.term()
        return parts[0] if len(parts) == 1 else FamilySpec.union(*parts)

    def term(self) -> list[FamilySpec]:
        match = _LABEL_COMBINATOR.match(self.text, self.pos)
        if match:
            self.pos = match.end()
            children = [self.label()]
            while self.peek() == ",":
                self.pos += 1
                children.append(self.label())
            self.expect(")")
            return [_combine(self, FamilyKind(match.group(1)), children)]
        if self.peek() == "(":
            self.pos += 1
            inner = self.label()
            self.expect(")")
            return [inner]
        count = self.integer() if self.peek().isdigit() else 1
        if count < 1:
            raise self.fail("multiplicity must be positive")
        return [self.atom()] * count

    def atom(self) -> FamilySpec:
        match = _LABEL_SYMBOL.match(self.text, self.pos)
        if not match:
            raise self.fail("expected a family symbol")
        self.pos = match.end()
        self.expect("_")
        if self.peek() == "{":
            self.pos += 1
            params = [self.integer()]
            while self.peek() == ",":
                self.pos += 1
                params.append(self.integer())
            self.expect("}")
        else:
            params = [self.integer()]
        kind = LABEL_SYMBOLS[match.group()]
        if kind is FamilyKind.PATH and len(params) == 2:
            kind = FamilyKind.PNC
        return FamilySpec(kind, tuple(params))


def _combine(cursor: _Cursor, kind: FamilyKind, children: list[FamilySpec]) -> FamilySpec:
    if kind is FamilyKind.COMPLEMENT_OF:
        if len(children) != 1:
            raise cursor.fail("complement takes exactly one argument")
        return FamilySpec.complement(children[0])
    if kind is FamilyKind.UNION_OF:
        return FamilySpec.union(*children)
    return FamilySpec.join(*children)


def is_label_notation(text: str) -> bool:
    return bool(_LABEL_MARK.search(text))


def parse_family(text: str) -> FamilySpec:
    """Parse "complement(union(c3,2*p2))" or the equivalent label "complement(C_3 ∪ 2K_2)"."""
    if not text.strip():
        raise ParseError(text, "empty family expression")
    if is_label_notation(text):
        return _LabelParser(text).parse()
    return _FamilyParser(text).parse()


def looks_like_family(text: str) -> bool:
    text = text.strip()
    return text[:1].islower() or bool(re.match(r"\d+\*", text)) or is_label_notation(text)


def load_graph(source: str, graphs: Optional[GraphService] = None) -> tuple[Graph, Optional[FamilySpec]]:
    """
    Resolve a command-line graph source.

    Args:
        source (str): Path to a .json edge list or a graph6 file, a family
            expression, or a graph6 string.

    Returns:
        The graph and, for family expressions, the FamilySpec it was built from.
    """
    graphs = graphs or GraphService()
    path = Path(source)
    if path.is_file():
        content = path.read_text()
        if path.suffix.lower() == ".json":
            return from_edge_list(content, source), None
        lines = [line for line in content.splitlines() if line.strip()]
        if not lines:
            raise ParseError(source, "empty file")
        return from_graph6(lines[0]), None
    if not looks_like_family(source):
        return from_graph6(source), None
    if is_label_notation(source):
        spec = parse_family(source)
        return graphs.construct(spec), spec
    try:
        spec = parse_family(source)
    except ParseError as family_error:
        # graph6 headers of graphs with 34 to 62 vertices are lowercase letters too
        try:
            return from_graph6(source), None
        except ParseError:
            raise family_error from None
    return graphs.construct(spec), spec
