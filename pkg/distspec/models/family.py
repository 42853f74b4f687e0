"""
Symbolic descriptors of the named graph constructions.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import groupby


class FamilyKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    DOUBLE_STAR = "double_star"
    A_TREE = "a_tree"
    B_TREE = "b_tree"
    PNC = "pnc"
    KTILDE = "ktilde"
    BH_GRAPH = "bh_graph"
    COMPLEMENT_OF = "complement"
    UNION_OF = "union"
    JOIN_OF = "join"


COMBINATORS = {FamilyKind.COMPLEMENT_OF, FamilyKind.UNION_OF, FamilyKind.JOIN_OF}

_SYMBOL = {
    FamilyKind.PATH: "P",
    FamilyKind.CYCLE: "C",
    FamilyKind.STAR: "S",
    FamilyKind.COMPLETE: "K",
    FamilyKind.DOUBLE_STAR: "D",
    FamilyKind.A_TREE: "A",
    FamilyKind.B_TREE: "B",
    FamilyKind.PNC: "P",
    FamilyKind.KTILDE: "K̃",
    FamilyKind.BH_GRAPH: "G",
}


@dataclass(frozen=True)
class FamilySpec:
    """A named construction with integer parameters and nested children for combinators"""

    kind: FamilyKind
    params: tuple[int, ...] = ()
    children: tuple["FamilySpec", ...] = field(default=())

    @classmethod
    def of(cls, kind: FamilyKind, *params: int) -> "FamilySpec":
        return cls(kind, tuple(params))

    @classmethod
    def complement(cls, child: "FamilySpec") -> "FamilySpec":
        return cls(FamilyKind.COMPLEMENT_OF, (), (child,))

    @classmethod
    def union(cls, *children: "FamilySpec") -> "FamilySpec":
        return cls(FamilyKind.UNION_OF, (), tuple(children))

    @classmethod
    def join(cls, *children: "FamilySpec") -> "FamilySpec":
        return cls(FamilyKind.JOIN_OF, (), tuple(children))

    def label(self) -> str:
        """Human-readable notation, e.g. P_{9,2} or complement(C_5 ∪ 2K_2)."""
        if self.kind is FamilyKind.COMPLEMENT_OF:
            return f"complement({self.children[0].label()})"
        if self.kind is FamilyKind.UNION_OF:
            parts = []
            for text, group in groupby(child.label() for child in self.children):
                count = len(list(group))
                parts.append(text if count == 1 else f"{count}{text}")
            return " ∪ ".join(parts)
        if self.kind is FamilyKind.JOIN_OF:
            return " ∨ ".join(child.label() for child in self.children)
        if self.kind in (FamilyKind.PATH, FamilyKind.COMPLETE) and self.params[0] <= 2:
            # P_1 = K_1 and P_2 = K_2
            return f"K_{self.params[0]}"
        args = ",".join(str(p) for p in self.params)
        return f"{_SYMBOL[self.kind]}_{{{args}}}" if len(self.params) > 1 else f"{_SYMBOL[self.kind]}_{args}"

    def expression(self) -> str:
        """Command-line mini-grammar form, parseable by cli.parsing.parse_family."""
        if self.kind in COMBINATORS:
            inner = ",".join(child.expression() for child in self.children)
            return f"{self.kind.value}({inner})"
        return f"{self.kind.value}:{','.join(str(p) for p in self.params)}"
