"""Recursive-descent parser for polynomial expressions, with two backends.

Grammar (whitespace insensitive, implicit multiplication rejected):

    expr   := term (("+" | "-") term)*
    term   := ("-")* factor ("*" factor)*
    factor := atom ("^" uint)?
    atom   := ident | int | "(" expr ")"

Precedence is ^ above unary minus above * above binary +/-, which the
grammar enforces structurally.  Exponents are capped at 10**6.

``parse_poly`` expands the expression eagerly into a sparse Polynomial;
``parse_dag`` builds a hash-consed expression DAG without any expansion,
so (x+y)^16 stays a single power node.  Both run the same grammar; the
DAG is the primary build and expansion is a walk over it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ArityMismatchError,
    ExponentOverflowError,
    ParseError,
    RingMismatchError,
    UnknownVariableError,
)
from .poly import Polynomial
from .ring import RingSpec

MAX_EXPONENT = 10**6

# Node tags.  A node is a tuple whose first entry is the tag:
#   ("var", index) ("const", value) ("add", l, r) ("sub", l, r)
#   ("mul", l, r) ("neg", k) ("pow", k, exponent)
VAR, CONST, ADD, SUB, MUL, NEG, POW = "var", "const", "add", "sub", "mul", "neg", "pow"


@dataclass(frozen=True)
class ExprDag:
    """A hash-consed expression DAG over a ring.

    ``nodes`` is topologically ordered (children precede parents), so a
    single forward pass evaluates every node exactly once.  Structurally
    identical subtrees are shared: building x*y twice yields one mul node.
    """

    arity: int
    ring: RingSpec
    nodes: tuple[tuple, ...]
    root: int

    def __len__(self) -> int:
        return len(self.nodes)


class DagBuilder:
    """Interning builder for ExprDag nodes."""

    def __init__(self, arity: int, ring: RingSpec):
        self.arity = arity
        self.ring = ring
        self.nodes: list[tuple] = []
        self._index: dict[tuple, int] = {}

    def _intern(self, node: tuple) -> int:
        i = self._index.get(node)
        if i is None:
            i = len(self.nodes)
            self.nodes.append(node)
            self._index[node] = i
        return i

    def var(self, index: int) -> int:
        if not 0 <= index < self.arity:
            raise ArityMismatchError(f"variable index {index} out of range for arity {self.arity}")
        return self._intern((VAR, index))

    def const(self, value: int) -> int:
        return self._intern((CONST, self.ring.canon(value)))

    def add(self, left: int, right: int) -> int:
        return self._intern((ADD, left, right))

    def sub(self, left: int, right: int) -> int:
        return self._intern((SUB, left, right))

    def mul(self, left: int, right: int) -> int:
        return self._intern((MUL, left, right))

    def neg(self, child: int) -> int:
        return self._intern((NEG, child))

    def pow(self, child: int, exponent: int) -> int:
        if exponent < 0:
            raise ValueError("negative exponent")
        return self._intern((POW, child, exponent))

    def graft(self, dag: ExprDag) -> int:
        """Re-intern another DAG's nodes here; returns the new root index."""
        if dag.ring != self.ring:
            raise RingMismatchError(f"mixed rings {dag.ring} and {self.ring}")
        if dag.arity != self.arity:
            raise ArityMismatchError(f"mixed arities {dag.arity} and {self.arity}")
        remap: list[int] = []
        for node in dag.nodes:
            tag = node[0]
            if tag in (VAR, CONST):
                remap.append(self._intern(node))
            elif tag == NEG:
                remap.append(self._intern((NEG, remap[node[1]])))
            elif tag == POW:
                remap.append(self._intern((POW, remap[node[1]], node[2])))
            else:
                remap.append(self._intern((tag, remap[node[1]], remap[node[2]])))
        return remap[dag.root]

    def build(self, root: int) -> ExprDag:
        return ExprDag(self.arity, self.ring, tuple(self.nodes), root)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            # skip over whitespace-only tails
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        for kind in ("int", "ident", "op"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val, m.start(kind)))
                break
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str], builder: DagBuilder):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = {name: idx for idx, name in enumerate(variables)}
        if len(self.vars) != len(variables):
            raise ValueError(f"repeated variable name in {list(variables)}")
        self.b = builder

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        return self.advance()

    def parse(self) -> int:
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return node

    def expr(self) -> int:
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.term()
                node = self.b.add(node, rhs) if val == "+" else self.b.sub(node, rhs)
            else:
                return node

    def term(self) -> int:
        negations = 0
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "-":
                self.advance()
                negations += 1
            else:
                break
        node = self.factor()
        for _ in range(negations):
            node = self.b.neg(node)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                node = self.b.mul(node, self.factor())
            else:
                break
        return node

    def factor(self) -> int:
        node = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, pos = self.peek()
            if kind != "int":
                raise ParseError("expected a nonnegative integer exponent after '^'", pos)
            self.advance()
            e = int(val)
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds the maximum {MAX_EXPONENT}", pos)
            node = self.b.pow(node, e)
        return node

    def atom(self) -> int:
        kind, val, pos = self.advance()
        if kind == "int":
            return self.b.const(int(val))
        if kind == "ident":
            idx = self.vars.get(val)
            if idx is None:
                raise UnknownVariableError(f"unknown variable {val!r}", pos)
            return self.b.var(idx)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"expected a variable, integer, or parenthesized expression, got {val!r}" if val else "unexpected end of input", pos)


def parse_dag(text: str, variables: Sequence[str], ring: RingSpec) -> ExprDag:
    """Parse into a hash-consed DAG without expanding anything."""
    builder = DagBuilder(len(variables), ring)
    root = _Parser(text, variables, builder).parse()
    return builder.build(root)


def expand_dag(dag: ExprDag) -> Polynomial:
    """Expand a DAG into a sparse polynomial, one visit per node."""
    memo: list[Polynomial] = []
    arity, ring = dag.arity, dag.ring
    for node in dag.nodes:
        tag = node[0]
        if tag == VAR:
            p = Polynomial.variable(arity, ring, node[1])
        elif tag == CONST:
            p = Polynomial.constant(arity, ring, node[1])
        elif tag == ADD:
            p = memo[node[1]] + memo[node[2]]
        elif tag == SUB:
            p = memo[node[1]] - memo[node[2]]
        elif tag == MUL:
            p = memo[node[1]] * memo[node[2]]
        elif tag == NEG:
            p = -memo[node[1]]
        elif tag == POW:
            p = memo[node[1]] ** node[2]
        else:
            raise ValueError(f"unknown node tag {tag!r}")
        memo.append(p)
    return memo[dag.root]


def parse_poly(text: str, variables: Sequence[str], ring: RingSpec) -> Polynomial:
    """Parse and eagerly expand into a sparse polynomial."""
    return expand_dag(parse_dag(text, variables, ring))


def infer_variables(text: str) -> list[str]:
    """Variable names appearing in an expression, for callers that do not
    declare them.  Names of the form x<k> yield the full prefix x1..xmax;
    any other names are returned in first-appearance order.
    """
    seen: list[str] = []
    for m in re.finditer(r"[A-Za-z_][A-Za-z0-9_]*", text):
        name = m.group(0)
        if name not in seen:
            seen.append(name)
    if seen and all(re.fullmatch(r"x[1-9][0-9]*", n) for n in seen):
        top = max(int(n[1:]) for n in seen)
        return [f"x{i}" for i in range(1, top + 1)]
    return seen
