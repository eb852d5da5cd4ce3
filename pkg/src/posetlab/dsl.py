"""Expression DSL for building posets.

Grammar (whitespace insignificant):

    EXPR := TERM { '*' TERM }
    TERM := ATOM { '[' INT ']' }
    ATOM := 'B(' INT ')' | 'T(' INT ')' | 'I(' INT ')' | 'I(' INT ',' INT ')'
          | 'ex1' | 'ex2' | 'load("' PATH '")' | '(' EXPR ')'

Postfix [k] (chain poset) binds tighter than '*' (product); '*' associates
left. B(n) is the subset algebra, T(k) the total order with k + 1 elements,
I(n) the no-pair marked-subset family, I(n, m) its m-mark generalization,
ex1/ex2 the two counterexample posets from the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog, core


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Builtin:
    name: str
    args: tuple[int, ...] = ()


@dataclass(frozen=True)
class LoadFile:
    path: str


@dataclass(frozen=True)
class ChainOf:
    base: object
    k: int


@dataclass(frozen=True)
class ProductOf:
    left: object
    right: object


_SYMBOLS = set("()[]*,")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch == '"':
            j = text.find('"', i + 1)
            if j < 0:
                raise ParseError("unterminated string", i)
            tokens.append(("STRING", text[i + 1 : j], i))
            i = j + 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("END", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[0]}", tok[2])
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] == "*":
            self.take("*")
            node = ProductOf(node, self.term())
        return node

    def term(self):
        node = self.atom()
        while self.peek()[0] == "[":
            self.take("[")
            kind, k, at = self.take("INT")
            if k == 0:
                raise ParseError("chain length must be positive", at)
            self.take("]")
            node = ChainOf(node, k)
        return node

    def atom(self):
        kind, value, at = self.peek()
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if kind != "NAME":
            raise ParseError(f"expected a poset atom, found {kind}", at)
        self.take("NAME")
        if value in ("ex1", "ex2"):
            return Builtin(value)
        if value == "load":
            self.take("(")
            _, path, _ = self.take("STRING")
            self.take(")")
            return LoadFile(path)
        if value in ("B", "T", "I"):
            self.take("(")
            _, first, _ = self.take("INT")
            args = [first]
            if value == "I" and self.peek()[0] == ",":
                self.take(",")
                args.append(self.take("INT")[1])
            self.take(")")
            return Builtin(value, tuple(args))
        raise ParseError(f"unknown name {value!r}", at)


def parse(text: str):
    parser = _Parser(text)
    node = parser.expr()
    kind, _, at = parser.peek()
    if kind != "END":
        raise ParseError(f"unexpected trailing {kind}", at)
    return node


def to_text(node) -> str:
    if isinstance(node, Builtin):
        if not node.args:
            return node.name
        return f"{node.name}({','.join(str(a) for a in node.args)})"
    if isinstance(node, LoadFile):
        return f'load("{node.path}")'
    if isinstance(node, ChainOf):
        base = to_text(node.base)
        if isinstance(node.base, ProductOf):
            base = f"({base})"
        return f"{base}[{node.k}]"
    if isinstance(node, ProductOf):
        return f"{to_text(node.left)}*{to_text(node.right)}"
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node) -> core.Poset:
    """Build the poset an expression (text or parsed node) denotes."""
    from .chains import chain_poset

    if isinstance(node, str):
        node = parse(node)
    if isinstance(node, Builtin):
        if node.name == "ex1":
            return catalog.example_sym()
        if node.name == "ex2":
            return catalog.example_uni()
        if node.name == "B":
            return catalog.boolean(*node.args)
        if node.name == "T":
            return catalog.total(*node.args)
        if node.name == "I":
            if len(node.args) == 1:
                return catalog.isotropic(*node.args)
            return catalog.isotropic_general(*node.args)
    if isinstance(node, LoadFile):
        return core.load(node.path)
    if isinstance(node, ChainOf):
        return chain_poset(evaluate(node.base), node.k)
    if isinstance(node, ProductOf):
        return core.product(evaluate(node.left), evaluate(node.right))
    raise TypeError(f"not an expression node: {node!r}")
