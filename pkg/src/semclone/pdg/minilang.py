"""A small imperative language used to exercise the code channel end to
end without a real-language front end.

Supported: integer and boolean variables, assignment, arithmetic
(+ - * / %), comparisons (< <= > >= == !=), if/else, while,
for(init; cond; update), return, and an intrinsic ``print``.  C-style
comments are skipped by the tokenizer.  ``for`` loops are desugared at
parse time into the init assignment followed by a while loop whose body
ends with the update, so the two spellings produce identical structure
downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from semclone.errors import MiniSyntaxError

# --- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class BoolLit:
    value: bool


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Negate:
    operand: "Expr"


@dataclass(frozen=True)
class BinaryOp:
    op: str  # add sub mul div mod lt leq gt geq eq neq
    left: "Expr"
    right: "Expr"


Expr = Union[IntLit, BoolLit, Name, Negate, BinaryOp]


@dataclass(frozen=True)
class Assign:
    name: str
    expr: Expr
    line: int


@dataclass(frozen=True)
class If:
    cond: Expr
    then_body: tuple["Stmt", ...]
    else_body: tuple["Stmt", ...]
    line: int


@dataclass(frozen=True)
class While:
    cond: Expr
    body: tuple["Stmt", ...]
    line: int


@dataclass(frozen=True)
class Return:
    expr: Expr | None
    line: int


@dataclass(frozen=True)
class Print:
    args: tuple[Expr, ...]
    line: int


Stmt = Union[Assign, If, While, Return, Print]


@dataclass(frozen=True)
class Program:
    body: tuple[Stmt, ...]


# --- Tokenizer --------------------------------------------------------------

_KEYWORDS = {"if", "else", "while", "for", "return", "print", "true", "false"}
_TWO_CHAR_OPS = {"<=", ">=", "==", "!="}
_ONE_CHAR_OPS = set("+-*/%<>=;(){},")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "int" | "kw" | "op" | "eof"
    value: str
    line: int
    column: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    line = 1
    col = 1

    def advance(count: int) -> None:
        nonlocal i, line, col
        for _ in range(count):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            advance(1)
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "/":
            end = text.find("\n", i + 2)
            advance((end if end != -1 else n) - i)
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "*":
            end = text.find("*/", i + 2)
            if end == -1:
                advance(n - i)
            else:
                advance(end + 2 - i)
            continue
        if ch.isdigit():
            start = i
            start_col = col
            while i < n and text[i].isdigit():
                advance(1)
            tokens.append(Token("int", text[start:i], line, start_col))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            start_col = col
            while i < n and (text[i].isalnum() or text[i] == "_"):
                advance(1)
            word = text[start:i]
            tokens.append(
                Token("kw" if word in _KEYWORDS else "ident", word, line, start_col)
            )
            continue
        two = text[i : i + 2]
        if two in _TWO_CHAR_OPS:
            tokens.append(Token("op", two, line, col))
            advance(2)
            continue
        if ch in _ONE_CHAR_OPS:
            tokens.append(Token("op", ch, line, col))
            advance(1)
            continue
        raise MiniSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


# --- Parser -----------------------------------------------------------------

_CMP_OPS = {"<": "lt", "<=": "leq", ">": "gt", ">=": "geq", "==": "eq", "!=": "neq"}
_ADD_OPS = {"+": "add", "-": "sub"}
_MUL_OPS = {"*": "mul", "/": "div", "%": "mod"}


@dataclass
class _Parser:
    tokens: list[Token]
    pos: int = field(default=0)

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _error(self, message: str) -> MiniSyntaxError:
        tok = self.current
        return MiniSyntaxError(message, tok.line, tok.column)

    def _advance(self) -> Token:
        tok = self.current
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def _expect_op(self, op: str) -> Token:
        tok = self.current
        if tok.kind != "op" or tok.value != op:
            raise self._error(f"expected {op!r}, found {tok.value or 'end of file'!r}")
        return self._advance()

    def _at_op(self, op: str) -> bool:
        return self.current.kind == "op" and self.current.value == op

    def _at_kw(self, word: str) -> bool:
        return self.current.kind == "kw" and self.current.value == word

    def parse_program(self) -> Program:
        body: list[Stmt] = []
        while self.current.kind != "eof":
            body.extend(self.parse_statement())
        return Program(body=tuple(body))

    def parse_statement(self) -> list[Stmt]:
        """Parse one statement; a ``for`` yields its desugared pair."""
        tok = self.current
        if tok.kind == "kw":
            if tok.value == "if":
                return [self._parse_if()]
            if tok.value == "while":
                return [self._parse_while()]
            if tok.value == "for":
                return self._parse_for()
            if tok.value == "return":
                return [self._parse_return()]
            if tok.value == "print":
                return [self._parse_print()]
            raise self._error(f"unexpected keyword {tok.value!r}")
        if tok.kind == "ident":
            stmt = self._parse_assign()
            self._expect_op(";")
            return [stmt]
        raise self._error(f"unexpected token {tok.value or 'end of file'!r}")

    def _parse_assign(self) -> Assign:
        name_tok = self._advance()
        if name_tok.kind != "ident":
            raise self._error("expected a variable name")
        self._expect_op("=")
        expr = self.parse_expression()
        return Assign(name=name_tok.value, expr=expr, line=name_tok.line)

    def _parse_block(self) -> tuple[Stmt, ...]:
        self._expect_op("{")
        body: list[Stmt] = []
        while not self._at_op("}"):
            if self.current.kind == "eof":
                raise self._error("unterminated block; expected '}'")
            body.extend(self.parse_statement())
        self._expect_op("}")
        return tuple(body)

    def _parse_if(self) -> If:
        tok = self._advance()
        self._expect_op("(")
        cond = self.parse_expression()
        self._expect_op(")")
        then_body = self._parse_block()
        else_body: tuple[Stmt, ...] = ()
        if self._at_kw("else"):
            self._advance()
            if self._at_kw("if"):
                else_body = (self._parse_if(),)
            else:
                else_body = self._parse_block()
        return If(cond=cond, then_body=then_body, else_body=else_body, line=tok.line)

    def _parse_while(self) -> While:
        tok = self._advance()
        self._expect_op("(")
        cond = self.parse_expression()
        self._expect_op(")")
        body = self._parse_block()
        return While(cond=cond, body=body, line=tok.line)

    def _parse_for(self) -> list[Stmt]:
        # for (init; cond; update) { body }  =>  init; while (cond) { body; update }
        tok = self._advance()
        self._expect_op("(")
        init: Assign | None = None
        if not self._at_op(";"):
            init = self._parse_assign()
        self._expect_op(";")
        cond = self.parse_expression()
        self._expect_op(";")
        update: Assign | None = None
        if not self._at_op(")"):
            update = self._parse_assign()
        self._expect_op(")")
        body = self._parse_block()
        loop_body = body + ((update,) if update is not None else ())
        loop = While(cond=cond, body=loop_body, line=tok.line)
        return ([init] if init is not None else []) + [loop]

    def _parse_return(self) -> Return:
        tok = self._advance()
        expr: Expr | None = None
        if not self._at_op(";"):
            expr = self.parse_expression()
        self._expect_op(";")
        return Return(expr=expr, line=tok.line)

    def _parse_print(self) -> Print:
        tok = self._advance()
        self._expect_op("(")
        args: list[Expr] = [self.parse_expression()]
        while self._at_op(","):
            self._advance()
            args.append(self.parse_expression())
        self._expect_op(")")
        self._expect_op(";")
        return Print(args=tuple(args), line=tok.line)

    def parse_expression(self) -> Expr:
        left = self._parse_additive()
        if self.current.kind == "op" and self.current.value in _CMP_OPS:
            op = _CMP_OPS[self._advance().value]
            right = self._parse_additive()
            return BinaryOp(op=op, left=left, right=right)
        return left

    def _parse_additive(self) -> Expr:
        left = self._parse_term()
        while self.current.kind == "op" and self.current.value in _ADD_OPS:
            op = _ADD_OPS[self._advance().value]
            left = BinaryOp(op=op, left=left, right=self._parse_term())
        return left

    def _parse_term(self) -> Expr:
        left = self._parse_unary()
        while self.current.kind == "op" and self.current.value in _MUL_OPS:
            op = _MUL_OPS[self._advance().value]
            left = BinaryOp(op=op, left=left, right=self._parse_unary())
        return left

    def _parse_unary(self) -> Expr:
        if self._at_op("-"):
            self._advance()
            return Negate(operand=self._parse_unary())
        return self._parse_primary()

    def _parse_primary(self) -> Expr:
        tok = self.current
        if tok.kind == "int":
            self._advance()
            return IntLit(value=int(tok.value))
        if tok.kind == "kw" and tok.value in ("true", "false"):
            self._advance()
            return BoolLit(value=tok.value == "true")
        if tok.kind == "ident":
            self._advance()
            return Name(ident=tok.value)
        if self._at_op("("):
            self._advance()
            expr = self.parse_expression()
            self._expect_op(")")
            return expr
        raise self._error(f"expected an expression, found {tok.value or 'end of file'!r}")


def parse_program(text: str) -> Program:
    """Parse mini-language source into a program AST.

    ``for`` statements are desugared during parsing, so the AST contains
    only While loops.
    """
    return _Parser(_tokenize(text)).parse_program()
