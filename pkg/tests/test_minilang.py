from __future__ import annotations

import pytest

from semclone.errors import MiniSyntaxError
from semclone.pdg import minilang as ml


# Reference interpreter: the desugaring oracle runs programs and compares
# final variable states and printed output, independent of graph building.
def run_program(program: ml.Program):
    env: dict[str, int | bool] = {}
    printed: list[tuple] = []

    def ev(expr):
        if isinstance(expr, ml.IntLit):
            return expr.value
        if isinstance(expr, ml.BoolLit):
            return expr.value
        if isinstance(expr, ml.Name):
            return env[expr.ident]
        if isinstance(expr, ml.Negate):
            return -ev(expr.operand)
        left, right = ev(expr.left), ev(expr.right)
        op = expr.op
        if op == "add":
            return left + right
        if op == "sub":
            return left - right
        if op == "mul":
            return left * right
        if op == "div":
            return int(left / right)
        if op == "mod":
            return left % right
        return {
            "lt": left < right,
            "leq": left <= right,
            "gt": left > right,
            "geq": left >= right,
            "eq": left == right,
            "neq": left != right,
        }[op]

    class _Return(Exception):
        pass

    def ex(stmts):
        for stmt in stmts:
            if isinstance(stmt, ml.Assign):
                env[stmt.name] = ev(stmt.expr)
            elif isinstance(stmt, ml.Print):
                printed.append(tuple(ev(a) for a in stmt.args))
            elif isinstance(stmt, ml.Return):
                raise _Return
            elif isinstance(stmt, ml.If):
                ex(stmt.then_body if ev(stmt.cond) else stmt.else_body)
            elif isinstance(stmt, ml.While):
                while ev(stmt.cond):
                    ex(stmt.body)

    try:
        ex(program.body)
    except _Return:
        pass
    return env, printed


def test_smallest_program() -> None:
    program = ml.parse_program("x = 1;")
    assert program.body == (ml.Assign(name="x", expr=ml.IntLit(1), line=1),)


def test_for_desugars_to_init_plus_while() -> None:
    program = ml.parse_program("for (i = 1; i <= n; i = i + 1) { f = f * i; }")
    init, loop = program.body
    assert isinstance(init, ml.Assign) and init.name == "i"
    assert isinstance(loop, ml.While)
    assert [type(s) for s in loop.body] == [ml.Assign, ml.Assign]
    assert loop.body[-1].name == "i"  # update runs after the body


@pytest.mark.parametrize("n", range(6))
def test_desugared_for_behaves_like_manual_while(n: int) -> None:
    for_text = f"""
    n = {n};
    f = 1;
    for (i = 1; i <= n; i = i + 1) {{
      f = f * i;
    }}
    print(f);
    """
    while_text = f"""
    n = {n};
    f = 1;
    i = 1;
    while (i <= n) {{
      f = f * i;
      i = i + 1;
    }}
    print(f);
    """
    assert run_program(ml.parse_program(for_text)) == run_program(
        ml.parse_program(while_text)
    )


def test_nested_for_inside_if_desugars() -> None:
    text = "if (x > 0) { for (i = 0; i < 3; i = i + 1) { s = s + i; } }"
    (cond,) = ml.parse_program(text).body
    assert isinstance(cond, ml.If)
    assert [type(s) for s in cond.then_body] == [ml.Assign, ml.While]


def test_syntax_error_reports_position() -> None:
    with pytest.raises(MiniSyntaxError) as excinfo:
        ml.parse_program("while (")
    assert excinfo.value.line == 1


def test_unexpected_character() -> None:
    with pytest.raises(MiniSyntaxError):
        ml.parse_program("x = 1 @ 2;")


def test_comments_are_skipped() -> None:
    program = ml.parse_program("// note\n/* block */\nx = 2; // tail\n")
    assert len(program.body) == 1


def test_precedence_and_parentheses() -> None:
    env, _ = run_program(ml.parse_program("x = 2 + 3 * 4; y = (2 + 3) * 4;"))
    assert env == {"x": 14, "y": 20}


def test_if_else_and_comparison() -> None:
    env, printed = run_program(
        ml.parse_program("x = 5; if (x % 2 == 1) { y = 1; } else { y = 2; } print(y);")
    )
    assert env["y"] == 1
    assert printed == [(1,)]


def test_return_stops_execution() -> None:
    env, printed = run_program(ml.parse_program("x = 1; return x; x = 9; print(x);"))
    assert env["x"] == 1
    assert printed == []


def test_negation_and_booleans() -> None:
    env, _ = run_program(ml.parse_program("a = -3; b = true; c = 0 - -2;"))
    assert env == {"a": -3, "b": True, "c": 2}
