"""Build dependence graphs from mini-language ASTs.

One vertex per statement or predicate plus a distinguished entry vertex.
Vertex labels are normalized operation shapes ("assign:mul",
"predicate:leq", "call:print", ...) that deliberately exclude variable
names, literal values, and loop syntax, so structurally equivalent code
written with different identifiers or loop forms yields isomorphic graphs.

Control dependence is derived from the AST nesting (the entry vertex
governs top-level statements; each predicate governs the statements of its
branches), which is equivalent to post-dominator-based control dependence
for this structured language.  Data dependence comes from reaching
definitions over the control-flow graph: an assignment has a data edge to
every vertex that may read its value.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from semclone.pdg.graph import DependenceGraph, Edge, EdgeKind, Vertex
from semclone.pdg import minilang as ml


def _expr_shape(expr: ml.Expr) -> str:
    if isinstance(expr, (ml.IntLit, ml.BoolLit)):
        return "const"
    if isinstance(expr, ml.Name):
        return "var"
    if isinstance(expr, ml.Negate):
        return "neg"
    return expr.op


def _expr_vars(expr: ml.Expr) -> set[str]:
    if isinstance(expr, ml.Name):
        return {expr.ident}
    if isinstance(expr, ml.Negate):
        return _expr_vars(expr.operand)
    if isinstance(expr, ml.BinaryOp):
        return _expr_vars(expr.left) | _expr_vars(expr.right)
    return set()


@dataclass
class _Node:
    vid: int
    label: str
    line: int
    defines: str | None
    uses: set[str]
    successors: list[int] = field(default_factory=list)


@dataclass
class _Builder:
    file_id: str
    nodes: list[_Node] = field(default_factory=list)
    control: list[tuple[int, int]] = field(default_factory=list)

    def new_node(
        self, label: str, line: int, controller: int, defines: str | None, uses: set[str]
    ) -> _Node:
        node = _Node(vid=len(self.nodes), label=label, line=line, defines=defines, uses=uses)
        self.nodes.append(node)
        self.control.append((controller, node.vid))
        return node

    def visit_body(
        self, stmts: tuple[ml.Stmt, ...], controller: int
    ) -> tuple[int | None, list[int]]:
        """Wire a statement sequence into the CFG.

        Returns (first vertex id, open exits that fall through to whatever
        comes next).  A ``return`` contributes no exits.
        """
        first: int | None = None
        open_exits: list[int] = []
        for stmt in stmts:
            entry_vid, exits = self.visit_stmt(stmt, controller)
            if first is None:
                first = entry_vid
            for vid in open_exits:
                self.nodes[vid].successors.append(entry_vid)
            open_exits = exits
        return first, open_exits

    def visit_stmt(self, stmt: ml.Stmt, controller: int) -> tuple[int, list[int]]:
        if isinstance(stmt, ml.Assign):
            node = self.new_node(
                f"assign:{_expr_shape(stmt.expr)}",
                stmt.line,
                controller,
                defines=stmt.name,
                uses=_expr_vars(stmt.expr),
            )
            return node.vid, [node.vid]
        if isinstance(stmt, ml.Print):
            uses: set[str] = set()
            for arg in stmt.args:
                uses |= _expr_vars(arg)
            node = self.new_node("call:print", stmt.line, controller, None, uses)
            return node.vid, [node.vid]
        if isinstance(stmt, ml.Return):
            uses = _expr_vars(stmt.expr) if stmt.expr is not None else set()
            shape = _expr_shape(stmt.expr) if stmt.expr is not None else "void"
            node = self.new_node(f"return:{shape}", stmt.line, controller, None, uses)
            return node.vid, []  # no fallthrough
        if isinstance(stmt, ml.If):
            pred = self.new_node(
                f"predicate:{_expr_shape(stmt.cond)}",
                stmt.line,
                controller,
                None,
                _expr_vars(stmt.cond),
            )
            exits: list[int] = []
            then_first, then_exits = self.visit_body(stmt.then_body, pred.vid)
            if then_first is not None:
                pred.successors.append(then_first)
                exits.extend(then_exits)
            else:
                exits.append(pred.vid)
            if stmt.else_body:
                else_first, else_exits = self.visit_body(stmt.else_body, pred.vid)
                if else_first is not None:
                    pred.successors.append(else_first)
                    exits.extend(else_exits)
                else:
                    exits.append(pred.vid)
            else:
                exits.append(pred.vid)  # condition false falls through
            return pred.vid, exits
        if isinstance(stmt, ml.While):
            pred = self.new_node(
                f"predicate:{_expr_shape(stmt.cond)}",
                stmt.line,
                controller,
                None,
                _expr_vars(stmt.cond),
            )
            body_first, body_exits = self.visit_body(stmt.body, pred.vid)
            if body_first is not None:
                pred.successors.append(body_first)
                for vid in body_exits:
                    self.nodes[vid].successors.append(pred.vid)
            return pred.vid, [pred.vid]  # loop exit
        raise TypeError(f"unknown statement type {type(stmt).__name__}")


def build_pdg(program: ml.Program, file_id: str) -> DependenceGraph:
    """Build the dependence graph of a program, attributed to ``file_id``."""
    builder = _Builder(file_id=file_id)
    entry = _Node(vid=0, label="entry", line=0, defines=None, uses=set())
    builder.nodes.append(entry)
    builder.visit_body(program.body, controller=0)

    data_edges = _reaching_definition_edges(builder.nodes)

    vertices = [Vertex(id=0, label="entry", attrs={"file_id": file_id})]
    for node in builder.nodes[1:]:
        vertices.append(
            Vertex(
                id=node.vid,
                label=node.label,
                attrs={
                    "file_id": file_id,
                    "start_line": node.line,
                    "end_line": node.line,
                },
            )
        )
    edges = [
        Edge(src=src, targ=targ, kind=EdgeKind.CONTROL)
        for src, targ in builder.control
        if src != targ
    ]
    edges.extend(Edge(src=s, targ=t, kind=EdgeKind.DATA) for s, t in data_edges)
    return DependenceGraph(vertices=vertices, edges=edges)


def _reaching_definition_edges(nodes: list[_Node]) -> list[tuple[int, int]]:
    """Def-use chains: iterate reaching definitions over the CFG to a fixed
    point, then connect each definition to the uses it reaches."""
    if len(nodes) <= 1:
        return []
    preds: dict[int, list[int]] = {node.vid: [] for node in nodes}
    for node in nodes:
        for succ in node.successors:
            preds[succ].append(node.vid)
    # The entry vertex is not part of the CFG; flow starts at the first
    # statement vertex, which simply has no predecessors.
    reach_in: dict[int, set[tuple[int, str]]] = {node.vid: set() for node in nodes}
    reach_out: dict[int, set[tuple[int, str]]] = {node.vid: set() for node in nodes}
    changed = True
    while changed:
        changed = False
        for node in nodes[1:]:
            incoming: set[tuple[int, str]] = set()
            for p in preds[node.vid]:
                incoming |= reach_out[p]
            if incoming != reach_in[node.vid]:
                reach_in[node.vid] = incoming
                changed = True
            if node.defines is not None:
                outgoing = {(d, v) for d, v in incoming if v != node.defines}
                outgoing.add((node.vid, node.defines))
            else:
                outgoing = incoming
            if outgoing != reach_out[node.vid]:
                reach_out[node.vid] = outgoing
                changed = True
    edges: set[tuple[int, int]] = set()
    for node in nodes[1:]:
        if not node.uses:
            continue
        for def_vid, var in reach_in[node.vid]:
            if var in node.uses:
                edges.add((def_vid, node.vid))
    return sorted(edges)
