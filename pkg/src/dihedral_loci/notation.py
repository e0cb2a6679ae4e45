"""Parse the LaTeX-flavoured element words used in the tables.

Words are products of ``e``, ``x``, ``y`` with optional exponents, e.g.
``yx^{m-2}``, ``x^my``, ``yx^{\\frac{m^2-1}{2}}``.  Exponents are integer
expressions in ``m``, ``n``, ``h`` evaluated with floor division.
"""

from __future__ import annotations

import ast
import operator
import re

from .groups import FiniteGroup, GroupElement, GroupError

_OPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Pow: operator.pow,
}


def eval_exponent(text: str, env: dict[str, int]) -> int:
    expr = text.strip()
    expr = re.sub(r"\\frac\{([^{}]*)\}\{([^{}]*)\}", r"((\1)//(\2))", expr)
    expr = expr.replace("^", "**").replace("{", "(").replace("}", ")")
    # implicit products such as 2m
    expr = re.sub(r"(\d)([a-z(])", r"\1*\2", expr)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise GroupError(f"exponent uses undefined symbol {node.id!r}")
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise GroupError(f"unsupported exponent {text!r}")

    return ev(ast.parse(expr, mode="eval"))


def _read_exponent(word: str, pos: int) -> tuple[str, int]:
    if pos < len(word) and word[pos] == "{":
        depth, end = 0, pos
        while end < len(word):
            if word[end] == "{":
                depth += 1
            elif word[end] == "}":
                depth -= 1
                if depth == 0:
                    break
            end += 1
        return word[pos + 1:end], end + 1
    if pos < len(word) and word[pos] == "-":
        match = re.match(r"-\d+", word[pos:])
        return match.group(0), pos + len(match.group(0))
    match = re.match(r"\d+|[a-z]", word[pos:])
    if match is None:
        raise GroupError(f"missing exponent in {word!r}")
    return match.group(0), pos + len(match.group(0))


def dihedral_word(word: str, n: int, env: dict[str, int] | None = None) -> tuple[int, int]:
    """Evaluate a word in x, y to normal-form exponents ``(k, l)`` of ``y^k x^l`` in D_n."""
    env = dict(env or {})
    env.setdefault("n", n)
    if n % 2 == 0:
        env.setdefault("m", n // 2)
    if n % 4 == 0:
        env.setdefault("h", n // 4)
    k, l = 0, 0
    text = word.replace(" ", "").replace("$", "")
    pos = 0
    while pos < len(text):
        ch = text[pos]
        pos += 1
        if ch == "e":
            continue
        if ch not in "xy":
            raise GroupError(f"unexpected symbol {ch!r} in {word!r}")
        power = 1
        if pos < len(text) and text[pos] == "^":
            expo, pos = _read_exponent(text, pos + 1)
            power = eval_exponent(expo, env)
        if ch == "x":
            l = (l + power) % n
        elif power % 2:
            # x^l y = y x^-l
            k, l = k ^ 1, (-l) % n
    return k, l


def _split_top(text: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _balanced(text: str) -> bool:
    depth = 0
    for ch in text:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def parse_element(text: str, group: FiniteGroup) -> GroupElement:
    """``"(yx^m,1)"`` or a bare word (extension coordinate 0)."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")") and "," in body:
        word, s = _split_top(body[1:-1])
        k, l = dihedral_word(word, group.n)
        return group.element(k, l, int(s))
    k, l = dihedral_word(body, group.n)
    return group.element(k, l, 0)


def parse_vector(text: str, group: FiniteGroup) -> tuple[list[tuple[GroupElement, GroupElement]], list[GroupElement]]:
    """Parse ``"((y,1),(yx,1),...)"`` or ``"(a,b;c,d,...)"``.

    Returns ``(handles, branches)``; handle pairs come from the part before ``;``.
    """
    body = text.strip().replace("$", "")
    # drop the outer pair of parentheses only; element pairs keep theirs
    if body.startswith("(") and body.endswith(")") and _balanced(body[1:-1]):
        body = body[1:-1]
    if ";" in body:
        head, tail = body.split(";", 1)
        hs = [parse_element(t, group) for t in _split_top(head) if t]
        if len(hs) % 2:
            raise GroupError(f"odd number of handle entries in {text!r}")
        handles = [(hs[i], hs[i + 1]) for i in range(0, len(hs), 2)]
        branches = [parse_element(t, group) for t in _split_top(tail) if t]
        return handles, branches
    return [], [parse_element(t, group) for t in _split_top(body) if t]


def format_word(k: int, l: int) -> str:
    """Inverse of :func:`dihedral_word` on normal forms: ``(1, 3) -> "yx^3"``."""
    rot = "" if l == 0 else ("x" if l == 1 else f"x^{l}")
    word = ("y" if k else "") + rot
    return word or "e"


def format_element(coords: tuple[int, int, int], with_ext: bool = True) -> str:
    """``(1, 3, 1) -> "(yx^3,1)"``; bare word when ``with_ext`` is false."""
    word = format_word(coords[0], coords[1])
    return f"({word},{coords[2]})" if with_ext else word
