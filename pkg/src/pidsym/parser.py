"""Line-oriented text format for t-nets.

::

    net <name>
    place <id> GEN                 # the generator place
    place <id> (P|D)(,(P|D))*      # ordinary places
    init <place> { <tuple>; ... }
    trans <id>
      guard <expr>                 # optional, defaults to true
      in  <place> { <pattern-tuple>; ... }
      out <place> { <expr-tuple>; ... }
    end

Lowercase identifiers are variables, ALL-CAPS identifiers are symbol
literals, integers are data.  Arc expressions may add constants to data
variables (``c+2``) and, on generator output arcs, build child pids
(``p.(c+1)``).  Guards conjoin comparisons with ``and``; the pid
operators are ``=  <1  <<  #1  ##`` and the data operators ``==  <``.

Init tuples are typed by the place signature: at a P position a dotted
literal like ``1.2`` (or a bare integer) denotes a pid, at a D position
integers and symbols are data.  The generator place defaults to the
standard initial token ``(1, 0)`` when no init line is given.

Comments: a ``#`` opens a comment at the start of a line or when
surrounded by whitespace, so the guard operators ``#1`` and ``##``
always bind to their operands.
"""

from __future__ import annotations

import re

from .net import (
    Add,
    And,
    BoolLit,
    ChildOf,
    Cmp,
    Lit,
    Marking,
    PlaceDecl,
    TNet,
    Transition,
    Var,
    Violation,
    token_str,
    validate,
)
from .pid import Pid

__all__ = ["parse_model", "parse_marking", "print_model", "ModelSyntaxError", "ModelValidationError"]


class ModelSyntaxError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ModelValidationError(ValueError):
    def __init__(self, violations: tuple[Violation, ...]):
        super().__init__("; ".join(str(v) for v in violations))
        self.violations = violations


_VAR = re.compile(r"^[a-z][a-z0-9_]*$")
_SYM = re.compile(r"^[A-Z][A-Z0-9_]*$")
_INT = re.compile(r"^-?\d+$")
_ADD = re.compile(r"^([a-z][a-z0-9_]*)\s*\+\s*(\d+)$")
_CHILD = re.compile(r"^([a-z][a-z0-9_]*)\s*\.\s*\(\s*([a-z][a-z0-9_]*)\s*\+\s*(\d+)\s*\)$")
_PID = re.compile(r"^\d+(\.\d+)*$")
_NAME = re.compile(r"^[a-zA-Z][a-zA-Z0-9_]*$")
_GUARD_OPS = ("==", "<<", "<1", "<", "#1", "##", "=")


def _strip_comment(line: str) -> str:
    if re.match(r"^\s*#", line):
        return ""
    m = re.search(r"\s#(\s|$)", line)
    return line[: m.start()] if m else line


def _split_tuples(body: str, line_no: int) -> list[list[str]]:
    body = body.strip()
    if not body:
        return []
    out = []
    for part in body.split(";"):
        part = part.strip()
        if not (part.startswith("(") and part.endswith(")")):
            raise ModelSyntaxError(line_no, f"expected a parenthesised tuple, got {part!r}")
        inner = part[1:-1].strip()
        out.append([c.strip() for c in inner.split(",")] if inner else [])
    return out


def _parse_pattern_elem(text: str, line_no: int):
    if _VAR.match(text):
        return Var(text)
    if _INT.match(text):
        return Lit(int(text))
    if _SYM.match(text):
        return Lit(text)
    raise ModelSyntaxError(line_no, f"bad pattern element {text!r} (variable, integer or SYMBOL)")


def _parse_expr_elem(text: str, line_no: int):
    m = _CHILD.match(text)
    if m:
        return ChildOf(Var(m.group(1)), Var(m.group(2)), int(m.group(3)))
    m = _ADD.match(text)
    if m:
        k = int(m.group(2))
        return Add(Var(m.group(1)), k) if k else Var(m.group(1))
    return _parse_pattern_elem(text, line_no)


def _parse_init_elem(text: str, kind: str, line_no: int):
    if kind == "P":
        if _PID.match(text):
            return Pid(int(a) for a in text.split("."))
        raise ModelSyntaxError(line_no, f"expected a pid like 1.2 at a P position, got {text!r}")
    if _INT.match(text):
        return int(text)
    if _SYM.match(text):
        return text
    raise ModelSyntaxError(line_no, f"expected an integer or SYMBOL at a D position, got {text!r}")


def _parse_guard(text: str, line_no: int):
    text = text.strip()
    if text == "true":
        return BoolLit(True)
    atoms = []
    for chunk in re.split(r"\band\b", text):
        chunk = chunk.strip()
        for op in _GUARD_OPS:
            pos = chunk.find(f" {op} ") if f" {op} " in chunk else -1
            if pos >= 0:
                lhs = _parse_expr_elem(chunk[:pos].strip(), line_no)
                rhs = _parse_expr_elem(chunk[pos + len(op) + 2:].strip(), line_no)
                atoms.append(Cmp(op, lhs, rhs))
                break
        else:
            raise ModelSyntaxError(line_no, f"cannot parse guard atom {chunk!r}")
    return atoms[0] if len(atoms) == 1 else And(tuple(atoms))


def parse_model(text: str) -> TNet:
    """Parse and validate; raises ModelSyntaxError or ModelValidationError."""
    name = None
    places: list[PlaceDecl] = []
    init_lines: list[tuple[int, str, str]] = []
    transitions: list[Transition] = []

    cur_name = None
    cur_guard = BoolLit(True)
    cur_in: list[tuple[str, tuple]] = []
    cur_out: list[tuple[str, tuple]] = []

    def end_trans(line_no: int):
        nonlocal cur_name, cur_guard, cur_in, cur_out
        transitions.append(
            Transition(name=cur_name, guard=cur_guard, inputs=tuple(cur_in), outputs=tuple(cur_out))
        )
        cur_name, cur_guard, cur_in, cur_out = None, BoolLit(True), [], []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()

        if word == "net":
            if name is not None:
                raise ModelSyntaxError(line_no, "duplicate net line")
            if not _NAME.match(rest):
                raise ModelSyntaxError(line_no, f"bad net name {rest!r}")
            name = rest
        elif word == "place":
            if cur_name is not None:
                raise ModelSyntaxError(line_no, "place declared inside a transition")
            parts = rest.split()
            if len(parts) != 2 or not _NAME.match(parts[0]):
                raise ModelSyntaxError(line_no, f"expected 'place <id> GEN|P,D,...', got {rest!r}")
            pname, sig_text = parts
            if sig_text == "GEN":
                places.append(PlaceDecl(pname, ("P", "D"), generator=True))
            else:
                sig = tuple(s.strip() for s in sig_text.split(","))
                if not sig or any(s not in ("P", "D") for s in sig):
                    raise ModelSyntaxError(line_no, f"bad type signature {sig_text!r}")
                places.append(PlaceDecl(pname, sig))
        elif word == "init":
            m = re.match(r"^([a-zA-Z][a-zA-Z0-9_]*)\s*\{(.*)\}\s*$", rest)
            if not m:
                raise ModelSyntaxError(line_no, f"expected 'init <place> {{ ... }}', got {rest!r}")
            init_lines.append((line_no, m.group(1), m.group(2)))
        elif word == "trans":
            if cur_name is not None:
                raise ModelSyntaxError(line_no, f"transition {cur_name!r} not closed with 'end'")
            if not _NAME.match(rest):
                raise ModelSyntaxError(line_no, f"bad transition name {rest!r}")
            cur_name = rest
        elif word == "guard":
            if cur_name is None:
                raise ModelSyntaxError(line_no, "guard outside a transition")
            cur_guard = _parse_guard(rest, line_no)
        elif word in ("in", "out"):
            if cur_name is None:
                raise ModelSyntaxError(line_no, f"{word} arc outside a transition")
            m = re.match(r"^([a-zA-Z][a-zA-Z0-9_]*)\s*\{(.*)\}\s*$", rest)
            if not m:
                raise ModelSyntaxError(line_no, f"expected '{word} <place> {{ ... }}', got {rest!r}")
            pname, body = m.group(1), m.group(2)
            parse_elem = _parse_pattern_elem if word == "in" else _parse_expr_elem
            tuples = tuple(
                tuple(parse_elem(elem, line_no) for elem in tup) for tup in _split_tuples(body, line_no)
            )
            (cur_in if word == "in" else cur_out).append((pname, tuples))
        elif word == "end":
            if cur_name is None:
                raise ModelSyntaxError(line_no, "'end' outside a transition")
            end_trans(line_no)
        else:
            raise ModelSyntaxError(line_no, f"unknown directive {word!r}")

    if cur_name is not None:
        raise ModelSyntaxError(len(text.splitlines()), f"transition {cur_name!r} not closed with 'end'")
    if name is None:
        raise ModelSyntaxError(1, "missing 'net <name>' line")
    if not places:
        raise ModelSyntaxError(1, "net declares no places")

    decls = {p.name: p for p in places}
    init: dict[str, list[tuple]] = {}
    for line_no, pname, body in init_lines:
        if pname not in decls:
            raise ModelSyntaxError(line_no, f"init for unknown place {pname!r}")
        sig = decls[pname].sig
        for tup in _split_tuples(body, line_no):
            if len(tup) != len(sig):
                raise ModelSyntaxError(line_no, f"init tuple {tup} does not match arity {len(sig)}")
            init.setdefault(pname, []).append(
                tuple(_parse_init_elem(elem, kind, line_no) for elem, kind in zip(tup, sig))
            )

    generators = [p.name for p in places if p.generator]
    if len(generators) == 1 and generators[0] not in init:
        init[generators[0]] = [(Pid((1,)), 0)]

    net = TNet(name=name, places=tuple(places), transitions=tuple(transitions), init=Marking(init))
    violations = validate(net)
    if violations:
        raise ModelValidationError(tuple(violations))
    return net


def parse_marking(text: str, net: TNet) -> Marking:
    """Parse a marking file: lines ``<place> { <tuple>; ... }``, typed by the net."""
    decls = {p.name: p for p in net.places}
    data: dict[str, list[tuple]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        m = re.match(r"^(?:init\s+)?([a-zA-Z][a-zA-Z0-9_]*)\s*\{(.*)\}\s*$", line)
        if not m:
            raise ModelSyntaxError(line_no, f"expected '<place> {{ ... }}', got {line!r}")
        pname, body = m.group(1), m.group(2)
        if pname not in decls:
            raise ModelSyntaxError(line_no, f"unknown place {pname!r}")
        sig = decls[pname].sig
        for tup in _split_tuples(body, line_no):
            if len(tup) != len(sig):
                raise ModelSyntaxError(line_no, f"tuple {tup} does not match arity {len(sig)}")
            data.setdefault(pname, []).append(
                tuple(_parse_init_elem(elem, kind, line_no) for elem, kind in zip(tup, sig))
            )
    return Marking(data)


def _elem_str(e) -> str:
    return str(e)


def print_model(net: TNet) -> str:
    """Pretty-print a net in the parsed format; parsing it back gives an equal net."""
    lines = [f"net {net.name}"]
    for p in net.places:
        lines.append(f"place {p.name} {'GEN' if p.generator else ','.join(p.sig)}")
    for pname, toks in net.init.items():
        body = "; ".join(token_str(t) for t in toks)
        lines.append(f"init {pname} {{ {body} }}")
    for t in net.transitions:
        lines.append(f"trans {t.name}")
        if t.guard != BoolLit(True):
            lines.append(f"  guard {t.guard}")
        for pname, pats in t.inputs:
            body = "; ".join("(" + ", ".join(_elem_str(c) for c in tup) + ")" for tup in pats)
            lines.append(f"  in {pname} {{ {body} }}")
        for pname, exprs in t.outputs:
            body = "; ".join("(" + ", ".join(_elem_str(c) for c in tup) + ")" for tup in exprs)
            lines.append(f"  out {pname} {{ {body} }}")
        lines.append("end")
    return "\n".join(lines) + "\n"
