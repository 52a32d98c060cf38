"""Line-oriented model file format.

    protocol "TLS1.3"
    state S1 {
      event ClientHello resists mitm replay payload ClientHello Key_share
      event Key_share resists mitm replay payload ClientHello Key_share
      combine and                      # n-1 operators, left-deep
    }
    alias S3 = S1                      # same events and tree, new id
    transition S1 -> S3 action msg1    # optional: when <guard formula>
    initial S1
    terminal S3
    environment ideal
    environment nonideal attackers mitm replay

Comments run from `#` to end of line. Unknown keywords are errors. A state
with one event may omit `combine`; `combine expr <formula>` gives the event
tree explicitly (atoms and negated atoms joined with & and |), which is how
a tautology check such as `ApplicationData | !ApplicationData` is written.
The default transition guard is the source-state atom; the default action is
`source->target`.
"""

from __future__ import annotations

import re
from importlib import resources

from ..errors import ParseError, ValidationError
from ..guarded import (
    Event,
    EventMessage,
    Guard,
    GuardedTransition,
    ResistTag,
    StateNode,
    build_guarded_lts,
)
from ..logic.formulas import (
    And,
    Atom,
    Formula,
    Not,
    Or,
    format_formula,
    parse_formula,
)
from ..trees import EventLeaf, EventOp, EventTree, build_event_tree
from .core import IDEAL, NONIDEAL, AttackerCapability, EnvironmentConfig, ProtocolModel

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_RESIST_VALUES = {tag.value: tag for tag in ResistTag}
_CAPABILITY_VALUES = {cap.value: cap for cap in AttackerCapability}


def _tree_to_formula(tree: EventTree) -> Formula:
    if isinstance(tree, EventLeaf):
        atom: Formula = Atom(tree.name)
        return Not(atom) if tree.negated else atom
    ctor = And if tree.op == "and" else Or
    return ctor(_tree_to_formula(tree.left), _tree_to_formula(tree.right))


def _formula_to_tree(f: Formula, line: int) -> EventTree:
    if isinstance(f, Atom):
        return EventLeaf(f.name)
    if isinstance(f, Not) and isinstance(f.operand, Atom):
        return EventLeaf(f.operand.name, negated=True)
    if isinstance(f, (And, Or)):
        op = "and" if isinstance(f, And) else "or"
        return EventOp(op, _formula_to_tree(f.left, line), _formula_to_tree(f.right, line))
    raise ParseError("combine expressions allow only atoms, !, & and |", line=line)


def _strip_comment(raw: str) -> str:
    idx = raw.find("#")
    return raw if idx < 0 else raw[:idx]


class _ModelReader:
    def __init__(self, source: str):
        self.source = source
        self.protocol: str | None = None
        self.states: list[StateNode] = []
        self.by_id: dict[str, StateNode] = {}
        self.transitions: list[GuardedTransition] = []
        self.initial: str | None = None
        self.terminal: str | None = None
        self.environments: list[EnvironmentConfig] = []
        # open state block, if any
        self.block_id: str | None = None
        self.block_events: list[Event] = []
        self.block_combine: EventTree | None = None
        self.block_line = 0

    def fail(self, message: str, line: int):
        raise ParseError(message, line=line)

    def read(self) -> ProtocolModel:
        for lineno, raw in enumerate(self.source.splitlines(), start=1):
            text = _strip_comment(raw).strip()
            if not text:
                continue
            self.line(text, lineno)
        if self.block_id is not None:
            self.fail(f"state block {self.block_id!r} is never closed", self.block_line)
        if self.protocol is None:
            self.fail("missing protocol declaration", 1)
        if self.initial is None or self.terminal is None:
            self.fail("missing initial or terminal declaration", 1)
        try:
            lts = build_guarded_lts(self.states, self.transitions, self.initial, self.terminal)
            return ProtocolModel(self.protocol, lts, tuple(self.environments))
        except ValidationError:
            raise

    def line(self, text: str, lineno: int) -> None:
        words = text.split()
        key = words[0]
        if self.block_id is not None and key not in ("event", "combine", "}"):
            self.fail(f"unexpected {key!r} inside state block", lineno)
        handler = getattr(self, f"key_{key}", None) if key != "}" else self.key_close
        if handler is None:
            self.fail(f"unknown keyword {key!r}", lineno)
        handler(text, words, lineno)

    def key_protocol(self, text, words, lineno):
        m = re.match(r'protocol\s+"([^"]+)"\s*$', text)
        if m is None:
            self.fail('expected: protocol "<name>"', lineno)
        if self.protocol is not None:
            self.fail("duplicate protocol declaration", lineno)
        self.protocol = m.group(1)

    def key_state(self, text, words, lineno):
        inline_empty = len(words) == 4 and words[2] == "{" and words[3] == "}"
        if not inline_empty and (len(words) != 3 or words[2] != "{"):
            self.fail("expected: state <id> {", lineno)
        if not _IDENT_RE.match(words[1]):
            self.fail(f"bad state id {words[1]!r}", lineno)
        if inline_empty:
            self.add_state(StateNode(words[1], (), None), lineno)
            return
        self.block_id = words[1]
        self.block_events = []
        self.block_combine = None
        self.block_line = lineno

    def key_event(self, text, words, lineno):
        if self.block_id is None:
            self.fail("event outside a state block", lineno)
        if len(words) < 2:
            self.fail("expected: event <name> [resists ...] [payload ...]", lineno)
        name = words[1]
        rest = words[2:]
        resists: list[ResistTag] = []
        payload: list[str] = []
        mode = None
        for w in rest:
            if w == "resists":
                mode = "resists"
            elif w == "payload":
                mode = "payload"
            elif mode == "resists":
                tag = _RESIST_VALUES.get(w)
                if tag is None:
                    self.fail(f"unknown resist tag {w!r}", lineno)
                resists.append(tag)
            elif mode == "payload":
                payload.append(w)
            else:
                self.fail(f"unexpected token {w!r} in event declaration", lineno)
        self.block_events.append(
            Event(
                name,
                frozenset(resists),
                EventMessage(tuple(payload)) if payload else None,
            )
        )

    def key_combine(self, text, words, lineno):
        if self.block_id is None:
            self.fail("combine outside a state block", lineno)
        if self.block_combine is not None:
            self.fail("duplicate combine line", lineno)
        if len(words) >= 2 and words[1] == "expr":
            expr = text.split("expr", 1)[1].strip()
            try:
                self.block_combine = _formula_to_tree(parse_formula(expr), lineno)
            except ParseError as exc:
                self.fail(f"bad combine expression: {exc}", lineno)
            return
        ops = words[1:]
        bad = [op for op in ops if op not in ("and", "or")]
        if bad:
            self.fail(f"unknown operator {bad[0]!r} in combine", lineno)
        try:
            self.block_combine = build_event_tree(self.block_events, ops)
        except ValidationError as exc:
            self.fail(str(exc), lineno)

    def key_close(self, text, words, lineno):
        if self.block_id is None or text != "}":
            self.fail("unexpected '}'", lineno)
        events = tuple(self.block_events)
        combine = self.block_combine
        if combine is None and len(events) == 1:
            combine = EventLeaf(events[0].name)
        if combine is None and len(events) > 1:
            self.fail(f"state {self.block_id!r} needs a combine line", lineno)
        self.add_state(StateNode(self.block_id, events, combine), lineno)
        self.block_id = None

    def add_state(self, state: StateNode, lineno: int):
        if state.id in self.by_id:
            self.fail(f"duplicate state id {state.id!r}", lineno)
        self.states.append(state)
        self.by_id[state.id] = state

    def key_alias(self, text, words, lineno):
        if len(words) != 4 or words[2] != "=":
            self.fail("expected: alias <id> = <id>", lineno)
        target = self.by_id.get(words[3])
        if target is None:
            self.fail(f"alias target {words[3]!r} is not defined yet", lineno)
        self.add_state(StateNode(words[1], target.events, target.combine), lineno)

    def key_transition(self, text, words, lineno):
        if len(words) < 4 or words[2] != "->":
            self.fail("expected: transition <src> -> <dst> [action <name>] [when <formula>]", lineno)
        src, dst = words[1], words[3]
        action = f"{src}->{dst}"
        guard_formula: Formula = Atom(src)
        rest = words[4:]
        i = 0
        while i < len(rest):
            if rest[i] == "action":
                if i + 1 >= len(rest):
                    self.fail("action needs a name", lineno)
                action = rest[i + 1]
                i += 2
            elif rest[i] == "when":
                expr = text.split(" when ", 1)[1].strip()
                try:
                    guard_formula = parse_formula(expr)
                except ParseError as exc:
                    self.fail(f"bad guard: {exc}", lineno)
                break
            else:
                self.fail(f"unexpected token {rest[i]!r} in transition", lineno)
        self.transitions.append(GuardedTransition(src, action, dst, Guard(guard_formula)))

    def key_initial(self, text, words, lineno):
        if len(words) != 2:
            self.fail("expected: initial <id>", lineno)
        self.initial = words[1]

    def key_terminal(self, text, words, lineno):
        if len(words) != 2:
            self.fail("expected: terminal <id>", lineno)
        self.terminal = words[1]

    def key_environment(self, text, words, lineno):
        if len(words) < 2 or words[1] not in (IDEAL, NONIDEAL):
            self.fail("expected: environment ideal|nonideal [attackers ...]", lineno)
        kind = words[1]
        attackers: list[AttackerCapability] = []
        rest = words[2:]
        if rest:
            if rest[0] != "attackers":
                self.fail(f"unexpected token {rest[0]!r} in environment", lineno)
            for w in rest[1:]:
                cap = _CAPABILITY_VALUES.get(w)
                if cap is None:
                    self.fail(f"unknown attacker capability {w!r}", lineno)
                attackers.append(cap)
        try:
            self.environments.append(EnvironmentConfig(kind, frozenset(attackers)))
        except ValidationError as exc:
            self.fail(str(exc), lineno)


def load_model(source: str) -> ProtocolModel:
    """Parse a model file's text into a validated ProtocolModel."""
    return _ModelReader(source).read()


def _default_tree(state: StateNode) -> EventTree | None:
    """The tree `combine <ops>` (or a bare single leaf) would produce, used to
    decide whether rendering needs the explicit expr form."""
    if not state.events:
        return None
    ops = _left_deep_ops(state.combine, [e.name for e in state.events])
    if ops is None:
        return None
    return build_event_tree(state.events, ops)


def _left_deep_ops(tree: EventTree | None, names: list[str]) -> list[str] | None:
    leaves = []
    ops: list[str] = []
    node = tree
    while isinstance(node, EventOp):
        if isinstance(node.right, EventLeaf) and not node.right.negated:
            leaves.append(node.right.name)
            ops.append(node.op)
            node = node.left
        else:
            return None
    if not isinstance(node, EventLeaf) or node.negated:
        return None
    leaves.append(node.name)
    leaves.reverse()
    ops.reverse()
    return ops if leaves == names else None


def _render_state(state: StateNode, seen: dict) -> list[str]:
    key = (state.events, state.combine)
    if key in seen:
        return [f"alias {state.id} = {seen[key]}"]
    seen[key] = state.id
    lines = [f"state {state.id} {{"]
    for e in state.events:
        parts = [f"  event {e.name}"]
        if e.resists:
            parts.append("resists " + " ".join(sorted(t.value for t in e.resists)))
        if e.payload is not None:
            parts.append("payload " + " ".join(e.payload.items))
        lines.append(" ".join(parts))
    if state.events and state.combine != EventLeaf(state.events[0].name):
        if state.combine == _default_tree(state):
            ops = _left_deep_ops(state.combine, [e.name for e in state.events])
            lines.append("  combine " + " ".join(ops))
        else:
            lines.append("  combine expr " + format_formula(_tree_to_formula(state.combine)))
    lines.append("}")
    return lines


def render_model(model: ProtocolModel) -> str:
    """Canonical text for a model; load_model(render_model(m)) == m."""
    lines = [f'protocol "{model.name}"', ""]
    seen: dict = {}
    for state in model.lts.states:
        lines.extend(_render_state(state, seen))
    lines.append("")
    for t in model.lts.transitions:
        out = f"transition {t.source} -> {t.target}"
        if t.action != f"{t.source}->{t.target}":
            out += f" action {t.action}"
        if t.guard != Guard(Atom(t.source)):
            out += f" when {format_formula(t.guard.formula)}"
        lines.append(out)
    lines.append(f"initial {model.lts.initial}")
    lines.append(f"terminal {model.lts.terminal}")
    for env in model.environments:
        out = f"environment {env.kind}"
        if env.attackers:
            out += " attackers " + " ".join(sorted(c.value for c in env.attackers))
        lines.append(out)
    return "\n".join(lines) + "\n"


def bundled_model_text(name: str) -> str:
    """Text of a model file shipped with the package (tls13, dh)."""
    path = resources.files(__package__).joinpath("data").joinpath(f"{name}.model")
    return path.read_text(encoding="utf-8")
