"""Chain analysis of protocol models.

A model's states are laid out as a state tree and walked in transition
order. Each state's event tree is evaluated under the environment's event
assignment; the first state whose tree comes out false stops the walk with a
flawed verdict and the first false leaf (in breadth-first order) as the
failing event. When every state passes, two judgments decide the verdict:
the visited sequence must be a repeat-free linear extension of transition
reachability, and the terminal state must be derivable from the chain both
by forward implication elimination and by refutation. Comparing the ideal
and non-ideal runs is a substring match over the recorded trace symbols.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Sequence

from .errors import BranchingPathError, ValidationError
from .guarded import GuardedLTS
from .kmp import kmp_match
from .logic.formulas import Atom, Implies
from .logic.proofs import Proof, Sequent, check_proof
from .logic.search import search_contradiction, search_forward_chain
from .models.core import IDEAL, NONIDEAL, EventAssignment, ProtocolModel, apply_environment
from .trees import EventLeaf, StateTreeNode, bfs_traverse, eval_event_tree, event_leaves

SECURE = "secure"
FLAWED = "flawed"


@dataclass(frozen=True)
class TraceSymbol:
    """One analysed state: its event-tree outcome and the leaf outcomes in
    leaf order."""

    state: str
    value: bool
    event_values: tuple[bool, ...]

    def token(self) -> str:
        bits = "".join("1" if v else "0" for v in self.event_values)
        return f"{self.state}:{bits}"


@dataclass(frozen=True)
class Judgments:
    partial_order: bool
    entailment: bool
    matching: bool | None = None


@dataclass(frozen=True)
class AnalysisOutcome:
    verdict: str
    trace: tuple[TraceSymbol, ...]
    failing: tuple[str, str] | None
    judgments: Judgments

    @property
    def secure(self) -> bool:
        return self.verdict == SECURE


@dataclass(frozen=True)
class EntailmentResult:
    forward: Proof | None
    contradiction: Proof | None
    holds: bool


@dataclass(frozen=True)
class DualVerdict:
    ideal: AnalysisOutcome
    nonideal: AnalysisOutcome
    matched: bool
    secure: bool


def chain_states(lts: GuardedLTS) -> list[str]:
    """State ids along the single transition chain from initial to terminal."""
    order = [lts.initial]
    seen = {lts.initial}
    cur = lts.initial
    while cur != lts.terminal:
        outs = lts.outgoing(cur)
        if len(outs) > 1:
            raise BranchingPathError(f"state {cur!r} has {len(outs)} outgoing transitions")
        if not outs:
            raise BranchingPathError(f"chain breaks at {cur!r} before reaching the terminal")
        cur = outs[0].target
        if cur in seen:
            raise BranchingPathError(f"transition cycle through {cur!r}")
        seen.add(cur)
        order.append(cur)
    if lts.outgoing(cur):
        raise BranchingPathError(f"terminal state {cur!r} has outgoing transitions")
    return order


def build_state_tree(lts: GuardedLTS) -> StateTreeNode:
    """Right-spine tree in chain order; each spine node carries its state's
    event tree."""
    node: StateTreeNode | None = None
    for sid in reversed(chain_states(lts)):
        node = StateTreeNode(sid, lts.state(sid).combine, node)
    assert node is not None
    return node


def _first_false_leaf(tree, valuation) -> str:
    for node in bfs_traverse(tree):
        if isinstance(node, EventLeaf) and not eval_event_tree(node, valuation):
            return node.name
    raise ValidationError("no false leaf in a false tree")  # pragma: no cover


def _reachability(lts: GuardedLTS) -> dict[str, set[str]]:
    reach: dict[str, set[str]] = {s.id: set() for s in lts.states}
    for t in lts.transitions:
        reach[t.source].add(t.target)
    for mid in reach:
        for src in reach:
            if mid in reach[src]:
                reach[src] |= reach[mid]
    return reach


def partial_order_check(trace: Sequence, lts: GuardedLTS) -> bool:
    """The visited sequence is strictly increasing under the reflexive
    transitive closure of the transition relation: no repeats, every later
    state reachable from every earlier one, never the other way round."""
    ids = [sym.state if isinstance(sym, TraceSymbol) else sym for sym in trace]
    known = set(lts.state_ids)
    for sid in ids:
        if sid not in known:
            raise ValidationError(f"trace mentions unknown state {sid!r}")
    reach = _reachability(lts)
    for i, j in itertools.combinations(range(len(ids)), 2):
        a, b = ids[i], ids[j]
        if a == b or b not in reach[a] or a in reach[b]:
            return False
    return True


def entailment_sequent(lts: GuardedLTS) -> Sequent:
    """The chain encoded as a sequent: the initial state plus one implication
    per transition entail the terminal state."""
    for state in lts.states:
        if len(lts.outgoing(state.id)) > 1:
            raise BranchingPathError(
                f"state {state.id!r} has {len(lts.outgoing(state.id))} outgoing transitions"
            )
    premises = tuple(
        [Atom(lts.initial)]
        + [Implies(Atom(t.source), Atom(t.target)) for t in lts.transitions]
    )
    return Sequent(premises, Atom(lts.terminal))


def entailment_judgment(lts: GuardedLTS) -> EntailmentResult:
    """Encode the transitions as implications and derive the terminal state
    twice: forward and by contradiction. Holds when both proofs check; a
    broken chain simply yields no derivation."""
    sequent = entailment_sequent(lts)
    premises, goal = sequent.premises, sequent.conclusion
    forward = search_forward_chain(premises, goal)
    contradiction = search_contradiction(premises, goal)
    holds = (
        forward is not None
        and contradiction is not None
        and check_proof(sequent, forward).valid
        and check_proof(sequent, contradiction).valid
    )
    return EntailmentResult(forward, contradiction, holds)


def analyze_protocol(model: ProtocolModel, env) -> AnalysisOutcome:
    """Walk the state tree under the environment's event assignment.

    The two judgments are only established when every state's event tree
    evaluates true; a run stopped at a false tree reports them as not
    holding."""
    assignment: EventAssignment = apply_environment(model, env)
    lts = model.lts
    trace: list[TraceSymbol] = []
    node: StateTreeNode | None = build_state_tree(lts)
    while node is not None:
        if node.events is None:  # event-less terminal passes trivially
            trace.append(TraceSymbol(node.state, True, ()))
            node = node.next
            continue
        valuation = assignment.valuation(node.state)
        leaves = event_leaves(node.events)
        value = eval_event_tree(node.events, valuation)
        trace.append(
            TraceSymbol(
                node.state,
                value,
                tuple(eval_event_tree(leaf, valuation) for leaf in leaves),
            )
        )
        if not value:
            failing = (node.state, _first_false_leaf(node.events, valuation))
            return AnalysisOutcome(FLAWED, tuple(trace), failing, Judgments(False, False))
        node = node.next
    judgments = Judgments(
        partial_order=partial_order_check(trace, lts),
        entailment=entailment_judgment(lts).holds,
    )
    verdict = SECURE if judgments.partial_order and judgments.entailment else FLAWED
    return AnalysisOutcome(verdict, tuple(trace), None, judgments)


def dual_environment_verdict(model: ProtocolModel) -> DualVerdict:
    """Analyse under both environments and match the traces.

    Secure means: the ideal run is secure, the non-ideal trace matches it in
    full, and the non-ideal judgments hold."""
    ideal = analyze_protocol(model, model.environment(IDEAL))
    nonideal = analyze_protocol(model, model.environment(NONIDEAL))
    matched = (
        len(nonideal.trace) == len(ideal.trace)
        and kmp_match(nonideal.trace, ideal.trace, 1) is not None
    )
    secure = (
        ideal.secure
        and matched
        and nonideal.judgments.partial_order
        and nonideal.judgments.entailment
    )
    nonideal = replace(nonideal, judgments=replace(nonideal.judgments, matching=matched))
    return DualVerdict(ideal, nonideal, matched, secure)


def trace_line(trace: Sequence[TraceSymbol]) -> str:
    """Space-separated `state:bits` tokens; `(empty)` for an empty trace."""
    if not trace:
        return "(empty)"
    return " ".join(sym.token() for sym in trace)
