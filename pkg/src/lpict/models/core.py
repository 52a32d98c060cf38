"""Protocol models and environment semantics.

A model bundles a guarded transition system with two execution environments:
the ideal one (no attacker; every event happens as designed) and the
non-ideal one (a symbolic attacker with a set of capabilities). An attacker
capability falsifies exactly the events that do not carry the matching
resistance tag.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from ..errors import MissingEnvironmentError, ValidationError
from ..guarded import GuardedLTS, ResistTag

IDEAL = "ideal"
NONIDEAL = "nonideal"


class AttackerCapability(Enum):
    REPLAY = "replay"
    MITM = "mitm"
    EAVESDROP = "eavesdrop"
    TAMPER = "tamper"
    IMPERSONATE = "impersonate"


# Which resistance tag blocks each capability.
CAPABILITY_COUNTERS: dict[AttackerCapability, ResistTag] = {
    AttackerCapability.REPLAY: ResistTag.REPLAY,
    AttackerCapability.MITM: ResistTag.MITM,
    AttackerCapability.EAVESDROP: ResistTag.CONFIDENTIALITY,
    AttackerCapability.TAMPER: ResistTag.INTEGRITY,
    AttackerCapability.IMPERSONATE: ResistTag.IDENTITY_AUTH,
}


@dataclass(frozen=True)
class EnvironmentConfig:
    kind: str
    attackers: frozenset[AttackerCapability] = frozenset()

    def __post_init__(self):
        if self.kind not in (IDEAL, NONIDEAL):
            raise ValidationError(f"unknown environment kind {self.kind!r}")
        if self.kind == IDEAL and self.attackers:
            raise ValidationError("the ideal environment admits no attackers")


@dataclass(frozen=True)
class ProtocolModel:
    name: str
    lts: GuardedLTS
    environments: tuple[EnvironmentConfig, ...]

    def __post_init__(self):
        kinds = [e.kind for e in self.environments]
        if len(set(kinds)) != len(kinds):
            raise ValidationError("duplicate environment declaration")

    def environment(self, kind: str) -> EnvironmentConfig:
        for env in self.environments:
            if env.kind == kind:
                return env
        raise MissingEnvironmentError(f"model {self.name!r} declares no {kind!r} environment")

    def has_environment(self, kind: str) -> bool:
        return any(env.kind == kind for env in self.environments)


@dataclass(frozen=True)
class EventAssignment:
    """Per-state truth value of every declared event."""

    values: tuple[tuple[str, tuple[tuple[str, bool], ...]], ...]

    def value(self, state_id: str, event_name: str) -> bool:
        return dict(self.valuation(state_id))[event_name]

    def valuation(self, state_id: str) -> dict[str, bool]:
        for sid, events in self.values:
            if sid == state_id:
                return dict(events)
        raise KeyError(state_id)


def apply_environment(model: ProtocolModel, env: EnvironmentConfig) -> EventAssignment:
    """Resolve every event to a boolean under the environment.

    Ideal: everything true. Non-ideal: an event is false iff some attacker
    capability is not countered by one of the event's resistance tags.
    """
    if env not in model.environments:
        raise ValidationError(f"environment {env.kind!r} does not belong to model {model.name!r}")
    broken = {CAPABILITY_COUNTERS[cap] for cap in env.attackers}
    rows = []
    for state in model.lts.states:
        rows.append(
            (
                state.id,
                tuple(
                    (e.name, not bool(broken - e.resists)) for e in state.events
                ),
            )
        )
    return EventAssignment(tuple(rows))


def with_attackers(model: ProtocolModel, attackers) -> ProtocolModel:
    """A copy of the model whose non-ideal environment has these attackers."""
    caps = frozenset(
        a if isinstance(a, AttackerCapability) else AttackerCapability(a) for a in attackers
    )
    envs = []
    replaced = False
    for env in model.environments:
        if env.kind == NONIDEAL:
            envs.append(EnvironmentConfig(NONIDEAL, caps))
            replaced = True
        else:
            envs.append(env)
    if not replaced:
        envs.append(EnvironmentConfig(NONIDEAL, caps))
    return replace(model, environments=tuple(envs))
