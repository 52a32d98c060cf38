"""Built-in protocol models.

The TLS 1.3 handshake chain runs S1 through S6 into S_end (seven states;
paired states share their event sets). Each state's events carry the
resistance tags of its row in the security association table, applied to
every event in the row; the payload message lists the fields exchanged at
that state, which is where Finished appears for the certificate states. The
terminal state's tree is the recorded tautology: ApplicationData or its
negation.

The Diffie-Hellman model is a four-state exchange whose tags encode the
protocol's known deficiencies: the public-value exchange resists neither
interception nor impersonation, and the opening nonce does not resist
replay.
"""

from __future__ import annotations

from ..guarded import (
    Event,
    EventMessage,
    Guard,
    GuardedTransition,
    ResistTag,
    StateNode,
    build_guarded_lts,
)
from ..logic.formulas import Atom
from ..trees import EventLeaf, EventOp, build_event_tree
from .core import IDEAL, NONIDEAL, AttackerCapability, EnvironmentConfig, ProtocolModel

_T = ResistTag

_HELLO_TAGS = frozenset(
    {_T.REPLAY, _T.MITM, _T.FORWARD_SECRECY, _T.INTEGRITY, _T.IDENTITY_AUTH, _T.SELECTION_SYNC}
)
_SERVER_TAGS = _HELLO_TAGS | {_T.CONFIDENTIALITY, _T.VERIFICATION}
_CERT_TAGS = frozenset({_T.REPLAY, _T.MITM, _T.IDENTITY_AUTH, _T.VERIFICATION})
_DATA_TAGS = frozenset({_T.REPLAY, _T.MITM, _T.VERIFICATION})

_CLIENT_HELLO_MSG = (
    "ClientHello",
    "Key_share",
    "Signature_algorithms",
    "Psk_key_exchange_modes",
    "Pre_shared_key",
)
_SERVER_MSG = (
    "ServerHello",
    "Key_share",
    "Pre_shared_key",
    "EncryptedExtensions",
    "CertificateRequest",
    "Certificate",
    "CertificateVerify",
    "Finished",
)
_CERT_MSG = ("Certificate", "CertificateVerify", "Finished")
_DATA_MSG = ("ApplicationData",)


def _events(names, tags, message) -> tuple[Event, ...]:
    payload = EventMessage(tuple(message))
    return tuple(Event(name, tags, payload) for name in names)


def _conjunctive_state(state_id, names, tags, message) -> StateNode:
    events = _events(names, tags, message)
    return StateNode(state_id, events, build_event_tree(events, ("and",) * (len(events) - 1)))


def _data_state(state_id: str) -> StateNode:
    # ApplicationData | !ApplicationData: the terminal check is a tautology.
    events = _events(_DATA_MSG, _DATA_TAGS, _DATA_MSG)
    tree = EventOp("or", EventLeaf("ApplicationData"), EventLeaf("ApplicationData", negated=True))
    return StateNode(state_id, events, tree)


def builtin_tls13() -> ProtocolModel:
    states = (
        _conjunctive_state("S1", _CLIENT_HELLO_MSG, _HELLO_TAGS, _CLIENT_HELLO_MSG),
        _conjunctive_state("S2", _SERVER_MSG, _SERVER_TAGS, _SERVER_MSG),
        _conjunctive_state("S3", _SERVER_MSG, _SERVER_TAGS, _SERVER_MSG),
        _conjunctive_state("S4", ("Certificate", "CertificateVerify"), _CERT_TAGS, _CERT_MSG),
        _conjunctive_state("S5", ("Certificate", "CertificateVerify"), _CERT_TAGS, _CERT_MSG),
        _data_state("S6"),
        _data_state("S_end"),
    )
    order = [s.id for s in states]
    transitions = tuple(
        GuardedTransition(a, f"msg{i + 1}", b, Guard(Atom(a)))
        for i, (a, b) in enumerate(zip(order, order[1:]))
    )
    lts = build_guarded_lts(states, transitions, "S1", "S_end")
    return ProtocolModel(
        "TLS1.3",
        lts,
        (
            EnvironmentConfig(IDEAL),
            EnvironmentConfig(
                NONIDEAL,
                frozenset({AttackerCapability.REPLAY, AttackerCapability.MITM}),
            ),
        ),
    )


def _single_event_state(state_id, name, tags) -> StateNode:
    events = (Event(name, tags, EventMessage((name,))),)
    return StateNode(state_id, events, EventLeaf(name))


def builtin_dh() -> ProtocolModel:
    states = (
        _single_event_state(
            "Init",
            "random_nonce",
            frozenset({_T.MITM, _T.IDENTITY_AUTH, _T.INTEGRITY, _T.CONFIDENTIALITY}),
        ),
        _single_event_state("ExchangeA", "public_value_send", frozenset({_T.CONFIDENTIALITY})),
        _single_event_state("ExchangeB", "public_value_receive", frozenset({_T.CONFIDENTIALITY})),
        _single_event_state(
            "Done",
            "shared_secret_derive",
            frozenset({_T.CONFIDENTIALITY, _T.INTEGRITY}),
        ),
    )
    order = [s.id for s in states]
    transitions = tuple(
        GuardedTransition(a, f"exchange{i + 1}", b, Guard(Atom(a)))
        for i, (a, b) in enumerate(zip(order, order[1:]))
    )
    lts = build_guarded_lts(states, transitions, "Init", "Done")
    return ProtocolModel(
        "DiffieHellman",
        lts,
        (
            EnvironmentConfig(IDEAL),
            EnvironmentConfig(NONIDEAL, frozenset({AttackerCapability.MITM})),
        ),
    )


BUILTIN_MODELS = {
    "tls13": builtin_tls13,
    "dh": builtin_dh,
}
