"""Binary envelope codec for all messages exchanged between actors.

Frame layout (all integers big-endian):

    magic(4) = 50 41 4E 41 | version(1) | kind(1) | correlation_id(8) |
    src(3: actor kind + u16 index) | dst(3) | sent_at(8) |
    payload_len(4) | payload

The layout is a public wire contract; tests pin it byte-exactly.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass

MAGIC = b"PANA"
WIRE_VERSION = 1
HEADER_LEN = 32
MAX_PAYLOAD = 1 << 16

_HEADER = struct.Struct(">4sBBQBHBHQI")


class WireError(Exception):
    """Base class for codec failures."""


class OversizePayload(WireError):
    pass


class BadMagic(WireError):
    pass


class BadVersion(WireError):
    pass


class UnknownKind(WireError):
    pass


class BadAddress(WireError):
    """src or dst carries an actor kind code outside the enum."""


class TruncatedFrame(WireError):
    pass


class TrailingBytes(WireError):
    pass


class ActorKind(enum.IntEnum):
    MOBILE_CLIENT = 1
    ACO = 2
    TELECOM = 3
    ACCESS_PROVIDER = 4
    SERVICE_PROVIDER = 5


_KIND_LABELS = {
    ActorKind.MOBILE_CLIENT: "client",
    ActorKind.ACO: "aco",
    ActorKind.TELECOM: "telecom",
    ActorKind.ACCESS_PROVIDER: "provider",
    ActorKind.SERVICE_PROVIDER: "sp",
}
_LABEL_KINDS = {v: k for k, v in _KIND_LABELS.items()}


@dataclass(frozen=True, order=True)
class ActorAddr:
    """(kind, index) identity of one actor. Telecom and the access provider
    are singletons with index 0."""

    kind: ActorKind
    index: int = 0

    def __post_init__(self):
        if not 0 <= self.index < (1 << 16):
            raise ValueError(f"actor index out of range: {self.index}")

    def __str__(self) -> str:
        return f"{_KIND_LABELS[self.kind]}:{self.index}"

    @classmethod
    def parse(cls, text: str) -> "ActorAddr":
        """Parse "client:0" / "aco:1" / "telecom" style address strings."""
        label, _, idx = text.partition(":")
        if label not in _LABEL_KINDS:
            raise ValueError(f"unknown actor kind {label!r}")
        return cls(_LABEL_KINDS[label], int(idx) if idx else 0)

    def to_bytes(self) -> bytes:
        return struct.pack(">BH", self.kind, self.index)


class MessageKind(enum.IntEnum):
    ACCESS_REQUEST = 1
    CHALLENGE_TOKEN = 2
    KEY_REQUEST = 3
    AUTH_DECISION = 4
    SERVICE_ACCESS_REQUEST = 5
    SERVICE_PERMIT = 6
    SERVICE_USE = 7
    SERVICE_REPLY = 8
    ERROR_MSG = 9


@dataclass(frozen=True)
class Envelope:
    """One wire message; correlation_id ties together every message of one
    access attempt."""

    kind: MessageKind
    correlation_id: int
    src: ActorAddr
    dst: ActorAddr
    sent_at: int
    payload: bytes = b""
    version: int = WIRE_VERSION

    def __post_init__(self):
        if not 0 <= self.correlation_id < (1 << 64):
            raise ValueError("correlation_id out of range")
        if not 0 <= self.sent_at < (1 << 64):
            raise ValueError("sent_at out of range")


def encode(msg: Envelope) -> bytes:
    if len(msg.payload) > MAX_PAYLOAD:
        raise OversizePayload(f"payload of {len(msg.payload)} bytes exceeds {MAX_PAYLOAD}")
    if msg.version != WIRE_VERSION:
        raise BadVersion(f"cannot encode version {msg.version}")
    header = _HEADER.pack(
        MAGIC,
        msg.version,
        msg.kind,
        msg.correlation_id,
        msg.src.kind,
        msg.src.index,
        msg.dst.kind,
        msg.dst.index,
        msg.sent_at,
        len(msg.payload),
    )
    return header + msg.payload


def decode(data: bytes) -> Envelope:
    """Inverse of encode on its image; rejects everything else.

    Total over arbitrary byte strings: raises a WireError subclass naming
    the first violated field, never anything wilder.
    """
    if len(data) < len(MAGIC):
        raise TruncatedFrame(f"{len(data)} bytes is too short for the magic")
    if data[:4] != MAGIC:
        raise BadMagic(f"bad magic {data[:4].hex()}")
    if len(data) < HEADER_LEN:
        raise TruncatedFrame(f"header needs {HEADER_LEN} bytes, got {len(data)}")
    (_, version, kind_code, corr, src_kind, src_idx, dst_kind, dst_idx,
     sent_at, payload_len) = _HEADER.unpack_from(data)
    if version != WIRE_VERSION:
        raise BadVersion(f"version {version}")
    try:
        kind = MessageKind(kind_code)
    except ValueError:
        raise UnknownKind(f"kind code {kind_code}") from None
    try:
        src = ActorAddr(ActorKind(src_kind), src_idx)
        dst = ActorAddr(ActorKind(dst_kind), dst_idx)
    except ValueError:
        raise BadAddress(f"actor kind codes {src_kind}/{dst_kind}") from None
    if payload_len > MAX_PAYLOAD:
        raise OversizePayload(f"declared payload of {payload_len} bytes")
    body = data[HEADER_LEN:]
    if len(body) < payload_len:
        raise TruncatedFrame(f"payload needs {payload_len} bytes, got {len(body)}")
    if len(body) > payload_len:
        raise TrailingBytes(f"{len(body) - payload_len} bytes past the payload")
    return Envelope(
        kind=kind,
        correlation_id=corr,
        src=src,
        dst=dst,
        sent_at=sent_at,
        payload=bytes(body),
        version=version,
    )
