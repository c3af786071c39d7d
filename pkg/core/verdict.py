"""
Recognition verdicts - a certificate on acceptance, a witness on rejection
"""

from dataclasses import dataclass, field
from typing import Optional

from config.settings import VERDICT_SCHEMA


@dataclass(frozen=True)
class Certificate:
    """
    Evidence for an accepted query; `kind` names which fields are set.

    kinds: "representation" (ordering + representation),
    "circular-order" (sigma, optionally with a representation),
    "forbidden-free" (tournament passed every catalog pattern).
    """

    kind: str
    ordering: Optional[object] = None
    representation: Optional[object] = None
    trace: Optional[dict] = None

    def to_dict(self):
        data = {"kind": self.kind}
        if self.ordering is not None:
            data["ordering"] = self.ordering.to_list()
        if self.representation is not None:
            data["representation"] = self.representation.to_json_dict(decimals=True)
        if self.trace is not None:
            data["trace"] = self.trace
        return data


@dataclass(frozen=True)
class Witness:
    """
    Evidence for a rejection.

    kinds: "exhausted" (search space explored, nothing accepted),
    "induced-subdigraph" (vertices of a forbidden pattern),
    "truncated" (search budget ran out; not a proof of rejection),
    "no-circular-ones-order" (polynomial backend found no ordering).
    """

    kind: str
    vertices: tuple = ()
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        data = {"kind": self.kind}
        if self.vertices:
            data["vertices"] = list(self.vertices)
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass(frozen=True)
class Verdict:
    query: str
    accepted: bool
    certificate: Optional[Certificate] = None
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.accepted and self.certificate is None:
            raise ValueError("an accepted verdict needs a certificate")
        if not self.accepted and self.witness is None:
            raise ValueError("a rejected verdict needs a witness")

    @classmethod
    def accept(cls, query, certificate):
        return cls(query=query, accepted=True, certificate=certificate)

    @classmethod
    def reject(cls, query, witness):
        return cls(query=query, accepted=False, witness=witness)

    def to_dict(self):
        return {
            "schema": VERDICT_SCHEMA,
            "query": self.query,
            "accepted": self.accepted,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "witness": self.witness.to_dict() if self.witness else None,
        }
