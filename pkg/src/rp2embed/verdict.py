"""Property verdicts with optional witnesses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from .graph import Cycle, Graph

if TYPE_CHECKING:
    from .links import ClassifiedLink
    from .rp2 import Rp2Embedding


class PreconditionError(ValueError):
    """The graph does not meet the requirements of the requested check."""


DECIDED = "decided"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a property check.

    ``embedding`` exhibits an existential claim (or refutes a universal
    one); ``cycle``, ``link``, ``pair`` and ``minor`` add detail where it
    applies.  An inconclusive verdict has ``value`` set to ``None``.
    """

    property: str
    value: bool | None
    status: str = DECIDED
    embedding: "Rp2Embedding | None" = None
    cycle: Cycle | None = None
    link: "ClassifiedLink | None" = None
    pair: tuple[int, int] | None = None
    minor: Graph | None = None
    note: str = ""

    def __bool__(self) -> bool:
        if self.value is None:
            raise ValueError(f"verdict for {self.property!r} is inconclusive")
        return self.value

    def negated(self, property_id: str) -> "PropertyVerdict":
        value = None if self.value is None else not self.value
        return PropertyVerdict(
            property_id, value, self.status, self.embedding, self.cycle, self.link, self.pair, self.minor, self.note
        )

    def to_json(self) -> dict[str, Any]:
        from .rp2 import embedding_to_json

        witness: dict[str, Any] | None = None
        if self.embedding is not None or self.cycle is not None or self.link is not None or self.minor is not None:
            witness = {}
            if self.embedding is not None:
                witness["embedding"] = embedding_to_json(self.embedding)
            if self.cycle is not None:
                witness["cycle"] = list(self.cycle.vertices)
            if self.pair is not None:
                witness["pair"] = list(self.pair)
            if self.link is not None:
                witness["link"] = self.link.to_json()
            if self.minor is not None:
                witness["minor"] = {"vertices": self.minor.vertex_count, "edges": [list(x) for x in self.minor.edges]}
        out: dict[str, Any] = {"property": self.property, "verdict": self.value, "status": self.status}
        if self.note:
            out["note"] = self.note
        out["witness"] = witness
        return out
