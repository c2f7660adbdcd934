"""
Release Labels

Edge labels of the error-tolerant builders and synchronizers.
"""

from typing import NamedTuple, Optional, Tuple

from automata.plant import EPSILON


def _show(symbol: str) -> str:
    return symbol if symbol != EPSILON else "ε"


class EventPair(NamedTuple):
    """(original, received) hypothesis released by the global builder"""
    original: str
    received: str

    @property
    def is_error(self) -> bool:
        return self.original != self.received

    def __str__(self) -> str:
        return f"({_show(self.original)}, {_show(self.received)})"


class MTupleEvent(NamedTuple):
    """
    Per-site tuple event

    Without ``original`` it is an m-tuple label of G_o / G_l. With ``original``
    set (EPSILON included) it is the (m+1)-tuple released by the local builder.
    """
    per_site: Tuple[str, ...]
    original: Optional[str] = None

    @classmethod
    def silent(cls, num_sites: int) -> "MTupleEvent":
        return cls(tuple(EPSILON for _ in range(num_sites)))

    @property
    def is_silent(self) -> bool:
        return all(symbol == EPSILON for symbol in self.per_site) and not self.original

    def __str__(self) -> str:
        body = ", ".join(_show(symbol) for symbol in self.per_site)
        if self.original is None:
            return f"({body})"
        return f"({_show(self.original)} | {body})"
