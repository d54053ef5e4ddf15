from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:
    from hyperwiener.core.hypergraph import Hypergraph


def edge_text(edge: Iterable[int]) -> str:
    return " ".join(str(v) for v in edge)


def inline_edges(h: "Hypergraph") -> str:
    """
    One-line rendering ``n k | e1, e2, ...`` used in violation messages.
    """
    return f"{h.n} {h.k} | " + ", ".join(edge_text(edge) for edge in h.edges)


def plural(count: int, word: str) -> str:
    return f"{count} {word}{'s' if count != 1 else ''}"
