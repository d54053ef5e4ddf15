from __future__ import annotations

from dataclasses import dataclass, field

from hyperwiener.core.canonical import CanonicalForm
from hyperwiener.core.hypergraph import Edge, Hypergraph
from hyperwiener.core.utils.formatting import edge_text, inline_edges


INTERPRETATION = "equality read up to isomorphism: maximizers are grouped by canonical form"


@dataclass(frozen=True)
class Violation:
    """
    One failed check found during a sweep.

    Attributes
    ----------
    kind: str
        Which check failed, e.g. ``distance_sum``, ``eccentricity``, ``layer_bound``,
        ``induction_step``, ``no_good_edge``, ``reduction`` or ``oracle``
    hypergraph: Hypergraph
        The instance the check failed on
    detail: str
        Values involved, in a short human readable form
    edge: Edge | None
        The edge the check was about, if any
    """

    kind: str
    hypergraph: Hypergraph
    detail: str
    edge: Edge | None = None

    def __str__(self) -> str:
        edge = f" edge={edge_text(self.edge)}" if self.edge else ""
        return f"{self.kind}{edge}: {self.detail} on {inline_edges(self.hypergraph)}"


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of an exhaustive check of the maximum Wiener index at a fixed (n, k).

    Attributes
    ----------
    n: int
    k: int
    max_edges: int | None
        Edge bound of the search space, None for the full power set
    candidates_scanned: int
        Edge sets looked at, connected or not
    instances_checked: int
        Connected hypergraphs whose Wiener index was computed
    max_wiener: int | None
        Largest Wiener index found, None if the space holds no connected hypergraph
    wmax: int
        Value predicted by the closed form
    maximizer_classes: tuple[CanonicalForm, ...]
        Canonical forms of every maximizer, sorted
    extremal_classes: tuple[CanonicalForm, ...]
        Canonical forms of the generated extremal paths, sorted
    extremal_attain_max: bool
        Whether every generated extremal path reaches ``max_wiener``
    claim_violations: tuple[Violation, ...]
    lemma_violations: tuple[Violation, ...]
    reduction_violations: tuple[Violation, ...]
        Maximizers with more edges than the extremal paths that no connected proper
        sub-hypergraph matches
    """

    n: int
    k: int
    max_edges: int | None
    candidates_scanned: int
    instances_checked: int
    max_wiener: int | None
    wmax: int
    maximizer_classes: tuple[CanonicalForm, ...]
    extremal_classes: tuple[CanonicalForm, ...]
    extremal_attain_max: bool
    claim_violations: tuple[Violation, ...] = field(default=())
    lemma_violations: tuple[Violation, ...] = field(default=())
    reduction_violations: tuple[Violation, ...] = field(default=())

    @property
    def search_space(self) -> str:
        if self.max_edges is None:
            return "full"
        return f"edge-bounded (at most {self.max_edges} edges)"

    @property
    def uniqueness_scope(self) -> str:
        if self.max_edges is None:
            return "certified over every edge set"
        return f"certified only among hypergraphs with at most {self.max_edges} edges"

    @property
    def theorem_match(self) -> bool:
        return (
            self.max_wiener == self.wmax
            and self.maximizer_classes == self.extremal_classes
            and self.extremal_attain_max
        )

    @property
    def ok(self) -> bool:
        return self.theorem_match and not (
            self.claim_violations or self.lemma_violations or self.reduction_violations
        )

    def to_text(self) -> str:
        lines = [
            f"# {INTERPRETATION}",
            f"n: {self.n}",
            f"k: {self.k}",
            f"search_space: {self.search_space}",
            f"uniqueness: {self.uniqueness_scope}",
            f"candidates_scanned: {self.candidates_scanned}",
            f"instances_checked: {self.instances_checked}",
            f"max_wiener: {'none' if self.max_wiener is None else self.max_wiener}",
            f"wmax: {self.wmax}",
            f"theorem_match: {str(self.theorem_match).lower()}",
            f"claim_violations: {len(self.claim_violations)}",
            f"lemma_violations: {len(self.lemma_violations)}",
            f"reduction_violations: {len(self.reduction_violations)}",
            f"maximizer_classes: {len(self.maximizer_classes)}",
        ]
        for i, form in enumerate(self.maximizer_classes, start=1):
            lines.append(f"maximizer_class: {i}")
            lines.append(f"{form.n} {form.k}")
            lines.extend(edge_text(edge) for edge in form.edges)
        for name, found in (
            ("claim_violation", self.claim_violations),
            ("lemma_violation", self.lemma_violations),
            ("reduction_violation", self.reduction_violations),
        ):
            lines.extend(f"{name}: {violation}" for violation in found)
        return "\n".join(lines) + "\n"
