"""
Exhaustive sweeps over labeled k-uniform hypergraphs on [n].

Edge sets are bitmasks over the lexicographically ranked k-subsets of [n]. Connectivity and
the Wiener index only depend on the 2-section, so candidates are reduced to a bitmask over
vertex pairs and evaluated once per distinct 2-section through an LRU cache.

A sweep is split into independent tasks. Each task yields a partial result; partial results
are merged in task order, which makes serial and parallel runs produce identical reports.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from cachetools import LRUCache, cached

from hyperwiener.core.canonical import canonical_form
from hyperwiener.core.errors import (
    InvalidParameters,
    NoGoodEdge,
    OrderTooLarge,
    SearchSpaceTooLarge,
)
from hyperwiener.core.families import offset_tight_path, tight_path
from hyperwiener.core.formulas import (
    BoundParams,
    distance_sum_bound,
    eccentricity_bound,
    wmax,
)
from hyperwiener.core.hypergraph import (
    UNREACHABLE,
    Edge,
    Hypergraph,
    berge_path_oracle,
    components,
    distance,
    find_good_edge,
    good_edges,
    is_connected,
    is_edge_minimal,
    remove_edge,
    wiener,
)
from hyperwiener.core.report import VerificationReport, Violation
from hyperwiener.core.utils.union_find import UnionFind
from hyperwiener.settings import settings

log = logging.getLogger("hyperwiener.core.enumeration")


ProgressCallback = Callable[[int, int], None]


def ranked_edges(n: int, k: int) -> tuple[Edge, ...]:
    return tuple(itertools.combinations(range(1, n + 1), k))


def mask_to_hypergraph(n: int, k: int, mask: int) -> Hypergraph:
    ranked = _edge_tables(n, k).ranked
    return Hypergraph(n, k, tuple(ranked[i] for i in _bits(mask)))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def count_candidates(ranked_count: int, max_edges: int | None) -> int:
    if max_edges is None or max_edges >= ranked_count:
        return 1 << ranked_count
    return sum(math.comb(ranked_count, i) for i in range(max_edges + 1))


def check_search_space(n: int, k: int, max_edges: int | None = None) -> int:
    """
    Validate sweep parameters and return the number of candidate edge sets.

    Raises
    ------
    InvalidParameters
        k < 2, n < k or a negative edge bound.
    SearchSpaceTooLarge
        Too many ranked k-subsets for a full sweep, or too many candidates.
    """
    if k < 2 or n < k:
        raise InvalidParameters(f"Sweeps need 2 <= k <= n, got n={n} k={k}.")
    if max_edges is not None and max_edges < 0:
        raise InvalidParameters(f"The edge bound cannot be negative, got {max_edges}.")
    ranked_count = math.comb(n, k)
    full = max_edges is None or max_edges >= ranked_count
    if full and ranked_count > settings.max_ranked_edges:
        raise SearchSpaceTooLarge(
            f"C({n}, {k}) = {ranked_count} ranked edges exceed the bitmask limit of "
            f"{settings.max_ranked_edges}.",
            size=ranked_count,
            limit=settings.max_ranked_edges,
        )
    size = count_candidates(ranked_count, max_edges)
    if size > settings.max_candidates:
        raise SearchSpaceTooLarge(
            f"The search space holds {size} edge sets, more than the limit of "
            f"{settings.max_candidates}; lower --max-edges.",
            size=size,
            limit=settings.max_candidates,
        )
    return size


@dataclass(frozen=True)
class _EdgeTables:
    n: int
    k: int
    ranked: tuple[Edge, ...]
    covers: tuple[int, ...]
    """Vertex bitmask of each ranked edge."""
    pair_masks: tuple[int, ...]
    """Vertex-pair bitmask of each ranked edge."""
    pairs: tuple[tuple[int, int], ...]
    """0-based endpoints of each vertex-pair bit."""

    @property
    def full_cover(self) -> int:
        return (1 << self.n) - 1


@cached(LRUCache(maxsize=16))
def _edge_tables(n: int, k: int) -> _EdgeTables:
    pairs = tuple(itertools.combinations(range(n), 2))
    pair_index = {pair: i for i, pair in enumerate(pairs)}
    ranked = ranked_edges(n, k)
    covers = []
    pair_masks = []
    for edge in ranked:
        cover = 0
        for v in edge:
            cover |= 1 << (v - 1)
        covers.append(cover)
        pair_mask = 0
        for u, v in itertools.combinations(edge, 2):
            pair_mask |= 1 << pair_index[(u - 1, v - 1)]
        pair_masks.append(pair_mask)
    return _EdgeTables(n, k, ranked, tuple(covers), tuple(pair_masks), pairs)


@cached(LRUCache(maxsize=16))
def _low_tables(n: int, k: int, low_bits: int) -> tuple[list[int], list[int]]:
    """
    Pair masks and vertex covers of every subset of the first ``low_bits`` ranked edges.
    """
    tables = _edge_tables(n, k)
    size = 1 << low_bits
    pair_masks = [0] * size
    covers = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        index = low.bit_length() - 1
        pair_masks[mask] = pair_masks[mask ^ low] | tables.pair_masks[index]
        covers[mask] = covers[mask ^ low] | tables.covers[index]
    return pair_masks, covers


_shadow_cache: LRUCache | None = None


def _shadow_wiener(n: int, pair_mask: int, tables: _EdgeTables, cache_size: int) -> int | None:
    """
    Wiener index of the 2-section encoded by ``pair_mask``, None when it is disconnected.
    """
    global _shadow_cache
    if _shadow_cache is None or _shadow_cache.maxsize != cache_size:
        _shadow_cache = LRUCache(maxsize=cache_size)
    key = (n, pair_mask)
    value = _shadow_cache.get(key, -1)
    if value != -1:
        return value

    adjacency = [0] * n
    forest = UnionFind(n)
    for bit in _bits(pair_mask):
        u, v = tables.pairs[bit]
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u
        forest.union(u, v)

    if forest.count != 1:
        value = None
    else:
        full = (1 << n) - 1
        total = 0
        for source in range(n):
            seen = frontier = 1 << source
            depth = 0
            while seen != full:
                depth += 1
                reach = 0
                for vertex in _bits(frontier):
                    reach |= adjacency[vertex]
                frontier = reach & ~seen
                total += depth * frontier.bit_count()
                seen |= frontier
        value = total // 2
    _shadow_cache[key] = value
    return value


@dataclass
class PartialSweep:
    """
    Result of one sweep task, or of several merged in task order.

    Attributes
    ----------
    candidates: int
        Edge sets scanned
    connected: int
        Connected hypergraphs evaluated
    best: int | None
        Largest Wiener index seen
    maximizers: list[int]
        Edge masks reaching ``best``, in scan order
    """

    candidates: int = 0
    connected: int = 0
    best: int | None = None
    maximizers: list[int] = field(default_factory=list)

    def record(self, mask: int, value: int):
        self.connected += 1
        if self.best is None or value > self.best:
            self.best = value
            self.maximizers = [mask]
        elif value == self.best:
            self.maximizers.append(mask)

    def merge(self, other: PartialSweep):
        self.candidates += other.candidates
        self.connected += other.connected
        if other.best is None:
            return
        if self.best is None or other.best > self.best:
            self.best = other.best
            self.maximizers = list(other.maximizers)
        elif other.best == self.best:
            self.maximizers.extend(other.maximizers)


@dataclass(frozen=True)
class RangeTask:
    """
    Full sweep slice: every mask whose high part lies in [high_start, high_stop). Low bits
    are resolved through a per-process table, so the inner loop is one lookup per mask.
    """

    n: int
    k: int
    low_bits: int
    high_start: int
    high_stop: int
    cache_size: int

    @property
    def candidates(self) -> int:
        return (self.high_stop - self.high_start) << self.low_bits

    def scan(self) -> Iterator[tuple[int, int]]:
        tables = _edge_tables(self.n, self.k)
        low_pairs, low_covers = _low_tables(self.n, self.k, self.low_bits)
        full = tables.full_cover
        low_size = 1 << self.low_bits
        for high in range(self.high_start, self.high_stop):
            high_pairs = high_cover = 0
            for bit in _bits(high):
                high_pairs |= tables.pair_masks[self.low_bits + bit]
                high_cover |= tables.covers[self.low_bits + bit]
            base = high << self.low_bits
            for low in range(low_size):
                # a vertex outside every edge is isolated, skip before any lookup
                if high_cover | low_covers[low] != full:
                    continue
                value = _shadow_wiener(
                    self.n, high_pairs | low_pairs[low], tables, self.cache_size
                )
                if value is not None:
                    yield base | low, value


@dataclass(frozen=True)
class CombinationTask:
    """
    Bounded sweep slice: every edge set of exactly ``size`` edges whose smallest ranked edge
    is ``lead`` (``lead`` is ignored for the empty set).
    """

    n: int
    k: int
    size: int
    lead: int
    cache_size: int

    @property
    def candidates(self) -> int:
        if self.size == 0:
            return 1
        rest = math.comb(self.n, self.k) - self.lead - 1
        return math.comb(rest, self.size - 1)

    def masks(self) -> Iterator[int]:
        if self.size == 0:
            yield 0
            return
        ranked_count = math.comb(self.n, self.k)
        head = 1 << self.lead
        for others in itertools.combinations(range(self.lead + 1, ranked_count), self.size - 1):
            mask = head
            for index in others:
                mask |= 1 << index
            yield mask

    def scan(self) -> Iterator[tuple[int, int]]:
        tables = _edge_tables(self.n, self.k)
        full = tables.full_cover
        for mask in self.masks():
            pairs = cover = 0
            for bit in _bits(mask):
                pairs |= tables.pair_masks[bit]
                cover |= tables.covers[bit]
            if cover != full:
                continue
            value = _shadow_wiener(self.n, pairs, tables, self.cache_size)
            if value is not None:
                yield mask, value


SweepTask = RangeTask | CombinationTask


def _run_task(task: SweepTask) -> PartialSweep:
    partial = PartialSweep(candidates=task.candidates)
    for mask, value in task.scan():
        partial.record(mask, value)
    return partial


def plan_sweep(n: int, k: int, max_edges: int | None = None, jobs: int = 1) -> list[SweepTask]:
    """
    Split the search space into tasks, in increasing scan order.

    The full space is cut into contiguous ranges of high bits, a few per worker. A bounded
    space is cut by edge count, then by smallest ranked edge.
    """
    check_search_space(n, k, max_edges)
    ranked_count = math.comb(n, k)
    cache_size = settings.shadow_cache_size
    if max_edges is None or max_edges >= ranked_count:
        low_bits = min(settings.sweep_low_bits, ranked_count)
        highs = 1 << (ranked_count - low_bits)
        pieces = min(highs, max(1, jobs) * 4)
        step = -(-highs // pieces)
        return [
            RangeTask(n, k, low_bits, start, min(start + step, highs), cache_size)
            for start in range(0, highs, step)
        ]

    tasks: list[SweepTask] = [CombinationTask(n, k, 0, 0, cache_size)]
    for size in range(1, max_edges + 1):
        tasks.extend(
            CombinationTask(n, k, size, lead, cache_size)
            for lead in range(ranked_count - size + 1)
        )
    return tasks


def run_sweep(
    tasks: list[SweepTask], jobs: int = 1, progress: ProgressCallback | None = None
) -> PartialSweep:
    merged = PartialSweep()

    def consume(results: Iterator[PartialSweep]):
        for done, partial in enumerate(results, start=1):
            merged.merge(partial)
            log.debug(f"Sweep task {done}/{len(tasks)} done, best so far {merged.best}")
            if progress:
                progress(done, len(tasks))

    if jobs <= 1:
        consume(map(_run_task, tasks))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            consume(executor.map(_run_task, tasks))
    return merged


def enumerate_connected(n: int, k: int, max_edges: int | None = None) -> Iterator[Hypergraph]:
    """
    Yield every labeled connected k-uniform hypergraph on [n] in the search space, once each.

    The full space is scanned in increasing mask order; a bounded space by edge count, then
    lexicographically by ranked edge indices.
    """
    for task in plan_sweep(n, k, max_edges):
        for mask, _ in task.scan():
            yield mask_to_hypergraph(n, k, mask)


def _extremal_paths(n: int, k: int) -> list[Hypergraph]:
    if n % k:
        return [tight_path(n, k)]
    return [offset_tight_path(n, k, x) for x in range(1, k)]


def _reduction_violations(
    maximizers: list[Hypergraph], extremal_edges: int, best: int
) -> list[Violation]:
    found = []
    for h in maximizers:
        if len(h.edges) <= extremal_edges:
            continue
        reduced = False
        for edge in h.edges:
            smaller = remove_edge(h, edge)
            if is_connected(smaller) and wiener(smaller) >= best:
                reduced = True
                break
        if not reduced:
            found.append(
                Violation(
                    "reduction",
                    h,
                    f"{len(h.edges)} edges and no connected proper sub-hypergraph reaches {best}",
                )
            )
    return found


def verify_theorem(
    n: int,
    k: int,
    max_edges: int | None = None,
    jobs: int = 1,
    progress: ProgressCallback | None = None,
) -> VerificationReport:
    """
    Compute the Wiener index of every connected hypergraph in the search space and compare
    the maximum and its maximizers with the extremal paths. The claim and lemma sweeps run
    on the same (n, k, max_edges) and fill the report's violation lists.

    Raises
    ------
    OrderTooLarge
        n is beyond the canonical form limit, checked before sweeping.
    SearchSpaceTooLarge
        See ``check_search_space``.
    """
    if n > settings.canonical_max_order:
        raise OrderTooLarge(
            f"Verification groups maximizers by canonical form, limited to "
            f"n <= {settings.canonical_max_order}."
        )
    tasks = plan_sweep(n, k, max_edges, jobs)
    log.info(
        f"Sweeping n={n} k={k}: {check_search_space(n, k, max_edges)} candidates "
        f"in {len(tasks)} tasks on {max(1, jobs)} worker(s)."
    )
    result = run_sweep(tasks, jobs, progress)
    log.info(f"Sweep done: {result.connected} connected, maximum {result.best}.")

    maximizers = [mask_to_hypergraph(n, k, mask) for mask in result.maximizers]
    maximizer_classes = tuple(sorted({canonical_form(h) for h in maximizers}))
    extremal = _extremal_paths(n, k)
    extremal_classes = tuple(sorted({canonical_form(h) for h in extremal}))
    extremal_attain_max = all(wiener(h) == result.best for h in extremal)

    reductions: list[Violation] = []
    if result.best is not None:
        reductions = _reduction_violations(maximizers, len(extremal[0].edges), result.best)

    report = VerificationReport(
        n=n,
        k=k,
        max_edges=max_edges,
        candidates_scanned=result.candidates,
        instances_checked=result.connected,
        max_wiener=result.best,
        wmax=wmax(n, k),
        maximizer_classes=maximizer_classes,
        extremal_classes=extremal_classes,
        extremal_attain_max=extremal_attain_max,
        claim_violations=tuple(verify_claim(n, k, max_edges)),
        lemma_violations=tuple(verify_lemma(n, k, max_edges)),
        reduction_violations=tuple(reductions),
    )
    if not report.theorem_match:
        log.warning(f"Theorem mismatch at n={n} k={k}: maximum {report.max_wiener}.")
    return report


def _edge_minimal_instances(n: int, k: int, max_edges: int | None) -> Iterator[Hypergraph]:
    # an edge-minimal connected hypergraph on n vertices has at most n - 1 edges
    cap = n - 1 if max_edges is None else min(max_edges, n - 1)
    for h in enumerate_connected(n, k, cap):
        if is_edge_minimal(h):
            yield h


def _claim_violations(h: Hypergraph) -> list[Violation]:
    found: list[Violation] = []
    n, k = h.n, h.k
    total_wiener = wiener(h)
    for edge in good_edges(h):
        big = [part for part in components(remove_edge(h, edge)) if len(part) > 1]
        if len(big) != 1:
            # the single edge n == k leaves only isolated vertices
            continue
        core = big[0]
        ell = n - len(core)
        params = BoundParams.of(n, k, ell)
        isolated = [v for v in h.vertices if v not in core]
        sums = {v: sum(distance(h, u, v) for u in core) for v in isolated}  # type: ignore
        v = max(isolated, key=lambda x: (sums[x], -x))
        distance_sum = sums[v]

        bound = distance_sum_bound(params, k)
        if distance_sum > bound:
            found.append(
                Violation("distance_sum", h, f"{distance_sum} > {bound} from {v}", edge)
            )

        reach = [distance(h, u, v) for u in core]
        eccentricity = max(reach)  # type: ignore
        ecc_bound = eccentricity_bound(params, k)
        if eccentricity > ecc_bound:
            found.append(
                Violation("eccentricity", h, f"{eccentricity} > {ecc_bound} from {v}", edge)
            )

        layers = [0] * (eccentricity + 1)
        for d in reach:
            layers[d] += 1  # type: ignore
        if layers[1] < k - ell:
            found.append(
                Violation("layer_bound", h, f"n_1 = {layers[1]} < {k - ell} from {v}", edge)
            )
        for i in range(1, eccentricity):
            if layers[i] + layers[i + 1] < k:
                found.append(
                    Violation(
                        "layer_bound",
                        h,
                        f"n_{i} + n_{i + 1} = {layers[i] + layers[i + 1]} < {k} from {v}",
                        edge,
                    )
                )

        rhs = wiener(h.restrict(core)) + math.comb(ell, 2) + ell * distance_sum
        if total_wiener > rhs:
            found.append(Violation("induction_step", h, f"W = {total_wiener} > {rhs}", edge))
    return found


def verify_claim(n: int, k: int, max_edges: int | None = None) -> list[Violation]:
    """
    On every connected edge-minimal hypergraph of the search space and every good edge whose
    removal leaves one big component V' and ell isolated vertices, check the distance-sum and
    eccentricity bounds from the isolated vertex farthest from V', the BFS layer inequalities
    and the induction-step inequality.
    """
    found: list[Violation] = []
    checked = 0
    for h in _edge_minimal_instances(n, k, max_edges):
        checked += 1
        found.extend(_claim_violations(h))
    log.info(f"Claim checked on {checked} edge-minimal hypergraphs, {len(found)} violations.")
    for violation in found:
        log.warning(f"Claim violation: {violation}")
    return found


def verify_lemma(n: int, k: int, max_edges: int | None = None) -> list[Violation]:
    """
    Check that every connected edge-minimal hypergraph of the search space has a good edge.
    """
    found: list[Violation] = []
    for h in _edge_minimal_instances(n, k, max_edges):
        try:
            find_good_edge(h)
        except NoGoodEdge as exc:
            found.append(Violation("no_good_edge", h, exc.message))
    for violation in found:
        log.warning(f"Lemma violation: {violation}")
    return found


def verify_oracle(n: int, k: int, max_edges: int | None = None) -> list[Violation]:
    """
    Compare BFS distances with the brute-force Berge path search on every pair of every
    connected hypergraph of the search space, capped at the oracle's edge limit.
    """
    cap = settings.oracle_max_edges
    if max_edges is not None:
        cap = min(max_edges, cap)
    found: list[Violation] = []
    for h in enumerate_connected(n, k, cap):
        for u, v in itertools.combinations(h.vertices, 2):
            fast, slow = distance(h, u, v), berge_path_oracle(h, u, v)
            if fast != slow or slow is UNREACHABLE:
                found.append(Violation("oracle", h, f"d({u}, {v}) = {fast} but oracle {slow}"))
    return found
