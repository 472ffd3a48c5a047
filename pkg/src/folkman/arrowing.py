"""Exhaustive arrowing decisions: does every r-coloring of V(G) produce a
monochromatic a_i-clique in some color class i?

The search assigns colors vertex by vertex (descending degree order), prunes
a branch as soon as a class would acquire its forbidden clique, and breaks
symmetry among colors with equal caps by first-use order.  "Arrows" is only
reported after the pruned tree is provably exhausted; a free coloring is
returned as a concrete counterexample otherwise.  Node budgets make
"undecided" a first-class outcome rather than an open-ended run.
"""

from __future__ import annotations

import multiprocessing
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, _mask_has_clique, clique_number, join
from .signatures import Signature, as_signature

DEFAULT_BUDGET = 10**8

ARROWS = "arrows"
FREE = "free-coloring"
UNDECIDED = "undecided"

_FOUND, _EXHAUSTED, _OUT_OF_BUDGET = 0, 1, 2


class BudgetExceededError(RuntimeError):
    """Raised where an undecided outcome cannot be surfaced as a value."""


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one arrowing search.

    `coloring` maps vertex -> color index (0-based) when the verdict is a
    free coloring, else None.  `nodes` counts search-tree nodes expanded.
    """

    verdict: str
    coloring: tuple[int, ...] | None
    nodes: int

    @property
    def decided(self) -> bool:
        return self.verdict != UNDECIDED


def color_classes(coloring: Sequence[int], r: int) -> list[list[int]]:
    """Split a vertex->color assignment into the r color classes."""
    classes: list[list[int]] = [[] for _ in range(r)]
    for v, c in enumerate(coloring):
        classes[c].append(v)
    return classes


class _Budget:
    __slots__ = ("nodes", "limit", "shared", "pending", "interval")

    def __init__(self, limit: int | None, shared=None, interval: int = 2048):
        self.nodes = 0
        self.limit = limit
        self.shared = shared
        self.pending = 0
        self.interval = interval

    def spend(self) -> bool:
        """Count one node; True means the budget is exhausted."""
        self.nodes += 1
        if self.shared is not None:
            self.pending += 1
            if self.pending >= self.interval:
                with self.shared.get_lock():
                    self.shared.value += self.pending
                    total = self.shared.value
                self.pending = 0
                return self.limit is not None and total > self.limit
            return False
        return self.limit is not None and self.nodes > self.limit


def _extend(adj: tuple[int, ...], parts: tuple[int, ...], order: Sequence[int],
            pos: int, masks: list[int], budget: _Budget) -> int:
    if pos == len(order):
        return _FOUND
    v = order[pos]
    vbit = 1 << v
    nbrs = adj[v]
    for c, cap in enumerate(parts):
        # Colors with equal caps are interchangeable while empty: only the
        # first empty one in each group may receive its first vertex.
        if c and parts[c - 1] == cap and not masks[c - 1]:
            continue
        if budget.spend():
            return _OUT_OF_BUDGET
        if _mask_has_clique(adj, masks[c] & nbrs, cap - 1):
            continue
        masks[c] |= vbit
        res = _extend(adj, parts, order, pos + 1, masks, budget)
        if res != _EXHAUSTED:
            return res  # keep masks intact: on _FOUND they hold the coloring
        masks[c] &= ~vbit
    return _EXHAUSTED


def _coloring_from_masks(masks: Sequence[int], n: int) -> tuple[int, ...]:
    out = [0] * n
    for c, mask in enumerate(masks):
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            out[v] = c
    return tuple(out)


def _vertex_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _enumerate_prefixes(adj, parts, order, depth, budget) -> list[tuple[int, ...]] | None:
    """All viable color prefixes for order[:depth]; None if the budget died first."""
    out: list[tuple[int, ...]] = []
    masks = [0] * len(parts)
    chosen: list[int] = []

    def rec(pos: int) -> bool:
        if pos == depth:
            out.append(tuple(chosen))
            return True
        v = order[pos]
        vbit = 1 << v
        for c, cap in enumerate(parts):
            if c and parts[c - 1] == cap and not masks[c - 1]:
                continue
            if budget.spend():
                return False
            if _mask_has_clique(adj, masks[c] & adj[v], cap - 1):
                continue
            masks[c] |= vbit
            chosen.append(c)
            ok = rec(pos + 1)
            chosen.pop()
            masks[c] &= ~vbit
            if not ok:
                return False
        return True

    return out if rec(0) else None


_WORKER_SHARED = None


def _init_worker(counter, limit):
    global _WORKER_SHARED
    _WORKER_SHARED = (counter, limit)


def _search_task(args) -> tuple[int, tuple[int, ...] | None, int]:
    adj, parts, order, prefix = args
    counter, limit = _WORKER_SHARED
    budget = _Budget(limit, shared=counter)
    masks = [0] * len(parts)
    for pos, c in enumerate(prefix):
        masks[c] |= 1 << order[pos]
    res = _extend(adj, parts, order, len(prefix), masks, budget)
    coloring = _coloring_from_masks(masks, len(adj)) if res == _FOUND else None
    return res, coloring, budget.nodes


def find_free_coloring(g: Graph, sig: Signature | Iterable[int],
                       budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> SearchResult:
    """Search for an (a1, ..., ar)-free coloring of g.

    Returns a free coloring if one exists, the "arrows" verdict after the
    pruned search space is exhausted, or "undecided" once `budget` search
    nodes have been expanded (budget None means unlimited).  With jobs > 1
    the top of the search tree is split across worker processes; the
    verdict never depends on jobs, though which free coloring is found may.
    """
    sig = as_signature(sig)
    if budget is not None and budget <= 0:
        raise ValueError("budget must be positive (or None for unlimited)")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if sig.is_empty:
        # Every vertex is a monochromatic 1-clique once the 1-entries are
        # restored, so only the empty graph fails to arrow.
        if g.n >= 1:
            return SearchResult(ARROWS, None, 0)
        return SearchResult(FREE, (), 0)
    if g.n == 0:
        return SearchResult(FREE, (), 0)
    parts = sig.parts
    if clique_number(g) < sig.p:
        # The widest class can hold every vertex.
        return SearchResult(FREE, tuple([len(parts) - 1] * g.n), 0)
    order = _vertex_order(g)
    if jobs == 1 or g.n < 2:
        bud = _Budget(budget)
        masks = [0] * len(parts)
        res = _extend(g.adj, parts, order, 0, masks, bud)
        if res == _FOUND:
            return SearchResult(FREE, _coloring_from_masks(masks, g.n), bud.nodes)
        if res == _OUT_OF_BUDGET:
            return SearchResult(UNDECIDED, None, bud.nodes)
        return SearchResult(ARROWS, None, bud.nodes)
    return _parallel_search(g, parts, order, budget, jobs)


def _parallel_search(g: Graph, parts: tuple[int, ...], order: list[int],
                     budget: int | None, jobs: int) -> SearchResult:
    bud = _Budget(budget)
    depth = 1
    prefixes = _enumerate_prefixes(g.adj, parts, order, depth, bud)
    while prefixes is not None and len(prefixes) < 3 * jobs and depth < min(g.n, 6):
        depth += 1
        prefixes = _enumerate_prefixes(g.adj, parts, order, depth, bud)
    if prefixes is None:
        return SearchResult(UNDECIDED, None, bud.nodes)
    if not prefixes:
        return SearchResult(ARROWS, None, bud.nodes)
    remaining = None if budget is None else budget - bud.nodes
    methods = multiprocessing.get_all_start_methods()
    ctx = multiprocessing.get_context("fork" if "fork" in methods else None)
    counter = ctx.Value("q", 0)
    total_nodes = bud.nodes
    verdict = ARROWS
    coloring = None
    with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx,
                             initializer=_init_worker,
                             initargs=(counter, remaining)) as pool:
        pending = {pool.submit(_search_task, (g.adj, parts, order, pfx)) for pfx in prefixes}
        try:
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    res, col, nodes = fut.result()
                    total_nodes += nodes
                    if res == _FOUND:
                        verdict = FREE
                        coloring = col
                        pending = set()
                        break
                    if res == _OUT_OF_BUDGET:
                        verdict = UNDECIDED
        finally:
            pool.shutdown(wait=False, cancel_futures=True)
    return SearchResult(verdict, coloring, total_nodes)


def arrows(g: Graph, sig: Signature | Iterable[int],
           budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> bool:
    """True iff g arrows the signature.  Undecided surfaces as an error."""
    result = find_free_coloring(g, sig, budget=budget, jobs=jobs)
    if result.verdict == UNDECIDED:
        raise BudgetExceededError(
            f"arrowing search undecided after {result.nodes} nodes (budget {budget})")
    return result.verdict == ARROWS


def in_class_H(g: Graph, sig: Signature | Iterable[int], q: int,
               budget: int | None = DEFAULT_BUDGET, jobs: int = 1) -> bool:
    """Membership in H(a1, ..., ar; q): g arrows the signature and cl(g) < q."""
    if q < 1:
        raise ValueError("clique cap q must be >= 1")
    if clique_number(g) >= q:
        return False
    return arrows(g, sig, budget=budget, jobs=jobs)


def verify_composition_instance(g1: Graph, sig1: Signature | Iterable[int],
                                g2: Graph, sig2: Signature | Iterable[int],
                                position: int,
                                budget: int | None = DEFAULT_BUDGET,
                                jobs: int = 1) -> bool:
    """Check the join-composition law on one instance.

    Given g1 arrowing sig1 and g2 arrowing sig2, where the two signatures
    agree everywhere except (possibly) at `position`, the join must arrow
    the merged signature carrying the sum of the two caps at that position.
    The composition law guarantees True; a False return means the engine
    itself is broken, so callers should treat it as fatal.
    """
    sig1 = as_signature(sig1)
    sig2 = as_signature(sig2)
    if sig1.r != sig2.r or sig1.is_empty:
        raise ValueError(f"signatures must be nonempty and of equal length: {sig1} vs {sig2}")
    if not 0 <= position < sig1.r:
        raise ValueError(f"position {position} out of range for {sig1.r} parts")
    for j in range(sig1.r):
        if j != position and sig1.parts[j] != sig2.parts[j]:
            raise ValueError(
                f"signatures differ away from position {position}: {sig1} vs {sig2}")
    merged = list(sig1.parts)
    merged[position] = sig1.parts[position] + sig2.parts[position]
    return arrows(join(g1, g2), merged, budget=budget, jobs=jobs)
