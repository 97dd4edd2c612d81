"""Exhaustive search oracles: exact radio numbers and consecutive witnesses.

The exact search walks orderings in lexicographic order and reports the
lexicographically smallest optimum; the witness search follows a fixed
fewest-onward-options rule.  Either way, repeated runs return identical
results.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .errors import TooLargeError
from .graphs import Graph
from .labeling import Labeling, induced_labeling, is_consecutive

EXACT = "exact"
WITNESS_FOUND = "witness-found"
EXHAUSTED = "exhausted-no-witness"
TIMEOUT = "timeout"

DEFAULT_EXACT_LIMIT = 9
DEFAULT_TIME_BUDGET = 30.0

# local distance tables are worth building up to this many vertices
_TABLE_LIMIT = 4096


@dataclass(frozen=True)
class SearchResult:
    status: str
    span: Optional[int]
    ordering: Optional[tuple]
    labeling: Optional[Labeling]
    orderings_examined: int

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "span": self.span,
            "ordering": list(self.ordering) if self.ordering else None,
            "labels": list(self.labeling.labels) if self.labeling else None,
            "orderings_examined": self.orderings_examined,
        }


def _distance_table(graph: Graph) -> list:
    n = graph.vertex_count
    return [[graph.distance(u, v) for v in range(n)] for u in range(n)]


# automorphism scan budget for the opt-in symmetry reduction; covers 9! so
# every instance under the exhaustive limit is scanned completely, and a
# truncated scan only yields extra first-vertex representatives, never a
# wrong one
_AUTOMORPHISM_SCAN_CAP = 400_000


def _first_vertex_representatives(graph: Graph) -> list:
    """One starting vertex per symmetry class, by brute-force automorphism
    enumeration over degree-compatible permutations.

    Vertices are merged whenever some adjacency-preserving permutation maps
    one to the other; the minimum of each merged class acts as its
    representative.  The scan stops early once everything has merged or the
    candidate budget is spent, which can only leave classes too fine.
    """
    n = graph.vertex_count
    adj = graph.adjacency
    edges = graph.edges()
    degrees = [graph.degree(v) for v in range(n)]

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    checked = 0
    for perm in permutations(range(n)):
        checked += 1
        if checked > _AUTOMORPHISM_SCAN_CAP:
            break
        if any(degrees[v] != degrees[perm[v]] for v in range(n)):
            continue
        if all(perm[v] in adj[perm[u]] for u, v in edges):
            for v in range(n):
                union(v, perm[v])
            if len({find(v) for v in range(n)}) == 1:
                break
    return sorted({find(v) for v in range(n)})


def exact_radio_number(graph: Graph, limit: int = DEFAULT_EXACT_LIMIT,
                       prune: bool = True,
                       symmetry_reduction: bool = False) -> SearchResult:
    """Minimum span over every ordering-induced radio labeling.

    The pruned walk cuts a partial ordering once its last label plus the
    number of unplaced vertices reaches the best known span (labels rise by
    at least one per step, so no completion can do better).  With
    prune=False the search degenerates to plain enumeration of all |V|!
    orderings through the labeling module, kept as the cross-check oracle.

    symmetry_reduction restricts the first position to one vertex per
    automorphism class.  The optimum is unaffected (an automorphism carries
    any optimal ordering to one starting at a representative), but the
    witness may then differ from the unreduced lexicographic one, so the
    flag defaults to off.
    """
    n = graph.vertex_count
    if n > limit:
        raise TooLargeError(
            f"{n} vertices exceeds the exhaustive limit of {limit}")
    starts = (_first_vertex_representatives(graph) if symmetry_reduction
              else range(n))
    if not prune:
        return _enumerate_all(graph, set(starts))

    diam = graph.diameter()
    bound = diam + 1
    dist = _distance_table(graph)
    best_span = None
    best_order = None
    examined = 0
    order = [0] * n
    labels = [0] * n
    used = [False] * n

    def walk(depth: int) -> None:
        nonlocal best_span, best_order, examined
        if depth == n:
            examined += 1
            span = labels[depth - 1]
            if best_span is None or span < best_span:
                best_span = span
                best_order = tuple(order)
            return
        prev = labels[depth - 1] if depth else 0
        for v in (starts if depth == 0 else range(n)):
            if used[v]:
                continue
            label = prev + 1
            row = dist[v]
            for c in range(1, min(diam, depth) + 1):
                candidate = labels[depth - c] + bound - row[order[depth - c]]
                if candidate > label:
                    label = candidate
            if best_span is not None and label + (n - depth - 1) >= best_span:
                continue
            order[depth] = v
            labels[depth] = label
            used[v] = True
            walk(depth + 1)
            used[v] = False

    walk(0)
    labeling = induced_labeling(graph, best_order)
    return SearchResult(EXACT, best_span, best_order, labeling, examined)


def _enumerate_all(graph: Graph, starts: set) -> SearchResult:
    best_span = None
    best_order = None
    examined = 0
    for order in permutations(range(graph.vertex_count)):
        if order[0] not in starts:
            continue
        examined += 1
        span = induced_labeling(graph, order).span
        if best_span is None or span < best_span:
            best_span = span
            best_order = order
    labeling = induced_labeling(graph, best_order)
    return SearchResult(EXACT, best_span, best_order, labeling, examined)


def find_consecutive_ordering(graph: Graph,
                              time_budget: float = DEFAULT_TIME_BUDGET
                              ) -> SearchResult:
    """Backtracking search for an ordering whose induced labeling is
    consecutive, pruning with d(x_i, x_{i+c}) >= diam - c + 1.

    At each position the surviving candidates are tried fewest-onward-
    options first, ties broken by vertex index; the guidance matters on
    instances like the hundred-vertex Petersen square, where plain index
    order strands the walk in a barren subtree.  The rule is fixed, so
    repeated runs return the identical witness.  Returns witness-found,
    exhausted-no-witness when the whole tree was explored, or timeout once
    the budget runs out.
    """
    n = graph.vertex_count
    diam = graph.diameter()
    dist = _distance_table(graph) if n <= _TABLE_LIMIT else None
    deadline = time.monotonic() + time_budget
    examined = 0
    order = [0] * n
    used = [False] * n
    timed_out = False
    if sys.getrecursionlimit() < n + 100:
        sys.setrecursionlimit(n + 100)

    def dist_of(u: int, v: int) -> int:
        return dist[u][v] if dist is not None else graph.distance(u, v)

    def admissible(v: int, depth: int) -> bool:
        for c in range(1, min(diam, depth) + 1):
            if dist_of(order[depth - c], v) < diam - c + 1:
                return False
        return True

    def extend(depth: int) -> Optional[tuple]:
        nonlocal examined, timed_out
        if depth == n:
            examined += 1
            return tuple(order)
        if time.monotonic() > deadline:
            timed_out = True
            return None
        scored = []
        for v in range(n):
            if used[v] or not admissible(v, depth):
                continue
            # rescoring a wide candidate set can outlast the budget on its
            # own, so the deadline is also polled inside the scan
            if time.monotonic() > deadline:
                timed_out = True
                return None
            order[depth] = v
            onward = sum(1 for w in range(n)
                         if not used[w] and w != v
                         and admissible(w, depth + 1))
            scored.append((onward, v))
        scored.sort()
        for _, v in scored:
            order[depth] = v
            used[v] = True
            found = extend(depth + 1)
            used[v] = False
            if found is not None or timed_out:
                return found
        return None

    witness = extend(0)
    if witness is not None:
        labeling = induced_labeling(graph, witness)
        return SearchResult(WITNESS_FOUND, labeling.span, witness, labeling,
                            examined)
    status = TIMEOUT if timed_out else EXHAUSTED
    return SearchResult(status, None, None, None, examined)


def verify_witness(graph: Graph, order) -> bool:
    """Independent audit: the induced labeling is consecutive.

    Goes only through the labeling module, sharing no state with the
    searches above.
    """
    return is_consecutive(graph, induced_labeling(graph, order))
