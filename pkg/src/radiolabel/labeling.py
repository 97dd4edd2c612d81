"""Radio-condition checks and labelings induced by vertex orderings.

A k-radio labeling assigns positive integers to vertices so that every
distinct pair u, v satisfies |f(u) - f(v)| >= k + 1 - d(u, v).  With
k = diam(G) this is the radio condition; all labels are then distinct, so
the span is at least the vertex count, and a labeling hitting exactly
1..|V| is called consecutive.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO, Union

from .errors import (
    IncompleteLabelingError,
    InvalidParameterError,
    KOutOfRangeError,
)
from .graphs import Graph


@dataclass(frozen=True)
class Labeling:
    """Per-vertex positive labels; span is the largest label used."""

    labels: tuple

    def __post_init__(self):
        if not self.labels:
            raise IncompleteLabelingError("labeling is empty")
        if any(not isinstance(x, int) or x < 1 for x in self.labels):
            raise IncompleteLabelingError("labels must be positive integers")
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def span(self) -> int:
        return max(self.labels)

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Violation:
    """A pair whose label gap falls short of the radio requirement."""

    u: int
    v: int
    required_gap: int
    actual_gap: int


def validate_ordering(graph: Graph, order: Sequence[int]) -> tuple:
    """Return the ordering as a tuple, insisting it permutes the vertices."""
    order = tuple(order)
    if len(order) != graph.vertex_count or set(order) != set(
            range(graph.vertex_count)):
        raise InvalidParameterError(
            "ordering is not a permutation of the vertex set")
    return order


def _labels_of(graph: Graph, labeling: Union[Labeling, Sequence[int]]) -> tuple:
    labels = labeling.labels if isinstance(labeling, Labeling) else tuple(labeling)
    if len(labels) != graph.vertex_count:
        raise IncompleteLabelingError(
            f"{len(labels)} labels for {graph.vertex_count} vertices")
    if any(not isinstance(x, int) or x < 1 for x in labels):
        raise IncompleteLabelingError("labels must be positive integers")
    return labels


def check_k_radio(graph: Graph, labeling: Union[Labeling, Sequence[int]],
                  k: int, fail_fast: bool = False) -> list:
    """All pairs violating |f(u)-f(v)| >= k + 1 - d(u,v); empty means valid.

    With fail_fast the scan stops at the first violation.
    """
    labels = _labels_of(graph, labeling)
    diam = graph.diameter()
    if not 1 <= k <= max(diam, 1):
        raise KOutOfRangeError(f"k={k} not in [1, {max(diam, 1)}]")
    violations = []
    n = graph.vertex_count
    for u in range(n):
        fu = labels[u]
        for v in range(u + 1, n):
            gap = abs(fu - labels[v])
            if gap > k:
                continue
            required = k + 1 - graph.distance(u, v)
            if gap < required:
                violations.append(Violation(u, v, required, gap))
                if fail_fast:
                    return violations
    return violations


def check_radio(graph: Graph, labeling: Union[Labeling, Sequence[int]],
                fail_fast: bool = False) -> list:
    """check_k_radio at k = diam(G), the radio condition proper."""
    return check_k_radio(graph, labeling, max(graph.diameter(), 1),
                         fail_fast=fail_fast)


def induced_labeling(graph: Graph, order: Sequence[int]) -> Labeling:
    """Smallest strictly increasing radio labeling along an ordering.

    f(x_1) = 1 and each later vertex takes the least label satisfying both
    the previous label plus one and every radio constraint against earlier
    vertices.  Since labels rise by at least one per step, a vertex more
    than diam positions back can never force more than the +1 floor, so
    only a diam-wide window of predecessors needs checking.
    """
    order = validate_ordering(graph, order)
    diam = graph.diameter()
    bound = diam + 1
    n = len(order)
    labels = [0] * n
    prev = 0
    for i, v in enumerate(order):
        best = prev + 1
        for c in range(1, min(diam, i) + 1):
            u = order[i - c]
            candidate = labels[u] + bound - graph.distance(u, v)
            if candidate > best:
                best = candidate
        labels[v] = best
        prev = best
    return Labeling(tuple(labels))


def is_consecutive(graph: Graph,
                   labeling: Union[Labeling, Sequence[int]]) -> bool:
    """True iff the labels are exactly 1..|V| and the radio condition holds."""
    labels = _labels_of(graph, labeling)
    n = graph.vertex_count
    if sorted(labels) != list(range(1, n + 1)):
        return False
    return not check_radio(graph, labels, fail_fast=True)


def check_consecutive_ordering(graph: Graph, order: Sequence[int]) -> bool:
    """True iff d(x_i, x_{i+c}) >= diam - c + 1 for every i and c <= diam.

    Offsets past diam impose nothing, so the scan is O(N * diam).  Holding
    is equivalent to the induced labeling having span |V|.
    """
    order = validate_ordering(graph, order)
    diam = graph.diameter()
    n = len(order)
    for i in range(n - 1):
        u = order[i]
        for c in range(1, min(diam, n - 1 - i) + 1):
            if graph.distance(u, order[i + c]) < diam - c + 1:
                return False
    return True


# ---------------------------------------------------------------------------
# JSON file formats
# ---------------------------------------------------------------------------

def ordering_to_json(order: Sequence[int]) -> str:
    return json.dumps({"order": list(order)}, indent=2) + "\n"


def ordering_from_json(text: str, graph: Optional[Graph] = None) -> tuple:
    """Parse {"order": [...]} holding flat indices or coordinate tuples.

    Coordinate tuples are flattened mixed-radix over a uniform base, which
    is validated against the graph size when a graph is supplied.
    """
    data = json.loads(text)
    raw = data.get("order")
    if not isinstance(raw, list) or not raw:
        raise InvalidParameterError('ordering JSON needs a non-empty "order"')
    if isinstance(raw[0], list):
        width = len(raw[0])
        if any(len(entry) != width for entry in raw):
            raise InvalidParameterError("coordinate tuples differ in length")
        base = int(data.get("n", max(max(entry) for entry in raw) + 1))
        if graph is not None and base ** width != graph.vertex_count:
            raise InvalidParameterError(
                f"{base}^{width} coordinates do not index "
                f"{graph.vertex_count} vertices")
        order = []
        for entry in raw:
            index = 0
            for c in entry:
                if not 0 <= c < base:
                    raise InvalidParameterError(
                        f"coordinate {c} outside base {base}")
                index = index * base + c
            order.append(index)
        return tuple(order)
    return tuple(int(v) for v in raw)


def labeling_to_json(labeling: Labeling, graph_file: str = "-") -> str:
    payload = {
        "graph": graph_file,
        "labels": list(labeling.labels),
        "span": labeling.span,
    }
    return json.dumps(payload, indent=2) + "\n"


def labeling_from_json(text: str) -> Labeling:
    data = json.loads(text)
    labels = data.get("labels")
    if not isinstance(labels, list):
        raise InvalidParameterError('labeling JSON needs a "labels" list')
    labeling = Labeling(tuple(int(x) for x in labels))
    declared = data.get("span")
    if declared is not None and declared != labeling.span:
        raise InvalidParameterError(
            f"declared span {declared} != max label {labeling.span}")
    return labeling


def read_text(source: Union[str, os.PathLike, TextIO]) -> str:
    if hasattr(source, "read"):
        return source.read()
    with open(source, "r", encoding="utf-8") as handle:
        return handle.read()
