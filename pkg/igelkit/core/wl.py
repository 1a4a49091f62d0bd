"""1-WL color refinement.

One engine refines the disjoint union of any number of graphs. Every round
each vertex gets the signature (own color, sorted neighbor colors); the
distinct signatures of the round are sorted and numbered 0..k-1. That
numbering is an injective relabeling shared by every graph in the run, so
color ids are dense, canonical and comparable across the graphs.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from igelkit.core.errors import InvalidParameterError
from igelkit.core.graph import Graph


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    histogram: tuple[tuple[int, int], ...]
    iterations: int
    class_counts: tuple[int, ...] = ()

    @property
    def num_classes(self) -> int:
        return len(self.histogram)

    def class_sizes(self) -> tuple[int, ...]:
        """Histogram as a sorted multiset of class sizes (label free)."""
        return tuple(sorted(count for _, count in self.histogram))


def _rank(signatures):
    palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [palette[sig] for sig in signatures], len(palette)


class ColorRefiner:
    """Refines the disjoint union of ``graphs`` round by round."""

    def __init__(self, graphs: Sequence[Graph]):
        self.graphs = list(graphs)
        self.offsets = np.concatenate(
            [[0], np.cumsum([g.n for g in self.graphs])]).astype(int).tolist()
        adjacency = []
        for g, start in zip(self.graphs, self.offsets):
            adjacency.extend(tuple(w + start for w in nbrs) for nbrs in g.adjacency)
        self._adjacency = adjacency
        degrees = [len(nbrs) for nbrs in adjacency]
        self.colors, self.num_classes = _rank(degrees)
        self.round = 0
        self.class_counts = [self.num_classes]

    def step(self) -> bool:
        """Runs one round; returns True if the partition was split."""
        colors = self.colors
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in nbrs)))
            for v, nbrs in enumerate(self._adjacency)
        ]
        self.colors, num_classes = _rank(signatures)
        self.round += 1
        self.class_counts.append(num_classes)
        split = num_classes > self.num_classes
        self.num_classes = num_classes
        return split

    def colors_of(self, index: int) -> list[int]:
        return self.colors[self.offsets[index]:self.offsets[index + 1]]

    def histogram_of(self, index: int) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(Counter(self.colors_of(index)).items()))

    def coloring_of(self, index: int) -> Coloring:
        return Coloring(
            colors=tuple(self.colors_of(index)),
            histogram=self.histogram_of(index),
            iterations=self.round,
            class_counts=tuple(self.class_counts),
        )

    def run(self, max_iters=None, on_round=None):
        """Refines until the partition stops splitting or ``max_iters`` rounds
        have run. ``on_round(refiner)`` is called after the initial coloring
        and after every round; returning True stops early."""
        if max_iters is not None and max_iters < 0:
            raise InvalidParameterError(f"max_iters must be >= 0, got {max_iters}")
        if on_round is not None and on_round(self):
            return self
        if not self._adjacency:
            return self
        while max_iters is None or self.round < max_iters:
            split = self.step()
            if on_round is not None and on_round(self):
                break
            if not split:
                break
        return self


def wl_refine(graph: Graph, max_iters=None) -> Coloring:
    """Color refinement seeded with vertex degrees.

    ``iterations`` counts the rounds executed, including the final round that
    confirms the partition is stable.
    """
    return ColorRefiner([graph]).run(max_iters).coloring_of(0)


def wl_joint_refine(g1: Graph, g2: Graph, max_iters=None):
    """Refines both graphs with one shared relabeling.

    Returns ``(coloring1, coloring2, distinguished_at)`` where
    ``distinguished_at`` is the first round (0 = degree coloring) whose
    per-graph histograms differ, or None if they never do.
    """
    first = []

    def watch(refiner):
        if not first and refiner.histogram_of(0) != refiner.histogram_of(1):
            first.append(refiner.round)
        return False

    refiner = ColorRefiner([g1, g2]).run(max_iters, on_round=watch)
    return refiner.coloring_of(0), refiner.coloring_of(1), (first[0] if first else None)


def wl_collection_signatures(graphs: Sequence[Graph], max_iters=None) -> list[bytes]:
    """Canonical per-graph WL signatures over a whole collection.

    Two graphs get equal signatures iff refinement of the collection's
    disjoint union ends with equal color histograms for them.
    """
    refiner = ColorRefiner(graphs).run(max_iters)
    signatures = []
    for index in range(len(refiner.graphs)):
        flat = [x for pair in refiner.histogram_of(index) for x in pair]
        signatures.append(np.asarray([refiner.round, *flat], dtype="<u8").tobytes())
    return signatures
