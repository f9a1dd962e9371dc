"""Finite posets as boolean matrices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True, eq=False)
class Poset:
    """``leq[i, j]`` means element i lies below element j."""

    labels: tuple[str, ...]
    leq: np.ndarray

    def __post_init__(self):
        m = np.array(self.leq, dtype=bool)
        m.setflags(write=False)
        object.__setattr__(self, "leq", m)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n(self) -> int:
        return len(self.labels)

    def is_partial_order(self) -> bool:
        m = self.leq
        refl = bool(np.all(np.diag(m)))
        anti = not np.any(m & m.T & ~np.eye(self.n, dtype=bool))
        trans = not np.any((m.astype(np.int64) @ m.astype(np.int64) > 0) & ~m)
        return refl and anti and trans

    @cached_property
    def lt(self) -> np.ndarray:
        return self.leq & ~np.eye(self.n, dtype=bool)

    @cached_property
    def cover(self) -> np.ndarray:
        """Transitive reduction: strict pairs with nothing strictly between."""
        lt = self.lt.astype(np.int64)
        return self.lt & ~((lt @ lt) > 0)

    @cached_property
    def hasse(self) -> tuple[tuple[int, int], ...]:
        return tuple((int(i), int(j)) for i, j in np.argwhere(self.cover))

    def hasse_names(self) -> list[tuple[str, str]]:
        return sorted((self.labels[i], self.labels[j]) for i, j in self.hasse)

    def comparable(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j] or self.leq[j, i])

    def is_chain(self) -> bool:
        return bool(np.all(self.leq | self.leq.T))

    def up_set(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.leq[i])]

    def down_set(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.leq[:, i])]

    @cached_property
    def height(self) -> np.ndarray:
        """Length of the longest strict chain ending at each element."""
        h = np.zeros(self.n, dtype=np.int64)
        order = np.argsort(self.leq.sum(axis=0), kind="stable")  # fewer predecessors first
        for j in order:
            preds = np.flatnonzero(self.lt[:, j])
            if len(preds):
                h[j] = h[preds].max() + 1
        return h

    def glb(self, i: int, j: int) -> int | None:
        lower = np.flatnonzero(self.leq[:, i] & self.leq[:, j])
        for c in lower:
            if np.all(self.leq[lower, c]):
                return int(c)
        return None

    def lub(self, i: int, j: int) -> int | None:
        upper = np.flatnonzero(self.leq[i] & self.leq[j])
        for c in upper:
            if np.all(self.leq[c, upper]):
                return int(c)
        return None

    def minimal(self) -> list[int]:
        return [int(j) for j in range(self.n) if not self.lt[:, j].any()]

    def maximal(self) -> list[int]:
        return [int(i) for i in range(self.n) if not self.lt[i].any()]

    def width(self) -> int:
        """Size of a largest antichain (Dilworth, via bipartite matching)."""
        import networkx as nx

        g = nx.Graph()
        left = [("L", i) for i in range(self.n)]
        g.add_nodes_from(left)
        g.add_nodes_from(("R", i) for i in range(self.n))
        g.add_edges_from((("L", int(i)), ("R", int(j))) for i, j in np.argwhere(self.lt))
        matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
        return self.n - len(matching) // 2
