"""Conjugacy classes of a permutation group."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .group import PermGroup
from .perm import Permutation


@dataclass(frozen=True)
class ClassInfo:
    representative: Permutation
    size: int
    element_order: int
    p_regular: bool | None = None
    rep_index: int = 0

    def is_p_regular(self, p: int) -> bool:
        return self.element_order % p != 0


def class_labels(G: PermGroup) -> np.ndarray:
    """Class number of every element, classes ordered by (element order, representative)."""
    if "class_labels" in G.memo:
        return G.memo["class_labels"]
    n = G.order
    allidx = np.arange(n)
    gidx = G.generator_indices()
    if n == 1 or gidx.size == 0:
        labels = np.zeros(n, dtype=np.int64)
    else:
        src = np.concatenate([allidx] * len(gidx))
        dst = np.concatenate([G.conj_idx(allidx, g) for g in gidx])
        graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
        _, raw = connected_components(graph, directed=True, connection="weak")
        reps = np.full(raw.max() + 1, n, dtype=np.int64)
        np.minimum.at(reps, raw, allidx)
        orders = G.element_orders[reps]
        order = np.lexsort((reps, orders))
        relabel = np.empty_like(order)
        relabel[order] = np.arange(order.size)
        labels = relabel[raw]
    G.memo["class_labels"] = labels
    return labels


def class_representatives(G: PermGroup) -> np.ndarray:
    """Index of the lexicographically least element of each class."""
    labels = class_labels(G)
    reps = np.full(labels.max() + 1, G.order, dtype=np.int64)
    np.minimum.at(reps, labels, np.arange(G.order))
    return reps


def conjugacy_classes(G: PermGroup, p: int | None = None) -> list[ClassInfo]:
    """One :class:`ClassInfo` per class; the representative is the lexicographically
    least element of its class.  ``p_regular`` is filled in when ``p`` is given."""
    labels = class_labels(G)
    reps = class_representatives(G)
    sizes = np.bincount(labels)
    orders = G.element_orders
    out = []
    for c, r in enumerate(reps):
        o = int(orders[r])
        out.append(ClassInfo(
            representative=G.element(int(r)),
            size=int(sizes[c]),
            element_order=o,
            p_regular=None if p is None else o % p != 0,
            rep_index=int(r),
        ))
    return out


def p_regular_class_count(G: PermGroup, p: int) -> int:
    return sum(1 for c in conjugacy_classes(G) if c.element_order % p)


def class_counts(G: PermGroup, idx) -> np.ndarray:
    """How many elements of the index set ``idx`` fall in each class."""
    labels = class_labels(G)
    return np.bincount(labels[np.asarray(idx, dtype=np.int64)], minlength=labels.max() + 1)
