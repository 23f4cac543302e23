"""Exhaustive dominating-set oracles, optionally with a color condition."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .. import kernels
from ..config import default_cap
from ..errors import SizeCapError
from ..graph import SimpleGraph


def closed_masks(g: SimpleGraph) -> np.ndarray:
    masks = g.bitmasks()
    return masks | (np.int64(1) << np.arange(g.n, dtype=np.int64))


def _check_cap(g: SimpleGraph, cap):
    cap = default_cap("domset") if cap is None else cap
    if g.n > cap:
        raise SizeCapError("dominating set oracle", g.n, cap)


def domset_oracle(g: SimpleGraph, cap: int | None = None, with_sets: bool = False):
    """Domination number, plus every minimum dominating set when ``with_sets``."""
    _check_cap(g, cap)
    if g.n == 0:
        return (0, [frozenset()]) if with_sets else 0
    closed = closed_masks(g)
    if with_sets:
        masks = kernels.all_minimum_dominating_sets(closed)
        return len(g.vertices_of(masks[0])), [frozenset(g.vertices_of(m)) for m in masks]
    size, _ = kernels.min_dominating_set(closed)
    return size


def min_dominating_set(g: SimpleGraph, cap: int | None = None) -> frozenset:
    _check_cap(g, cap)
    if g.n == 0:
        return frozenset()
    _, mask = kernels.min_dominating_set(closed_masks(g))
    return frozenset(g.vertices_of(int(mask)))


def constrained_domset_oracle(g: SimpleGraph, coloring: dict, required, cap: int | None = None):
    """Smallest dominating set D whose colored members carry exactly the colors ``required``.

    ``coloring`` maps some vertices to hashable colors; uncolored vertices are free.
    Returns ``(size, set)`` or ``(None, None)`` when no such set exists.
    """
    _check_cap(g, cap)
    palette = sorted({coloring[v] for v in g.vertices if v in coloring} | set(required), key=repr)
    if len(palette) > 62:
        raise SizeCapError("color palette", len(palette), 62)
    bit = {c: 1 << i for i, c in enumerate(palette)}
    colors = np.array([bit[coloring[v]] if v in coloring else 0 for v in g.vertices], dtype=np.int64)
    req = 0
    for c in required:
        req |= bit[c]
    if g.n == 0:
        return (0, frozenset()) if req == 0 else (None, None)
    size, mask = kernels.min_dominating_set(closed_masks(g), colors, req)
    if size < 0:
        return None, None
    return size, frozenset(g.vertices_of(int(mask)))


def dominating_set_at_most(g: SimpleGraph, k: int):
    """A dominating set with at most ``k`` vertices, or None; scans k-subsets only,
    so it stays usable on graphs too large for the subset-table oracle."""
    if k >= g.n:
        return frozenset(g.vertices)
    if k < 0:
        return None
    full = (1 << g.n) - 1
    closed = [int(m) for m in closed_masks(g)] if g.n else []
    for combo in combinations(range(g.n), k):
        cover = 0
        for b in combo:
            cover |= closed[b]
        if cover == full:
            return frozenset(g.vertices[b] for b in combo)
    return None
