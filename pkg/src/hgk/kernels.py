"""Bitmask kernels behind the exhaustive oracles.

Each kernel has a numba-compiled version and a numpy version with the same
signature.  The public names dispatch on ``HAS_NUMBA``; the ``*_np``
variants are always importable so the benchmark and the tests can compare
both paths.  Vertex sets are int64 bitmasks, so graphs are limited to 63
vertices (the caps keep every caller far below that).
"""

from __future__ import annotations

import numpy as np

from ._accel import HAS_NUMBA, njit

# ---------------------------------------------------------------- domination


@njit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def _min_dominating_nb(closed, colors, required, use_colors):
    n = closed.shape[0]
    full = (np.int64(1) << n) - 1
    for size in range(n + 1):
        if size == 0:
            if n == 0:
                return 0, np.int64(0)
            continue
        mask = (np.int64(1) << size) - 1
        while mask <= full:
            cover = np.int64(0)
            col = np.int64(0)
            for b in range(n):
                if (mask >> b) & 1:
                    cover |= closed[b]
                    col |= colors[b]
            if cover == full and (not use_colors or col == required):
                return size, mask
            low = mask & -mask
            ripple = mask + low
            mask = (((ripple ^ mask) >> 2) // low) | ripple
    return -1, np.int64(0)


def _subset_tables(closed: np.ndarray, colors: np.ndarray):
    n = closed.shape[0]
    cover = np.zeros(1 << n, dtype=np.int64)
    col = np.zeros(1 << n, dtype=np.int64)
    size = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        lo = 1 << b
        cover[lo : 2 * lo] = cover[:lo] | closed[b]
        col[lo : 2 * lo] = col[:lo] | colors[b]
        size[lo : 2 * lo] = size[:lo] + 1
    return cover, col, size


def _min_dominating_np(closed, colors, required, use_colors):
    n = closed.shape[0]
    cover, col, size = _subset_tables(closed, colors)
    ok = cover == (1 << n) - 1
    if use_colors:
        ok &= col == required
    if not ok.any():
        return -1, np.int64(0)
    cand = np.flatnonzero(ok)
    best = cand[np.argmin(size[cand])]
    return int(size[best]), np.int64(best)


def min_dominating_set_np(closed: np.ndarray, colors=None, required: int = 0):
    """Smallest dominating set as ``(size, mask)``; ``size == -1`` when none qualifies.

    ``colors[b]`` is a bitmask of color ids carried by vertex ``b``; when given,
    only sets whose colors union to exactly ``required`` are accepted.
    """
    use = colors is not None
    colors = np.zeros(closed.shape[0], dtype=np.int64) if colors is None else np.asarray(colors, dtype=np.int64)
    return _min_dominating_np(np.asarray(closed, dtype=np.int64), colors, np.int64(required), use)


def min_dominating_set_nb(closed: np.ndarray, colors=None, required: int = 0):
    use = colors is not None
    colors = np.zeros(closed.shape[0], dtype=np.int64) if colors is None else np.asarray(colors, dtype=np.int64)
    size, mask = _min_dominating_nb(np.asarray(closed, dtype=np.int64), colors, np.int64(required), use)
    return int(size), np.int64(mask)


def all_minimum_dominating_sets(closed: np.ndarray, colors=None, required: int = 0) -> list:
    """Every minimum dominating set, as sorted int masks."""
    n = closed.shape[0]
    use = colors is not None
    colors = np.zeros(n, dtype=np.int64) if colors is None else np.asarray(colors, dtype=np.int64)
    cover, col, size = _subset_tables(np.asarray(closed, dtype=np.int64), colors)
    ok = cover == (1 << n) - 1
    if use:
        ok &= col == required
    if not ok.any():
        return []
    best = size[ok].min()
    return [int(m) for m in np.flatnonzero(ok & (size == best))]


# -------------------------------------------------------------------- clique


@njit
def _max_clique_nb(adj):
    # explicit stack: numba's on-disk cache mishandles recursive functions.
    # Ties are kept alive so the result is the numerically smallest maximum
    # clique mask, the same one the numpy table returns.
    n = adj.shape[0]
    if n == 0:
        return 0, np.int64(0)
    cap = n * n + 2
    st_cand = np.zeros(cap, dtype=np.int64)
    st_chosen = np.zeros(cap, dtype=np.int64)
    st_size = np.zeros(cap, dtype=np.int64)
    top = 1
    st_cand[0] = (np.int64(1) << n) - 1
    best = 0
    best_mask = np.int64(0)
    while top:
        top -= 1
        cand = st_cand[top]
        chosen = st_chosen[top]
        size = st_size[top]
        if size > best or (size == best and chosen < best_mask):
            best = size
            best_mask = chosen
        while cand:
            if size + _popcount(cand) < best:
                break
            v = 0
            while not (cand >> v) & 1:
                v += 1
            bit = np.int64(1) << v
            cand &= ~bit
            sub = cand & adj[v]
            if size + 1 + _popcount(sub) >= best:
                st_cand[top] = sub
                st_chosen[top] = chosen | bit
                st_size[top] = size + 1
                top += 1
    return best, best_mask


# above this the subset table gets too large; fall back to plain branch and bound
CLIQUE_TABLE_MAX = 20


def _max_clique_np(adj):
    n = adj.shape[0]
    if n == 0:
        return 0, np.int64(0)
    if n > CLIQUE_TABLE_MAX:
        return getattr(_max_clique_nb, "py_func", _max_clique_nb)(adj)
    ok = np.ones(1 << n, dtype=bool)
    size = np.zeros(1 << n, dtype=np.int64)
    idx = np.arange(1 << (n - 1), dtype=np.int64)
    for b in range(n):
        lo = 1 << b
        ok[lo : 2 * lo] = ok[:lo] & ((idx[:lo] & ~adj[b]) == 0)
        size[lo : 2 * lo] = size[:lo] + 1
    size = np.where(ok, size, -1)
    best = int(np.argmax(size))
    return int(size[best]), np.int64(best)


def max_clique_nb(adj: np.ndarray):
    """Maximum clique ``(size, mask)`` from open-neighborhood masks."""
    s, m = _max_clique_nb(np.asarray(adj, dtype=np.int64))
    return int(s), np.int64(m)


def max_clique_np(adj: np.ndarray):
    return _max_clique_np(np.asarray(adj, dtype=np.int64))


# ----------------------------------------------------------------- separators


@njit
def _minimal_separators_nb(adj):
    n = adj.shape[0]
    total = np.int64(1) << n
    flags = np.zeros(total, dtype=np.bool_)
    for x in range(total):
        rest = (total - 1) & ~x
        seen = np.int64(0)
        full = 0
        for s in range(n):
            bit = np.int64(1) << s
            if not (rest & bit) or (seen & bit):
                continue
            comp = bit
            frontier = bit
            while frontier:
                nb = np.int64(0)
                for w in range(n):
                    if (frontier >> w) & 1:
                        nb |= adj[w]
                frontier = nb & rest & ~comp
                comp |= frontier
            seen |= comp
            nbhd = np.int64(0)
            for w in range(n):
                if (comp >> w) & 1:
                    nb = adj[w]
                    nbhd |= nb
            if (nbhd & ~comp) == x:
                full += 1
                if full >= 2:
                    break
        flags[x] = full >= 2
    return flags


def _neighborhood_of_masks(adj: np.ndarray, masks: np.ndarray) -> np.ndarray:
    out = np.zeros_like(masks)
    for w in range(adj.shape[0]):
        out |= np.where(((masks >> w) & 1) == 1, adj[w], 0)
    return out


def _minimal_separators_np(adj):
    n = adj.shape[0]
    if n == 0:
        return np.zeros(1, dtype=bool)
    xs = np.arange(1 << n, dtype=np.int64)
    rest = ((1 << n) - 1) & ~xs
    full = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        bit = np.int64(1) << v
        comp = np.where(rest & bit, bit, 0).astype(np.int64)
        while True:
            grown = comp | (_neighborhood_of_masks(adj, comp) & rest)
            grown = np.where(comp == 0, 0, grown)
            if np.array_equal(grown, comp):
                break
            comp = grown
        lowest = (comp & (bit - 1)) == 0
        border = _neighborhood_of_masks(adj, comp) & ~comp
        full += ((comp != 0) & lowest & (border == xs)).astype(np.int64)
    return full >= 2


def minimal_separator_masks_nb(adj: np.ndarray) -> np.ndarray:
    """Boolean table over all vertex masks: True iff the mask has two full components."""
    return _minimal_separators_nb(np.asarray(adj, dtype=np.int64))


def minimal_separator_masks_np(adj: np.ndarray) -> np.ndarray:
    return _minimal_separators_np(np.asarray(adj, dtype=np.int64))


# ------------------------------------------------------------ induced matching


@njit
def _max_induced_matching_nb(nbr_left, n_right):
    n_left = nbr_left.shape[0]
    cap = n_left * (n_right + 1) + 2
    st_i = np.zeros(cap, dtype=np.int64)
    st_chosen = np.zeros(cap, dtype=np.int64)
    st_blocked = np.zeros(cap, dtype=np.int64)
    st_size = np.zeros(cap, dtype=np.int64)
    top = 1
    best = 0
    while top:
        top -= 1
        i = st_i[top]
        chosen = st_chosen[top]
        blocked = st_blocked[top]
        size = st_size[top]
        if size + (n_left - i) <= best:
            continue
        if i == n_left:
            best = size
            continue
        nb = nbr_left[i]
        st_i[top] = i + 1
        st_chosen[top] = chosen
        st_blocked[top] = blocked
        st_size[top] = size
        top += 1
        if (nb & chosen) == 0:
            cand = nb & ~blocked
            for b in range(n_right):
                if (cand >> b) & 1:
                    st_i[top] = i + 1
                    st_chosen[top] = chosen | (np.int64(1) << b)
                    st_blocked[top] = blocked | nb
                    st_size[top] = size + 1
                    top += 1
    return best


def _max_induced_matching_py(nbr_left, n_right):
    nbr = [int(x) for x in nbr_left]
    nl = len(nbr)

    def rec(i, chosen, blocked, size, best):
        if size + (nl - i) <= best:
            return best
        if i == nl:
            return size
        nb = nbr[i]
        if nb & chosen == 0:
            cand = nb & ~blocked
            while cand:
                low = cand & -cand
                best = rec(i + 1, chosen | low, blocked | nb, size + 1, best)
                cand ^= low
        return rec(i + 1, chosen, blocked, size, best)

    return rec(0, 0, 0, 0, 0)


def max_induced_matching_nb(nbr_left: np.ndarray, n_right: int) -> int:
    """Largest induced matching of a bipartite graph given left-side masks over the right side."""
    return int(_max_induced_matching_nb(np.asarray(nbr_left, dtype=np.int64), n_right))


def max_induced_matching_np(nbr_left: np.ndarray, n_right: int) -> int:
    return _max_induced_matching_py(nbr_left, n_right)


# ------------------------------------------------------- neighborhood classes


@njit
def _nec_nb(nbr_side, n_other, d):
    bits = 1
    while (1 << bits) <= d:
        bits += 1
    field = (np.int64(1) << bits) - 1
    states = np.zeros(1, dtype=np.int64)
    for v in range(nbr_side.shape[0]):
        nb = nbr_side[v]
        moved = np.empty_like(states)
        for s in range(states.shape[0]):
            st = states[s]
            for w in range(n_other):
                if (nb >> w) & 1:
                    shift = w * bits
                    val = (st >> shift) & field
                    if val < d:
                        st += np.int64(1) << shift
            moved[s] = st
        states = np.unique(np.concatenate((states, moved)))
    return states.shape[0]


def _nec_np(nbr_side, n_other, d):
    if d == 1:
        states = np.zeros(1, dtype=np.int64)
        for nb in nbr_side:
            states = np.unique(np.concatenate((states, states | nb)))
        return states.shape[0]
    states = np.zeros((1, max(n_other, 1)), dtype=np.int16)
    for nb in nbr_side:
        vec = np.array([(int(nb) >> w) & 1 for w in range(max(n_other, 1))], dtype=np.int16)
        states = np.unique(np.concatenate((states, np.minimum(states + vec, d))), axis=0)
    return states.shape[0]


def nec_count_nb(nbr_side: np.ndarray, n_other: int, d: int) -> int:
    """Number of distinct capped vectors ``min(d, |X ∩ N(w)|)`` over subsets X of one side."""
    bits = max(1, int(d).bit_length())
    if n_other * bits > 62:
        return _nec_np(np.asarray(nbr_side, dtype=np.int64), n_other, d)
    return int(_nec_nb(np.asarray(nbr_side, dtype=np.int64), n_other, d))


def nec_count_np(nbr_side: np.ndarray, n_other: int, d: int) -> int:
    return int(_nec_np(np.asarray(nbr_side, dtype=np.int64), n_other, d))


# ------------------------------------------------------------------ dispatch

if HAS_NUMBA:
    min_dominating_set = min_dominating_set_nb
    max_clique = max_clique_nb
    minimal_separator_masks = minimal_separator_masks_nb
    max_induced_matching = max_induced_matching_nb
    nec_count = nec_count_nb
else:
    min_dominating_set = min_dominating_set_np
    max_clique = max_clique_np
    minimal_separator_masks = minimal_separator_masks_np
    max_induced_matching = max_induced_matching_np
    nec_count = nec_count_np
