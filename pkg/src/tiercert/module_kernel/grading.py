"""Positive gradings: weights making the ring homogeneous, degrees for presentations."""

from __future__ import annotations

import itertools
from collections import deque

_WEIGHT_CACHE: dict = {}
MAX_WEIGHT = 6


def ring_weights(R):
    """Smallest positive integer weights (by sum) under which J is homogeneous, or None."""
    key = R.key()
    if key in _WEIGHT_CACHE:
        return _WEIGHT_CACHE[key]
    n = R.nvars
    gb = R.relations_gb()
    found = None
    if all(g.is_homogeneous() for g in gb):
        found = (1,) * n
    else:
        cands = sorted(itertools.product(range(1, MAX_WEIGHT + 1), repeat=n), key=lambda w: (sum(w), w))
        for w in cands:
            if all(g.is_homogeneous(w) for g in gb):
                found = w
                break
    _WEIGHT_CACHE[key] = found
    return found


def poly_degree(f, weights):
    return f.weighted_degree(weights)


def infer_grading(A, weights=None, row_hint=None):
    """Row and column degrees making every entry of A homogeneous, or None.

    ``row_hint`` pins known row degrees (e.g. generator degrees of the target).
    """
    R = A.ring
    weights = weights or ring_weights(R)
    if weights is None:
        return None
    rows = [None] * A.nrows
    cols = [None] * A.ncols
    edges_r = [[] for _ in range(A.nrows)]
    edges_c = [[] for _ in range(A.ncols)]
    for j, col in enumerate(A.cols):
        for i, f in enumerate(col):
            if not f:
                continue
            if not f.is_homogeneous(weights):
                return None
            d = f.weighted_degree(weights)
            edges_r[i].append((j, d))
            edges_c[j].append((i, d))
    if row_hint is not None:
        for i, d in enumerate(row_hint):
            rows[i] = d
    order = [i for i in range(A.nrows) if rows[i] is not None] + [
        i for i in range(A.nrows) if rows[i] is None
    ]
    for start in order:
        if rows[start] is None:
            rows[start] = 0
        queue = deque([("r", start)])
        while queue:
            kind, idx = queue.popleft()
            if kind == "r":
                for j, d in edges_r[idx]:
                    want = rows[idx] + d
                    if cols[j] is None:
                        cols[j] = want
                        queue.append(("c", j))
                    elif cols[j] != want:
                        return None
            else:
                for i, d in edges_c[idx]:
                    want = cols[idx] - d
                    if rows[i] is None:
                        rows[i] = want
                        queue.append(("r", i))
                    elif rows[i] != want:
                        return None
    cols = [0 if c is None else c for c in cols]
    return tuple(rows), tuple(cols)


def column_degree(col, row_degrees, weights):
    for f, d in zip(col, row_degrees):
        if f:
            return d + f.weighted_degree(weights)
    return None
