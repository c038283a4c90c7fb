"""Hot bitset kernels: fixed-length path/cycle existence and saturation scans.

Two backends share one contract:

* ``numba`` -- @njit kernels over uint64 adjacency rows (default when numba
  imports cleanly),
* ``python`` -- plain-int bitmask fallback, selected with
  ``SATFORGE_BACKEND=python`` (or ``SATFORGE_NO_NUMBA=1``).

Adjacency is passed as a sequence of per-vertex neighbor bitmasks
(vertex ``w`` is a neighbor of ``v`` iff bit ``w`` of ``adj[v]`` is set).
All kernels are existence tests; witness construction lives in
:mod:`satforge.graph`.
"""

from __future__ import annotations

import os

import numpy as np

SAT_NOT_FREE = 0
SAT_SATURATED = 1
SAT_MISSING_WITNESS = 2


def _want_numba() -> bool:
    if os.environ.get("SATFORGE_NO_NUMBA"):
        return False
    backend = os.environ.get("SATFORGE_BACKEND", "numba").lower()
    return backend != "python"


# ---------------------------------------------------------------------------
# pure-Python backend
# ---------------------------------------------------------------------------

def py_has_path(adj, n, u, v, length) -> bool:
    """True iff a simple path with exactly `length` edges joins u and v."""
    if u == v or length <= 0:
        return False
    vbit = 1 << v

    def dfs(cur, visited, left):
        row = adj[cur]
        if left == 1:
            return bool(row & vbit)
        cand = row & ~visited & ~vbit
        while cand:
            low = cand & -cand
            cand ^= low
            if dfs(low.bit_length() - 1, visited | low, left - 1):
                return True
        return False

    return dfs(u, 1 << u, length)


def py_has_cycle(adj, n, k) -> bool:
    """True iff the graph contains a cycle with exactly k edges."""
    if k < 3 or k > n:
        return False
    for s in range(n):
        sbit = 1 << s
        # simple path of k-1 edges from s through vertices > s, closing at s
        low_mask = (1 << (s + 1)) - 1

        def dfs(cur, visited, left):
            row = adj[cur]
            if left == 0:
                return bool(row & sbit)
            cand = row & ~visited & ~low_mask
            while cand:
                low = cand & -cand
                cand ^= low
                if dfs(low.bit_length() - 1, visited | low, left - 1):
                    return True
            return False

        if dfs(s, sbit, k - 1):
            return True
    return False


def py_saturation_scan(adj, n, k) -> int:
    """Classify the graph: not C_k-free, C_k-saturated, or missing a witness."""
    if py_has_cycle(adj, n, k):
        return SAT_NOT_FREE
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] >> v & 1:
                continue
            if not py_has_path(adj, n, u, v, k - 1):
                return SAT_MISSING_WITNESS
    return SAT_SATURATED


def py_is_connected(adj, n) -> bool:
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt |= adj[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

_NUMBA_OK = False
if _want_numba():
    try:
        from numba import njit

        @njit(cache=True)
        def _nb_has_path(adj, n, u, v, length):  # pragma: no cover - jitted
            if u == v or length <= 0:
                return False
            path = np.empty(length + 1, dtype=np.int64)
            nxt = np.zeros(length + 1, dtype=np.int64)
            path[0] = u
            visited = np.uint64(1) << np.uint64(u)
            depth = 0
            while depth >= 0:
                if depth == length - 1:
                    if adj[path[depth]] >> np.uint64(v) & np.uint64(1):
                        return True
                    if depth > 0:
                        visited &= ~(np.uint64(1) << np.uint64(path[depth]))
                    depth -= 1
                    continue
                cur = path[depth]
                found = False
                w = nxt[depth]
                while w < n:
                    if w != v and (adj[cur] >> np.uint64(w)) & np.uint64(1):
                        if not (visited >> np.uint64(w)) & np.uint64(1):
                            nxt[depth] = w + 1
                            depth += 1
                            path[depth] = w
                            nxt[depth] = 0
                            visited |= np.uint64(1) << np.uint64(w)
                            found = True
                            break
                    w += 1
                if not found:
                    nxt[depth] = n
                    if depth > 0:
                        visited &= ~(np.uint64(1) << np.uint64(path[depth]))
                    depth -= 1
            return False

        @njit(cache=True)
        def _nb_has_cycle(adj, n, k):  # pragma: no cover - jitted
            if k < 3 or k > n:
                return False
            path = np.empty(k, dtype=np.int64)
            nxt = np.zeros(k, dtype=np.int64)
            for s in range(n):
                path[0] = s
                nxt[0] = s + 1
                visited = np.uint64(1) << np.uint64(s)
                depth = 0
                while depth >= 0:
                    if depth == k - 1:
                        if adj[path[depth]] >> np.uint64(s) & np.uint64(1):
                            return True
                        visited &= ~(np.uint64(1) << np.uint64(path[depth]))
                        depth -= 1
                        continue
                    cur = path[depth]
                    found = False
                    w = nxt[depth]
                    while w < n:
                        if (adj[cur] >> np.uint64(w)) & np.uint64(1):
                            if not (visited >> np.uint64(w)) & np.uint64(1):
                                nxt[depth] = w + 1
                                depth += 1
                                path[depth] = w
                                nxt[depth] = s + 1
                                visited |= np.uint64(1) << np.uint64(w)
                                found = True
                                break
                        w += 1
                    if not found:
                        if depth > 0:
                            visited &= ~(np.uint64(1) << np.uint64(path[depth]))
                        depth -= 1
            return False

        @njit(cache=True)
        def _nb_saturation_scan(adj, n, k):  # pragma: no cover - jitted
            if _nb_has_cycle(adj, n, k):
                return SAT_NOT_FREE
            for u in range(n):
                for v in range(u + 1, n):
                    if (adj[u] >> np.uint64(v)) & np.uint64(1):
                        continue
                    if not _nb_has_path(adj, n, u, v, k - 1):
                        return SAT_MISSING_WITNESS
            return SAT_SATURATED

        _NUMBA_OK = True
    except ImportError:  # pragma: no cover
        _NUMBA_OK = False

BACKEND = "numba" if _NUMBA_OK else "python"


def _words(adj):
    return np.asarray(adj, dtype=np.uint64)


if _NUMBA_OK:

    def has_path(adj, n, u, v, length):
        return bool(_nb_has_path(_words(adj), n, u, v, length))

    def has_cycle(adj, n, k):
        return bool(_nb_has_cycle(_words(adj), n, k))

    def saturation_scan(adj, n, k):
        return int(_nb_saturation_scan(_words(adj), n, k))

else:
    has_path = py_has_path
    has_cycle = py_has_cycle
    saturation_scan = py_saturation_scan

is_connected = py_is_connected
