"""Maximum bipartite matching (Hopcroft-Karp)."""

from __future__ import annotations

import sys
from collections import deque
from typing import Hashable, Mapping, Sequence

_INF = float("inf")


def hopcroft_karp(
    adjacency: Mapping[Hashable, Sequence[Hashable]],
) -> dict[Hashable, Hashable]:
    """Maximum matching of a bipartite graph given as left -> right adjacency.

    Returns a dict mapping each matched left vertex to its right partner.
    Deterministic for a fixed iteration order of `adjacency`.
    """
    match_l: dict = {}
    match_r: dict = {}
    dist: dict = {}

    # greedy seed, usually saturates most vertices up front
    for u, nbrs in adjacency.items():
        for v in nbrs:
            if v not in match_r:
                match_l[u] = v
                match_r[v] = u
                break

    def bfs() -> bool:
        queue = deque()
        for u in adjacency:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = match_r.get(v)
                if w is None:
                    reachable_free = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return reachable_free

    def dfs(u) -> bool:
        for v in adjacency[u]:
            w = match_r.get(v)
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = _INF
        return False

    needed = 2 * len(adjacency) + 100
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)

    while bfs():
        for u in adjacency:
            if u not in match_l:
                dfs(u)
    return match_l
