"""Pure-Python brute-force tallies; reference twin of ``_ckernels.pyx``.

Labels are 0-based internally.  Both functions visit every object of the
family exactly once and return ``{(a, b): count}`` with zero entries omitted.
"""
from __future__ import annotations

import heapq
import itertools


def tally_functions(n):
    """Tally all functions ``[n+1] -> [n]`` by (orbit size of n+1 including
    itself, number of periodic points)."""
    counts = {}
    for table in itertools.product(range(n), repeat=n):
        # periodic points depend only on the restriction to [n]
        state = [0] * n  # 0 unseen, 1 on current walk, 2 done
        periodic = 0
        for s in range(n):
            if state[s]:
                continue
            x = s
            while not state[x]:
                state[x] = 1
                x = table[x]
            if state[x] == 1:
                y = x
                while True:
                    periodic += 1
                    y = table[y]
                    if y == x:
                        break
            x = s
            while state[x] == 1:
                state[x] = 2
                x = table[x]
        for start in range(n):
            seen = [False] * n
            size = 1
            x = start
            while not seen[x]:
                seen[x] = True
                size += 1
                x = table[x]
            key = (size, periodic)
            counts[key] = counts.get(key, 0) + 1
    return counts


def _decode(code, n):
    degree = [1] * n
    for c in code:
        degree[c] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    adj = [[] for _ in range(n)]
    for c in code:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(c)
        adj[c].append(leaf)
        degree[c] -= 1
        if degree[c] == 1:
            heapq.heappush(leaves, c)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    adj[u].append(v)
    adj[v].append(u)
    return adj


def tally_triply_rooted(n):
    """Tally all triply rooted trees on ``[n]`` by (depth of r2, depth of r3),
    depths measured from r1."""
    counts = {}
    if n == 1:
        return {(0, 0): 1}
    for code in itertools.product(range(n), repeat=n - 2):
        adj = _decode(code, n)
        for r1 in range(n):
            depth = [-1] * n
            depth[r1] = 0
            queue = [r1]
            for u in queue:
                for w in adj[u]:
                    if depth[w] < 0:
                        depth[w] = depth[u] + 1
                        queue.append(w)
            for r2 in range(n):
                for r3 in range(n):
                    key = (depth[r2], depth[r3])
                    counts[key] = counts.get(key, 0) + 1
    return counts
