# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force tallies; same contract as ``_pykernels``."""

cdef enum:
    MAXN = 16


def tally_functions(int n):
    if n < 1 or n > MAXN:
        raise ValueError(f"n must be in [1, {MAXN}]")
    cdef int table[MAXN]
    cdef int state[MAXN]
    cdef char seen[MAXN]
    cdef long long grid[MAXN + 2][MAXN + 2]
    cdef int i, s, x, y, start, size, periodic
    for i in range(MAXN + 2):
        for s in range(MAXN + 2):
            grid[i][s] = 0
    for i in range(n):
        table[i] = 0
    while True:
        for i in range(n):
            state[i] = 0
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
            for i in range(n):
                seen[i] = 0
            size = 1
            x = start
            while not seen[x]:
                seen[x] = 1
                size += 1
                x = table[x]
            grid[size][periodic] += 1
        # odometer, last coordinate fastest
        i = n - 1
        while i >= 0:
            table[i] += 1
            if table[i] < n:
                break
            table[i] = 0
            i -= 1
        if i < 0:
            break
    return {(a, b): grid[a][b]
            for a in range(MAXN + 2) for b in range(MAXN + 2) if grid[a][b]}


def tally_triply_rooted(int n):
    if n < 1 or n > MAXN:
        raise ValueError(f"n must be in [1, {MAXN}]")
    if n == 1:
        return {(0, 0): 1}
    cdef int code[MAXN]
    cdef int degree[MAXN]
    cdef int adj[MAXN][MAXN]
    cdef int deg[MAXN]
    cdef int depth[MAXN]
    cdef int queue[MAXN]
    cdef long long grid[MAXN][MAXN]
    cdef int i, j, c, leaf, u, v, w, r1, r2, r3, head, tail, m = n - 2
    for i in range(MAXN):
        for j in range(MAXN):
            grid[i][j] = 0
    for i in range(m):
        code[i] = 0
    while True:
        for v in range(n):
            degree[v] = 1
            deg[v] = 0
        for i in range(m):
            degree[code[i]] += 1
        # decode: smallest current leaf each step (linear scan, n is tiny)
        for i in range(m):
            c = code[i]
            leaf = 0
            while degree[leaf] != 1:
                leaf += 1
            adj[leaf][deg[leaf]] = c
            deg[leaf] += 1
            adj[c][deg[c]] = leaf
            deg[c] += 1
            degree[leaf] = 0
            degree[c] -= 1
        u = -1
        for v in range(n):
            if degree[v] == 1:
                if u < 0:
                    u = v
                else:
                    adj[u][deg[u]] = v
                    deg[u] += 1
                    adj[v][deg[v]] = u
                    deg[v] += 1
        for r1 in range(n):
            for v in range(n):
                depth[v] = -1
            depth[r1] = 0
            queue[0] = r1
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                for j in range(deg[u]):
                    w = adj[u][j]
                    if depth[w] < 0:
                        depth[w] = depth[u] + 1
                        queue[tail] = w
                        tail += 1
            for r2 in range(n):
                for r3 in range(n):
                    grid[depth[r2]][depth[r3]] += 1
        i = m - 1
        while i >= 0:
            code[i] += 1
            if code[i] < n:
                break
            code[i] = 0
            i -= 1
        if i < 0:
            break
    return {(a, b): grid[a][b]
            for a in range(MAXN) for b in range(MAXN) if grid[a][b]}
