# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels: the hot twin of _kernels_py.

Same contracts as the pure module: achievable_indices returns the same
sorted index list, run_search the same (status, nodes, count, solution)
with identical node accounting.  The search kernel assumes the hard cap
(group order <= 16); the backend dispatcher routes larger instances to
the pure implementation.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.string cimport memset


cdef inline int mul_idx(int x, int y, int l) noexcept:
    # Index-level product in D_l; indices: rotations 0..l-1, reflections l..2l-1.
    cdef int e
    if x < l:
        if y < l:
            e = x + y
            if e >= l:
                e -= l
            return e
        e = x + y - l
        if e >= l:
            e -= l
        return l + e
    if y < l:
        e = x - l - y
        if e < 0:
            e += l
        return l + e
    e = x - y
    if e < 0:
        e += l
    return e


def achievable_indices(cells, int l):
    """Products realizable by some ordering of `cells` (element indices).

    Dense subset DP over cell positions; the dispatcher keeps
    (1 << len(cells)) * 2l within the memory guard before calling.
    """
    cdef int c = len(cells)
    cdef int G = 2 * l
    if c > 20:
        raise ValueError("compiled reachability DP is limited to 20 cells")
    if c == 0:
        return [0]
    cdef size_t size = (<size_t>1) << c
    cdef int[20] idx
    cdef int i, p, x
    cdef size_t S, T
    for i in range(c):
        idx[i] = cells[i]
        if not 0 <= idx[i] < G:
            raise ValueError(f"element index {cells[i]} out of range")
    cdef unsigned char* dp = <unsigned char*> PyMem_Malloc(size * G)
    if dp == NULL:
        raise MemoryError()
    try:
        memset(dp, 0, size * G)
        dp[0] = 1  # empty word reaches the identity (index 0)
        for S in range(size):
            for i in range(c):
                if S >> i & 1:
                    continue
                x = idx[i]
                T = S | ((<size_t>1) << i)
                for p in range(G):
                    if dp[S * G + p]:
                        dp[T * G + mul_idx(p, x, l)] = 1
        return [p for p in range(G) if dp[(size - 1) * G + p]]
    finally:
        PyMem_Free(dp)


cdef struct Ctx:
    int l, G, m, n, k, per, N
    bint linear, count_all, fix_first
    long long budget, nodes, count
    int status
    bint have_found
    int* grid
    unsigned char* used
    int* anchor
    int* found
    unsigned long long* dp
    unsigned long long rot_mask


cdef unsigned long long achievable_mask(Ctx* c, int* vals, int length) noexcept:
    cdef size_t size = (<size_t>1) << length
    cdef size_t S, T
    cdef int i, p
    cdef unsigned long long P, cur
    memset(c.dp, 0, size * sizeof(unsigned long long))
    c.dp[0] = 1
    for S in range(size):
        P = c.dp[S]
        if P == 0:
            continue
        for i in range(length):
            if S >> i & 1:
                continue
            T = S | ((<size_t>1) << i)
            cur = c.dp[T]
            for p in range(c.G):
                if P >> p & 1:
                    cur |= (<unsigned long long>1) << mul_idx(p, vals[i], c.l)
            c.dp[T] = cur
    return c.dp[size - 1]


cdef bint check_lines(Ctx* c, int t, long long* rho, long long* sigma) noexcept:
    cdef int a = t // c.per
    cdef int w = t - a * c.per
    cdef int i = w // c.n
    cdef int j = w - i * c.n
    cdef int base = a * c.per
    cdef int ii, jj, par, p, q
    cdef int[64] vals
    cdef unsigned long long mask
    if c.linear:
        if j == c.n - 1:
            p = c.grid[base + i * c.n]
            for jj in range(1, c.n):
                p = mul_idx(p, c.grid[base + i * c.n + jj], c.l)
            if rho[0] < 0:
                rho[0] = p
            elif p != rho[0]:
                return False
        if i == c.m - 1:
            q = c.grid[base + (c.m - 1) * c.n + j]
            for ii in range(c.m - 2, -1, -1):
                q = mul_idx(q, c.grid[base + ii * c.n + j], c.l)
            if sigma[0] < 0:
                sigma[0] = q
            elif q != sigma[0]:
                return False
        return True
    if j == c.n - 1:
        for jj in range(c.n):
            vals[jj] = c.grid[base + i * c.n + jj]
        if rho[0] < 0:
            rho[0] = <long long> achievable_mask(c, vals, c.n)
        else:
            par = 0
            for jj in range(c.n):
                if vals[jj] >= c.l:
                    par ^= 1
            if par != (0 if (<unsigned long long>rho[0]) & c.rot_mask else 1):
                return False
            rho[0] = <long long>((<unsigned long long>rho[0])
                                 & achievable_mask(c, vals, c.n))
            if rho[0] == 0:
                return False
    if i == c.m - 1:
        for ii in range(c.m):
            vals[ii] = c.grid[base + ii * c.n + j]
        if sigma[0] < 0:
            sigma[0] = <long long> achievable_mask(c, vals, c.m)
        else:
            par = 0
            for ii in range(c.m):
                if vals[ii] >= c.l:
                    par ^= 1
            if par != (0 if (<unsigned long long>sigma[0]) & c.rot_mask else 1):
                return False
            sigma[0] = <long long>((<unsigned long long>sigma[0])
                                   & achievable_mask(c, vals, c.m))
            if sigma[0] == 0:
                return False
    return True


cdef bint dfs(Ctx* c, int t, long long rho, long long sigma) noexcept:
    cdef int x, anc, q
    cdef long long nrho, nsigma
    cdef bint ok, stop
    if t == c.N:
        c.count += 1
        if not c.have_found:
            for q in range(c.N):
                c.found[q] = c.grid[q]
            c.have_found = True
        if not c.count_all:
            c.status = 0
            return True
        return False
    anc = c.anchor[t]
    for x in range(c.G):
        if c.used[x]:
            continue
        if c.fix_first and t == 0 and x != 0:
            continue
        if anc >= 0 and x <= c.grid[anc]:
            continue
        c.nodes += 1
        if c.nodes > c.budget:
            c.status = 2
            return True
        c.grid[t] = x
        c.used[x] = 1
        nrho = rho
        nsigma = sigma
        ok = check_lines(c, t, &nrho, &nsigma)
        stop = ok and dfs(c, t + 1, nrho, nsigma)
        c.grid[t] = -1
        c.used[x] = 0
        if stop:
            return True
    return False


def run_search(int l, int m, int n, int k, bint linear, bint symmetry,
               bint count_all, long long budget):
    """Backtracking search twin of _kernels_py.run_search."""
    cdef Ctx c
    cdef int a, t
    cdef int max_line
    c.l = l
    c.G = 2 * l
    c.m = m
    c.n = n
    c.k = k
    c.per = m * n
    c.N = c.per * k
    c.linear = linear
    c.count_all = count_all
    c.fix_first = symmetry and not linear
    c.budget = budget
    c.nodes = 0
    c.count = 0
    c.status = 1
    c.have_found = False
    c.rot_mask = ((<unsigned long long>1) << l) - 1
    if c.G > 64:
        raise ValueError("compiled search kernel is limited to group order 64")
    max_line = m if m > n else n
    if max_line > 20:
        raise ValueError("compiled search kernel is limited to lines of 20")
    c.grid = <int*> PyMem_Malloc(c.N * sizeof(int))
    c.anchor = <int*> PyMem_Malloc(c.N * sizeof(int))
    c.found = <int*> PyMem_Malloc(c.N * sizeof(int))
    c.used = <unsigned char*> PyMem_Malloc(c.G)
    c.dp = <unsigned long long*> PyMem_Malloc(
        ((<size_t>1) << max_line) * sizeof(unsigned long long))
    if (c.grid == NULL or c.anchor == NULL or c.found == NULL
            or c.used == NULL or c.dp == NULL):
        PyMem_Free(c.grid); PyMem_Free(c.anchor); PyMem_Free(c.found)
        PyMem_Free(c.used); PyMem_Free(c.dp)
        raise MemoryError()
    try:
        for t in range(c.N):
            c.grid[t] = -1
            c.anchor[t] = -1
        memset(c.used, 0, c.G)
        if symmetry:
            for a in range(1, k):
                c.anchor[a * c.per] = (a - 1) * c.per
        dfs(&c, 0, -1, -1)
        found = [c.found[t] for t in range(c.N)] if c.have_found else None
        return c.status, c.nodes, c.count, found
    finally:
        PyMem_Free(c.grid); PyMem_Free(c.anchor); PyMem_Free(c.found)
        PyMem_Free(c.used); PyMem_Free(c.dp)
