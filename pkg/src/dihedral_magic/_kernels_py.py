"""Pure-Python kernels: the fallback twin of the compiled extension.

Both backends implement the same two entry points with identical
semantics (results, iteration order, node accounting):

  achievable_indices(cells, l) -> sorted list of element indices
  run_search(l, m, n, k, linear, symmetry, count_all, budget)
      -> (status, nodes, count, first_solution_or_None)

Element indices follow elements(l): rotations 0..l-1 by exponent,
reflections l..2l-1.  Search status codes: 0 found (short-circuit),
1 space exhausted, 2 node budget exceeded.
"""

from __future__ import annotations


def _mul(x: int, y: int, l: int) -> int:
    """Index-level product in D_l (rotations first, then reflections)."""
    if x < l:
        if y < l:
            return (x + y) % l
        return l + (x + y - l) % l
    if y < l:
        return l + (x - l - y) % l
    return (x - y) % l


def achievable_indices(cells, l: int) -> list[int]:
    """Products realizable by some ordering of the multiset `cells`.

    Enumeration over permutations, deduplicated by memoizing on the
    remaining multiset; the accumulated product is folded by
    left-multiplying the chosen head element.
    """
    cells = list(cells)
    if not cells:
        return [0]
    distinct = sorted(set(cells))
    start = tuple(cells.count(v) for v in distinct)
    memo: dict[tuple[int, ...], frozenset[int]] = {}
    empty = tuple(0 for _ in distinct)
    memo[empty] = frozenset((0,))

    def rec(state: tuple[int, ...]) -> frozenset[int]:
        got = memo.get(state)
        if got is not None:
            return got
        out: set[int] = set()
        for idx, c in enumerate(state):
            if not c:
                continue
            child = list(state)
            child[idx] -= 1
            x = distinct[idx]
            out.update(_mul(x, p, l) for p in rec(tuple(child)))
        result = frozenset(out)
        memo[state] = result
        return result

    return sorted(rec(start))


def run_search(l: int, m: int, n: int, k: int, linear: bool,
               symmetry: bool, count_all: bool, budget: int):
    """Depth-first placement of all 2l elements into the k m x n arrays.

    Cells fill array by array, row-major.  Linear mode prunes on fixed
    row (left-to-right) and column (bottom-to-top) products; orderable
    mode prunes on reflection parity of each completed line, then on the
    running intersection of achievable line products.  A node is counted
    for every placement of an unused, symmetry-admissible element.
    """
    G = 2 * l
    per = m * n
    N = per * k
    grid = [-1] * N
    used = [False] * G
    anchor = [-1] * N
    if symmetry:
        for a in range(1, k):
            anchor[a * per] = (a - 1) * per
    fix_first = symmetry and not linear
    rot_mask = (1 << l) - 1

    nodes = 0
    count = 0
    found: list[int] | None = None
    status = 1

    memo: dict[tuple[int, ...], int] = {}

    def achievable_mask(values) -> int:
        key = tuple(sorted(values))
        got = memo.get(key)
        if got is not None:
            return got
        c = len(key)
        size = 1 << c
        dp = [0] * size
        dp[0] = 1
        for S in range(size):
            P = dp[S]
            if not P:
                continue
            for i in range(c):
                if S >> i & 1:
                    continue
                x = key[i]
                T = S | (1 << i)
                cur = dp[T]
                p = 0
                bits = P
                while bits:
                    if bits & 1:
                        cur |= 1 << _mul(p, x, l)
                    bits >>= 1
                    p += 1
                dp[T] = cur
        memo[key] = dp[size - 1]
        return dp[size - 1]

    def check_lines(t: int, rho: int, sigma: int):
        a, w = divmod(t, per)
        i, j = divmod(w, n)
        base = a * per
        if linear:
            if j == n - 1:
                p = grid[base + i * n]
                for jj in range(1, n):
                    p = _mul(p, grid[base + i * n + jj], l)
                if rho < 0:
                    rho = p
                elif p != rho:
                    return False, rho, sigma
            if i == m - 1:
                q = grid[base + (m - 1) * n + j]
                for ii in range(m - 2, -1, -1):
                    q = _mul(q, grid[base + ii * n + j], l)
                if sigma < 0:
                    sigma = q
                elif q != sigma:
                    return False, rho, sigma
            return True, rho, sigma
        if j == n - 1:
            vals = grid[base + i * n:base + i * n + n]
            if rho < 0:
                rho = achievable_mask(vals)
            else:
                par = sum(1 for v in vals if v >= l) & 1
                if par != (0 if rho & rot_mask else 1):
                    return False, rho, sigma
                rho &= achievable_mask(vals)
                if not rho:
                    return False, rho, sigma
        if i == m - 1:
            vals = [grid[base + r * n + j] for r in range(m)]
            if sigma < 0:
                sigma = achievable_mask(vals)
            else:
                par = sum(1 for v in vals if v >= l) & 1
                if par != (0 if sigma & rot_mask else 1):
                    return False, rho, sigma
                sigma &= achievable_mask(vals)
                if not sigma:
                    return False, rho, sigma
        return True, rho, sigma

    def dfs(t: int, rho: int, sigma: int) -> bool:
        nonlocal nodes, count, found, status
        if t == N:
            count += 1
            if found is None:
                found = grid.copy()
            if not count_all:
                status = 0
                return True
            return False
        anc = anchor[t]
        for x in range(G):
            if used[x]:
                continue
            if fix_first and t == 0 and x != 0:
                continue
            if anc >= 0 and x <= grid[anc]:
                continue
            nodes += 1
            if nodes > budget:
                status = 2
                return True
            grid[t] = x
            used[x] = True
            ok, nrho, nsigma = check_lines(t, rho, sigma)
            stop = ok and dfs(t + 1, nrho, nsigma)
            grid[t] = -1
            used[x] = False
            if stop:
                return True
        return False

    dfs(0, -1, -1)
    return status, nodes, count, found
