"""Dense linear algebra over a prime field F_q (lists of ints)."""

from __future__ import annotations

from .perm import prime_divisors


def rref(rows, q):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [[x % q for x in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, q)
        M[r] = [x * inv % q for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                Mr = M[r]
                M[i] = [(x - f * y) % q for x, y in zip(M[i], Mr)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(A, q):
    """Basis of ``{v : A v = 0}`` for an n x n (or m x n) matrix."""
    if not A:
        return []
    n = len(A[0])
    R, pivots = rref(A, q)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for row, pc in zip(R, pivots):
            v[pc] = (-row[fc]) % q
        basis.append(v)
    return basis


def charpoly(A, q):
    """Characteristic polynomial det(xI - A), lowest degree first, via Hessenberg form."""
    n = len(A)
    H = [[x % q for x in row] for row in A]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if H[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for row in H:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = pow(H[j + 1][j], -1, q)
        for i in range(j + 2, n):
            u = H[i][j] * inv % q
            if not u:
                continue
            H[i] = [(x - u * y) % q for x, y in zip(H[i], H[j + 1])]
            for row in H:
                row[j + 1] = (row[j + 1] + u * row[i]) % q
    polys = [[1]]
    for m in range(1, n + 1):
        # (x - h_mm) p_{m-1}
        prev = polys[m - 1]
        cur = [0] + prev[:]
        hmm = H[m - 1][m - 1]
        for i, c in enumerate(prev):
            cur[i] = (cur[i] - hmm * c) % q
        t = 1
        for i in range(m - 1, 0, -1):
            t = t * H[i][i - 1] % q
            coef = H[i - 1][m - 1] * t % q
            if coef:
                for k, c in enumerate(polys[i - 1]):
                    cur[k] = (cur[k] - coef * c) % q
        polys.append(cur)
    return polys[n]


def roots(poly, q):
    """Distinct roots in F_q, ascending, by direct evaluation."""
    out = []
    for x in range(q):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % q
        if acc == 0:
            out.append(x)
    return out


def matvec(A, v, q):
    return [sum(a * b for a, b in zip(row, v)) % q for row in A]


def primitive_root(q: int) -> int:
    """Least generator of the multiplicative group of F_q."""
    if q == 2:
        return 1
    fac = prime_divisors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // r, q) != 1 for r in fac):
            return g
    raise ValueError(f"{q} is not prime")


def sqrt_small(t: int, q: int, bound: int):
    """The unique d in 1..bound with d*d = t mod q, or None."""
    for d in range(1, bound + 1):
        if d * d % q == t % q:
            return d
    return None
