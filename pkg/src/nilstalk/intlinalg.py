"""Exact integer linear algebra: Smith normal form, ranks over Q and F_p.

Matrices are lists of rows of Python ints.  Nothing here touches floating
point.
"""

from __future__ import annotations

from collections.abc import Sequence

Matrix = list[list[int]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_factors(n: int) -> list[int]:
    """Split ``|n|`` into its prime-power factors, ascending.

    >>> prime_power_factors(12)
    [3, 4]
    >>> prime_power_factors(1)
    []
    """
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no prime-power factorisation")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1
    if n > 1:
        out.append(n)
    return sorted(out)


def prime_of(q: int) -> int:
    """The prime underlying the prime power ``q``."""
    p = 2
    while q % p:
        p += 1
    return p


def _copy(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(map(int, row)) for row in m]


def smith_diagonal(m: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form of ``m``.

    Entries are positive and each divides the next.  The number of entries
    is the rank of ``m`` over Q.

    >>> smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    [2, 6, 12]
    >>> smith_diagonal([[0, 0]])
    []
    """
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: entry of smallest nonzero absolute value in the remaining block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # a smaller remainder appeared in row/column t; move it to the pivot
            best = (t, t)
            for i in range(t, rows):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def rank_q(m: Sequence[Sequence[int]]) -> int:
    return len(smith_diagonal(m))


def rank_mod_p(m: Sequence[Sequence[int]], p: int) -> int:
    """Rank of ``m`` reduced modulo the prime ``p`` (Gaussian elimination in F_p)."""
    a = [[x % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def cokernel(m: Sequence[Sequence[int]], target_rank: int) -> tuple[int, list[int]]:
    """Cokernel of ``m: Z^cols -> Z^target_rank`` as (free rank, elementary divisors)."""
    diag = smith_diagonal(m) if m else []
    torsion = []
    for d in diag:
        if d > 1:
            torsion.extend(prime_power_factors(d))
    return target_rank - len(diag), sorted(torsion)
