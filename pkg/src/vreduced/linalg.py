"""Exact rational linear solves on (pinned) graph Laplacians."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction
from math import lcm

Number = int | Fraction


def _integer_row(row: Sequence[Number]) -> list[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


def solve(matrix: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly for a square non-singular ``matrix``.

    Rows are cleared of denominators, then reduced with Bareiss' fraction-free
    elimination so every intermediate entry stays an integer (a minor of the
    augmented matrix). Only back substitution touches ``Fraction``.
    """
    n = len(matrix)
    if len(rhs) != n or any(len(r) != n for r in matrix):
        raise ValueError("matrix must be square and match the right-hand side")
    if n == 0:
        return []
    a = [_integer_row([*matrix[i], rhs[i]]) for i in range(n)]
    prev = 1
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return x


def solve_pinned(
    adj: Sequence[Sequence[int]],
    pinned: Mapping[int, Number],
    rhs: Sequence[Number] | Mapping[int, Number] | None = None,
) -> list[Fraction]:
    """Solve the Laplacian system with some vertex values fixed.

    Finds ``f`` with ``f[i] = pinned[i]`` for pinned indices and
    ``sum_j adj[u][j] * (f[u] - f[j]) = rhs[u]`` at every other index ``u``.
    ``rhs`` defaults to zero (harmonic extension). The system is non-singular
    whenever every component of the unpinned part touches a pinned vertex.
    """
    n = len(adj)
    if not pinned:
        raise ValueError("at least one vertex must be pinned")
    free = [u for u in range(n) if u not in pinned]
    pos = {u: k for k, u in enumerate(free)}
    if rhs is None:
        rhs = {}
    get = rhs.get if isinstance(rhs, Mapping) else (lambda u, _d=0: rhs[u])
    matrix = []
    b = []
    for u in free:
        row = [0] * len(free)
        row[pos[u]] = sum(adj[u][j] for j in range(n) if j != u)
        acc = Fraction(get(u, 0))
        for j in range(n):
            c = adj[u][j]
            if not c or j == u:
                continue
            if j in pos:
                row[pos[j]] -= c
            else:
                acc += c * Fraction(pinned[j])
        matrix.append(row)
        b.append(acc)
    x = solve(matrix, b)
    out = [Fraction(0)] * n
    for u, val in pinned.items():
        out[u] = Fraction(val)
    for u, val in zip(free, x):
        out[u] = val
    return out
