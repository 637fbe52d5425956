"""Exact permanents.

``permanent`` is Ryser's inclusion-exclusion formula walked in Gray-code
order so each step updates the row sums by one column.  Above
``_VECTOR_SIDE`` the same formula is evaluated with numpy over blocks of
subsets, modulo several primes, and reassembled by CRT against a bound on
``|per|``; nothing is ever allowed to wrap.

``permanent_naive`` (permutation expansion) is the independent oracle.
"""

from __future__ import annotations

import itertools
import math
from typing import Sequence

import numpy as np

from . import config
from .errors import GraphError, ResourceLimitError
from .graph import Graph

__all__ = [
    "permanent",
    "permanent_naive",
    "permanent_with_multiplicities",
    "permanent_mod2",
    "sachs_permanent",
]

_VECTOR_SIDE = 14
# primes below 2**31 so a product of two residues fits in int64
_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
           2147483549, 2147483543, 2147483497, 2147483489, 2147483477)


def _rows(M) -> list[list[int]]:
    rows = getattr(M, "rows", M)
    out = [[int(x) for x in r] for r in rows]
    n = len(out)
    for r in out:
        if len(r) != n:
            raise ValueError(f"permanent needs a square matrix, got {n} rows of length {len(r)}")
    return out


def permanent(M, *, max_side: int | None = None) -> int:
    """Exact permanent of a square integer matrix."""
    a = _rows(M)
    n = len(a)
    cap = max_side if max_side is not None else config.permanent_side_cap()
    if n > cap:
        raise ResourceLimitError(f"permanent side {n} exceeds cap {cap}", {"side": n})
    if n == 0:
        return 1
    if any(not any(r) for r in a):
        return 0
    if n > _VECTOR_SIDE:
        return _ryser_modular(a)
    return _ryser_gray(a)


def _ryser_gray(a: list[list[int]]) -> int:
    n = len(a)
    cols = [[a[i][j] for i in range(n)] for j in range(n)]
    sums = [0] * n
    total = 0
    in_set = [False] * n
    size = 0
    for k in range(1, 1 << n):
        # column whose membership flips between Gray codes k-1 and k
        j = (k & -k).bit_length() - 1
        col = cols[j]
        if in_set[j]:
            in_set[j] = False
            size -= 1
            for i in range(n):
                sums[i] -= col[i]
        else:
            in_set[j] = True
            size += 1
            for i in range(n):
                sums[i] += col[i]
        prod = 1
        for s in sums:
            if s == 0:
                prod = 0
                break
            prod *= s
        if prod:
            total += -prod if size & 1 else prod
    return -total if n & 1 else total


def _ryser_modular(a: list[list[int]]) -> int:
    n = len(a)
    bound = 1
    for r in a:
        bound *= sum(abs(x) for x in r)
    primes, modulus = [], 1
    for p in _PRIMES:
        if modulus > 2 * bound:
            break
        primes.append(p)
        modulus *= p
    if modulus <= 2 * bound:
        raise ResourceLimitError("entries too large for the modular permanent path")

    low = min(n, 16)
    high = n - low
    mat = np.array(a, dtype=np.int64)  # n x n
    masks = np.arange(1 << low, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(low, dtype=np.int64)) & 1)
    low_sums = bits @ mat[:, :low].T  # (2^low, n) exact small integers
    low_parity = bits.sum(axis=1) & 1

    residues = []
    for p in primes:
        acc = 0
        for hi in range(1 << high):
            hi_cols = [low + t for t in range(high) if hi >> t & 1]
            base = mat[:, hi_cols].sum(axis=1) if hi_cols else np.zeros(n, dtype=np.int64)
            sums = np.mod(low_sums + base, p)
            prod = np.ones(sums.shape[0], dtype=np.int64)
            for i in range(n):
                prod = (prod * sums[:, i]) % p
            parity = (low_parity + len(hi_cols)) & 1
            pos = int(prod[parity == 0].sum() % p)
            neg = int(prod[parity == 1].sum() % p)
            acc = (acc + pos - neg) % p
        if n & 1:
            acc = (-acc) % p
        residues.append(acc)

    value = 0
    for p, r in zip(primes, residues):
        q = modulus // p
        value = (value + r * q * pow(q, -1, p)) % modulus
    if value > modulus // 2:
        value -= modulus
    return value


def permanent_naive(M, *, max_side: int = config.NAIVE_PERMANENT_SIDE) -> int:
    """Sum over all permutations; only for small matrices."""
    a = _rows(M)
    n = len(a)
    if n > max_side:
        raise ResourceLimitError(f"naive permanent limited to side {max_side}, got {n}")
    total = 0
    for sigma in itertools.permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= a[i][sigma[i]]
            if not prod:
                break
        total += prod
    return total


def permanent_with_multiplicities(columns: Sequence[Sequence[int]], mult: Sequence[int]) -> int:
    """Permanent of the matrix using ``columns[j]`` exactly ``mult[j]`` times.

    Ryser's formula grouped by how many copies of each column are chosen:
    sum over 0 <= t <= mult of (-1)^(m - |t|) prod_j C(mult_j, t_j)
    prod_i (sum_j t_j a_ij).  Terms are visited in reflected mixed-radix
    Gray order so each step moves one t_j by one.
    """
    pairs = [(list(c), k) for c, k in zip(columns, mult) if k]
    m = sum(k for _, k in pairs)
    if pairs and any(len(c) != m for c, _ in pairs):
        raise ValueError("column length must equal the total multiplicity")
    if m == 0:
        return 1
    rows = m
    sums = [0] * rows
    t = [0] * len(pairs)
    direction = [1] * len(pairs)
    coeff = 1
    chosen = 0
    total = 0
    while True:
        if chosen:
            prod = coeff
            for s in sums:
                if s == 0:
                    prod = 0
                    break
                prod *= s
            if prod:
                total += prod if (m - chosen) % 2 == 0 else -prod
        j = 0
        while j < len(pairs) and not 0 <= t[j] + direction[j] <= pairs[j][1]:
            direction[j] = -direction[j]
            j += 1
        if j == len(pairs):
            break
        col, k = pairs[j]
        old = t[j]
        new = old + direction[j]
        coeff = coeff // math.comb(k, old) * math.comb(k, new)
        t[j] = new
        if new > old:
            chosen += 1
            for i in range(rows):
                sums[i] += col[i]
        else:
            chosen -= 1
            for i in range(rows):
                sums[i] -= col[i]
    return total


def permanent_mod2(M) -> int:
    """Parity of the permanent, via the determinant over GF(2)."""
    a = _rows(M)
    n = len(a)
    rows = []
    for r in a:
        bits = 0
        for j, x in enumerate(r):
            if x & 1:
                bits |= 1 << j
        rows.append(bits)
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i] >> col & 1), None)
        if pivot is None:
            return 0
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for i in range(col + 1, n):
            if rows[i] >> col & 1:
                rows[i] ^= rows[col]
    return 1


def sachs_permanent(g: Graph, *, max_order: int = 12) -> int:
    """Sum of 2^(number of cycles) over spanning Sachs subgraphs of ``g``.

    Spanning subgraphs whose components are single edges or cycles are
    enumerated directly; each cycle is generated once, from its smallest
    vertex, with the second vertex smaller than the last.
    """
    if g.n > max_order:
        raise GraphError(f"Sachs enumeration limited to {max_order} vertices")
    adj = g.adjacency
    full = (1 << (g.n + 1)) - 2

    def extend(covered: int) -> int:
        if covered == full:
            return 1
        v = next(x for x in g.vertices if not covered >> x & 1)
        total = 0
        free = [y for y in adj[v] if not covered >> y & 1]
        for y in free:
            total += extend(covered | 1 << v | 1 << y)
        # cycles through v with v the smallest vertex on the cycle
        for second in free:
            if second < v:
                continue
            stack = [(second, covered | 1 << v | 1 << second, 2)]
            while stack:
                cur, mask, length = stack.pop()
                for nxt in adj[cur]:
                    if nxt == v and length >= 3 and cur > second:
                        total += 2 * extend(mask)
                    elif nxt > v and not mask >> nxt & 1:
                        stack.append((nxt, mask | 1 << nxt, length + 1))
        return total

    return extend(0)
