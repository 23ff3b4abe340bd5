"""Canonical row reduction for matrices over the chain ring Z/p**n.

All routines work on plain Python integers (lists of lists), interpreted
modulo the prime power m = p**n.  Over this ring, among the entries of a
column one of minimal p-adic valuation divides all the others, so row
reduction needs no extended-gcd transforms: pick the minimal-valuation
pivot, normalize its unit part away, and eliminate.

The Howell form adds two ingredients on top of that echelon process:

* whenever a pivot p**s is a zero divisor, the row scaled by its
  annihilator p**(n-s) is appended and reduced like any other row, so the
  row set also spans every span member supported on later columns;
* entries above a pivot are reduced modulo the pivot.

With zero rows dropped, the result is a *canonical* representative of the
row span: two generating sets span the same submodule of (Z/p**n)**k
exactly when their Howell forms are identical.  Membership then reduces to
a single greedy sweep against the pivots.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Matrix = list[list[int]]


def valuation(a: int, p: int, cap: int) -> int:
    """p-adic valuation of ``a``, with ``cap`` standing in for v(0)."""
    if a == 0:
        return cap
    v = 0
    while a % p == 0 and v < cap:
        a //= p
        v += 1
    return v


def _first_nonzero(row: Sequence) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    return -1


def howell_form(rows: Iterable[Sequence[int]], p: int, n: int,
                pivot_width: int | None = None) -> Matrix:
    """Howell canonical form of the span of ``rows`` modulo p**n.

    When ``pivot_width`` is given, pivots are only chosen among the first
    ``pivot_width`` columns; the returned rows are exactly those that carry
    such a pivot, with any trailing columns transformed alongside.  That
    variant backs the solver below, where trailing columns accumulate the
    combination that produced each row.
    """
    m = p**n
    work = [[x % m for x in row] for row in rows]
    work = [row for row in work if any(row)]
    if not work:
        return []
    width = len(work[0])
    limit = width if pivot_width is None else pivot_width
    r = 0
    for c in range(limit):
        pivot_at, best = None, n + 1
        for i in range(r, len(work)):
            x = work[i][c]
            if x:
                v = valuation(x, p, n)
                if v < best:
                    best, pivot_at = v, i
                    if v == 0:
                        break
        if pivot_at is None:
            continue
        work[r], work[pivot_at] = work[pivot_at], work[r]
        s = best
        piv = p**s
        u = work[r][c] // piv
        if u != 1:
            inv = pow(u, -1, m)
            work[r] = [(x * inv) % m for x in work[r]]
        row_r = work[r]
        for i in range(len(work)):
            if i == r:
                continue
            q = work[i][c] // piv
            if q:
                work[i] = [(a - q * b) % m for a, b in zip(work[i], row_r)]
        if s > 0:
            ann = p ** (n - s)
            extra = [(x * ann) % m for x in row_r]
            if any(extra):
                work.append(extra)
        r += 1
    return [row for row in work[:r] if any(row)]


def pivot_profile(hrows: Matrix, p: int, n: int) -> list[tuple[int, int]]:
    """(pivot column, pivot valuation) for each row of a Howell form."""
    profile = []
    for row in hrows:
        c = _first_nonzero(row)
        profile.append((c, valuation(row[c], p, n)))
    return profile


def reduce_row(v: Sequence[int], hrows: Matrix, p: int, n: int) -> list[int]:
    """Canonical representative of ``v`` modulo the span of ``hrows``.

    ``hrows`` must be a Howell form; the sweep subtracts, at each pivot, the
    unique multiple that reduces the coordinate below the pivot.  The result
    is zero exactly when ``v`` lies in the span.
    """
    m = p**n
    out = [x % m for x in v]
    for row in hrows:
        c = _first_nonzero(row)
        q = out[c] // (p ** valuation(row[c], p, n))
        if q:
            out = [(a - q * b) % m for a, b in zip(out, row)]
    return out


def in_span(v: Sequence[int], hrows: Matrix, p: int, n: int) -> bool:
    return not any(reduce_row(v, hrows, p, n))


def left_kernel(rows: Matrix, p: int, n: int) -> Matrix:
    """Generators of {x : x * rows == 0 (mod p**n)}.

    Augment with an identity block and Howellize the whole thing; rows whose
    original part vanished carry kernel combinations in the identity block,
    and the Howell span property makes that set complete.
    """
    if not rows:
        return []
    width = len(rows[0])
    aug = []
    for i, row in enumerate(rows):
        tail = [0] * len(rows)
        tail[i] = 1
        aug.append(list(row) + tail)
    h = howell_form(aug, p, n)
    return [r[width:] for r in h if not any(r[:width])]


def span_intersection(rows_a: Matrix, rows_b: Matrix, p: int, n: int) -> Matrix:
    """Generators of span(rows_a) & span(rows_b) modulo p**n.

    Every intersection member v equals x*A = -y*B for some left-kernel
    vector (x, y) of the stacked matrix, and conversely.
    """
    if not rows_a or not rows_b:
        return []
    m = p**n
    width = len(rows_a[0])
    kern = left_kernel(rows_a + rows_b, p, n)
    gens = []
    for kv in kern:
        vec = [0] * width
        for cf, row in zip(kv[: len(rows_a)], rows_a):
            if cf:
                vec = [(a + cf * b) % m for a, b in zip(vec, row)]
        if any(vec):
            gens.append(vec)
    return gens


def solve_in_span(target: Sequence[int], rows: Matrix, p: int, n: int):
    """Coefficients y with y * rows == target (mod p**n), or None.

    Works by Howellizing ``rows`` with an identity block carried along
    (pivots restricted to the genuine columns) and replaying the membership
    sweep on ``target`` while accumulating the combination used.
    """
    m = p**n
    if not rows:
        return None if any(x % m for x in target) else []
    width = len(rows[0])
    aug = []
    for i, row in enumerate(rows):
        tail = [0] * len(rows)
        tail[i] = 1
        aug.append(list(row) + tail)
    h = howell_form(aug, p, n, pivot_width=width)
    out = [x % m for x in target] + [0] * len(rows)
    for row in h:
        c = _first_nonzero(row[:width])
        q = out[c] // (p ** valuation(row[c], p, n))
        if q:
            out = [(a - q * b) % m for a, b in zip(out, row)]
    if any(out[:width]):
        return None
    return [(-x) % m for x in out[width:]]


def diagonal_span(rows: Matrix, p: int, n: int, width: int):
    """Adapt the ambient coordinates to a span: span = (+)_t p**s_t * Y_t.

    Returns ``(exps, Y)`` where Y is an invertible width x width matrix over
    Z/p**n whose rows Y_t decompose the ambient free module, and the span of
    ``rows`` is the direct sum of the cyclic submodules p**exps[t] * Y_t.
    Directions the span misses entirely get exps[t] == n.

    This is the chain-ring analogue of diagonalization: two-sided
    elimination with minimal-valuation pivoting, with only the inverse
    column transform tracked (row transforms never change the span).
    """
    m = p**n
    work = [[x % m for x in row] for row in rows]
    work = [row for row in work if any(row)]
    Y = [[1 if i == j else 0 for j in range(width)] for i in range(width)]
    exps = [n] * width
    t = 0
    while t < width and t < len(work):
        pivot, best = None, n + 1
        for i in range(t, len(work)):
            for j in range(t, width):
                x = work[i][j]
                if x:
                    v = valuation(x, p, n)
                    if v < best:
                        best, pivot = v, (i, j)
        if pivot is None:
            break
        bi, bj = pivot
        work[t], work[bi] = work[bi], work[t]
        if bj != t:
            for row in work:
                row[t], row[bj] = row[bj], row[t]
            Y[t], Y[bj] = Y[bj], Y[t]
        s = best
        piv = p**s
        u = work[t][t] // piv
        if u != 1:
            inv = pow(u, -1, m)
            work[t] = [(x * inv) % m for x in work[t]]
        # Clear the pivot row to the right via column operations (tracked in Y),
        # then the pivot column below via row operations (untracked).
        for j in range(t + 1, width):
            q = work[t][j] // piv
            if q:
                for row in work:
                    row[j] = (row[j] - q * row[t]) % m
                Y[t] = [(a + q * b) % m for a, b in zip(Y[t], Y[j])]
        for i in range(t + 1, len(work)):
            q = work[i][t] // piv
            if q:
                row_t = work[t]
                work[i] = [(a - q * b) % m for a, b in zip(work[i], row_t)]
        exps[t] = s
        t += 1
    return exps, Y


from typing import Iterable, Sequence  # noqa: E402  (kept near use for readability)
