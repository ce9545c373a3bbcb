"""Exact rank computation for dense integer matrices.

Two coefficient domains are supported: the prime field F_p (Gaussian
elimination with modular inverses, plus a bitmask fast path for p = 2)
and the rationals (Fraction arithmetic).  Floating point is never used;
these ranks feed a homology oracle where rounding would be unsound.
"""

from fractions import Fraction


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def rank_gf2(rows: list[list[int]]) -> int:
    """Rank over F_2; rows are packed into integers as bitmasks."""
    packed = []
    for row in rows:
        bits = 0
        for j, a in enumerate(row):
            if a % 2:
                bits |= 1 << j
        if bits:
            packed.append(bits)
    rank = 0
    while packed:
        pivot = packed.pop()
        rank += 1
        low = pivot & -pivot
        packed = [r ^ pivot if r & low else r for r in packed]
        packed = [r for r in packed if r]
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix over F_p.  The input is not modified."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not rows or not rows[0]:
        return 0
    if p == 2:
        return rank_gf2(rows)
    m = [[a % p for a in row] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(a * inv) % p for a in m[rank]]
        for r in range(n_rows):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank_rational(rows: list[list[int]]) -> int:
    """Rank over the rationals with exact Fraction arithmetic."""
    if not rows or not rows[0]:
        return 0
    m = [[Fraction(a) for a in row] for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank][col]
        m[rank] = [a / piv for a in m[rank]]
        for r in range(n_rows):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank
