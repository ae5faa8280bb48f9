"""
Dense exact matrices over the cyclotomic scalars.

Matrices are tuples of tuples of Cyc; everything here is allocation-happy but
exact.  Sizes stay tiny (dimension <= 15), so clarity wins over cleverness.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Cyc

__all__ = [
    "mat",
    "identity",
    "zeros",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_eq",
    "mat_key",
    "mat_trace",
    "mat_det",
    "mat_rank",
    "mat_inverse",
    "mat_charpoly_reverse",
    "kron",
    "mat_pow",
    "mat_map",
]


def _c(x) -> Cyc:
    return x if isinstance(x, Cyc) else Cyc.rational(x)


def mat(rows) -> tuple:
    return tuple(tuple(_c(x) for x in row) for row in rows)


def identity(n: int) -> tuple:
    one, zero = Cyc.rational(1), Cyc.rational(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> tuple:
    zero = Cyc.rational(0)
    m = n if m is None else m
    return tuple(tuple(zero for _ in range(m)) for _ in range(n))


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = Cyc.rational(0)
            for x, y in zip(row, col):
                if not (x.is_zero() or y.is_zero()):
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c):
    c = _c(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_key(a):
    return tuple(x.key() for row in a for x in row)


def mat_trace(a) -> Cyc:
    t = Cyc.rational(0)
    for i in range(len(a)):
        t = t + a[i][i]
    return t


def mat_map(a, fn):
    return tuple(tuple(fn(x) for x in row) for row in a)


def _elim(rows, reduce_fully: bool = False):
    """Row echelon over the field; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(m):
        pivot = next((i for i in range(r, n) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        rng = range(n) if reduce_fully else range(r + 1, n)
        for i in rng:
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return rows, pivots


def mat_rank(a) -> int:
    if not a:
        return 0
    _, pivots = _elim(a)
    return len(pivots)


def mat_det(a) -> Cyc:
    n = len(a)
    rows = [list(r) for r in a]
    det = Cyc.rational(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if not rows[i][c].is_zero()), None)
        if pivot is None:
            return Cyc.rational(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, n):
            if not rows[i][c].is_zero():
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def mat_inverse(a):
    n = len(a)
    aug = [list(row) + list(identity(n)[i]) for i, row in enumerate(a)]
    rows, pivots = _elim(aug, reduce_fully=True)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix not invertible")
    return tuple(tuple(row[n:]) for row in rows)


def mat_charpoly_reverse(a) -> list[Cyc]:
    """Coefficients of det(1 - q*a), low to high in q (degree n)."""
    # Faddeev-LeVerrier gives char(x) = x^n + c_1 x^(n-1) + ... + c_n;
    # then det(1 - q a) = q^n char(1/q) = 1 + c_1 q + ... + c_n q^n.
    n = len(a)
    ci = []
    mk = a
    for k in range(1, n + 1):
        ck = mat_trace(mk) * Fraction(-1, k)
        ci.append(ck)
        if k < n:
            mk = mat_mul(a, mat_add(mk, mat_scale(identity(n), ck)))
    return [Cyc.rational(1)] + ci


def kron(a, b):
    na, nb = len(a), len(b)
    out = []
    for i in range(na):
        for k in range(nb):
            row = []
            for j in range(na):
                for l in range(nb):
                    row.append(a[i][j] * b[k][l])
            out.append(tuple(row))
    return tuple(out)


def mat_pow(a, k: int):
    n = len(a)
    out = identity(n)
    base = a
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out
