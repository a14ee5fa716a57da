"""Laurent polynomials in the single root generator u_z, and matrices of them.

The spectral variable is z = u_z^(n+1); keeping matrices over Laurent
polynomials in u_z makes the fractional powers z^{1/(n+1)} appearing in the
gauge matrices exact.  Coefficients are exact rationals.  A polynomial is a
dict {exponent: coefficient} with no zero coefficients stored.
"""

from __future__ import annotations

from .rational import Q, QONE, QZERO, qpow

LPoly = dict  # {int exponent of u_z: rational coefficient}


def lp(c=0, e: int = 0) -> LPoly:
    c = c if hasattr(c, "denominator") else Q(c)
    return {} if c == 0 else {e: c}


def lp_add(a: LPoly, b: LPoly) -> LPoly:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, QZERO) + c
        if s == 0:
            out.pop(e, None)
        else:
            out[e] = s
    return out


def lp_neg(a: LPoly) -> LPoly:
    return {e: -c for e, c in a.items()}


def lp_sub(a: LPoly, b: LPoly) -> LPoly:
    return lp_add(a, lp_neg(b))


def lp_mul(a: LPoly, b: LPoly) -> LPoly:
    out: LPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, QZERO) + ca * cb
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
    return out


def lp_scale(a: LPoly, c) -> LPoly:
    return {} if c == 0 else {e: v * c for e, v in a.items()}


def lp_shift_q(a: LPoly, u_q, power: int) -> LPoly:
    """Substitute u_z -> u_z * u_q^power (the exact z -> q^{power/2(n+1)...}
    shift used for T_{q,z}^{±1}); each exponent e picks up u_q^(power*e)."""
    return {e: c * qpow(u_q, power * e) for e, c in a.items()}


def lp_eval(a: LPoly, x):
    total = QZERO
    for e, c in a.items():
        total = total + c * qpow(x, e)
    return total


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def m_zero(rows: int, cols: int) -> list:
    return [[{} for _ in range(cols)] for _ in range(rows)]


def m_identity(dim: int) -> list:
    out = m_zero(dim, dim)
    for i in range(dim):
        out[i][i] = lp(1)
    return out


def m_from_scalars(rows) -> list:
    return [[lp(v) for v in row] for row in rows]


def m_add(A: list, B: list) -> list:
    return [[lp_add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def m_mul(A: list, B: list) -> list:
    rows, inner, cols = len(A), len(B), len(B[0])
    out = m_zero(rows, cols)
    for i in range(rows):
        for k in range(inner):
            aik = A[i][k]
            if not aik:
                continue
            for j in range(cols):
                if B[k][j]:
                    out[i][j] = lp_add(out[i][j], lp_mul(aik, B[k][j]))
    return out


def m_scale(A: list, s: LPoly) -> list:
    return [[lp_mul(s, a) for a in row] for row in A]


def m_eq(A: list, B: list) -> bool:
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def m_shift_q(A: list, u_q, power: int) -> list:
    return [[lp_shift_q(a, u_q, power) for a in row] for row in A]


def m_det(A: list) -> LPoly:
    """Exact determinant by expansion over column subsets (dims <= ~12)."""
    dim = len(A)
    memo: dict = {}

    def rec(row: int, used: int) -> LPoly:
        if row == dim:
            return lp(1)
        key = (row, used)
        if key in memo:
            return memo[key]
        total: LPoly = {}
        pos = 0  # position among the columns still available
        for col in range(dim):
            bit = 1 << col
            if used & bit:
                continue
            if A[row][col]:
                sub = rec(row + 1, used | bit)
                term = lp_mul(A[row][col], sub)
                total = lp_add(total, term if pos % 2 == 0 else lp_neg(term))
            pos += 1
        memo[key] = total
        return total

    return rec(0, 0)


def m2_inv_lower(A: list) -> list:
    """Inverse of a 2x2 lower-triangular matrix of Laurent monomials."""
    a, c, d = A[0][0], A[1][0], A[1][1]
    ai = _lp_inv_mono(a)
    di = _lp_inv_mono(d)
    return [[ai, {}], [lp_neg(lp_mul(lp_mul(di, c), ai)), di]]


def _lp_inv_mono(a: LPoly) -> LPoly:
    if len(a) != 1:
        raise ValueError("can only invert monomials exactly")
    (e, c), = a.items()
    return {-e: 1 / c}


def char_poly_2x2(A: list) -> tuple:
    """(trace, det) of a 2x2 Laurent matrix."""
    tr = lp_add(A[0][0], A[1][1])
    det = lp_sub(lp_mul(A[0][0], A[1][1]), lp_mul(A[0][1], A[1][0]))
    return tr, det
