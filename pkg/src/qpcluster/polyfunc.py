"""Sparse multivariate polynomials and rational functions over exact rationals.

A polynomial is a dict mapping exponent tuples to nonzero rational
coefficients::

    x0^2*x1 + 3   ->   {(2, 1, 0): Q(1), (0, 0, 0): Q(3)}     (3 variables)

The zero polynomial is the empty dict.  Monomials are ordered lexicographically
by exponent tuple; this fixed order makes every normalization deterministic.

:class:`RatFunc` is a quotient of two such polynomials kept in canonical form:
numerator and denominator are divided by their polynomial gcd and scaled so
that the denominator's lex-leading coefficient is one.  Two construction
orders of the same function therefore yield bit-identical representations.
"""

from __future__ import annotations

from .errors import DivisionByZero, PoleAtPoint, UnboundVariable
from .rational import Q, QONE, QZERO, VarTable

Term = tuple[int, ...]
PolyDict = dict[Term, object]


# ---------------------------------------------------------------------------
# raw polynomial arithmetic on dicts
# ---------------------------------------------------------------------------

def p_zero() -> PolyDict:
    return {}

def p_const(nvars: int, c) -> PolyDict:
    c = Q(c)
    return {} if c == 0 else {(0,) * nvars: c}

def p_var(nvars: int, idx: int) -> PolyDict:
    e = [0] * nvars
    e[idx] = 1
    return {tuple(e): QONE}

def p_add(a: PolyDict, b: PolyDict) -> PolyDict:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, QZERO) + c
        if s == 0:
            out.pop(m, None)
        else:
            out[m] = s
    return out

def p_neg(a: PolyDict) -> PolyDict:
    return {m: -c for m, c in a.items()}

def p_sub(a: PolyDict, b: PolyDict) -> PolyDict:
    return p_add(a, p_neg(b))

def p_mul(a: PolyDict, b: PolyDict) -> PolyDict:
    out: PolyDict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m, QZERO) + ca * cb
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
    return out

def p_scale(a: PolyDict, c) -> PolyDict:
    return {} if c == 0 else {m: v * c for m, v in a.items()}

def p_pow(a: PolyDict, e: int) -> PolyDict:
    if e < 0:
        raise ValueError("p_pow needs e >= 0")
    nvars = _nvars_of(a)
    out = p_const(nvars, 1) if nvars >= 0 else {(): QONE}
    base = a
    while e:
        if e & 1:
            out = p_mul(out, base)
        base = p_mul(base, base)
        e >>= 1
    return out

def _nvars_of(a: PolyDict) -> int:
    for m in a:
        return len(m)
    return -1  # zero polynomial carries no arity

def p_lead(a: PolyDict) -> tuple[Term, object]:
    """Lex-leading (monomial, coefficient) of a nonzero polynomial."""
    m = max(a)
    return m, a[m]

def p_eval(a: PolyDict, vals: tuple) -> object:
    total = QZERO
    for m, c in a.items():
        t = c
        for v, e in zip(vals, m):
            if e:
                t = t * v**e
        total = total + t
    return total


# ---------------------------------------------------------------------------
# exact division and gcd (primitive PRS)
# ---------------------------------------------------------------------------

def _deg_in(a: PolyDict, v: int) -> int:
    return max((m[v] for m in a), default=-1)

def _to_univ(a: PolyDict, v: int) -> dict[int, PolyDict]:
    """View ``a`` as a polynomial in variable v with PolyDict coefficients."""
    out: dict[int, PolyDict] = {}
    for m, c in a.items():
        d = m[v]
        mm = m[:v] + (0,) + m[v + 1 :]
        out.setdefault(d, {})[mm] = c
    return out

def _from_univ(u: dict[int, PolyDict], v: int) -> PolyDict:
    out: PolyDict = {}
    for d, coeff in u.items():
        for m, c in coeff.items():
            out[m[:v] + (d,) + m[v + 1 :]] = c
    return out

def p_div_exact(a: PolyDict, b: PolyDict) -> PolyDict:
    """``a / b`` when the division is exact; raises ArithmeticError otherwise."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if not a:
        return {}
    if len(b) == 1:
        mb, cb = next(iter(b.items()))
        out: PolyDict = {}
        for m, c in a.items():
            mm = tuple(x - y for x, y in zip(m, mb))
            if any(e < 0 for e in mm):
                raise ArithmeticError("inexact polynomial division")
            out[mm] = c / cb
        return out
    v = next(i for i in range(len(next(iter(b)))) if _deg_in(b, i) > 0)
    ua, ub = _to_univ(a, v), _to_univ(b, v)
    db = max(ub)
    lb = ub[db]
    quo: dict[int, PolyDict] = {}
    rem = ua
    while rem:
        da = max(rem)
        if da < db:
            raise ArithmeticError("inexact polynomial division")
        qc = p_div_exact(rem[da], lb)
        quo[da - db] = qc
        for d, coeff in ub.items():
            nd = d + da - db
            r = p_sub(rem.get(nd, {}), p_mul(qc, coeff))
            if r:
                rem[nd] = r
            else:
                rem.pop(nd, None)
    return _from_univ(quo, v)

def _mono_content(a: PolyDict) -> Term:
    its = iter(a)
    m0 = next(its)
    lo = list(m0)
    for m in its:
        for i, e in enumerate(m):
            if e < lo[i]:
                lo[i] = e
    return tuple(lo)

def _mono_shift(a: PolyDict, m0: Term) -> PolyDict:
    if not any(m0):
        return a
    return {tuple(x - y for x, y in zip(m, m0)): c for m, c in a.items()}

def _univ_content(u: dict[int, PolyDict]) -> PolyDict:
    cont: PolyDict = {}
    for coeff in u.values():
        cont = p_gcd(cont, coeff)
    return cont

def _prem(f: dict[int, PolyDict], g: dict[int, PolyDict]) -> dict[int, PolyDict]:
    """Pseudo-remainder of f by g (both univariate views, g nonzero)."""
    dg = max(g)
    lg = g[dg]
    r = {d: dict(c) for d, c in f.items()}
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        # r <- lg*r - lr*x^(dr-dg)*g
        nr: dict[int, PolyDict] = {}
        for d, c in r.items():
            nr[d] = p_mul(c, lg)
        for d, c in g.items():
            nd = d + dr - dg
            t = p_sub(nr.get(nd, {}), p_mul(lr, c))
            if t:
                nr[nd] = t
            else:
                nr.pop(nd, None)
        r = {d: c for d, c in nr.items() if c}
    return r

def p_gcd(a: PolyDict, b: PolyDict) -> PolyDict:
    """A gcd of a and b (unique up to a rational scalar; deterministic)."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    ma, mb = _mono_content(a), _mono_content(b)
    a1, b1 = _mono_shift(a, ma), _mono_shift(b, mb)
    common = tuple(min(x, y) for x, y in zip(ma, mb))
    base: PolyDict = {common: QONE}
    if len(a1) == 1 or len(b1) == 1:
        return base
    nv = len(common)
    vs = [i for i in range(nv) if _deg_in(a1, i) > 0 or _deg_in(b1, i) > 0]
    if not vs:
        return base
    v = vs[0]
    ua, ub = _to_univ(a1, v), _to_univ(b1, v)
    ca, cb = _univ_content(ua), _univ_content(ub)
    c = p_gcd(ca, cb)
    fa = p_div_exact(a1, ca)
    fb = p_div_exact(b1, cb)
    if _deg_in(fa, v) <= 0 or _deg_in(fb, v) <= 0:
        return p_mul(base, c)
    f, g = (fa, fb) if _deg_in(fa, v) >= _deg_in(fb, v) else (fb, fa)
    while True:
        uf, ug = _to_univ(f, v), _to_univ(g, v)
        r = _prem(uf, ug)
        if not r:
            gp = p_div_exact(g, _univ_content(_to_univ(g, v)))
            return p_mul(base, p_mul(c, gp))
        if max(r) == 0:
            return p_mul(base, c)
        rp = _from_univ(r, v)
        rp = p_div_exact(rp, _univ_content(r))
        f, g = g, rp


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """A multivariate rational function over Q, kept in canonical form.

    Instances are immutable; arithmetic returns new objects.  All operands of
    one expression must share the same :class:`VarTable`.
    """

    __slots__ = ("vt", "num", "den")

    def __init__(self, vt: VarTable, num: PolyDict, den: PolyDict | None = None,
                 _normalized: bool = False):
        if den is None:
            den = p_const(len(vt.names), 1)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not _normalized:
            num, den = _rf_normalize(num, den)
        self.vt = vt
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------
    @staticmethod
    def const(vt: VarTable, c) -> "RatFunc":
        n = len(vt.names)
        return RatFunc(vt, p_const(n, c), p_const(n, 1), _normalized=True)

    @staticmethod
    def var(vt: VarTable, name: str) -> "RatFunc":
        n = len(vt.names)
        return RatFunc(vt, p_var(n, vt.index(name)), p_const(n, 1),
                       _normalized=True)

    # -- predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.vt is not self.vt and other.vt != self.vt:
                raise ValueError("operands use different variable tables")
            return other
        return RatFunc.const(self.vt, other)

    def __add__(self, other):
        o = self._coerce(other)
        return RatFunc(self.vt,
                       p_add(p_mul(self.num, o.den), p_mul(o.num, self.den)),
                       p_mul(self.den, o.den))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return RatFunc(self.vt, p_neg(self.num), self.den, _normalized=True)

    def __sub__(self, other):
        return self.__add__(self._coerce(other).__neg__())

    def __rsub__(self, other):
        return self.__neg__().__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(self.vt, p_mul(self.num, o.num), p_mul(self.den, o.den))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RatFunc(self.vt, p_mul(self.num, o.den), p_mul(self.den, o.num))

    def __rtruediv__(self, other):
        return RatFunc.const(self.vt, other).__truediv__(self)

    def __pow__(self, e: int):
        if e >= 0:
            return RatFunc(self.vt, p_pow(self.num, e), p_pow(self.den, e))
        if self.is_zero():
            raise DivisionByZero("negative power of zero")
        return RatFunc(self.vt, p_pow(self.den, -e), p_pow(self.num, -e))

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RatFunc, int)) and not _is_rat(other):
            return NotImplemented
        o = self._coerce(other)
        return self.num == o.num and self.den == o.den

    __hash__ = None  # type: ignore[assignment]

    # -- evaluation ----------------------------------------------------------
    def eval(self, point: dict[str, object]):
        """Exact value at ``point`` (name -> rational).

        Raises :class:`UnboundVariable` if a needed generator is missing and
        :class:`PoleAtPoint` if the denominator vanishes there.
        """
        vals = []
        for i, name in enumerate(self.vt.names):
            if _uses_var(self.num, i) or _uses_var(self.den, i):
                if name not in point:
                    raise UnboundVariable(f"no value bound for {name!r}")
                vals.append(Q(point[name]))
            else:
                vals.append(QZERO)
        den = p_eval(self.den, tuple(vals))
        if den == 0:
            raise PoleAtPoint("denominator vanished at evaluation point")
        return p_eval(self.num, tuple(vals)) / den

    def __repr__(self) -> str:
        return f"RatFunc({_fmt_poly(self.num, self.vt)})/({_fmt_poly(self.den, self.vt)})"


def _is_rat(x) -> bool:
    return hasattr(x, "numerator") and hasattr(x, "denominator")

def _uses_var(a: PolyDict, i: int) -> bool:
    return any(m[i] for m in a)

def _rf_normalize(num: PolyDict, den: PolyDict) -> tuple[PolyDict, PolyDict]:
    if not num:
        return {}, p_const(len(next(iter(den))), 1)
    g = p_gcd(num, den)
    if len(g) > 1 or any(next(iter(g))):
        num = p_div_exact(num, g)
        den = p_div_exact(den, g)
    _, lc = p_lead(den)
    if lc != 1:
        inv = QONE / lc
        num = p_scale(num, inv)
        den = p_scale(den, inv)
    return num, den

def _fmt_poly(a: PolyDict, vt: VarTable) -> str:
    if not a:
        return "0"
    parts = []
    for m in sorted(a, reverse=True):
        c = a[m]
        mono = "*".join(
            f"{vt.names[i]}^{e}" if e != 1 else vt.names[i]
            for i, e in enumerate(m) if e
        )
        parts.append(f"{c}" if not mono else (f"{c}*{mono}" if c != 1 else mono))
    return " + ".join(parts)


#: A Value is either an exact rational (numeric mode) or a RatFunc (symbolic).
Value = object
