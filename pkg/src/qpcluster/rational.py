"""Exact rational numbers and variable tables.

``Q`` is the arbitrary-precision rational type used for every numeric value
in the package.  It is gmpy2's ``mpq`` when available (much faster on the
large integers produced by long mutation words) with ``fractions.Fraction``
as a pure-Python fallback.  Both keep values normalized at all times:
gcd(|num|, den) = 1, den > 0, and zero is 0/1.

Rationals are serialized as decimal-free ``"p/q"`` strings, always with an
explicit denominator, so round-trips are bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

try:
    from gmpy2 import mpq as Q  # type: ignore[import-untyped]
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Q

#: Exact rational zero and one, shared constants.
QZERO = Q(0)
QONE = Q(1)


def qstr(x) -> str:
    """Serialize an exact rational as ``"p/q"`` (denominator always present)."""
    return f"{x.numerator}/{x.denominator}"


def qparse(s: str):
    """Parse ``"p/q"`` or ``"p"`` into a rational.  Inverse of :func:`qstr`."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return Q(int(p), int(q))
    return Q(int(s))


def qpow(x, e: int):
    """x**e for integer e (negative allowed; x must be nonzero then)."""
    if e >= 0:
        return x**e
    return QONE / (x ** (-e))


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names plus declared formal roots.

    ``roots[name] = k`` declares that the stored generator ``name`` is the
    formal k-th root of a model quantity (for example a generator ``u_q``
    with q = u_q^(2(n+1))).  Root generators are always sampled positive so
    that every fractional power evaluates to an exact rational.
    """

    names: tuple[str, ...]
    roots: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")
        for name, k in self.roots.items():
            if name not in self.names:
                raise ValueError(f"root generator {name!r} not among names")
            if k < 1:
                raise ValueError(f"root order for {name!r} must be >= 1")

    def index(self, name: str) -> int:
        return self.names.index(name)

    def is_root(self, name: str) -> bool:
        return name in self.roots
