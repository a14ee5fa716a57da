"""Coefficient (y-seed) dynamics: mutation, permutation and word application.

A seed is an exchange matrix together with one coefficient per vertex.  The
coefficient mutation at vertex k sends y_k to 1/y_k and multiplies every
other coefficient by a power of (1 + y_k) or (1 + 1/y_k) determined by the
sign of lambda_{k,i}; the product of all coefficients is conserved and plays
the role of the multiplicative null root q.

Coefficients may be exact rationals (numeric mode) or :class:`RatFunc`
values (symbolic mode); both satisfy the same arithmetic protocol, so every
operation below is mode-agnostic.

Words are token lists in written order; composition follows the convention
that the rightmost factor acts first, matching how mutation words such as
``r_0 = mu_1 (1,2) mu_1`` are applied.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import PoleAtPoint
from .polyfunc import RatFunc
from .quiver import (Quiver, mutate_matrix, perm_inverse, permute_matrix)
from .rational import QONE, qparse, qstr

# One token is ("mu", k) with k 1-based, or ("perm", images) in one-line form.
Token = tuple
Word = list


def mu(k: int) -> Token:
    return ("mu", k)


def perm(images: tuple[int, ...]) -> Token:
    return ("perm", tuple(images))


@dataclass(frozen=True)
class YSeed:
    quiver: Quiver
    y: tuple

    @property
    def n(self) -> int:
        return self.quiver.n

    def y_at(self, i: int):
        """1-based coefficient access."""
        return self.y[i - 1]

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n,
             "y": [qstr(v) for v in self.y],
             "lambda": [list(r) for r in self.quiver.lam]},
            sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "YSeed":
        d = json.loads(text)
        q = Quiver(n=d["n"], lam=tuple(tuple(r) for r in d["lambda"]))
        return YSeed(quiver=q, y=tuple(qparse(s) for s in d["y"]))


def mutate_seed(s: YSeed, k: int) -> YSeed:
    """Seed mutation at vertex k; an involution on (matrix, y)."""
    lam = s.quiver.lam
    yk = s.y[k - 1]
    try:
        inv_yk = 1 / yk
    except ZeroDivisionError as e:
        raise PoleAtPoint(f"y_{k} = 0 under mutation") from e
    one_plus = 1 + yk
    one_plus_inv = 1 + inv_yk
    ys = []
    for i, yi in enumerate(s.y, start=1):
        if i == k:
            ys.append(inv_yk)
            continue
        lki = lam[k - 1][i - 1]
        if lki == 0:
            ys.append(yi)
        elif lki > 0:
            try:
                ys.append(yi / one_plus_inv**lki)
            except ZeroDivisionError as e:
                raise PoleAtPoint(f"1 + 1/y_{k} = 0 under mutation") from e
        else:
            ys.append(yi * one_plus ** (-lki))
    return YSeed(quiver=mutate_matrix(s.quiver, k), y=tuple(ys))


def permute_seed(s: YSeed, images: tuple[int, ...]) -> YSeed:
    """Relabel vertices: the new coefficient at i is the old one at p(i)."""
    ys = tuple(s.y[images[i] - 1] for i in range(len(images)))
    return YSeed(quiver=permute_matrix(s.quiver, images), y=ys)


def apply_word(s: YSeed, word: Word) -> YSeed:
    """Apply a token word, rightmost token first."""
    for kind, arg in reversed(word):
        if kind == "mu":
            s = mutate_seed(s, arg)
        elif kind == "perm":
            s = permute_seed(s, arg)
        else:
            raise ValueError(f"unknown token kind {kind!r}")
    return s


def invert_word(word: Word) -> Word:
    """Formal inverse: reversed tokens, each replaced by its inverse."""
    out: Word = []
    for kind, arg in reversed(word):
        if kind == "mu":
            out.append(("mu", arg))
        else:
            out.append(("perm", perm_inverse(arg)))
    return out


def q_of(s: YSeed):
    """The conserved product of all coefficients."""
    prod = None
    for v in s.y:
        prod = v if prod is None else prod * v
    return prod


def seeds_equal(a: YSeed, b: YSeed) -> bool:
    return a.quiver.lam == b.quiver.lam and all(
        x == y for x, y in zip(a.y, b.y))


def symbolic_seed(q: Quiver, vt=None) -> tuple[YSeed, object]:
    """A seed whose coefficients are the symbolic generators y_1..y_N."""
    from .rational import VarTable

    if vt is None:
        vt = VarTable(names=tuple(f"y_{i}" for i in range(1, q.size + 1)))
    ys = tuple(RatFunc.var(vt, f"y_{i}") for i in range(1, q.size + 1))
    return YSeed(quiver=q, y=ys), vt


def numeric_seed(q: Quiver, values) -> YSeed:
    ys = tuple(values)
    if len(ys) != q.size:
        raise ValueError("coefficient tuple length does not match quiver size")
    return YSeed(quiver=q, y=ys)


def all_ones_seed(q: Quiver) -> YSeed:
    return YSeed(quiver=q, y=tuple(QONE for _ in range(q.size)))
