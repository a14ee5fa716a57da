"""Skew-symmetric exchange matrices: construction, mutation, permutation.

Vertices are 1-based everywhere in the public API (matching the labels used
for mutation words); the dense integer matrix is stored 0-based internally.
A quiver has no loops and no 2-cycles, so one signed integer per ordered pair
is the whole structure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import IndexOutOfRange

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Quiver:
    """Family parameter n and the (4n+4) x (4n+4) exchange matrix.

    Mutation and permutation work for any square skew-symmetric matrix (the
    size is read off the matrix), so small ad-hoc quivers can reuse them.
    """

    n: int
    lam: Matrix

    @property
    def size(self) -> int:
        return len(self.lam)

    def entry(self, i: int, j: int) -> int:
        """1-based matrix entry lambda_{i,j}."""
        return self.lam[i - 1][j - 1]

    def check_skew(self) -> None:
        N = self.size
        for i in range(N):
            if self.lam[i][i] != 0:
                raise ValueError(f"diagonal entry at {i + 1} is nonzero")
            for j in range(i + 1, N):
                if self.lam[i][j] != -self.lam[j][i]:
                    raise ValueError(f"not skew-symmetric at ({i + 1},{j + 1})")

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "lambda": [list(r) for r in self.lam]},
            sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "Quiver":
        d = json.loads(text)
        return Quiver(n=d["n"], lam=tuple(tuple(r) for r in d["lambda"]))


def build_gen_qpvi_quiver(n: int) -> Quiver:
    """Exchange matrix of the generalized q-PVI quiver for a given n >= 1.

    The matrix is the sum of X_{i,j} = E_{i,j} - E_{j,i} terms: four X-terms
    for each of the two distinguished bottom vertices 1, 2 against the four
    top corner vertices, and four X-terms per remaining bottom vertex pair
    (2i+1, 2i+2) against the top vertices 2i+2n+1 .. 2i+2n+4.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    N = 4 * n + 4
    m = [[0] * N for _ in range(N)]

    def add_x(i: int, j: int, s: int) -> None:
        m[i - 1][j - 1] += s
        m[j - 1][i - 1] -= s

    add_x(1, 4 * n + 3, +1)
    add_x(1, 4 * n + 4, -1)
    add_x(1, 2 * n + 3, -1)
    add_x(1, 2 * n + 4, +1)
    add_x(2, 4 * n + 3, -1)
    add_x(2, 4 * n + 4, +1)
    add_x(2, 2 * n + 3, +1)
    add_x(2, 2 * n + 4, -1)
    for i in range(1, n + 1):
        add_x(2 * i + 1, 2 * i + 2 * n + 1, +1)
        add_x(2 * i + 1, 2 * i + 2 * n + 2, -1)
        add_x(2 * i + 1, 2 * i + 2 * n + 3, -1)
        add_x(2 * i + 1, 2 * i + 2 * n + 4, +1)
        add_x(2 * i + 2, 2 * i + 2 * n + 1, -1)
        add_x(2 * i + 2, 2 * i + 2 * n + 2, +1)
        add_x(2 * i + 2, 2 * i + 2 * n + 3, +1)
        add_x(2 * i + 2, 2 * i + 2 * n + 4, -1)
    return Quiver(n=n, lam=tuple(tuple(r) for r in m))


def mutate_matrix(q: Quiver, k: int) -> Quiver:
    """Matrix mutation at vertex k (1-based); an involution."""
    N = q.size
    if not 1 <= k <= N:
        raise IndexOutOfRange(f"vertex {k} outside 1..{N}")
    k -= 1
    lam = q.lam
    out = []
    for i in range(N):
        row = list(lam[i])
        for j in range(N):
            if i == k or j == k:
                row[j] = -lam[i][j]
            elif lam[i][k] > 0 and lam[k][j] > 0:
                row[j] = lam[i][j] + lam[i][k] * lam[k][j]
            elif lam[i][k] < 0 and lam[k][j] < 0:
                row[j] = lam[i][j] - lam[i][k] * lam[k][j]
        out.append(tuple(row))
    return Quiver(n=q.n, lam=tuple(out))


def permute_matrix(q: Quiver, images: tuple[int, ...]) -> Quiver:
    """Relabel vertices by the permutation ``i -> images[i-1]`` (1-based).

    The new matrix reads old entries through the permutation:
    lambda'_{i,j} = lambda_{p(i),p(j)}, consistent with coefficients moving as
    y'_i = y_{p(i)}.
    """
    N = q.size
    lam = q.lam
    out = tuple(
        tuple(lam[images[i] - 1][images[j] - 1] for j in range(N))
        for i in range(N)
    )
    return Quiver(n=q.n, lam=out)


def transposition(N: int, a: int, b: int) -> tuple[int, ...]:
    """One-line form of the transposition (a, b) on 1..N."""
    images = list(range(1, N + 1))
    images[a - 1], images[b - 1] = b, a
    return tuple(images)


def perm_inverse(images: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(images)
    for i, im in enumerate(images):
        inv[im - 1] = i + 1
    return tuple(inv)


def perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p after q): i -> p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(p)))


def apply_word_matrix(q: Quiver, word) -> Quiver:
    """Apply a token word (seed-module format) to the matrix alone,
    rightmost token first."""
    for kind, arg in reversed(word):
        if kind == "mu":
            q = mutate_matrix(q, arg)
        elif kind == "perm":
            q = permute_matrix(q, arg)
        else:
            raise ValueError(f"unknown token kind {kind!r}")
    return q


def is_invariant(q: Quiver, word) -> bool:
    """True iff the word returns the exchange matrix entrywise."""
    return apply_word_matrix(q, word).lam == q.lam
