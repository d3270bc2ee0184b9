"""Seifert matrices and Conway polynomials by exact determinant.

The Conway polynomial of a knot with Seifert matrix ``M`` is read off as

    det(s^-1 M - s M^T),   s = sqrt(t),

rewritten in ``z = s^-1 - s``.  Determinants are taken by fraction-free
(Bareiss) elimination over Z[s, s^-1]; plain cofactor expansion is kept as
an independent check for small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from .laurent import LaurentPoly, exact_div, s_to_z

Rows = Tuple[Tuple[int, ...], ...]


class MatrixFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertMatrix:
    entries: Rows = ()

    def __post_init__(self):
        g = len(self.entries)
        for row in self.entries:
            if len(row) != g:
                raise MatrixFormatError(f"Seifert matrix must be square; got a row of length {len(row)} with {g} rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SeifertMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SeifertMatrix":
        return SeifertMatrix(tuple(zip(*self.entries)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> List[List[int]]:
        return [list(r) for r in self.entries]


# -- determinants ---------------------------------------------------------

def bareiss_det(a: Sequence[Sequence], zero, one, divide: Callable):
    """Fraction-free Gaussian elimination over an integral domain.

    ``divide(p, q)`` must return the exact quotient; the Bareiss identity
    guarantees every division performed here is exact.  Zero pivots are
    handled by a row swap.
    """
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k] == zero:
            for r in range(k + 1, n):
                if m[r][k] != zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - mik * row_k[j]
                row_i[j] = divide(num, prev) if num != zero else zero
            row_i[k] = zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def cofactor_det(a: Sequence[Sequence], zero, one):
    """Laplace expansion along the first row; exponential, for small checks only."""
    n = len(a)
    if n == 0:
        return one
    if n == 1:
        return a[0][0]
    total = zero
    for j in range(n):
        if a[0][j] == zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * cofactor_det(minor, zero, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def _int_div(p: int, q: int) -> int:
    d, r = divmod(p, q)
    if r:
        raise ArithmeticError("inexact integer division in Bareiss elimination")
    return d


def int_det(rows: Sequence[Sequence[int]]) -> int:
    return bareiss_det(rows, 0, 1, _int_div)


def laurent_det(rows: Sequence[Sequence[LaurentPoly]], var: str = "s") -> LaurentPoly:
    return bareiss_det(rows, LaurentPoly({}, var), LaurentPoly.const(1, var), exact_div)


# -- Seifert operations ----------------------------------------------------

def alexander_matrix(M: SeifertMatrix) -> List[List[LaurentPoly]]:
    """Entries of ``s^-1 M - s M^T`` as s-polynomials."""
    g = M.size
    return [
        [LaurentPoly({-1: M[i, j], 1: -M[j, i]}, "s") for j in range(g)]
        for i in range(g)
    ]


def conway_from_seifert(M: SeifertMatrix, method: str = "bareiss") -> LaurentPoly:
    """Conway polynomial (in z) of the knot with Seifert matrix ``M``.

    Raises :class:`~linkmu.laurent.NotExpressibleInZ` when the determinant
    is not a polynomial in ``s^-1 - s``.
    """
    if M.size == 0:
        return LaurentPoly.const(1, "z")
    rows = alexander_matrix(M)
    if method == "bareiss":
        det = laurent_det(rows)
    elif method == "cofactor":
        det = cofactor_det(rows, LaurentPoly({}, "s"), LaurentPoly.const(1, "s"))
    else:
        raise ValueError(f"unknown determinant method {method!r}")
    return s_to_z(det)


def validate_knot_matrix(M: SeifertMatrix) -> bool:
    """True iff det(M - M^T) = 1, as for a Seifert matrix of a knot."""
    g = M.size
    return int_det([[M[i, j] - M[j, i] for j in range(g)] for i in range(g)]) == 1


def stabilize(M: SeifertMatrix, u: Sequence[int], x: int) -> SeifertMatrix:
    """Elementary enlargement ``[[M, u, 0], [0, x, 1], [0, 0, 0]]``."""
    g = M.size
    if len(u) != g:
        raise MatrixFormatError(f"column has length {len(u)}, expected {g}")
    rows = [list(M.entries[i]) + [int(u[i]), 0] for i in range(g)]
    rows.append([0] * g + [int(x), 1])
    rows.append([0] * (g + 2))
    return SeifertMatrix.from_rows(rows)


def build_kk_matrix(k: int) -> SeifertMatrix:
    """Seifert matrix of the knot K_k on the basis x_1..x_{2k-2}, y_1..y_{2k-3}, z.

    >>> build_kk_matrix(2).rows()
    [[0, 0, 1, 1], [0, 0, 0, -1], [1, -1, 1, 0], [0, -1, 0, 0]]
    """
    if k < 2:
        raise ValueError("K_k is defined for k >= 2")
    nx, ny = 2 * k - 2, 2 * k - 3
    size = nx + ny + 1
    zc = nx + ny
    M = [[0] * size for _ in range(size)]
    for i in range(1, nx + 1):
        for j in range(1, ny + 1):
            if i == j:
                M[i - 1][nx + j - 1] = 1
            elif i >= 3 and i % 2 == 1 and j == i - 1:
                M[i - 1][nx + j - 1] = -1
    M[0][zc] = 1
    M[nx - 1][zc] = -1
    for i in range(1, ny + 1):
        for j in range(1, nx + 1):
            if i == j:
                M[nx + i - 1][j - 1] = 1
            elif i % 2 == 1 and j == i + 1:
                M[nx + i - 1][j - 1] = -1
    M[nx][nx] = 1
    M[zc][nx - 1] = -1
    return SeifertMatrix.from_rows(M)


def kk_blocks(k: int):
    """The ``A`` ((2k-2) x (2k-3)) and ``B`` ((2k-3) x (2k-2)) blocks of ``build_kk_matrix(k)``."""
    M = build_kk_matrix(k).rows()
    nx, ny = 2 * k - 2, 2 * k - 3
    A = [row[nx:nx + ny] for row in M[:nx]]
    B = [row[:nx] for row in M[nx:nx + ny]]
    return A, B


def kk_closed_form(k: int) -> LaurentPoly:
    """``1 + (-1)^k 2 z^(2k-2) + z^(4k-4)``, the factored product expanded."""
    if k < 2:
        raise ValueError("K_k is defined for k >= 2")
    z = LaurentPoly.gen("z")
    return ((-1) ** (k - 1) - z ** (2 * k - 2)) * ((-1) ** (k + 1) - z ** (2 * k - 2))


# -- file format -------------------------------------------------------------

def parse_matrix_text(text: str) -> SeifertMatrix:
    """First line ``g``, then ``g`` lines of ``g`` integers."""
    lines = [ln for ln in (l.strip() for l in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    try:
        g = int(lines[0])
    except ValueError:
        raise MatrixFormatError(f"first line must be the size, got {lines[0]!r}") from None
    if g < 0:
        raise MatrixFormatError("negative matrix size")
    body = lines[1:]
    if len(body) != g:
        raise MatrixFormatError(f"expected {g} rows, found {len(body)}")
    rows = []
    for n, ln in enumerate(body, start=2):
        try:
            row = [int(x) for x in ln.split()]
        except ValueError:
            raise MatrixFormatError(f"line {n}: non-integer entry") from None
        if len(row) != g:
            raise MatrixFormatError(f"line {n}: expected {g} entries, found {len(row)}")
        rows.append(row)
    return SeifertMatrix.from_rows(rows)


def format_matrix_text(M: SeifertMatrix) -> str:
    return "\n".join([str(M.size)] + [" ".join(str(x) for x in row) for row in M.entries]) + "\n"
