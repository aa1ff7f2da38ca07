"""Dense square matrices over commutative rings.

Every routine here works over any ring whose elements support ``+``, ``-``
and ``*`` together with the integers 0 and 1 (Fraction, Jet1, Jet2,
BivarPoly).  Nothing divides, except the Bareiss fast path, which is only
taken for rational input.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Any, Callable, Iterable, Sequence

__all__ = [
    "SquareMatrix",
    "berkowitz_charpoly",
    "determinant",
    "bareiss_determinant",
    "adjugate",
    "cofactor",
    "matmul",
    "transpose",
]


class SquareMatrix:
    """Immutable n-by-n matrix; indices are 0-based."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Any]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError(f"matrix is not square: row of length {len(r)} in order {n}")
        self._rows = rows

    @classmethod
    def identity(cls, n: int, one: Any = 1, zero: Any = 0) -> "SquareMatrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, zero: Any = 0) -> "SquareMatrix":
        return cls([[zero] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[Any], zero: Any = 0) -> "SquareMatrix":
        n = len(values)
        return cls([[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Any, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self._rows[i][j]

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"SquareMatrix({[list(r) for r in self._rows]!r})"

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        _check_same_order(self, other)
        return SquareMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        _check_same_order(self, other)
        return SquareMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __neg__(self) -> "SquareMatrix":
        return SquareMatrix([[-a for a in r] for r in self._rows])

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        _check_same_order(self, other)
        return SquareMatrix(matmul(self._rows, other._rows))

    def scale(self, c: Any) -> "SquareMatrix":
        return SquareMatrix([[c * a for a in r] for r in self._rows])

    def map(self, fn: Callable[[Any], Any]) -> "SquareMatrix":
        return SquareMatrix([[fn(a) for a in r] for r in self._rows])

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(transpose(self._rows))

    def minor(self, i: int, j: int) -> "SquareMatrix":
        """Delete row ``i`` and column ``j`` (0-based)."""
        n = self.order
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"minor index ({i}, {j}) out of range for order {n}")
        return SquareMatrix(
            [r[:j] + r[j + 1 :] for k, r in enumerate(self._rows) if k != i]
        )

    def trace(self) -> Any:
        total = 0
        for i in range(self.order):
            total = total + self._rows[i][i]
        return total


def _check_same_order(a: SquareMatrix, b: SquareMatrix) -> None:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")


def _rows_of(m) -> Sequence[Sequence[Any]]:
    return m.rows if isinstance(m, SquareMatrix) else m


def matmul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> list[list[Any]]:
    """Product of rectangular row-major matrices."""
    a, b = _rows_of(a), _rows_of(b)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    if a and len(a[0]) != inner:
        raise ValueError(f"shape mismatch: {len(a[0])} columns vs {inner} rows")
    bt = list(zip(*b)) if inner else [()] * cols
    out = []
    for row in a:
        new_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                acc = acc + x * y
            new_row.append(acc)
        out.append(new_row)
    return out


def transpose(a: Sequence[Sequence[Any]]) -> list[list[Any]]:
    a = _rows_of(a)
    return [list(c) for c in zip(*a)]


def berkowitz_charpoly(m: SquareMatrix) -> list[Any]:
    """Coefficients ``[c_0, ..., c_n]`` of ``det(xI - M)``, lowest degree first.

    Division-free (Berkowitz), so it is valid over rings with zero divisors.
    ``c_n`` is always 1 and ``det(M) == (-1)**n * c_0``.
    """
    a = _rows_of(m)
    n = len(a)
    # p holds the characteristic polynomial of the leading k-by-k block,
    # highest degree first
    p: list[Any] = [1]
    for k in range(n):
        # block [[A_k, c], [r, a_kk]]: Toeplitz column [1, -a_kk, -r c, -r A c, ..., -r A^(k-1) c]
        col = [a[i][k] for i in range(k)]
        row = a[k][:k]
        t = [1, -a[k][k]]
        vec = col
        for _ in range(k):
            acc = 0
            for x, y in zip(row, vec):
                acc = acc + x * y
            t.append(-acc)
            vec = [_dot(a[i][:k], vec) for i in range(k)]
        new_p = []
        for i in range(k + 2):
            acc = 0
            for j in range(max(0, i - len(t) + 1), min(i, k) + 1):
                acc = acc + t[i - j] * p[j]
            new_p.append(acc)
        p = new_p
    return p[::-1]


def _dot(xs, ys):
    acc = 0
    for x, y in zip(xs, ys):
        acc = acc + x * y
    return acc


def _is_rational_matrix(a: Sequence[Sequence[Any]]) -> bool:
    return all(
        isinstance(x, (int, Fraction)) and not isinstance(x, bool) for r in a for x in r
    )


def bareiss_determinant(m: SquareMatrix) -> Fraction:
    """Fraction-free elimination for rational matrices.

    Rows are scaled to integers first so every intermediate division is an
    exact integer division.
    """
    a = _rows_of(m)
    n = len(a)
    if n == 0:
        return Fraction(1)
    scale = 1
    rows = []
    for r in a:
        qs = [Fraction(x) for x in r]
        d = lcm(*(q.denominator for q in qs))
        scale *= d
        rows.append([q.numerator * (d // q.denominator) for q in qs])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


def determinant(m: SquareMatrix, method: str = "auto") -> Any:
    """Exact determinant.

    ``method`` is ``"berkowitz"``, ``"bareiss"`` (rationals only) or
    ``"auto"``, which takes Bareiss for rational entries and Berkowitz
    otherwise.
    """
    a = _rows_of(m)
    if method == "auto":
        method = "bareiss" if _is_rational_matrix(a) else "berkowitz"
    if method == "bareiss":
        if not _is_rational_matrix(a):
            raise TypeError("Bareiss elimination needs rational entries")
        return bareiss_determinant(a)
    if method == "berkowitz":
        c = berkowitz_charpoly(a)
        n = len(a)
        return c[0] if n % 2 == 0 else -c[0]
    raise ValueError(f"unknown determinant method {method!r}")


def adjugate(m: SquareMatrix) -> SquareMatrix:
    """Adjugate via Cayley-Hamilton on the Berkowitz coefficients.

    ``adj(M) = (-1)^(n-1) (M^(n-1) + c_(n-1) M^(n-2) + ... + c_1 I)``.
    """
    a = _rows_of(m)
    n = len(a)
    if n == 0:
        raise ValueError("adjugate of an empty matrix is undefined")
    c = berkowitz_charpoly(a)
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    # Horner: S = (((M + c_{n-1} I) M + c_{n-2} I) M ...) + c_1 I
    s = [[c[n] * x for x in r] for r in ident]
    for k in range(n - 1, 0, -1):
        s = matmul(s, a)
        for i in range(n):
            s[i][i] = s[i][i] + c[k]
    if n % 2 == 0:
        s = [[-x for x in r] for r in s]
    return SquareMatrix(s)


def cofactor(m: SquareMatrix, i: int, j: int, method: str = "auto") -> Any:
    """Signed minor ``(-1)^(i+j) det(M without row i, column j)``, 1-based."""
    if not isinstance(m, SquareMatrix):
        m = SquareMatrix(m)
    n = m.order
    if n < 1 or not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"cofactor index ({i}, {j}) out of range for order {n}")
    d = determinant(m.minor(i - 1, j - 1), method=method)
    return d if (i + j) % 2 == 0 else -d
