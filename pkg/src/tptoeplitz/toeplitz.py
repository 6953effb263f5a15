"""Toeplitz matrices of power series, their minors, and the minor <-> skew shape bijection.

The Toeplitz matrix of f has entry a_{j-i} at (i, j) when j >= i and zero
below the diagonal.  Essential minors (j_k >= i_k for all k, j_1 > i_1,
j_r > i_r) correspond one-to-one, up to a common shift of rows and
columns, with skew shapes lambda/mu where mu < lambda.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DomainError, ParseError, TruncationError
from .partitions import Partition, SkewShape, strictly_precedes
from .series import PowerSeries


@dataclass(frozen=True)
class MinorIndex:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if not rows or len(rows) != len(cols):
            raise DomainError("rows and cols must have equal positive length")
        for name, idx in (("rows", rows), ("cols", cols)):
            if idx[0] < 0 or any(idx[k] >= idx[k + 1] for k in range(len(idx) - 1)):
                raise DomainError(f"{name} must be strictly increasing nonnegative integers: {idx}")

    @property
    def order(self) -> int:
        return len(self.rows)

    def shifted(self, c: int) -> "MinorIndex":
        return MinorIndex(tuple(i + c for i in self.rows), tuple(j + c for j in self.cols))

    def __str__(self) -> str:
        return format_minor(self)


def toeplitz_entry(f: PowerSeries, i: int, j: int) -> Fraction:
    if i < 0 or j < 0:
        raise DomainError("Toeplitz indices are nonnegative")
    if j < i:
        return Fraction(0)
    return f[j - i]  # raises TruncationError past the truncation order


def det(matrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first scaled by the lcm of its denominators so that the
    elimination runs over the integers; the scales are divided out at the end.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = 1
    rows = []
    for row in matrix:
        pairs = [
            (x if isinstance(x, (int, Fraction)) else Fraction(x)).as_integer_ratio() for x in row
        ]
        m = lcm(*(d for _, d in pairs))
        scale *= m
        rows.append([n * (m // d) if d != 1 else n * m for n, d in pairs])

    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for p in range(k + 1, n):
                if rows[p][k] != 0:
                    rows[k], rows[p] = rows[p], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - rik * rk[j]) // prev
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


def cofactor_det(matrix) -> Fraction:
    """Laplace expansion along the first row. Exponential; meant as an oracle for small orders."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(matrix[0][0])
    total = Fraction(0)
    for j in range(n):
        a = matrix[0][j]
        if a == 0:
            continue
        sub = [row[:j] + row[j + 1:] for row in matrix[1:]]
        total += (-1) ** j * Fraction(a) * cofactor_det(sub)
    return total


def submatrix(f: PowerSeries, m: MinorIndex) -> list[list[Fraction]]:
    widest = m.cols[-1] - m.rows[0]
    if widest > f.truncation_order:
        raise TruncationError(
            f"minor {format_minor(m)} needs a_{widest}, series is truncated at order {f.truncation_order}"
        )
    a = f.coefficients
    zero = Fraction(0)
    return [[a[j - i] if j >= i else zero for j in m.cols] for i in m.rows]


def minor_det(f: PowerSeries, m: MinorIndex) -> Fraction:
    return det(submatrix(f, m))


def level(m: MinorIndex) -> int:
    return m.cols[-1] - m.rows[0] + 1 - m.order


def is_essential(m: MinorIndex) -> bool:
    return (
        all(j >= i for i, j in zip(m.rows, m.cols))
        and m.cols[0] > m.rows[0]
        and m.cols[-1] > m.rows[-1]
    )


def minor_to_shape(m: MinorIndex) -> SkewShape:
    if not is_essential(m):
        raise DomainError(f"minor {format_minor(m)} is not essential")
    r = m.order
    jr = m.cols[-1]
    lam = [jr - i + k - r for k, i in enumerate(m.rows, start=1)]
    mu = [jr - j + k - r for k, j in enumerate(m.cols, start=1)]
    while mu and mu[-1] == 0:
        mu.pop()
    shape = SkewShape(Partition(lam), Partition(mu))
    # checked rather than assumed
    assert len(shape.outer) == r and strictly_precedes(shape.inner, shape.outer), shape
    return shape


def shape_to_minor(s: SkewShape) -> MinorIndex:
    """Canonical essential minor of a shape, anchored at first row 0."""
    lam, mu = s.outer, s.inner
    if not strictly_precedes(mu, lam):
        raise DomainError(f"shape {s} does not satisfy mu < lambda")
    r = len(lam)
    jr = lam[0] + r - 1
    rows = tuple(jr + k - r - lam[k - 1] for k in range(1, r + 1))
    cols = tuple(jr + k - r - mu.part(k - 1) for k in range(1, r + 1))
    return MinorIndex(rows, cols)


def parse_minor(text: str) -> MinorIndex:
    fields = {}
    for part in text.split(";"):
        key, sep, val = part.partition("=")
        if not sep:
            raise ParseError(f"malformed minor field {part!r}")
        try:
            fields[key.strip()] = tuple(int(x) for x in val.split(","))
        except ValueError:
            raise ParseError(f"malformed index list {val!r}") from None
    if set(fields) != {"rows", "cols"}:
        raise ParseError(f"minor must have exactly rows= and cols=, got {text!r}")
    try:
        return MinorIndex(fields["rows"], fields["cols"])
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_minor(m: MinorIndex) -> str:
    return f"rows={','.join(map(str, m.rows))};cols={','.join(map(str, m.cols))}"
