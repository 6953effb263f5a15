"""Truncated power series with exact rational coefficients.

A :class:`PowerSeries` stores a_0..a_N.  Nothing beyond index N is known,
so every operation takes an explicit target order and refuses to read past
the available coefficients.  Polynomials can be extended with
:meth:`PowerSeries.padded`, which is exact because their tail is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NormalizationError, NotInvertibleError, ParseError, TruncationError

__all__ = [
    "PowerSeries",
    "parse_rational",
    "parse_series",
    "format_rational",
    "multiply",
    "reciprocal",
    "alternate_signs",
    "pf_dual",
]


@dataclass(frozen=True)
class PowerSeries:
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def truncation_order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError("negative coefficient index")
        if n > self.truncation_order:
            raise TruncationError(
                f"coefficient {n} requested but series is truncated at order {self.truncation_order}"
            )
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, N: int) -> "PowerSeries":
        if N > self.truncation_order:
            raise TruncationError(f"cannot truncate order-{self.truncation_order} series at {N}")
        return PowerSeries(self.coefficients[: N + 1])

    def padded(self, N: int) -> "PowerSeries":
        """Return the series extended with zeros up to order N.

        Only meaningful when ``self`` is a polynomial; for a genuinely
        truncated series the new coefficients would be fabricated.
        """
        extra = N - self.truncation_order
        if extra <= 0:
            return self
        return PowerSeries(self.coefficients + (Fraction(0),) * extra)

    def __str__(self) -> str:
        return format_series(self)


def parse_rational(token: str) -> Fraction:
    tok = token.strip()
    if not tok:
        raise ParseError("empty coefficient literal")
    num, sep, den = tok.partition("/")
    try:
        p = int(num.strip())
        q = int(den.strip()) if sep else 1
    except ValueError:
        raise ParseError(f"malformed rational literal {token.strip()!r}") from None
    if q == 0:
        raise ParseError(f"zero denominator in {token.strip()!r}")
    return Fraction(p, q)


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_series(text: str) -> PowerSeries:
    """Parse ``"1,4,3,1"`` or ``"1, 1/2, -3/4"`` into a series of order count-1."""
    return PowerSeries(parse_rational(tok) for tok in text.split(","))


def format_series(f: PowerSeries) -> str:
    return ",".join(format_rational(c) for c in f.coefficients)


def _check_order(N: int, *series: PowerSeries) -> None:
    if N < 0:
        raise TruncationError(f"negative truncation order {N}")
    for s in series:
        if N > s.truncation_order:
            raise TruncationError(
                f"order {N} exceeds available truncation order {s.truncation_order}"
            )


def multiply(f: PowerSeries, g: PowerSeries, N: int) -> PowerSeries:
    """Cauchy product of f and g, truncated at order N."""
    _check_order(N, f, g)
    a, b = f.coefficients, g.coefficients
    return PowerSeries(sum(a[k] * b[n - k] for k in range(n + 1)) for n in range(N + 1))


def reciprocal(f: PowerSeries, N: int) -> PowerSeries:
    _check_order(N, f)
    a = f.coefficients
    if a[0] == 0:
        raise NotInvertibleError("series with zero constant term has no reciprocal")
    inv0 = 1 / a[0]
    h = [inv0]
    for n in range(1, N + 1):
        h.append(-inv0 * sum(a[k] * h[n - k] for k in range(1, n + 1)))
    return PowerSeries(h)


def alternate_signs(f: PowerSeries) -> PowerSeries:
    """Substitute z -> -z."""
    return PowerSeries(-c if n % 2 else c for n, c in enumerate(f.coefficients))


def pf_dual(f: PowerSeries, N: int) -> PowerSeries:
    """Return g = 1/f(-z) to order N.

    Requires f_0 == 1.  Under the evaluation sending h_n to f_n, the
    coefficient g_n is the image of the elementary symmetric function e_n.
    """
    if f.coefficients[0] != 1:
        raise NormalizationError(
            f"constant term must be exactly 1, got {format_rational(f.coefficients[0])}"
        )
    return reciprocal(alternate_signs(f), N)
