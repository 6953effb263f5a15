"""Skew Schur functions evaluated under coefficient homomorphisms.

A series f with f_0 = 1 defines the evaluation h_n -> a_n; it then sends
e_n to the coefficients of g = 1/f(-z).  Skew Schur functions are never
built symbolically, only their images via Jacobi-Trudi determinants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NormalizationError, TruncationError
from .partitions import SkewShape, strictly_precedes
from .series import PowerSeries, pf_dual
from .toeplitz import det

_ZERO = Fraction(0)


def required_truncation(s: SkewShape) -> int:
    """Largest coefficient index appearing in the Jacobi-Trudi matrix of s."""
    return s.outer[0] + len(s.outer) - 1


def jacobi_trudi_matrix(coeffs, s: SkewShape) -> list[list[Fraction]]:
    lam, mu = s.outer, s.inner
    r = len(lam)
    return [
        [
            coeffs[n] if (n := lam[i] - i + j - mu.part(j)) >= 0 else _ZERO
            for j in range(r)
        ]
        for i in range(r)
    ]


def _check(f: PowerSeries, s: SkewShape, N: int) -> None:
    if f.coefficients[0] != 1:
        raise NormalizationError("constant term must be exactly 1")
    if not strictly_precedes(s.inner, s.outer):
        raise DomainError(f"shape {s} does not satisfy mu < lambda")
    need = required_truncation(s)
    if N < need:
        raise TruncationError(f"shape {s} needs coefficients up to order {need}, have {N}")


def eval_skew_h(f: PowerSeries, s: SkewShape) -> Fraction:
    """det(a_{lambda_i - i + j - mu_j}): the image of s_{lambda/mu} under h_n -> a_n."""
    _check(f, s, f.truncation_order)
    return det(jacobi_trudi_matrix(f.coefficients, s))


def eval_skew_e(f: PowerSeries, s: SkewShape, N: int | None = None) -> Fraction:
    """det(b_{lambda_i - i + j - mu_j}) with b = 1/f(-z).

    By the dual Jacobi-Trudi identity this is the image of the conjugate
    skew Schur function s_{lambda'/mu'} under h_n -> a_n.
    """
    if N is None:
        N = required_truncation(s)
    _check(f, s, N)
    b = pf_dual(f, N)
    return det(jacobi_trudi_matrix(b.coefficients, s))


@dataclass(frozen=True)
class DualityCheck:
    shape: SkewShape
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def verify_duality(f: PowerSeries, s: SkewShape, N: int | None = None) -> DualityCheck:
    """Compare s_{lambda/mu} evaluated on f with s_{lambda'/mu'} evaluated on 1/f(-z)."""
    conj = s.conjugate()
    if N is None:
        N = max(required_truncation(s), required_truncation(conj))
    g = pf_dual(f, N)
    return DualityCheck(s, eval_skew_h(f, s), eval_skew_h(g, conj))
