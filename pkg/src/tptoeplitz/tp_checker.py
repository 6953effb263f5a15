"""Window-bounded total positivity verdicts for Toeplitz matrices.

Every verdict is relative to a finite window: "holds" means no negative
essential minor exists among the enumerated shapes, never that the
infinite matrix is totally positive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, NormalizationError, TruncationError
from .partitions import Partition, SkewShape, enumerate_shapes, format_shape
from .schur import jacobi_trudi_matrix
from .series import PowerSeries, format_rational, format_series, pf_dual
from .toeplitz import MinorIndex, det, format_minor, shape_to_minor

HOLDS = "holds-up-to-window"
VIOLATED = "violated"


@dataclass(frozen=True)
class Certificate:
    kind: str
    property: str
    bound: int
    window: int
    shape: SkewShape | None = None
    minor: MinorIndex | None = None
    value: Fraction | None = None
    # tp2 fast path only: which coefficient condition failed, and where
    condition: str | None = None
    index: int | None = None

    @property
    def violated(self) -> bool:
        return self.kind == VIOLATED

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "property": self.property, "bound": self.bound, "window": self.window}
        if self.violated:
            d["shape"] = format_shape(self.shape)
            d["minor"] = format_minor(self.minor)
            d["value"] = format_rational(self.value)
            if self.condition is not None:
                d["condition"] = self.condition
                d["index"] = self.index
        return d


@dataclass(frozen=True)
class Verdict:
    certificate: Certificate
    shapes_checked: int
    violations: int = 0

    @property
    def holds(self) -> bool:
        return not self.certificate.violated

    def to_dict(self) -> dict:
        return {
            "verdict": self.certificate.kind,
            "shapes_checked": self.shapes_checked,
            "violations": self.violations,
            **self.certificate.to_dict(),
        }


def _violation(prop, bound, window, shape, value, **extra) -> Certificate:
    return Certificate(VIOLATED, prop, bound, window, shape, shape_to_minor(shape), value, **extra)


def _require_normalized(f: PowerSeries) -> None:
    if f.coefficients[0] != 1:
        raise NormalizationError(
            f"constant term must be exactly 1, got {format_rational(f.coefficients[0])}"
        )


def shape_values(f: PowerSeries, shapes: Iterable[SkewShape]) -> Iterator[tuple[SkewShape, Fraction]]:
    coeffs = f.coefficients
    for s in shapes:
        yield s, det(jacobi_trudi_matrix(coeffs, s))


def _scan(f, prop, bound, window, shapes) -> Verdict:
    first = None
    checked = bad = 0
    for s, v in shape_values(f, shapes):
        checked += 1
        if v < 0:
            bad += 1
            if first is None:
                first = _violation(prop, bound, window, s, v)
    cert = first or Certificate(HOLDS, prop, bound, window)
    return Verdict(cert, checked, bad)


def _check_args(f: PowerSeries, bound: int, window: int, name: str) -> None:
    _require_normalized(f)
    if bound < 1 or window < 1:
        raise DomainError(f"{name} and window must be positive")
    need = bound + window - 1
    if f.truncation_order < need:
        raise TruncationError(
            f"window {window} with {name} {bound} needs truncation order {need}, "
            f"series has {f.truncation_order}"
        )


def tp_order(f: PowerSeries, r: int, window: int) -> Verdict:
    """Check every essential minor of order <= r whose shape has largest part <= window."""
    _check_args(f, r, window, "order")
    return _scan(f, f"order-{r}", r, window, enumerate_shapes(r, window))


def tp_level(f: PowerSeries, ell: int, window: int) -> Verdict:
    """Check every essential minor of level <= ell and order <= window."""
    _check_args(f, ell, window, "level")
    return _scan(f, f"level-{ell}", ell, window, enumerate_shapes(window, ell))


def tp2_fast(f: PowerSeries, window: int | None = None) -> Verdict:
    """Decide order-2 positivity from the coefficient sequence alone.

    Checks nonnegativity, absence of internal zeros and log-concavity.
    With ``window`` w the test covers exactly the minors examined by
    ``tp_order(f, 2, w)``: signs of a_0..a_w, log-concavity at 1..w, and
    internal zeros ending at most at a_{w+1}.  By default w = N - 1.
    """
    _require_normalized(f)
    N = f.truncation_order
    if window is None:
        window = max(N - 1, 0)
    if window + 1 > N and window > 0:
        raise TruncationError(f"window {window} needs truncation order {window + 1}, series has {N}")
    a = f.coefficients
    prop = "order-2"

    def fail(condition, index, shape):
        value = det(jacobi_trudi_matrix(a, shape))
        return Verdict(_violation(prop, 2, window, shape, value, condition=condition, index=index), 0, 1)

    for n in range(1, window + 1):
        if a[n] < 0:
            return fail("nonnegativity", n, SkewShape(Partition((n,)), Partition()))
    last_nonzero = 0
    for j in range(1, window + 2 if window else 1):
        if a[j] == 0:
            continue
        # a_h > 0 for h <= window after the sign check; a_j may be negative only at j = window + 1
        if j - last_nonzero > 1 and a[j] > 0:
            mu = Partition((j - last_nonzero - 2,)) if j - last_nonzero > 2 else Partition()
            return fail("internal-zero", last_nonzero + 1, SkewShape(Partition((j - 1, j - 1)), mu))
        last_nonzero = j
    for j in range(1, window + 1):
        if a[j] * a[j] < a[j - 1] * a[j + 1]:
            return fail("log-concavity", j, SkewShape(Partition((j, j)), Partition()))
    return Verdict(Certificate(HOLDS, prop, 2, window), 0, 0)


@dataclass
class TheoremBReport:
    """Outcome of comparing level-r positivity of f with order-r positivity of 1/f(-z)."""

    f: PowerSeries
    g: PowerSeries
    r: int
    window: int
    level_verdict: Verdict
    order_verdict: Verdict
    shapes_compared: int
    shape_equalities: int
    mismatches: list = field(default_factory=list)
    certificates_mirrored: bool = True
    exact_conjugates: bool = True

    @property
    def verdicts_agree(self) -> bool:
        return self.level_verdict.holds == self.order_verdict.holds

    @property
    def consistent(self) -> bool:
        return self.verdicts_agree and not self.mismatches and self.certificates_mirrored

    def to_dict(self) -> dict:
        return {
            "property": f"level-{self.r} of f vs order-{self.r} of g",
            "r": self.r,
            "window": self.window,
            "f": format_series(self.f),
            "g": format_series(self.g),
            "shapes_compared": self.shapes_compared,
            "shape_equalities": self.shape_equalities,
            "mismatches": [
                {"shape": format_shape(s), "f_value": format_rational(a), "g_value": format_rational(b)}
                for s, a, b in self.mismatches
            ],
            "verdicts_agree": self.verdicts_agree,
            "certificates_mirrored": self.certificates_mirrored,
            "exact_conjugates": self.exact_conjugates,
            "f_level": self.level_verdict.to_dict(),
            "g_order": self.order_verdict.to_dict(),
        }


def verify_theorem_b(f: PowerSeries, r: int, window: int) -> TheoremBReport:
    """Check that the level-r verdict for f matches the order-r verdict for g = 1/f(-z).

    Besides the two verdicts, every shape lambda/mu of the level enumeration
    is compared exactly against lambda'/mu' evaluated on g.  A mismatch
    means an implementation bug.  Certificates are mirrored when the
    conjugate of each side's witness is a witness of equal value on the
    other side; ``exact_conjugates`` records whether the two lexicographically
    first witnesses are conjugate to each other.
    """
    _check_args(f, r, window, "level")
    g = pf_dual(f, f.truncation_order)
    level_v = tp_level(f, r, window)
    order_v = tp_order(g, r, window)

    f_vals = dict(shape_values(f, enumerate_shapes(window, r)))
    g_vals = dict(shape_values(g, enumerate_shapes(r, window)))
    mismatches = []
    for s, v in f_vals.items():
        w = g_vals[s.conjugate()]
        if v != w:
            mismatches.append((s, v, w))

    mirrored = exact = True
    cf, cg = level_v.certificate, order_v.certificate
    if cf.violated and cg.violated:
        mirrored = (
            g_vals.get(cf.shape.conjugate()) == cf.value
            and f_vals.get(cg.shape.conjugate()) == cg.value
        )
        exact = cg.shape == cf.shape.conjugate()
    elif cf.violated or cg.violated:
        mirrored = exact = False

    return TheoremBReport(
        f, g, r, window, level_v, order_v,
        shapes_compared=len(f_vals),
        shape_equalities=len(f_vals) - len(mismatches),
        mismatches=mismatches,
        certificates_mirrored=mirrored,
        exact_conjugates=exact,
    )


@dataclass
class TheoremAViolation:
    """A polynomial f whose Toeplitz matrix passes order r while that of 1/f(-z) fails it."""

    trial: int
    f: PowerSeries
    g: PowerSeries
    r: int
    window: int
    f_verdict: Verdict
    g_verdict: Verdict
    g_first_failing_order: int

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "f": format_series(self.f),
            "g": format_series(self.g),
            "r": self.r,
            "g_first_failing_order": self.g_first_failing_order,
            "window": self.window,
            "f_order": self.f_verdict.to_dict(),
            "g_order": self.g_verdict.to_dict(),
        }


def check_theorem_a(f: PowerSeries, window: int = 6, max_order: int = 4, trial: int = 0):
    """Return a TheoremAViolation for polynomial f, or None.

    Finds the largest r <= max_order for which f passes ``tp_order`` within
    the window and tests 1/f(-z) at that same r.  f is zero-padded, so it
    must be a polynomial.
    """
    N = window + max_order - 1
    f = f.padded(N)
    g = pf_dual(f, N)
    best = None
    for r in range(1, max_order + 1):
        v = tp_order(f, r, window)
        if not v.holds:
            break
        best = (r, v)
    if best is None:
        return None
    r, fv = best
    gv = tp_order(g, r, window)
    if gv.holds:
        return None
    first = next(k for k in range(1, r + 1) if not tp_order(g, k, window).holds)
    return TheoremAViolation(trial, f, g, r, window, fv, gv, first)


def sample_polynomials(max_degree: int, coeff_bound: int, seed: int) -> Iterator[PowerSeries]:
    """Endless seeded stream of 1 + a_1 z + ... + a_d z^d with integer a_n in [0, coeff_bound]."""
    rng = random.Random(seed)
    while True:
        yield PowerSeries([1] + [rng.randint(0, coeff_bound) for _ in range(max_degree)])


def falsify_theorem_a(max_degree: int, coeff_bound: int, trials: int, seed: int,
                      window: int = 6, max_order: int = 4) -> TheoremAViolation | None:
    if max_degree < 2 or coeff_bound < 1 or trials < 1:
        raise DomainError("need max_degree >= 2, coeff_bound >= 1 and trials >= 1")
    if window < 1 or max_order < 1:
        raise DomainError("window and max_order must be positive")
    stream = sample_polynomials(max_degree, coeff_bound, seed)
    for trial in range(trials):
        found = check_theorem_a(next(stream), window, max_order, trial)
        if found is not None:
            return found
    return None
