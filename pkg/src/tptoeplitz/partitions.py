"""Integer partitions, Young's lattice and skew shapes."""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .errors import DomainError, ParseError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; ``Partition()`` is the empty partition.

    Being a tuple, partitions compare lexicographically and hash by value.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def largest(self) -> int:
        return self[0] if self else 0

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, k: int) -> int:
        """Zero-based part k, or 0 past the end (the zero padding convention)."""
        return self[k] if k < len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self)


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def __str__(self) -> str:
        return format_shape(self)


def skew(outer, inner=()) -> SkewShape:
    """Build a validated skew shape from any two part sequences."""
    lam, mu = Partition(outer), Partition(inner)
    if not contains(lam, mu):
        raise DomainError(f"{format_partition(mu)} is not contained in {format_partition(lam)}")
    return SkewShape(lam, mu)


def conjugate(p) -> Partition:
    p = tuple(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= k) for k in range(1, p[0] + 1))


def contains(outer, inner) -> bool:
    if len(inner) > len(outer):
        return False
    return all(m <= l for m, l in zip(inner, outer))


def strictly_precedes(inner, outer) -> bool:
    """The relation mu < lambda: containment, fewer parts, smaller largest part."""
    return (
        contains(outer, inner)
        and len(inner) < len(outer)
        and (not inner or inner[0] < outer[0])
    )


def partitions_in_box(max_parts: int, max_part: int) -> Iterator[Partition]:
    """All partitions (including the empty one) fitting in a max_parts x max_part box, lexicographically."""

    def rec(prefix, bound, room):
        yield Partition(prefix)
        if room == 0:
            return
        for p in range(1, bound + 1):
            yield from rec(prefix + (p,), p, room - 1)

    yield from rec((), max_part, max_parts)


def partitions_up_to_size(n: int) -> Iterator[Partition]:
    """All nonempty partitions with |lambda| <= n, lexicographically."""

    def rec(prefix, bound, remaining):
        if prefix:
            yield Partition(prefix)
        for p in range(1, min(bound, remaining) + 1):
            yield from rec(prefix + (p,), p, remaining - p)

    yield from rec((), n, n)


def inner_shapes(outer: Partition) -> Iterator[Partition]:
    """Every mu with mu < outer, in lexicographic order."""
    if not outer:
        return
    rows = len(outer) - 1
    caps = [min(outer[k], outer[0] - 1) for k in range(rows)]

    def rec(prefix, bound):
        yield Partition(prefix)
        k = len(prefix)
        if k == rows:
            return
        for p in range(1, min(bound, caps[k]) + 1):
            yield from rec(prefix + (p,), p)

    yield from rec((), outer[0] - 1)


def enumerate_shapes(max_outer_parts: int, max_outer_part: int) -> Iterator[SkewShape]:
    """Yield every lambda/mu with mu < lambda and lambda inside the given box.

    Order is lexicographic in lambda, then in mu, so the stream is
    reproducible and restartable.
    """
    if max_outer_parts < 1 or max_outer_part < 1:
        raise DomainError("enumeration bounds must be positive")
    for lam in partitions_in_box(max_outer_parts, max_outer_part):
        if not lam:
            continue
        for mu in inner_shapes(lam):
            yield SkewShape(lam, mu)


def count_shapes(max_outer_parts: int, max_outer_part: int) -> int:
    return sum(1 for _ in enumerate_shapes(max_outer_parts, max_outer_part))


def parse_partition(text: str) -> Partition:
    t = text.strip()
    if t in ("", "-"):
        return Partition()
    try:
        parts = [int(tok) for tok in t.split(",")]
    except ValueError:
        raise ParseError(f"malformed partition {text!r}") from None
    try:
        return Partition(parts)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_partition(p) -> str:
    return ",".join(map(str, p)) if p else "-"


def parse_shape(text: str) -> SkewShape:
    outer, sep, inner = text.partition("/")
    lam = parse_partition(outer)
    mu = parse_partition(inner) if sep else Partition()
    if not contains(lam, mu):
        raise ParseError(f"inner partition of {text!r} is not contained in the outer one")
    return SkewShape(lam, mu)


def format_shape(s: SkewShape) -> str:
    return f"{format_partition(s.outer)}/{format_partition(s.inner)}"
