"""Colored particle monomials: order, gradings, admissibility, enumeration.

A factor ``x_i(-m)`` carries a *color* ``i`` in ``1..rank`` and a *depth*
``m >= 1``.  Factors commute, so a monomial is determined by its multiset
of factors.  We store the canonical sorted form: colors grouped with the
largest color leftmost, and depths weakly decreasing to the right inside
each color group (the rightmost factor is the largest one).

Single factors are ordered by ``x_i(n) < x_j(m)`` iff ``i > j``, or
``i == j`` and ``n < m`` (here ``n, m`` are the negated depths).
Monomials are compared right to left, factor by factor; a monomial that
extends another on the left is the greater one.  This order is total and
compatible with multiplication.

Admissibility relative to a module index ``r``:

* difference condition -- within one color, any two depths differ by at
  least 2;
* initial condition -- every factor of color ``j`` has depth at least
  ``1 + (number of factors of colors < j) + (1 if j <= r else 0)``.
  Under the difference condition it is enough to test the shallowest
  factor of each color.

The admissible monomials of a fixed weight are, color by color, partitions
with gap at least 2 and a prescribed minimal part, which is what
:func:`enumerate_admissible` generates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class MonomialError(ValueError):
    """Invalid factor data, malformed monomial text, or bad weight tuple."""


class SetupError(ValueError):
    """Invalid rank / module-index combination."""


@dataclass(frozen=True)
class Setup:
    """Ambient parameters: the rank and the module index ``0 <= r <= rank``."""

    rank: int
    module_index: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 1:
            raise SetupError(f"rank must be an integer >= 1, got {self.rank!r}")
        if not isinstance(self.module_index, int) or not 0 <= self.module_index <= self.rank:
            raise SetupError(
                f"module index must lie in 0..{self.rank}, got {self.module_index!r}"
            )

    @property
    def colors(self) -> range:
        return range(1, self.rank + 1)


class Factor(NamedTuple):
    color: int
    depth: int

    def __str__(self) -> str:
        return f"x{self.color}(-{self.depth})"


def _factor_key(factor) -> tuple[int, int]:
    # ascending key order == ascending factor order
    return (-factor[0], -factor[1])


class Monomial:
    """Canonical product of commuting factors ``x_i(-m)``.

    Instances are immutable value objects: equality is multiset equality of
    factors, and ``<`` implements the right-to-left order described in the
    module docstring.
    """

    __slots__ = ("factors", "_revkey")

    def __init__(self, factors: Iterable[tuple[int, int]] = ()):
        fs = sorted(((int(c), int(d)) for c, d in factors), key=_factor_key)
        self.factors = tuple(Factor(c, d) for c, d in fs)
        self._revkey = tuple(_factor_key(f) for f in reversed(self.factors))

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __lt__(self, other: "Monomial") -> bool:
        return self._revkey < other._revkey

    def __le__(self, other: "Monomial") -> bool:
        return self._revkey <= other._revkey

    def __gt__(self, other: "Monomial") -> bool:
        return self._revkey > other._revkey

    def __ge__(self, other: "Monomial") -> bool:
        return self._revkey >= other._revkey

    @property
    def sort_key(self):
        """Key realizing the monomial order through plain tuple comparison."""
        return self._revkey

    # -- structure -------------------------------------------------------

    def __len__(self) -> int:
        return len(self.factors)

    def __bool__(self) -> bool:
        return bool(self.factors)

    @property
    def is_identity(self) -> bool:
        return not self.factors

    @property
    def degree(self) -> int:
        return sum(f.depth for f in self.factors)

    def weight(self, rank: int) -> tuple[int, ...]:
        counts = [0] * rank
        for f in self.factors:
            counts[f.color - 1] += 1
        return tuple(counts)

    def depths_of_color(self, color: int) -> tuple[int, ...]:
        """Depths of the given color, ascending (shallowest first)."""
        return tuple(sorted(f.depth for f in self.factors if f.color == color))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.factors + other.factors)

    def without_positions(self, positions: Iterable[int]) -> "Monomial":
        drop = set(positions)
        return Monomial(f for p, f in enumerate(self.factors) if p not in drop)

    # -- text ------------------------------------------------------------

    def to_text(self) -> str:
        """Grammar form ``"x2(-3) x1(-1)"``; the identity is the empty string."""
        return " ".join(str(f) for f in self.factors)

    def __str__(self) -> str:
        return self.to_text() or "1"

    def __repr__(self) -> str:
        return f"Monomial({self.to_text()!r})"


IDENTITY = Monomial()


def make_monomial(setup: Setup, factors: Iterable[tuple[int, int]]) -> Monomial:
    """Build the canonical monomial from a factor multiset, validating ranges."""
    fs = []
    for c, d in factors:
        c, d = int(c), int(d)
        if not 1 <= c <= setup.rank:
            raise MonomialError(f"color {c} out of range 1..{setup.rank}")
        if d < 1:
            raise MonomialError(f"depth {d} must be >= 1")
        fs.append((c, d))
    return Monomial(fs)


_TOKEN = re.compile(r"^x(\d+)\(-(\d+)\)$")


def parse_monomial(text: str, setup: Setup) -> Monomial:
    """Parse whitespace-separated ``x<I>(-<M>)`` tokens, in any order.

    The empty (or all-whitespace) string denotes the identity monomial.
    """
    factors = []
    for token in text.split():
        match = _TOKEN.match(token)
        if not match:
            raise MonomialError(f"malformed factor token {token!r}")
        factors.append((int(match.group(1)), int(match.group(2))))
    return make_monomial(setup, factors)


def compare(b1: Monomial, b2: Monomial) -> int:
    """Return -1, 0 or 1 according to the monomial order."""
    if b1._revkey < b2._revkey:
        return -1
    if b1._revkey > b2._revkey:
        return 1
    return 0


@dataclass(frozen=True)
class Grading:
    degree: int
    weight: tuple[int, ...]
    length: int


def grading(b: Monomial, setup: Setup) -> Grading:
    for f in b.factors:
        if f.color > setup.rank:
            raise MonomialError(f"color {f.color} out of range 1..{setup.rank}")
    w = b.weight(setup.rank)
    return Grading(degree=b.degree, weight=w, length=len(b))


def ic_bound(color: int, weight: tuple[int, ...], setup: Setup) -> int:
    """Minimal admissible depth for a factor of the given color."""
    return 1 + sum(weight[: color - 1]) + (1 if color <= setup.module_index else 0)


def is_admissible(b: Monomial, setup: Setup) -> bool:
    w = b.weight(setup.rank)
    for color in setup.colors:
        depths = b.depths_of_color(color)
        if not depths:
            continue
        if depths[0] < ic_bound(color, w, setup):
            return False
        for shallow, deep in zip(depths, depths[1:]):
            if deep < shallow + 2:
                return False
    return True


def _check_weight(weight, setup: Setup) -> tuple[int, ...]:
    w = tuple(int(n) for n in weight)
    if len(w) != setup.rank:
        raise MonomialError(f"weight tuple must have {setup.rank} entries, got {len(w)}")
    if any(n < 0 for n in w):
        raise MonomialError(f"weight entries must be nonnegative, got {w}")
    return w


def min_degree(weight, setup: Setup) -> int:
    """Smallest degree carrying an admissible monomial of the given weight."""
    n = _check_weight(weight, setup)
    square = sum(v * v for v in n)
    cross = sum(n[i] * n[j] for i in range(len(n)) for j in range(i + 1, len(n)))
    boundary = sum(n[: setup.module_index])
    return square + cross + boundary


def _gap_partitions(count: int, low: int, budget: int, gap: int) -> Iterator[tuple[int, ...]]:
    """Ascending tuples (p1, p2, ...) with p1 >= low, p_{t+1} >= p_t + gap, sum <= budget."""
    if count == 0:
        yield ()
        return
    smallest = low
    while count * smallest + gap * count * (count - 1) // 2 <= budget:
        for rest in _gap_partitions(count - 1, smallest + gap, budget - smallest, gap):
            yield (smallest,) + rest
        smallest += 1


def _monomials_for_weight(
    setup: Setup, weight: tuple[int, ...], degree_cap: int, admissible: bool
) -> list[Monomial]:
    gap = 2 if admissible else 0
    bounds = [
        ic_bound(j, weight, setup) if admissible else 1 for j in setup.colors
    ]
    # minimal degree contributed by colors >= j, for pruning
    tail_min = [0] * (setup.rank + 1)
    for j in range(setup.rank, 0, -1):
        n = weight[j - 1]
        tail_min[j - 1] = tail_min[j] + n * bounds[j - 1] + gap * n * (n - 1) // 2

    out: list[Monomial] = []

    def rec(j: int, budget: int, acc: list[tuple[int, int]]) -> None:
        if j > setup.rank:
            out.append(Monomial(acc))
            return
        n = weight[j - 1]
        for parts in _gap_partitions(n, bounds[j - 1], budget - tail_min[j], gap):
            rec(j + 1, budget - sum(parts), acc + [(j, p) for p in parts])

    if tail_min[0] <= degree_cap:
        rec(1, degree_cap, [])
    return out


def _weights_capped(setup: Setup, cap: int, cost) -> list[tuple[int, ...]]:
    """All weight tuples whose cost (monotone per coordinate) is at most cap."""
    out: list[tuple[int, ...]] = []

    def rec(partial: list[int]) -> None:
        if len(partial) == setup.rank:
            out.append(tuple(partial))
            return
        n = 0
        while True:
            candidate = tuple(partial + [n] + [0] * (setup.rank - len(partial) - 1))
            if cost(candidate) > cap:
                break
            rec(partial + [n])
            n += 1

    rec([])
    return out


def enumerate_admissible(
    setup: Setup, degree_cap: int, weight=None
) -> list[Monomial]:
    """All admissible monomials of degree <= degree_cap, optionally of one weight.

    Deterministic order: ascending degree, then ascending monomial order.
    """
    if degree_cap < 0:
        raise MonomialError(f"degree cap must be >= 0, got {degree_cap}")
    if weight is not None:
        weights = [_check_weight(weight, setup)]
    else:
        weights = _weights_capped(setup, degree_cap, lambda w: min_degree(w, setup))
    out: list[Monomial] = []
    for w in weights:
        out.extend(_monomials_for_weight(setup, w, degree_cap, admissible=True))
    out.sort(key=lambda b: (b.degree, b.sort_key))
    return out


def enumerate_pbw(setup: Setup, degree_cap: int, weight=None) -> list[Monomial]:
    """All spanning monomials (depths >= 1, no conditions) of degree <= degree_cap."""
    if degree_cap < 0:
        raise MonomialError(f"degree cap must be >= 0, got {degree_cap}")
    if weight is not None:
        weights = [_check_weight(weight, setup)]
    else:
        weights = _weights_capped(setup, degree_cap, lambda w: sum(w))
    out: list[Monomial] = []
    for w in weights:
        out.extend(_monomials_for_weight(setup, w, degree_cap, admissible=False))
    out.sort(key=lambda b: (b.degree, b.sort_key))
    return out


def by_sector(monomials: Iterable[Monomial], setup: Setup):
    """Group monomials by (weight, degree), preserving their relative order."""
    sectors: dict[tuple[tuple[int, ...], int], list[Monomial]] = {}
    for b in monomials:
        sectors.setdefault((b.weight(setup.rank), b.degree), []).append(b)
    return sectors
