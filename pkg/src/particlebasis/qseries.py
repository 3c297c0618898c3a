"""Exact truncated power series in q, and graded characters.

A :class:`QSeries` holds integer coefficients ``c_0 .. c_T`` and is exact
modulo ``q^{T+1}``.  Truncation is explicit state: binary operations
return the minimum of the operand orders, so precision is never silently
overstated.  Division is only defined by units of the integer series ring
(constant term +-1); every Pochhammer factor ``(1-q)...(1-q^n)`` is such
a unit.

The graded character of a weight sector counts admissible monomials by
degree.  It has the closed product form

    q^(sum n_i^2 + sum_{i<j} n_i n_j + sum_{i<=r} n_i) / ((q)_{n_1} ... (q)_{n_l})

with ``(q)_n = (1-q)...(1-q^n)``, which :func:`fermionic_character`
evaluates; :func:`enumerative_character` computes the same series by
direct enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monomials import Setup, enumerate_admissible, min_degree, _check_weight


class QSeriesError(ValueError):
    pass


class QSeries:
    """Integer power series known exactly modulo ``q^{order+1}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = [int(c) for c in coeffs]
        if order is None:
            if not cs:
                raise QSeriesError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise QSeriesError(f"truncation order must be >= 0, got {order}")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs += [0] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([1], order)

    @classmethod
    def from_terms(cls, terms, order: int) -> "QSeries":
        cs = [0] * (order + 1)
        for exponent, coefficient in terms:
            if exponent < 0:
                raise QSeriesError(f"negative exponent {exponent}")
            if exponent <= order:
                cs[exponent] += int(coefficient)
        return cls(cs, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        if not 0 <= exponent <= self.order:
            raise QSeriesError(f"coefficient q^{exponent} unknown at order {self.order}")
        return self.coeffs[exponent]

    def terms(self) -> list[tuple[int, int]]:
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Exponent of the lowest nonzero coefficient, None for the zero series."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return None

    # -- ring operations (truncation order: min of the operands) ----------

    def __eq__(self, other) -> bool:
        return isinstance(other, QSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other):
        if isinstance(other, int):
            cs = list(self.coeffs)
            cs[0] += other
            return QSeries(cs, self.order)
        t = min(self.order, other.order)
        return QSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], t)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries([c * other for c in self.coeffs], self.order)
        t = min(self.order, other.order)
        cs = [0] * (t + 1)
        for e1, c1 in enumerate(self.coeffs[: t + 1]):
            if not c1:
                continue
            for e2 in range(t + 1 - e1):
                c2 = other.coeffs[e2]
                if c2:
                    cs[e1 + e2] += c1 * c2
        return QSeries(cs, t)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        """Inverse of a unit (constant term +-1)."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise QSeriesError("division by a series with zero constant term")
        if a0 not in (1, -1):
            raise QSeriesError(
                f"constant term {a0} is not a unit of the integer series ring"
            )
        t = self.order
        inv = [0] * (t + 1)
        inv[0] = a0
        for k in range(1, t + 1):
            acc = 0
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc += self.coeffs[i] * inv[k - i]
            inv[k] = -acc * a0
        return QSeries(inv, t)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = QSeries([other], self.order)
        t = min(self.order, other.order)
        return self.truncated(t) * other.inverse().truncated(t)

    def shifted(self, k: int) -> "QSeries":
        """Multiply by q^k; the result is exact modulo q^{order+k+1}."""
        if k < 0:
            raise QSeriesError(f"negative shift {k}")
        return QSeries([0] * k + list(self.coeffs), self.order + k)

    def truncated(self, order: int) -> "QSeries":
        if order > self.order:
            raise QSeriesError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return QSeries(self.coeffs[: order + 1], order)

    def __repr__(self) -> str:
        parts = []
        for e, c in self.terms():
            mag = abs(c)
            body = "1" if e == 0 else (f"q^{e}" if e > 1 else "q")
            if mag != 1 or e == 0:
                body = f"{mag}" if e == 0 else f"{mag}*{body}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts).lstrip("+ ") or "0"
        return f"{text} + O(q^{self.order + 1})"


def pochhammer(n: int, order: int) -> QSeries:
    """The polynomial (1-q)(1-q^2)...(1-q^n), truncated."""
    if n < 0:
        raise QSeriesError(f"pochhammer index must be >= 0, got {n}")
    result = QSeries.one(order)
    for k in range(1, n + 1):
        result = result * QSeries.from_terms([(0, 1), (k, -1)], order)
    return result


def fermionic_character(setup: Setup, weight, order: int) -> QSeries:
    """Closed-form character of one weight sector, exactly truncated."""
    w = _check_weight(weight, setup)
    lead = min_degree(w, setup)
    if lead > order:
        return QSeries.zero(order)
    inv = QSeries.one(order - lead)
    for n in w:
        inv = inv / pochhammer(n, order - lead)
    return inv.shifted(lead)


def enumerative_character(setup: Setup, weight, order: int) -> QSeries:
    """Character of one weight sector by direct enumeration of its basis."""
    w = _check_weight(weight, setup)
    counts = [0] * (order + 1)
    for b in enumerate_admissible(setup, order, weight=w):
        counts[b.degree] += 1
    return QSeries(counts, order)


@dataclass(frozen=True)
class CharacterTable:
    """Per-weight characters of one module; keys are weight tuples."""

    setup: Setup
    order: int
    entries: dict

    def weights(self) -> list[tuple[int, ...]]:
        return sorted(self.entries)

    def __getitem__(self, weight) -> QSeries:
        return self.entries[tuple(weight)]


def full_character(setup: Setup, order: int, method: str = "fermionic"):
    """Sum of the sector characters over every weight that can contribute.

    Returns ``(total, table)``; the sum ranges over exactly the weights
    whose minimal degree is at most the truncation order, so the truncated
    total is exact.
    """
    if method not in ("fermionic", "enumerative"):
        raise QSeriesError(f"unknown character method {method!r}")
    compute = fermionic_character if method == "fermionic" else enumerative_character
    from .monomials import _weights_capped

    total = QSeries.zero(order)
    entries = {}
    for w in _weights_capped(setup, order, lambda v: min_degree(v, setup)):
        series = compute(setup, w, order)
        entries[w] = series
        total = total + series
    return total, CharacterTable(setup=setup, order=order, entries=entries)


# -- serialization ---------------------------------------------------------


def series_to_json(series: QSeries) -> dict:
    return {"truncation_order": series.order, "terms": [[e, c] for e, c in series.terms()]}


def series_from_json(data: dict) -> QSeries:
    return QSeries.from_terms(data["terms"], data["truncation_order"])


def table_to_json(table: CharacterTable) -> dict:
    return {
        "rank": table.setup.rank,
        "module_index": table.setup.module_index,
        "truncation_order": table.order,
        "entries": {
            ",".join(map(str, w)): series_to_json(table.entries[w])
            for w in table.weights()
        },
    }


def table_from_json(data: dict) -> CharacterTable:
    setup = Setup(rank=data["rank"], module_index=data["module_index"])
    entries = {
        tuple(int(n) for n in key.split(",")): series_from_json(value)
        for key, value in data["entries"].items()
    }
    return CharacterTable(setup=setup, order=data["truncation_order"], entries=entries)
