"""Rewriting of spanning monomial vectors onto the admissible basis.

Two exact algorithms compute the normal form of a monomial vector:

* :func:`straighten_by_rewriting` repeatedly replaces the least
  non-admissible monomial by strictly greater ones of the same degree and
  weight, using the quadratic operator identities: for colors ``i <= j``
  and a total depth ``M``, the sum of ``x_i(-a) x_j(-b)`` over all splits
  ``a + b = M`` annihilates the highest weight vector.  A difference-
  condition violation is solved directly for its balanced pair; an
  initial-condition violation is resolved by pairing the offending factor
  with the smallest factor of a smaller color and recursing on the
  shorter sub-monomials, by induction on the number of smaller-color
  factors.  Every step is instrumented: replacements must be strictly
  greater and grading-preserving, or an :class:`AssertionError` is raised.

* :func:`straighten_by_elimination` assembles *all* relation instances of
  a (degree, weight) sector plus the annihilation rows, runs exact
  Gauss-Jordan elimination with admissible monomials as free parameters,
  and substitutes.  It is the reference implementation; the two variants
  must agree exactly.

Coefficients are exact rationals throughout; solving for a repeated-pair
term introduces halves, so denominators are powers of two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import rref
from .monomials import (
    Monomial,
    Setup,
    enumerate_pbw,
    ic_bound,
    is_admissible,
)


class InconsistencyError(RuntimeError):
    """Sector elimination contradicts the expected basis structure."""


class LinComb:
    """Finite formal combination of monomials with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[Monomial, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, coeff in items:
                c = Fraction(coeff)
                if mono in data:
                    data[mono] += c
                else:
                    data[mono] = c
        self.terms = {m: c for m, c in data.items() if c}

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff=1) -> "LinComb":
        return cls([(mono, coeff)])

    def items_sorted(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: mc[0].sort_key)

    def support(self) -> list[Monomial]:
        return sorted(self.terms, key=lambda m: m.sort_key)

    def get(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.terms == other.terms

    def __add__(self, other: "LinComb") -> "LinComb":
        data = dict(self.terms)
        for mono, coeff in other.terms.items():
            data[mono] = data.get(mono, Fraction(0)) + coeff
        return LinComb(data)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + other.scaled(-1)

    def scaled(self, coeff) -> "LinComb":
        c = Fraction(coeff)
        return LinComb({m: c * v for m, v in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "LinComb(0)"
        body = " + ".join(f"({c})*{m}" for m, c in self.items_sorted())
        return f"LinComb({body})"

    def to_json(self) -> list[dict]:
        return [
            {"coefficient": str(c), "monomial": m.to_text()}
            for m, c in self.items_sorted()
        ]


def lincomb_from_json(data, setup: Setup) -> LinComb:
    from .monomials import parse_monomial

    return LinComb(
        (parse_monomial(entry["monomial"], setup), Fraction(entry["coefficient"]))
        for entry in data
    )


def annihilates(b: Monomial, setup: Setup) -> bool:
    """True iff some factor alone kills the highest weight vector.

    A factor of color ``i`` and depth ``m`` does so exactly when
    ``m <= (1 if i <= module_index else 0)``; factors commute, so any such
    factor can be moved to act first.
    """
    r = setup.module_index
    return any(d <= (1 if c <= r else 0) for c, d in b.factors)


@dataclass(frozen=True)
class RelationInstance:
    """One quadratic relation: colors ``i <= j``, total depth, untouched context."""

    color_i: int
    color_j: int
    total_depth: int
    context: Monomial

    def __post_init__(self) -> None:
        if not self.color_i <= self.color_j:
            raise ValueError("colors must satisfy i <= j")
        if self.total_depth < 2:
            raise ValueError("total depth must be at least 2")


def _relation_lincomb(i: int, j: int, M: int, context: Monomial, setup: Setup) -> LinComb:
    r = setup.module_index
    delta_i = 1 if i <= r else 0
    delta_j = 1 if j <= r else 0
    terms: list[tuple[Monomial, int]] = []
    for a in range(1 + delta_i, M - delta_j):
        b = M - a
        if i == j:
            if a > b:
                break
            coeff = 1 if a == b else 2
        else:
            coeff = 1
        terms.append((Monomial(context.factors + ((i, a), (j, b))), coeff))
    return LinComb(terms)


def relation_terms(rel: RelationInstance, setup: Setup) -> LinComb:
    """Surviving terms of one relation instance; the combination kills v_r."""
    return _relation_lincomb(
        rel.color_i, rel.color_j, rel.total_depth, rel.context, setup
    )


class Straightener:
    """Rewriting straightener for one setup; memoizes proof-step expansions.

    With ``record_steps=True`` every elementary replacement performed by
    :meth:`straighten` is appended to ``steps`` as ``(monomial, expansion)``.
    """

    def __init__(self, setup: Setup, record_steps: bool = False):
        self.setup = setup
        self._memo: dict[Monomial, LinComb] = {}
        self.steps: list[tuple[Monomial, LinComb]] | None = [] if record_steps else None

    # -- one proof step ----------------------------------------------------

    def express_greater(self, b: Monomial) -> LinComb:
        """Rewrite a non-admissible, non-annihilated monomial vector.

        Returns an equal vector supported on strictly greater monomials of
        the same degree and weight (possibly still non-admissible).
        """
        cached = self._memo.get(b)
        if cached is None:
            cached = self._express_greater(b)
            self._memo[b] = cached
        return cached

    def _express_greater(self, b: Monomial) -> LinComb:
        setup = self.setup
        seq = b.factors
        w = b.weight(setup.rank)
        kind = None
        for p in range(len(seq) - 1, -1, -1):
            color, depth = seq[p]
            if p >= 1 and seq[p - 1].color == color and seq[p - 1].depth <= depth + 1:
                kind = "dc"
                break
            if depth < ic_bound(color, w, setup):
                kind = "ic"
                break
        if kind is None:
            raise AssertionError(f"{b!r} is admissible; nothing to rewrite")

        if kind == "dc":
            j = seq[p].color
            deep, shallow = seq[p - 1].depth, seq[p].depth
            context = b.without_positions((p - 1, p))
            rel = _relation_lincomb(j, j, deep + shallow, context, setup)
            pivot = rel.get(b)
            if not pivot:
                raise AssertionError(f"balanced pair of {b!r} missing from its relation")
            out = LinComb(
                (t, -c / pivot) for t, c in rel.terms.items() if t != b
            )
        else:
            j, m = seq[p]
            if p + 1 >= len(seq) or seq[p + 1].color >= j:
                raise AssertionError(
                    f"{b!r} violates the initial condition with no smaller color present"
                )
            k, n = seq[p + 1]
            context = b.without_positions((p, p + 1))
            small = tuple(f for f in context.factors if f.color < j)
            rest = tuple(f for f in context.factors if f.color >= j)
            r = setup.module_index
            delta_k = 1 if k <= r else 0
            delta_j = 1 if j <= r else 0
            acc: dict[Monomial, Fraction] = {}
            M = m + n
            for a in range(1 + delta_k, M - delta_j):
                bb = M - a
                if (a, bb) == (n, m):
                    continue
                if bb > m:
                    t = Monomial(context.factors + ((k, a), (j, bb)))
                    acc[t] = acc.get(t, Fraction(0)) - 1
                else:
                    sub = Monomial(small + ((j, bb),))
                    lift = rest + ((k, a),)
                    for t_sub, c_sub in self.express_greater(sub).terms.items():
                        t = Monomial(lift + t_sub.factors)
                        acc[t] = acc.get(t, Fraction(0)) - c_sub
            out = LinComb(acc)

        degree, weight = b.degree, w
        for t in out.terms:
            if not t > b:
                raise AssertionError(f"rewrite of {b!r} produced non-greater {t!r}")
            if t.degree != degree or t.weight(setup.rank) != weight:
                raise AssertionError(f"rewrite of {b!r} left its sector at {t!r}")
        return out

    # -- full normal form ----------------------------------------------------

    def straighten(self, v: LinComb) -> LinComb:
        setup = self.setup
        work: dict[Monomial, Fraction] = {}
        for mono, coeff in v.terms.items():
            if annihilates(mono, setup):
                continue
            work[mono] = work.get(mono, Fraction(0)) + coeff
        while True:
            work = {m: c for m, c in work.items() if c}
            pending = [m for m in work if not is_admissible(m, setup)]
            if not pending:
                return LinComb(work)
            target = min(pending, key=lambda m: m.sort_key)
            coeff = work.pop(target)
            expansion = self.express_greater(target)
            if self.steps is not None:
                self.steps.append((target, expansion))
            for mono, c in expansion.terms.items():
                work[mono] = work.get(mono, Fraction(0)) + coeff * c


def straighten_by_rewriting(v: LinComb, setup: Setup) -> LinComb:
    return Straightener(setup).straighten(v)


class SectorEliminator:
    """Reference straightener: exact sector-wide elimination, memoized."""

    def __init__(self, setup: Setup):
        self.setup = setup
        self._solved: dict[tuple, dict[Monomial, LinComb]] = {}

    def sector_solution(self, weight: tuple[int, ...], degree: int):
        """Normal form of every spanning monomial of one (weight, degree) sector."""
        key = (tuple(weight), degree)
        cached = self._solved.get(key)
        if cached is not None:
            return cached
        setup = self.setup
        monos = [
            b
            for b in enumerate_pbw(setup, degree, weight=weight)
            if b.degree == degree
        ]
        non_adm = [b for b in monos if not is_admissible(b, setup)]
        adm = [b for b in monos if is_admissible(b, setup)]
        columns = sorted(non_adm, key=lambda m: m.sort_key) + sorted(
            adm, key=lambda m: m.sort_key
        )
        index = {b: pos for pos, b in enumerate(columns)}
        rows: list[list[Fraction]] = []

        def add_row(lin: LinComb) -> None:
            row = [Fraction(0)] * len(columns)
            for mono, coeff in lin.terms.items():
                row[index[mono]] += coeff
            if any(row):
                rows.append(row)

        for b in monos:
            if annihilates(b, setup):
                add_row(LinComb.from_monomial(b))
        w = tuple(weight)
        length = sum(w)
        for i in range(1, setup.rank + 1):
            if w[i - 1] < 1:
                continue
            for j in range(i, setup.rank + 1):
                needed = 2 if i == j else 1
                if w[j - 1] < needed or (i == j and w[i - 1] < 2):
                    continue
                context_weight = list(w)
                context_weight[i - 1] -= 1
                context_weight[j - 1] -= 1
                for M in range(2, degree - (length - 2) + 1):
                    for context in enumerate_pbw(
                        setup, degree - M, weight=tuple(context_weight)
                    ):
                        if context.degree != degree - M:
                            continue
                        add_row(_relation_lincomb(i, j, M, context, setup))

        reduced, pivots = rref(rows, len(columns))
        solution: dict[Monomial, LinComb] = {}
        boundary = len(non_adm)
        for row, pivot in zip(reduced, pivots):
            if pivot >= boundary:
                raise InconsistencyError(
                    f"admissible monomial {columns[pivot]!r} eliminated in sector "
                    f"(weight={w}, degree={degree})"
                )
            solution[columns[pivot]] = LinComb(
                (columns[c], -row[c]) for c in range(boundary, len(columns)) if row[c]
            )
        missing = [b for b in non_adm if b not in solution]
        if missing:
            raise InconsistencyError(
                f"sector (weight={w}, degree={degree}) cannot eliminate {missing!r}"
            )
        self._solved[key] = solution
        return solution

    def straighten(self, v: LinComb) -> LinComb:
        out = LinComb()
        for mono, coeff in v.items_sorted():
            if is_admissible(mono, self.setup):
                out = out + LinComb.from_monomial(mono, coeff)
                continue
            sector = self.sector_solution(mono.weight(self.setup.rank), mono.degree)
            out = out + sector[mono].scaled(coeff)
        return out


def straighten_by_elimination(v: LinComb, setup: Setup) -> LinComb:
    return SectorEliminator(setup).straighten(v)
