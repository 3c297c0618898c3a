"""Exact lattice realization of the colored current operators.

States are ``f (x) e^lambda``:

* ``f`` is a product of commuting creation modes ``g_i(-n)``, ``n >= 1``,
  where ``g_1 .. g_rank`` are the colored currents written in simple-root
  coordinates as ``g_i = a_i + a_{i+1} + ... + a_rank``.  Their Gram
  matrix is ``<g_i, g_j> = 1 + delta_ij``, so all contractions are
  integral.  Monomials in these modes form a basis of the boson Fock
  space (the change of variables to simple-root modes is triangular), and
  tagging modes by the currents keeps operator images small: a creation
  half never branches over directions.
* ``lambda`` is a weight-lattice point stored as integer simple-root
  coordinates plus a fundamental-weight offset, the *sector* ``0..rank``
  (offset 0 means no shift).

The operator of color ``i`` and mode ``m`` acts by the usual two-sided
exponential formula: annihilation modes contract with ``<g_i, .>``,
creation modes multiply, the lattice shifts by ``g_i``, the extracted
power is offset by ``<g_i, lambda>``, and the term carries the sign of a
two-cocycle.  The cocycle is the bimultiplicative section with
``eps(a_s, a_t) = (-1)^{<a_s,a_t>}`` for ``s > t`` and ``1`` otherwise,
extended trivially across sector offsets.  All coefficients are exact
rationals; no truncation is involved anywhere.

Fock degree is the sum of the modes of a state.  Lattice points do not
contribute to degree, so the degree climbed by an operator monomial
equals the monomial's own degree, sector by sector.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import exact_rank
from .monomials import Monomial, Setup, enumerate_admissible, enumerate_pbw

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover
    RAT = Fraction

_ONE = RAT(1)

# Heisenberg state: sorted tuple of (color, mode) with repetition.
# Lattice point: (tuple of simple-root coordinates, sector index).
# Fock state: (heis, lattice); Fock vector: dict mapping states to rationals.


def _deg(heis) -> int:
    return sum(n for _, n in heis)


_PARTITION_SHAPES: dict[int, list] = {}


def _shapes(n: int) -> list:
    """Partition shapes of n as ((mode, count), ...) with 1/(m^c c!) weights."""
    cached = _PARTITION_SHAPES.get(n)
    if cached is not None:
        return cached
    shapes = []

    def rec(remaining: int, max_part: int, acc: list, denom: int) -> None:
        if remaining == 0:
            shapes.append((tuple(acc), denom))
            return
        for part in range(min(max_part, remaining), 0, -1):
            count = 1
            weight = part
            total = part
            while total <= remaining:
                rec(
                    remaining - total,
                    part - 1,
                    acc + [(part, count)],
                    denom * weight * _factorial(count),
                )
                count += 1
                weight *= part
                total += part

    rec(n, n, [], 1)
    _PARTITION_SHAPES[n] = shapes
    return shapes


_FACTORIALS = [1, 1]


def _factorial(n: int) -> int:
    while len(_FACTORIALS) <= n:
        _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


def _binomial(n: int, k: int) -> int:
    return _factorial(n) // (_factorial(k) * _factorial(n - k))


@dataclass
class CheckResult:
    name: str
    ok: bool
    checked: int
    detail: str = ""


@dataclass
class RelationReport:
    ok: bool
    params: dict
    checks: list = field(default_factory=list)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.ok), None)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "params": self.params,
            "checks": [
                {"name": c.name, "ok": c.ok, "checked": c.checked, "detail": c.detail}
                for c in self.checks
            ],
        }


class VertexOracle:
    """Exact operator calculus on the lattice Fock space of one rank.

    ``epsilon_overrides`` replaces entries of the cocycle exponent table on
    simple-root pairs; it exists so tests can corrupt the cocycle and watch
    the verification fail.
    """

    def __init__(self, setup: Setup, epsilon_overrides=None):
        self.setup = setup
        l = setup.rank
        self.rank = l
        self.cartan = [
            [2 if s == t else (-1 if abs(s - t) == 1 else 0) for t in range(1, l + 1)]
            for s in range(1, l + 1)
        ]
        # <g_i, a_k> rows, used for pairings against root coordinates
        self._gamma_alpha = [
            [sum(self.cartan[t - 1][k - 1] for t in range(i, l + 1)) for k in range(1, l + 1)]
            for i in range(1, l + 1)
        ]
        self.gram = [[1 + (i == j) for j in range(l)] for i in range(l)]
        exp = [[1 if s == t + 1 else 0 for t in range(1, l + 1)] for s in range(1, l + 1)]
        if epsilon_overrides:
            for (s, t), value in epsilon_overrides.items():
                exp[s - 1][t - 1] = value % 2
        self._eps_exp = exp
        # per color: parity row of eps(g_i, a_t) over t
        self._eps_gamma = [
            [sum(exp[s - 1][t] for s in range(i, l + 1)) % 2 for t in range(l)]
            for i in range(1, l + 1)
        ]
        L = l + 1
        self._inv_cartan = [
            [Fraction(min(k, j) * (L - max(k, j)), L) for j in range(1, l + 1)]
            for k in range(1, l + 1)
        ]
        self._state_memo: dict = {}
        self._creation_memo: dict = {}

    # -- lattice helpers ---------------------------------------------------

    def pairing(self, root_coords, lattice) -> int:
        """Pair a root-lattice vector (simple-root coordinates) with a point."""
        q, r = lattice
        total = 0
        for s, a in enumerate(root_coords):
            if a:
                total += a * sum(self.cartan[s][k] * q[k] for k in range(self.rank))
        if r >= 1:
            total += root_coords[r - 1]
        return total

    def pairing_gamma(self, i: int, lattice) -> int:
        q, r = lattice
        row = self._gamma_alpha[i - 1]
        return sum(row[k] * q[k] for k in range(self.rank)) + (1 if i <= r else 0)

    def cocycle(self, root_coords, lattice) -> int:
        """Cocycle sign of a root-lattice vector against a point (+1 or -1)."""
        q, _ = lattice
        exp = self._eps_exp
        parity = 0
        for s, a in enumerate(root_coords):
            if a:
                parity += a * sum(exp[s][t] * q[t] for t in range(self.rank))
        return -1 if parity % 2 else 1

    def cocycle_gamma(self, i: int, lattice) -> int:
        q, _ = lattice
        row = self._eps_gamma[i - 1]
        parity = sum(row[t] * q[t] for t in range(self.rank))
        return -1 if parity % 2 else 1

    def gamma_coords(self, i: int) -> tuple[int, ...]:
        return tuple(1 if k >= i else 0 for k in range(1, self.rank + 1))

    def _add_fundamental(self, lattice, j: int):
        """Canonical coordinates of lattice + omega_j."""
        q, r = lattice
        L = self.rank + 1
        r2 = (r + j) % L
        inv = self._inv_cartan

        def col(idx):
            if idx == 0:
                return [Fraction(0)] * self.rank
            return [inv[k][idx - 1] for k in range(self.rank)]

        delta = [a + b - c for a, b, c in zip(col(r), col(j), col(r2))]
        if any(d.denominator != 1 for d in delta):
            raise AssertionError(f"non-integral sector shift for r={r}, j={j}")
        return (tuple(qk + int(d) for qk, d in zip(q, delta)), r2)

    # -- states and vectors -------------------------------------------------

    def vacuum(self, sector: int | None = None) -> dict:
        r = self.setup.module_index if sector is None else sector
        if not 0 <= r <= self.rank:
            raise ValueError(f"sector must lie in 0..{self.rank}, got {r}")
        return {((), ((0,) * self.rank, r)): _ONE}

    def heis_states(self, max_degree: int, colors=None):
        """All creation-mode multisets of total degree <= max_degree."""
        colors = list(colors) if colors is not None else list(range(1, self.rank + 1))
        entries = [(c, n) for n in range(1, max_degree + 1) for c in colors]

        out = [()]

        def rec(start: int, budget: int, acc: tuple) -> None:
            for idx in range(start, len(entries)):
                c, n = entries[idx]
                if n > budget:
                    continue
                state = tuple(sorted(acc + ((c, n),)))
                out.append(state)
                rec(idx, budget - n, acc + ((c, n),))

        rec(0, max_degree, ())
        return sorted(set(out), key=lambda s: (_deg(s), s))

    # -- mode action ---------------------------------------------------------

    def _annihilation_fan(self, i: int, heis, beta_min: int = 0):
        """Coefficients of the annihilation exponential on a product state.

        On a product of creation modes the exponential acts as the Wick
        product over factors of (keep) + (contract to ``-<g_i, .>`` times the
        matching power), so the fan is a subset expansion with integer
        coefficients.  Returns ``{removed_degree: [(child_state, int), ...]}``
        restricted to removed degrees at least ``beta_min``; branches that
        cannot reach it are pruned early.
        """
        gram = self.gram[i - 1]
        groups = []
        p = 0
        while p < len(heis):
            color, n = heis[p]
            count = 1
            while p + count < len(heis) and heis[p + count] == (color, n):
                count += 1
            p += count
            groups.append((color, n, count))
        removable = [0] * (len(groups) + 1)
        for idx in range(len(groups) - 1, -1, -1):
            _, n, count = groups[idx]
            removable[idx] = removable[idx + 1] + n * count
        fan: dict[int, list] = {}

        def rec(idx: int, kept, beta: int, coeff: int) -> None:
            if beta + removable[idx] < beta_min:
                return
            if idx == len(groups):
                fan.setdefault(beta, []).append((kept, coeff))
                return
            color, n, count = groups[idx]
            g = -gram[color - 1]
            factor = 1
            for d in range(count + 1):
                rec(
                    idx + 1,
                    kept + ((color, n),) * (count - d),
                    beta + d * n,
                    coeff * factor * _binomial(count, d),
                )
                factor *= g

        rec(0, (), 0, 1)
        return fan

    def _creations(self, i: int, a: int):
        """Degree-a coefficient of the creation exponential, as mode bundles.

        Each partition of ``a`` contributes one bundle of color-i modes with
        weight ``prod 1/(m^c c!)``; returns ``[(modes_tuple, RAT), ...]``.
        """
        key = (i, a)
        cached = self._creation_memo.get(key)
        if cached is None:
            cached = [
                (tuple((i, m) for m, c in shape for _ in range(c)), RAT(1, denom))
                for shape, denom in _shapes(a)
            ]
            self._creation_memo[key] = cached
        return cached

    def _apply_x_state(self, i: int, m: int, heis, lattice) -> dict:
        sign = self.cocycle_gamma(i, lattice)
        target = -m - 1 - self.pairing_gamma(i, lattice)
        q, r = lattice
        coords = self.gamma_coords(i)
        new_lattice = (tuple(qk + g for qk, g in zip(q, coords)), r)
        out: dict = {}
        for beta, children in self._annihilation_fan(i, heis, max(0, -target)).items():
            a = target + beta
            if a < 0:
                continue
            for added, c3 in self._creations(i, a):
                for child, c2 in children:
                    key = (tuple(sorted(child + added)), new_lattice)
                    value = sign * c2 * c3
                    if key in out:
                        out[key] += value
                    else:
                        out[key] = value
        return {k: v for k, v in out.items() if v}

    def apply_x(self, i: int, m: int, vec: dict, use_memo: bool = True) -> dict:
        """Apply the color-i operator of mode m to an exact vector."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"color {i} out of range 1..{self.rank}")
        out: dict = {}
        for (heis, lattice), coeff in vec.items():
            if use_memo:
                key = (i, m, heis, lattice)
                image = self._state_memo.get(key)
                if image is None:
                    image = self._apply_x_state(i, m, heis, lattice)
                    self._state_memo[key] = image
            else:
                image = self._apply_x_state(i, m, heis, lattice)
            for state, value in image.items():
                out[state] = out.get(state, 0) + coeff * value
        return {k: v for k, v in out.items() if v}

    def apply_monomial(self, b: Monomial, sector: int | None = None) -> dict:
        """Image of the highest-weight vector under the monomial (rightmost first)."""
        vec = self.vacuum(sector)
        for color, depth in reversed(b.factors):
            if not vec:
                break
            vec = self.apply_x(color, -depth, vec)
        return vec

    def combination_vector(self, items, sector: int | None = None) -> dict:
        """Image of a formal combination of monomials, as an exact vector.

        ``items`` iterates over ``(Monomial, coefficient)`` pairs with exact
        rational coefficients.
        """
        out: dict = {}
        for mono, coeff in items:
            scale = RAT(coeff.numerator, coeff.denominator)
            for state, value in self.apply_monomial(mono, sector).items():
                out[state] = out.get(state, 0) + scale * value
        return {k: v for k, v in out.items() if v}

    def simple_current(self, j: int, vec: dict) -> dict:
        """Bare lattice shift by the j-th fundamental weight."""
        if not 1 <= j <= self.rank:
            raise ValueError(f"fundamental weight index {j} out of range 1..{self.rank}")
        out: dict = {}
        for (heis, lattice), coeff in vec.items():
            key = (heis, self._add_fundamental(lattice, j))
            out[key] = out.get(key, 0) + coeff
        return out

    # -- rank verification ----------------------------------------------------

    def graded_rank(self, degree: int, weight=None, cache: "SectorCache | None" = None):
        """(admissible count, admissible rank, full spanning-set rank) of a sector."""
        if degree < 0:
            raise ValueError(f"degree must be >= 0, got {degree}")
        if cache is not None:
            hit = cache.get(self.setup, weight, degree)
            if hit is not None:
                return hit
        adm = [
            b
            for b in enumerate_admissible(self.setup, degree, weight=weight)
            if b.degree == degree
        ]
        pbw = [
            b
            for b in enumerate_pbw(self.setup, degree, weight=weight)
            if b.degree == degree
        ]
        vectors = {b: self.apply_monomial(b) for b in pbw}
        basis = sorted({state for vec in vectors.values() for state in vec})
        index = {state: pos for pos, state in enumerate(basis)}

        def row(b):
            out = [0] * len(basis)
            for state, coeff in vectors[b].items():
                out[index[state]] = coeff
            return out

        result = (
            len(adm),
            exact_rank([row(b) for b in adm]),
            exact_rank([row(b) for b in pbw]),
        )
        if cache is not None:
            cache.put(self.setup, weight, degree, result, adm, pbw)
        return result

    # -- relation suite ---------------------------------------------------------

    def pair_sums(self, i: int, j: int, m_values, state, margin: int = 1) -> dict:
        """Sums over all splits a+b=M of the color-(i,j) composite on a state.

        Returns ``{M: vector}`` for every total depth in ``m_values``.  The
        composite vanishes identically outside an explicit window of splits;
        the window, padded by ``margin``, is what is summed.  Batching the
        total depths lets every intermediate state contribute through a
        single annihilation fan.
        """
        m_list = sorted(m_values)
        heis, lattice = state
        degree = _deg(heis)
        b_lo = 1 + self.pairing_gamma(j, lattice) - degree - margin
        b_hi = m_list[-1] - 1 - self.pairing_gamma(i, lattice) + degree + margin
        gi_coords = self.gamma_coords(i)
        totals: dict[int, dict] = {M: {} for M in m_list}
        creations = self._creations
        for b in range(b_lo, b_hi + 1):
            inner = self.apply_x(j, -b, {state: _ONE}, use_memo=False)
            for (g_heis, g_lat), c_g in inner.items():
                sign = self.cocycle_gamma(i, g_lat)
                base = -b - 1 - self.pairing_gamma(i, g_lat)
                q2, r2 = g_lat
                lat3 = (tuple(qk + g for qk, g in zip(q2, gi_coords)), r2)
                scale = sign * c_g
                beta_min = max(0, -(base + m_list[-1]))
                fan = self._annihilation_fan(i, g_heis, beta_min)
                for beta, children in fan.items():
                    for M in m_list:
                        a = base + M + beta
                        if a < 0:
                            continue
                        total = totals[M]
                        for added, c3 in creations(i, a):
                            for child, c2 in children:
                                key = (tuple(sorted(child + added)), lat3)
                                value = scale * c2 * c3
                                if key in total:
                                    total[key] += value
                                else:
                                    total[key] = value
        return {M: {k: v for k, v in tot.items() if v} for M, tot in totals.items()}

    def pair_sum(self, i: int, j: int, M: int, state, margin: int = 1) -> dict:
        """Sum over all splits a+b=M of the color-(i,j) composite on a state."""
        return self.pair_sums(i, j, [M], state, margin)[M]

    def verify_relations(
        self,
        m_max: int,
        d_max: int,
        margin: int = 1,
        fail_fast: bool = True,
        progress=None,
    ) -> RelationReport:
        """Exhaustive desk-scale check of the defining operator identities.

        * *product vanishing*: for every pair of colors ``i <= j`` and every
          total depth ``2 <= M <= m_max``, the sum of the composites over all
          splits annihilates every basis state of degree at most ``d_max``
          over the base point of every sector.
        * *annihilation bounds*: the color-i operator of mode ``m`` kills the
          sector-r highest weight vector exactly when ``m >= -(1 if i<=r)``.
        * *simple-current commutation*: conjugating the color-i operator by
          the j-th lattice shift offsets its mode by ``(1 if i<=j)`` up to a
          constant sign per (i, j, sector), measured and checked nonzero.
        * *shifted vacuum*: the color-r depth-1 operator maps the sector
          ``r-1`` vacuum to a nonzero multiple of the shifted sector-r vacuum.
        * *color commutativity*: operators of any two colors and modes
          commute on states over a sign-varied family of lattice points.

        The corrupted-cocycle negative control fails in the commutativity
        check: the product-vanishing sums are insensitive to the cocycle
        because both composites carry one common sign.
        """
        l = self.rank
        checks: list[CheckResult] = []
        params = {"rank": l, "m_max": m_max, "d_max": d_max, "margin": margin}

        def run(name, generator):
            count = 0
            for ok, detail in generator:
                count += 1
                if not ok:
                    checks.append(CheckResult(name, False, count, detail))
                    return False
            checks.append(CheckResult(name, True, count))
            return True

        def product_vanishing():
            states = self.heis_states(d_max)
            depths = range(2, m_max + 1)
            for r in range(l + 1):
                base = ((0,) * l, r)
                for heis in states:
                    state = (heis, base)
                    for i in range(1, l + 1):
                        for j in range(i, l + 1):
                            sums = self.pair_sums(i, j, depths, state, margin)
                            for M in depths:
                                if sums[M]:
                                    yield False, (
                                        f"sum over splits of M={M} for colors ({i},{j}) "
                                        f"is nonzero on {heis} in sector {r}"
                                    )
                                    return
                                yield True, ""

        def annihilation_bounds():
            for r in range(l + 1):
                vac = self.vacuum(r)
                for i in range(1, l + 1):
                    delta = 1 if i <= r else 0
                    for m in range(-delta, 3):
                        if self.apply_x(i, m, vac):
                            yield False, f"x_{i}({m}) does not kill the sector-{r} vacuum"
                            return
                        yield True, ""
                    if not self.apply_x(i, -delta - 1, vac):
                        yield False, f"x_{i}({-delta - 1}) unexpectedly kills the sector-{r} vacuum"
                        return
                    yield True, ""

        def _vec_eq_scaled(lhs, rhs, scale):
            if set(lhs) != set(rhs):
                return False
            return all(lhs[k] == scale * rhs[k] for k in lhs)

        def simple_current_commutation():
            cap = min(d_max, 3)
            qs = [(0,) * l] + [
                tuple(1 if t == k else 0 for t in range(l)) for k in range(l)
            ]
            states = self.heis_states(cap)
            for r in range(l + 1):
                for j in range(1, l + 1):
                    for i in range(1, l + 1):
                        delta = 1 if i <= j else 0
                        sign = None
                        for q in qs:
                            for heis in states:
                                w = {(heis, (q, r)): _ONE}
                                for m in range(-cap - 2, 3):
                                    lhs = self.apply_x(i, m, self.simple_current(j, w))
                                    rhs = self.simple_current(j, self.apply_x(i, m + delta, w))
                                    if not lhs and not rhs:
                                        continue
                                    if sign is None:
                                        key = next(iter(lhs), None)
                                        if key is None or key not in rhs or not rhs[key]:
                                            yield False, (
                                                f"supports differ for x_{i}({m}) around shift {j} "
                                                f"in sector {r}"
                                            )
                                            return
                                        sign = lhs[key] / rhs[key]
                                        if sign not in (1, -1):
                                            yield False, (
                                                f"non-sign constant {sign} for (i={i}, j={j}, r={r})"
                                            )
                                            return
                                    if not _vec_eq_scaled(lhs, rhs, sign):
                                        yield False, (
                                            f"commutation fails for x_{i}({m}) around shift {j} "
                                            f"in sector {r} at q={q}, state {heis}"
                                        )
                                        return
                                    yield True, ""
                        if sign is None:
                            yield False, f"no nonzero instance found for (i={i}, j={j}, r={r})"
                            return

        def shifted_vacuum():
            for r in range(1, l + 1):
                lhs = self.apply_x(r, -1, self.vacuum(r - 1))
                rhs = self.simple_current(l, self.vacuum(r))
                if not lhs:
                    yield False, f"x_{r}(-1) kills the sector-{r - 1} vacuum"
                    return
                key = next(iter(rhs))
                if key not in lhs:
                    yield False, f"shifted vacuum not in the image for sector {r}"
                    return
                scale = lhs[key] / rhs[key]
                if not scale or not _vec_eq_scaled(lhs, rhs, scale):
                    yield False, f"no nonzero proportionality for sector {r}"
                    return
                yield True, ""

        def color_commutativity():
            cap = min(d_max, 3)
            qs = [(0,) * l] + [
                tuple(1 if t == k else 0 for t in range(l)) for k in range(l)
            ]
            states = self.heis_states(cap)
            modes = range(-3, 3)
            for r in range(l + 1):
                for q in qs:
                    for heis in states:
                        w = {(heis, (q, r)): _ONE}
                        for i in range(1, l + 1):
                            for j in range(i, l + 1):
                                for m in modes:
                                    for n in modes:
                                        one = self.apply_x(i, m, self.apply_x(j, n, w))
                                        two = self.apply_x(j, n, self.apply_x(i, m, w))
                                        if one != two:
                                            yield False, (
                                                f"x_{i}({m}) and x_{j}({n}) do not commute "
                                                f"on {heis} at q={q}, sector {r}"
                                            )
                                            return
                                        yield True, ""

        generators = [
            ("product_vanishing", product_vanishing()),
            ("annihilation_bounds", annihilation_bounds()),
            ("simple_current_commutation", simple_current_commutation()),
            ("shifted_vacuum_proportionality", shifted_vacuum()),
            ("color_commutativity", color_commutativity()),
        ]
        ok = True
        for name, generator in generators:
            if progress:
                progress(name)
            passed = run(name, generator)
            ok = ok and passed
            if not passed and fail_fast:
                break
        return RelationReport(ok=ok, params=params, checks=checks)


class SectorCache:
    """Optional on-disk cache of graded-rank results, keyed by sector.

    The file is versioned JSON; hits must agree bit for bit with fresh
    computation, which the test suite asserts.
    """

    VERSION = 1

    def __init__(self, path: str):
        self.path = path
        self.data = {"version": self.VERSION, "entries": {}}
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as handle:
                loaded = json.load(handle)
            if loaded.get("version") != self.VERSION:
                raise ValueError(
                    f"cache version {loaded.get('version')} != expected {self.VERSION}"
                )
            self.data = loaded

    @staticmethod
    def _key(setup: Setup, weight, degree: int) -> str:
        w = "*" if weight is None else ",".join(str(n) for n in weight)
        return f"{setup.rank}|{setup.module_index}|{w}|{degree}"

    def get(self, setup: Setup, weight, degree: int):
        entry = self.data["entries"].get(self._key(setup, weight, degree))
        if entry is None:
            return None
        return (entry["count"], entry["rank_admissible"], entry["rank_pbw"])

    def put(self, setup: Setup, weight, degree: int, triple, adm, pbw) -> None:
        self.data["entries"][self._key(setup, weight, degree)] = {
            "count": triple[0],
            "rank_admissible": triple[1],
            "rank_pbw": triple[2],
            "admissible": [b.to_text() for b in adm],
            "pbw": [b.to_text() for b in pbw],
        }

    def save(self) -> None:
        with open(self.path, "w", encoding="utf-8") as handle:
            json.dump(self.data, handle, indent=1, sort_keys=True)
            handle.write("\n")
