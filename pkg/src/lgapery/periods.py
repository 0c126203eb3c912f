"""Period sequences: a_n = constant term of phi^n.

Two routes are provided. ``period_sequence`` keeps the running power of phi
but drops every term whose exponent can no longer reach 0 within the
remaining multiplications (tested against scaled Newton-polytope
inequalities). ``period_sequence_naive`` expands fully and is the ground
truth oracle for tests and small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPolynomial
from .linalg import dot
from .polytope import facets, newton_polytope


@dataclass
class PeriodSequence:
    """values[n] = constant term of source^n, n = 0..N."""

    source: LaurentPolynomial
    values: list[Fraction]

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("a_0 must be 1")
        if self.source.is_integral():
            bad = [n for n, v in enumerate(self.values) if v.denominator != 1]
            if bad:
                raise ValueError(
                    f"integral input produced non-integer period at n={bad[0]}")

    def __len__(self) -> int:
        return len(self.values)


def period_sequence(p: LaurentPolynomial, n_terms: int) -> PeriodSequence:
    """Pruned computation of a_0..a_N (N = n_terms)."""
    engine = PeriodEngine(p, n_terms)
    return PeriodSequence(source=p, values=engine.values())


def period_sequence_naive(p: LaurentPolynomial, n_terms: int) -> PeriodSequence:
    """Full-expansion oracle: repeated multiplication, no pruning."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    values = [Fraction(1)]
    power = LaurentPolynomial.constant(p.dimension, 1)
    for _ in range(n_terms):
        power = power * p
        values.append(power.constant_term())
    return PeriodSequence(source=p, values=values)


class PeriodEngine:
    """Incremental pruned power-of-phi engine.

    The pruning predicate depends on the declared horizon (a term is kept
    only while it can return to exponent 0 within the remaining steps), so
    state is reusable for any request up to the horizon; extending past the
    horizon recomputes from scratch.
    """

    def __init__(self, p: LaurentPolynomial, horizon: int):
        if p.is_zero():
            raise ValueError("zero polynomial")
        self.p = p
        self.horizon = horizon
        self._values: list[Fraction] = [Fraction(1)]
        self._constraints = self._pruning_constraints(p)
        self._run()

    @staticmethod
    def _pruning_constraints(p: LaurentPolynomial):
        """Constraints (u, c) such that a surviving exponent e must satisfy
        dot(u, e) <= rem * c after every step with rem steps remaining
        (equivalently -e lies in rem * Delta, Delta the Newton polytope)."""
        d = p.dimension
        poly = newton_polytope(p)
        if d == 3 and poly.affine_dimension == 3:
            return [(f.normal, f.offset) for f in facets(poly)]
        # Bounding-box fallback for degenerate or non-3D supports.
        support = p.support()
        cons = []
        for i in range(d):
            lo = min(e[i] for e in support)
            hi = max(e[i] for e in support)
            unit = tuple(int(j == i) for j in range(d))
            neg = tuple(-int(j == i) for j in range(d))
            cons.append((unit, -lo))
            cons.append((neg, hi))
        return cons

    def _run(self):
        p = self.p
        n_steps = self.horizon
        if n_steps == 0:
            return
        d = p.dimension
        integral = p.is_integral()
        max_abs = max(abs(x) for e in p.support() for x in e) or 1
        radix = 2 * max_abs * max(n_steps, 1) + 3
        weights = [radix ** i for i in range(d)]

        def enc(e):
            return sum(x * w for x, w in zip(e, weights))

        cons = self._constraints
        p_terms = []
        for e, c in p.items():
            coeff = int(c) if integral else c
            dots = tuple(dot(u, e) for u, _ in cons)
            p_terms.append((enc(e), coeff, dots))

        zero_key = 0
        one = 1 if integral else Fraction(1)
        power: dict[int, list] = {zero_key: [one, tuple(0 for _ in cons)]}
        for k in range(1, n_steps + 1):
            rem = n_steps - k
            bounds = tuple(rem * c for _, c in cons)
            new: dict[int, object] = {}
            get = new.get
            for enc2, c2, d2 in p_terms:
                for enc1, val in power.items():
                    key = enc1 + enc2
                    cur = get(key)
                    if cur is None:
                        dots = tuple(a + b for a, b in zip(val[1], d2))
                        if all(a <= b for a, b in zip(dots, bounds)):
                            new[key] = [val[0] * c2, dots]
                        else:
                            new[key] = False
                    elif cur is not False:
                        cur[0] += val[0] * c2
            power = {key: v for key, v in new.items() if v is not False}
            entry = power.get(zero_key)
            a_k = entry[0] if entry is not None else 0
            self._values.append(Fraction(a_k))

    def values(self, n_terms: int | None = None) -> list[Fraction]:
        """a_0..a_N for N <= horizon (defaults to the full horizon)."""
        if n_terms is None:
            n_terms = self.horizon
        if n_terms > self.horizon:
            raise ValueError(
                f"requested {n_terms} terms beyond horizon {self.horizon}; "
                "construct a new engine")
        return list(self._values[: n_terms + 1])


def check_recurrence(seq: PeriodSequence, rec, start: int = 0) -> bool:
    """True iff sum_j q_j(n) * a_{n-j} = 0 exactly for all n in
    [start, len(seq)-1], with negative indices reading as 0."""
    values = seq.values
    for n in range(start, len(values)):
        total = Fraction(0)
        for j, q in enumerate(rec.coefficient_polynomials):
            if n - j < 0:
                continue
            total += q(Fraction(n)) * values[n - j]
        if total != 0:
            return False
    return True
