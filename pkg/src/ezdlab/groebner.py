"""Buchberger completion, staircase bases and structure constants.

The quotient algebras in play are tiny (a few variables, dimensions in
the dozens), so a plain Buchberger loop with the product criterion and a
pair budget is entirely adequate.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .linalg import Field, Matrix
from .poly import (
    DEGREVLEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

__all__ = [
    "PairBudgetExceeded",
    "InfiniteDimensionalError",
    "NonLocalError",
    "groebner_basis",
    "quotient_basis",
    "QuotientPresentation",
]

DEFAULT_PAIR_BUDGET = 10_000


class PairBudgetExceeded(Exception):
    """Buchberger processed more S-pairs than the configured budget."""


class InfiniteDimensionalError(Exception):
    """The quotient has an infinite staircase (some variable lacks a pure power)."""


class NonLocalError(Exception):
    """The quotient is finite-dimensional but some variable is not nilpotent."""


def groebner_basis(
    ring: PolyRing,
    generators: list[Polynomial],
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``generators``."""
    basis = _reduce_generators(ring, generators)
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    processed = 0
    while pairs:
        pairs.sort(
            key=lambda ij: ring.order.key(
                mono_lcm(basis[ij[0]].lead_monomial, basis[ij[1]].lead_monomial)
            )
        )
        i, j = pairs.pop(0)
        processed += 1
        if processed > pair_budget:
            raise PairBudgetExceeded(f"S-pair budget {pair_budget} exceeded")
        lmi = basis[i].lead_monomial
        lmj = basis[j].lead_monomial
        # product criterion: coprime lead monomials give a trivial S-pair
        if mono_lcm(lmi, lmj) == mono_mul(lmi, lmj):
            continue
        s = ring.normal_form(ring.s_poly(basis[i], basis[j]), basis)
        if s.is_zero():
            continue
        s = ring.monic(s)
        basis.append(s)
        k = len(basis) - 1
        pairs.extend((t, k) for t in range(k))
    return _interreduce(ring, basis)


def _reduce_generators(ring: PolyRing, gens: list[Polynomial]) -> list[Polynomial]:
    """Drop input generators only when they reduce to zero modulo the rest.

    Lead-monomial minimalization is not sound before completion, so this
    keeps every generator carrying new content (e.g. a tail that survives
    reduction even though its lead monomial is divisible)."""
    gens = [ring.monic(g) for g in gens if not g.is_zero()]
    out = []
    for i, g in enumerate(gens):
        r = ring.normal_form(g, out + gens[i + 1 :])
        if not r.is_zero():
            out.append(ring.monic(r))
    return out


def _interreduce(ring: PolyRing, basis: list[Polynomial]) -> list[Polynomial]:
    """Minimal, fully reduced, monic basis sorted by lead monomial."""
    basis = [ring.monic(g) for g in basis if not g.is_zero()]
    # drop elements whose lead monomial is divisible by another lead monomial
    minimal = []
    for i, g in enumerate(basis):
        lm = g.lead_monomial
        if any(
            mono_divides(h.lead_monomial, lm) and (h.lead_monomial != lm or j < i)
            for j, h in enumerate(basis)
            if j != i
        ):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = ring.normal_form(g, others)
        if not r.is_zero():
            reduced.append(ring.monic(r))
    reduced.sort(key=lambda g: ring.order.key(g.lead_monomial))
    return reduced


def quotient_basis(ring: PolyRing, groebner: list[Polynomial]) -> list:
    """The staircase: monomials outside the lead-term ideal, sorted by
    degree then ambient order.  Raises when the staircase is infinite."""
    lms = [g.lead_monomial for g in groebner]
    bounds = []
    for v in range(ring.nvars):
        pure = [
            m[v]
            for m in lms
            if all(e == 0 for i, e in enumerate(m) if i != v) and m[v] > 0
        ]
        if not pure:
            raise InfiniteDimensionalError(
                f"variable {ring.names[v]} has no pure power in the lead-term ideal"
            )
        bounds.append(min(pure))
    monomials = [()]
    for b in bounds:
        monomials = [m + (e,) for m in monomials for e in range(b)]
    staircase = [
        m for m in monomials if not any(mono_divides(lm, m) for lm in lms)
    ]
    staircase.sort(key=lambda m: (sum(m), ring.order.key(m)))
    return staircase


@dataclass
class QuotientPresentation:
    """A finite-dimensional local quotient k[x1..xn]/I with its staircase."""

    ring: PolyRing
    ideal_generators: list
    groebner: list = dc_field(default=None)
    staircase: list = dc_field(default=None)

    def __post_init__(self):
        if self.groebner is None:
            self.groebner = groebner_basis(self.ring, self.ideal_generators)
        if self.staircase is None:
            self.staircase = quotient_basis(self.ring, self.groebner)
        if not self.staircase or self.staircase[0] != (0,) * self.ring.nvars:
            raise ValueError("staircase must contain 1")

    @property
    def field(self) -> Field:
        return self.ring.field

    @property
    def dim(self) -> int:
        return len(self.staircase)

    def __eq__(self, other):
        return (
            isinstance(other, QuotientPresentation)
            and self.ring == other.ring
            and self.groebner == other.groebner
        )

    def normal_form_coords(self, f: Polynomial) -> list:
        """Coordinates of NF(f) in the staircase basis."""
        nf = self.ring.normal_form(f, self.groebner)
        idx = {m: i for i, m in enumerate(self.staircase)}
        coords = [self.field.zero] * self.dim
        for m, c in nf.terms:
            coords[idx[m]] = c
        return coords

    def poly_action_matrix(self, f: Polynomial) -> Matrix:
        """Matrix of multiplication by f on the staircase basis."""
        cols = []
        for m in self.staircase:
            prod = self.ring.mul(f, self.ring.monomial(m))
            cols.append(self.normal_form_coords(prod))
        return Matrix.from_rows(self.field, list(map(list, zip(*cols))))

    def multiplication_matrices(self) -> list:
        """Per staircase monomial, the matrix of multiplication by it."""
        return [self.poly_action_matrix(self.ring.monomial(m)) for m in self.staircase]

    def structure_constants(self):
        """table[i][j] = coordinates of NF(m_i * m_j) in the staircase basis."""
        table = []
        for mi in self.staircase:
            row = []
            for mj in self.staircase:
                row.append(
                    self.normal_form_coords(
                        self.ring.mul(self.ring.monomial(mi), self.ring.monomial(mj))
                    )
                )
            table.append(row)
        return table

    def check_local(self):
        """Every variable must act nilpotently on the quotient."""
        for v in range(self.ring.nvars):
            a = self.poly_action_matrix(self.ring.variable(v))
            power = a
            for _ in range(self.dim):
                if power.is_zero():
                    break
                power = power @ a
            if not power.is_zero():
                raise NonLocalError(
                    f"variable {self.ring.names[v]} is not nilpotent in the quotient"
                )
