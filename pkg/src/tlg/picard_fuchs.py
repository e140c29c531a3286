"""Recovering an ordinary differential operator that annihilates a series.

Operators are rational combinations of monomials t^i * theta^j where theta
is the Euler operator t*d/dt. On a power series sum a_k t^k such a monomial
contributes c * (k-i)^j * a_{k-i} to coefficient k, so "the operator kills
the series" is a homogeneous linear condition on the c's and fitting reduces
to an exact kernel computation over the rationals.

The fit anchors the theta order at the requested order and only searches the
t degree. Anchoring matters: a series can satisfy an incidental lower-order
relation (the central binomial series already satisfies one of order one)
and a smallest-order-first search would report that relation instead of the
operator of the expected rank. Relations of lower order still show up inside
the anchored kernel, composed with powers of theta; the reduced kernel basis
separates them from the top-order element that gets returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .laurent import Coeff
from .series import PowerSeries

FIT_MARGIN = 10


class ZeroOperator(ValueError):
    """A differential operator needs at least one nonzero term."""


class InsufficientCoefficients(ValueError):
    """The series is too short for the requested computation."""


def _as_coeff(c: Fraction) -> Coeff:
    return c.numerator if c.denominator == 1 else c


Term = Tuple[int, int, Coeff]


@dataclass(frozen=True)
class DifferentialOperator:
    """Sum of c * t^i * theta^j terms, stored sorted by (i, j) and scaled
    so that the first nonzero coefficient in that order is 1."""

    terms: Tuple[Term, ...]

    def __post_init__(self) -> None:
        merged: Dict[Tuple[int, int], Fraction] = {}
        for i, j, c in self.terms:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in operator term t^{i} theta^{j}")
            merged[(i, j)] = merged.get((i, j), Fraction(0)) + Fraction(c)
        cleaned = sorted((ij, c) for ij, c in merged.items() if c)
        if not cleaned:
            raise ZeroOperator("operator has no nonzero terms")
        lead = cleaned[0][1]
        object.__setattr__(
            self,
            "terms",
            tuple((i, j, _as_coeff(c / lead)) for (i, j), c in cleaned),
        )

    @property
    def max_t_degree(self) -> int:
        return max(i for i, _, _ in self.terms)

    @property
    def max_theta_order(self) -> int:
        return max(j for _, j, _ in self.terms)

    def coefficient(self, t_degree: int, theta_power: int) -> Coeff:
        for i, j, c in self.terms:
            if (i, j) == (t_degree, theta_power):
                return c
        return 0

    def apply(self, series: PowerSeries) -> PowerSeries:
        """Coefficient k of the image is sum c * (k-i)^j * a_{k-i}."""
        if series.order <= self.max_t_degree:
            raise InsufficientCoefficients(
                f"series of order {series.order} is shorter than the "
                f"operator's t degree {self.max_t_degree}")
        out: List[Coeff] = []
        for k in range(series.order):
            total = Fraction(0)
            for i, j, c in self.terms:
                m = k - i
                if m >= 0:
                    total += Fraction(c) * m ** j * Fraction(series.coeffs[m])
            out.append(_as_coeff(total))
        return PowerSeries(tuple(out))

    def to_json_dict(self) -> dict:
        return {"terms": [{"t": i, "theta": j, "c": str(Fraction(c))}
                          for i, j, c in self.terms]}

    @classmethod
    def from_json_dict(cls, data) -> "DifferentialOperator":
        terms = tuple((int(t["t"]), int(t["theta"]), Fraction(t["c"]))
                      for t in data["terms"])
        return cls(terms)

    def __str__(self) -> str:
        parts = []
        for i, j, c in self.terms:
            factors = []
            if c != 1 or (i == 0 and j == 0):
                factors.append(str(c) if Fraction(c) > 0 else f"({c})")
            if i:
                factors.append("t" if i == 1 else f"t^{i}")
            if j:
                factors.append("theta" if j == 1 else f"theta^{j}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def _rational_kernel(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Kernel basis by Gaussian elimination; each pivot is the remaining
    entry with the smallest denominator to keep intermediate numbers flat."""
    mat = [list(r) for r in rows]
    pivot_cols: List[int] = []
    rank = 0
    for col in range(ncols):
        best = None
        for rix in range(rank, len(mat)):
            entry = mat[rix][col]
            if entry:
                key = (entry.denominator, abs(entry), rix)
                if best is None or key < best:
                    best = key
        if best is None:
            continue
        rix = best[2]
        mat[rank], mat[rix] = mat[rix], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for other in range(len(mat)):
            if other != rank and mat[other][col]:
                factor = mat[other][col]
                mat[other] = [a - factor * b for a, b in zip(mat[other], mat[rank])]
        pivot_cols.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for prow, pcol in enumerate(pivot_cols):
            vec[pcol] = -mat[prow][f]
        basis.append(vec)
    return basis


def _reduced_rows(basis: List[List[Fraction]]) -> List[List[Fraction]]:
    """Row-reduce the kernel basis so distinct rows have distinct leading
    positions; the choice of operator below then does not depend on which
    basis the elimination happened to produce."""
    rows = [list(r) for r in basis]
    ncols = len(rows[0])
    reduced: List[List[Fraction]] = []
    for row in rows:
        for done in reduced:
            lead = next(ix for ix, x in enumerate(done) if x)
            if row[lead]:
                factor = row[lead]
                row = [a - factor * b for a, b in zip(row, done)]
        if any(row):
            lead = next(ix for ix, x in enumerate(row) if x)
            inv = 1 / row[lead]
            row = [x * inv for x in row]
            reduced.append(row)
    for ix, row in enumerate(reduced):
        for other in range(ix):
            lead = next(jx for jx, x in enumerate(row) if x)
            if reduced[other][lead]:
                factor = reduced[other][lead]
                reduced[other] = [a - factor * b
                                  for a, b in zip(reduced[other], row)]
    return reduced


def fit(series: PowerSeries, max_order: int, max_degree: int
        ) -> Optional[DifferentialOperator]:
    """Operator of theta order max_order and smallest t degree <= max_degree
    killing the series, or None.

    All coefficients except the last FIT_MARGIN feed the linear system; any
    solution must then also kill the held-out margin, which guards against
    underdetermined fits. Raises InsufficientCoefficients when the series
    cannot fill the system plus the margin.
    """
    if max_order < 0 or max_degree < 0:
        raise ValueError("order and degree bounds must be nonnegative")
    need = (max_order + 1) * (max_degree + 1) + max_order + FIT_MARGIN
    if series.order < need:
        raise InsufficientCoefficients(
            f"fitting theta order {max_order}, t degree {max_degree} needs "
            f"at least {need} coefficients; got {series.order}")
    window = series.order - FIT_MARGIN
    coeffs = [Fraction(c) for c in series.coeffs]
    for degree in range(max_degree + 1):
        unknowns = [(i, j) for i in range(degree + 1)
                    for j in range(max_order + 1)]
        rows = []
        for k in range(window):
            rows.append([coeffs[k - i] * (k - i) ** j if k >= i else Fraction(0)
                         for (i, j) in unknowns])
        basis = _rational_kernel(rows, len(unknowns))
        if not basis:
            continue
        candidates = []
        for vec in _reduced_rows(basis):
            terms = tuple((i, j, _as_coeff(c))
                          for (i, j), c in zip(unknowns, vec) if c)
            op = DifferentialOperator(terms)
            candidates.append(((-op.max_theta_order, op.max_t_degree, op.terms), op))
        op = min(candidates)[1]
        image = op.apply(series)
        if all(c == 0 for c in image.coeffs):
            return op
    return None
