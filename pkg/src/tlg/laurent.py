"""Laurent polynomials with exact rational coefficients.

Terms are stored sparsely as a dict mapping integer exponent tuples to
coefficients. Coefficients are plain ints whenever the value is integral and
fractions.Fraction otherwise; arithmetic never leaves exact rationals.
Iteration and serialization order terms lexicographically by exponent so all
outputs are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

Coeff = Union[int, Fraction]
Exponent = Tuple[int, ...]


class VariableMismatch(ValueError):
    """Two expressions use incompatible variable sets where one is required."""


class UnknownVariable(ValueError):
    """A variable name was referenced that the expression does not declare."""


class ZeroDenominator(ZeroDivisionError):
    """A rational expression was built or evaluated with a zero denominator."""


class NotLaurent(ArithmeticError):
    """A rational expression is not equal to any Laurent polynomial."""


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _coerce_coeff(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"coefficient must be int, Fraction or string, got {type(c).__name__}")


class LaurentPoly:
    """Immutable sparse Laurent polynomial over named variables."""

    __slots__ = ("_vars", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Coeff]):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise VariableMismatch(f"duplicate variable names in {vs}")
        clean: Dict[Exponent, Coeff] = {}
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != len(vs):
                raise VariableMismatch(
                    f"exponent {e} has length {len(e)}, expected {len(vs)}")
            c = _coerce_coeff(c)
            if c:
                clean[e] = c
        self._vars = vs
        self._terms = clean

    @classmethod
    def _raw(cls, vs: Tuple[str, ...], terms: Dict[Exponent, Coeff]) -> "LaurentPoly":
        # internal fast path: exponents already well formed, only coefficients
        # need normalizing
        p = object.__new__(cls)
        p._vars = vs
        p._terms = {e: _norm(c) for e, c in terms.items() if c}
        return p

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "LaurentPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, value: Coeff, variables: Sequence[str] = ()) -> "LaurentPoly":
        vs = tuple(variables)
        return cls(vs, {(0,) * len(vs): value})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "LaurentPoly":
        vs = tuple(variables)
        if name not in vs:
            raise UnknownVariable(f"{name!r} not among {vs}")
        e = tuple(1 if v == name else 0 for v in vs)
        return cls(vs, {e: 1})

    @classmethod
    def monomial(cls, variables: Sequence[str], exponent: Sequence[int],
                 coeff: Coeff = 1) -> "LaurentPoly":
        return cls(variables, {tuple(exponent): coeff})

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._vars

    def terms(self) -> Iterator[Tuple[Exponent, Coeff]]:
        """Terms in lexicographic exponent order."""
        for e in sorted(self._terms):
            yield e, self._terms[e]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: Sequence[int]) -> Coeff:
        return self._terms.get(tuple(exponent), 0)

    def exponents(self) -> Iterator[Exponent]:
        return iter(sorted(self._terms))

    def support_box(self) -> Tuple[Tuple[int, int], ...]:
        """Per-variable (min, max) exponent over all terms."""
        if not self._terms:
            raise ValueError("zero polynomial has no support")
        cols = list(zip(*self._terms))
        return tuple((min(col), max(col)) for col in cols)

    # -- variable alignment ------------------------------------------------

    def with_variables(self, variables: Sequence[str]) -> "LaurentPoly":
        """Reindex onto a superset of the current variables."""
        vs = tuple(variables)
        if vs == self._vars:
            return self
        pos = []
        for v in self._vars:
            if v not in vs:
                raise UnknownVariable(f"target variables {vs} drop {v!r}")
            pos.append(vs.index(v))
        n = len(vs)
        out: Dict[Exponent, Coeff] = {}
        for e, c in self._terms.items():
            ne = [0] * n
            for p, x in zip(pos, e):
                ne[p] = x
            out[tuple(ne)] = c
        return LaurentPoly._raw(vs, out)

    def _aligned(self, other: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        if self._vars == other._vars:
            return self, other
        merged = tuple(sorted(set(self._vars) | set(other._vars)))
        return self.with_variables(merged), other.with_variables(merged)

    def rename_variables(self, mapping: Dict[str, str]) -> "LaurentPoly":
        """Rename variables; names not in the mapping stay put.

        Exponent columns follow their variables, so the result sorts its
        variable tuple back into canonical order.
        """
        new_names = [mapping.get(v, v) for v in self._vars]
        if len(set(new_names)) != len(new_names):
            raise VariableMismatch(f"renaming collides: {new_names}")
        order = sorted(range(len(new_names)), key=lambda i: new_names[i])
        vs = tuple(new_names[i] for i in order)
        out = {tuple(e[i] for i in order): c for e, c in self._terms.items()}
        return LaurentPoly._raw(vs, out)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self._vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._aligned(other)
        out = dict(a._terms)
        for e, c in b._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(a._vars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self._vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero(self._vars)
            return LaurentPoly._raw(
                self._vars, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._aligned(other)
        if len(a._terms) > len(b._terms):
            a, b = b, a
        out: Dict[Exponent, Coeff] = {}
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(a._vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) == 1:
                ((e, c),) = self._terms.items()
                return LaurentPoly._raw(
                    self._vars, {tuple(n * x for x in e): _norm(Fraction(c) ** n)})
            raise NotLaurent("negative power of a non-monomial")
        result = LaurentPoly.constant(1, self._vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self._vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a._terms == b._terms

    def __hash__(self):
        return hash((self._vars, frozenset(self._terms.items())))

    # -- structure ---------------------------------------------------------

    def filter_terms(self, keep: Callable[[Exponent], bool]) -> "LaurentPoly":
        return LaurentPoly._raw(
            self._vars, {e: c for e, c in self._terms.items() if keep(e)})

    def constant_term(self, over: Optional[Iterable[str]] = None):
        """Coefficient of the zero exponent.

        With ``over`` a subset of variables, collects all terms whose
        exponents vanish on those variables and returns them as a polynomial
        in the remaining variables. Without it, returns the scalar
        coefficient of the all-zero exponent.
        """
        if over is None:
            return self._terms.get((0,) * len(self._vars), 0)
        kill = tuple(over)
        for v in kill:
            if v not in self._vars:
                raise UnknownVariable(f"{v!r} not among {self._vars}")
        kill_pos = [i for i, v in enumerate(self._vars) if v in kill]
        keep_pos = [i for i, v in enumerate(self._vars) if v not in kill]
        rest = tuple(self._vars[i] for i in keep_pos)
        out: Dict[Exponent, Coeff] = {}
        for e, c in self._terms.items():
            if all(e[i] == 0 for i in kill_pos):
                ne = tuple(e[i] for i in keep_pos)
                out[ne] = out.get(ne, 0) + c
        return LaurentPoly._raw(rest, out)

    def substitute(self, assignments: Mapping[str, object]) -> "RationalExpr":
        """Substitute values for variables; unmentioned variables persist.

        Values may be scalars, Laurent polynomials or rational expressions.
        The result is a rational expression since substituted values may sit
        at negative exponents.
        """
        for name in assignments:
            if name not in self._vars:
                raise UnknownVariable(f"{name!r} not among {self._vars}")
        values: Dict[str, RationalExpr] = {}
        out_vars = set()
        for v in self._vars:
            if v in assignments:
                values[v] = RationalExpr.coerce(assignments[v])
                out_vars.update(values[v].num.variables)
                out_vars.update(values[v].den.variables)
            else:
                out_vars.add(v)
        merged = tuple(sorted(out_vars))
        for v in self._vars:
            if v not in values:
                values[v] = RationalExpr.from_poly(LaurentPoly.variable(v, merged))
            else:
                values[v] = values[v].with_variables(merged)

        one = RationalExpr.from_poly(LaurentPoly.constant(1, merged))
        power_cache: Dict[Tuple[str, int], RationalExpr] = {}

        def vpow(name: str, k: int) -> RationalExpr:
            key = (name, k)
            if key not in power_cache:
                power_cache[key] = values[name] ** k
            return power_cache[key]

        total = RationalExpr.from_poly(LaurentPoly.zero(merged))
        for e, c in sorted(self._terms.items()):
            term = one * c
            for name, k in zip(self._vars, e):
                if k:
                    term = term * vpow(name, k)
            total = total + term
        return total

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self._vars),
            "terms": [{"e": list(e), "c": str(Fraction(c))}
                      for e, c in self.terms()],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPoly":
        terms = {tuple(t["e"]): _coerce_coeff(t["c"]) for t in data["terms"]}
        return cls(tuple(data["vars"]), terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._vars!r}, {len(self._terms)} terms)"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            factors = []
            for v, k in zip(self._vars, e):
                if k == 1:
                    factors.append(v)
                elif k:
                    factors.append(f"{v}^{k}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(str(c) + "*" + "*".join(factors))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


class RationalExpr:
    """Quotient of two Laurent polynomials, kept unreduced.

    Arithmetic cross multiplies; no polynomial gcd is ever computed. The only
    cleanup applied is stripping a common monomial factor, which keeps
    exponents small through substitution chains without changing the value.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        num, den = num._aligned(den)
        if den.is_zero():
            raise ZeroDenominator("denominator is identically zero")
        self.num, self.den = _strip_monomial_content(num, den)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalExpr":
        return cls(p, LaurentPoly.constant(1, p.variables))

    @classmethod
    def coerce(cls, value) -> "RationalExpr":
        if isinstance(value, RationalExpr):
            return value
        if isinstance(value, LaurentPoly):
            return cls.from_poly(value)
        if isinstance(value, (int, Fraction)):
            return cls.from_poly(LaurentPoly.constant(value))
        raise TypeError(f"cannot interpret {type(value).__name__} as a rational expression")

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.num.variables

    def with_variables(self, variables: Sequence[str]) -> "RationalExpr":
        return RationalExpr(self.num.with_variables(variables),
                            self.den.with_variables(variables))

    def __add__(self, other) -> "RationalExpr":
        other = RationalExpr.coerce(other)
        return RationalExpr(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalExpr":
        return RationalExpr(-self.num, self.den)

    def __sub__(self, other) -> "RationalExpr":
        return self + (-RationalExpr.coerce(other))

    def __rsub__(self, other) -> "RationalExpr":
        return (-self) + other

    def __mul__(self, other) -> "RationalExpr":
        if isinstance(other, (int, Fraction)):
            return RationalExpr(self.num * other, self.den)
        other = RationalExpr.coerce(other)
        return RationalExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalExpr":
        other = RationalExpr.coerce(other)
        if other.num.is_zero():
            raise ZeroDenominator("division by the zero expression")
        return RationalExpr(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "RationalExpr":
        if not isinstance(n, int):
            return NotImplemented
        if n >= 0:
            return RationalExpr(self.num ** n, self.den ** n)
        if self.num.is_zero():
            raise ZeroDenominator("negative power of the zero expression")
        return RationalExpr(self.den ** (-n), self.num ** (-n))

    def __eq__(self, other) -> bool:
        try:
            other = RationalExpr.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("unhashable: rational expressions compare by value")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_laurent(self) -> LaurentPoly:
        return as_laurent(self)

    def __repr__(self) -> str:
        return f"RationalExpr(({self.num}) / ({self.den}))"


def _strip_monomial_content(num: LaurentPoly, den: LaurentPoly
                            ) -> Tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero():
        return num, _strip_alone(den)
    shift_n = [min(col) for col in zip(*num._terms)]
    shift_d = [min(col) for col in zip(*den._terms)]
    shift = tuple(min(a, b) for a, b in zip(shift_n, shift_d))
    if not any(shift):
        return num, den
    return _shift_by(num, shift), _shift_by(den, shift)


def _strip_alone(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    shift = tuple(min(col) for col in zip(*p._terms))
    if not any(shift):
        return p
    return _shift_by(p, shift)


def _shift_by(p: LaurentPoly, shift: Exponent) -> LaurentPoly:
    return LaurentPoly._raw(
        p.variables,
        {tuple(x - s for x, s in zip(e, shift)): c for e, c in p._terms.items()})


def _grlex_key(e: Exponent) -> Tuple[int, Exponent]:
    return (sum(e), e)


def as_laurent(expr: RationalExpr) -> LaurentPoly:
    """Convert a rational expression to a Laurent polynomial exactly.

    Raises NotLaurent when the quotient is not a Laurent polynomial. The
    general case runs term-by-term division in the graded lexicographic
    order; exponents of a true quotient are confined per coordinate to
    [min(num) - min(den), max(num) - max(den)], so any division step leaving
    that box proves the quotient does not exist.
    """
    num, den = expr.num, expr.den
    vs = num.variables
    if num.is_zero():
        return LaurentPoly.zero(vs)
    if len(den._terms) == 1:
        ((de, dc),) = den._terms.items()
        out = {tuple(x - y for x, y in zip(e, de)): _div_coeff(c, dc)
               for e, c in num._terms.items()}
        return LaurentPoly._raw(vs, out)

    nbox = num.support_box()
    dbox = den.support_box()
    box = tuple((nlo - dlo, nhi - dhi) for (nlo, nhi), (dlo, dhi) in zip(nbox, dbox))
    for lo, hi in box:
        if lo > hi:
            raise NotLaurent("support of numerator too thin for the denominator")
    budget = 1
    for lo, hi in box:
        budget *= hi - lo + 1

    dlead = max(den._terms, key=_grlex_key)
    dlc = den._terms[dlead]
    rem = dict(num._terms)
    quo: Dict[Exponent, Coeff] = {}
    while rem:
        rlead = max(rem, key=_grlex_key)
        te = tuple(x - y for x, y in zip(rlead, dlead))
        if any(not (lo <= x <= hi) for x, (lo, hi) in zip(te, box)):
            raise NotLaurent("quotient support escapes its bounding box")
        if budget <= 0:
            raise NotLaurent("division does not terminate inside the bounding box")
        budget -= 1
        tc = _div_coeff(rem[rlead], dlc)
        quo[te] = tc
        for e, c in den._terms.items():
            key = tuple(x + y for x, y in zip(te, e))
            s = rem.get(key, 0) - tc * c
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return LaurentPoly._raw(vs, quo)


def _div_coeff(a: Coeff, b: Coeff) -> Coeff:
    return _norm(Fraction(a) / Fraction(b))
