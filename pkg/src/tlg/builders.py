"""Builders of Laurent superpotential models.

Four families live here: the nef-partition formula for weighted complete
intersections, binomial coefficient placement on reflexive polytopes,
Minkowski-type polynomials with their per-facet certificates, and the
divisor-decorated del Pezzo chains.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from .intlinalg import in_lattice
from .laurent import LaurentPoly
from .polytope import (Polytope, ccw_vertices, edges, is_reflexive,
                       lattice_chart, lattice_points, minkowski_sum,
                       newton_polytope)
from .series import WciSpec


class BadPartition(ValueError):
    """The partition is malformed or lacks a weight-one index in its tail class."""


class InteriorFacetPoint(ValueError):
    """A facet carries a lattice point away from every edge."""


class BadCertificate(ValueError):
    """A Minkowski certificate does not match the polytope it claims to cover."""


class PointInsideHull(ValueError):
    """A build step tried to add a point the polygon already contains."""


class BadBase(ValueError):
    """Unknown starting polygon for a del Pezzo chain."""


# ---------------------------------------------------------------------------
# nef partitions and the weighted complete intersection formula


@dataclass(frozen=True)
class NefPartition:
    """Index classes (E_0, E_1, ..., E_l); E_i weights sum to degree i for i >= 1.

    quality is "very_good" when every E_0 weight is one, "good" when at
    least one is, and "plain" otherwise.
    """

    classes: Tuple[Tuple[int, ...], ...]
    quality: str


def _quality(e0: Sequence[int], weights: Sequence[int]) -> str:
    if all(weights[j] == 1 for j in e0):
        return "very_good"
    if any(weights[j] == 1 for j in e0):
        return "good"
    return "plain"


def find_nef_partitions(spec: WciSpec, want: str = "plain",
                        should_cancel: Optional[Callable[[], bool]] = None
                        ) -> List[NefPartition]:
    """All splittings of the weight indices with class sums matching degrees.

    want narrows the result: "plain" keeps everything, "good" keeps
    partitions whose E_0 holds a weight-one index, "very_good" keeps those
    whose E_0 weights are all one. Output order is the deterministic
    backtracking order over sorted index combinations.
    """
    if want not in ("plain", "good", "very_good"):
        raise ValueError(f"unknown filter {want!r}")
    weights = spec.weights
    out: List[NefPartition] = []

    def rec(deg_idx: int, remaining: Tuple[int, ...], acc: List[Tuple[int, ...]]):
        if should_cancel is not None and should_cancel():
            raise InterruptedError("nef-partition search cancelled")
        if deg_idx == len(spec.degrees):
            e0 = tuple(remaining)
            q = _quality(e0, weights)
            part = NefPartition((e0,) + tuple(acc), q)
            if want == "plain" or q == "very_good" or (want == "good" and q == "good"):
                out.append(part)
            return
        target = spec.degrees[deg_idx]
        for size in range(1, len(remaining) + 1):
            for combo in itertools.combinations(remaining, size):
                if sum(weights[j] for j in combo) == target:
                    rest = tuple(j for j in remaining if j not in combo)
                    acc.append(combo)
                    rec(deg_idx + 1, rest, acc)
                    acc.pop()

    rec(0, tuple(range(len(weights))), [])
    return out


def _dropped_index(cls: Sequence[int], weights: Sequence[int]) -> int:
    return max(cls, key=lambda j: (weights[j], j))


def wci_laurent(spec: WciSpec, part: Optional[NefPartition] = None,
                var_names: Optional[Sequence[str]] = None) -> LaurentPoly:
    """Laurent model of a weighted complete intersection from a nef partition.

    Within each class the index of largest weight (ties resolved towards
    the last position) is dropped; every kept index becomes a variable
    whose denominator exponent is its weight. The model is the product of
    (sum of class variables + 1)^degree over the hypersurface classes,
    divided by the full variable-weight monomial, plus the kept E_0
    variables.
    """
    weights = spec.weights
    if part is None:
        found = find_nef_partitions(spec, "very_good") or find_nef_partitions(spec, "good")
        if not found:
            raise BadPartition("no good nef-partition exists for this spec")
        part = found[0]
    classes = part.classes
    if len(classes) != len(spec.degrees) + 1:
        raise BadPartition("need one class per degree plus the tail class")
    flat = sorted(j for cls in classes for j in cls)
    if flat != list(range(len(weights))):
        raise BadPartition("classes must partition the weight indices")
    for i, cls in enumerate(classes[1:], start=1):
        if sum(weights[j] for j in cls) != spec.degrees[i - 1]:
            raise BadPartition(
                f"class {i} weights sum to {sum(weights[j] for j in cls)}, "
                f"expected degree {spec.degrees[i - 1]}")
    if not any(weights[j] == 1 for j in classes[0]):
        raise BadPartition("tail class holds no weight-one index")

    kept: List[List[int]] = []
    for cls in classes:
        drop = _dropped_index(cls, weights)
        kept.append([j for j in sorted(cls) if j != drop])
    m = sum(len(k) for k in kept)
    if var_names is None:
        names = tuple(f"x{i}" for i in range(1, m + 1))
    else:
        names = tuple(var_names)
        if len(names) != m:
            raise ValueError(f"need {m} variable names, got {len(names)}")

    flat_kept = [j for k in kept for j in k]
    var_of = {j: names[pos] for pos, j in enumerate(flat_kept)}
    numer = LaurentPoly.constant(1, names)
    for i, cls_kept in enumerate(kept[1:], start=1):
        s = LaurentPoly.constant(1, names)
        for j in cls_kept:
            s = s + LaurentPoly.variable(var_of[j], names)
        numer = numer * s ** spec.degrees[i - 1]
    denom_exp = tuple(-weights[j] for j in flat_kept)
    f = numer * LaurentPoly.monomial(names, denom_exp)
    for j in kept[0]:
        f = f + LaurentPoly.variable(var_of[j], names)
    return f


# ---------------------------------------------------------------------------
# binomial coefficients on a reflexive polytope


def _default_names(d: int) -> Tuple[str, ...]:
    if d <= 3:
        return ("x", "y", "z")[:d]
    return tuple(f"x{i}" for i in range(1, d + 1))


def _edge_position(point, v, w) -> Optional[Tuple[int, int]]:
    """(length, index) when point lies on the lattice segment from v to w."""
    dv = tuple(b - a for a, b in zip(v, w))
    g = 0
    for x in dv:
        g = gcd(g, x)
    step = tuple(x // g for x in dv)
    diff = tuple(b - a for a, b in zip(v, point))
    for k in range(g + 1):
        if all(x == k * s for x, s in zip(diff, step)):
            return g, k
    return None


def binomial_principle(p: Polytope) -> LaurentPoly:
    """Vertex coefficients 1, edge coefficients C(n, i), nothing else.

    The polytope must be reflexive with every non-origin lattice point on
    an edge; an edge of lattice length n carries C(n, i) at its i-th point.
    """
    if not is_reflexive(p):
        raise ValueError("binomial coefficient placement needs a reflexive polytope")
    names = _default_names(p.ambient_dim)
    vset = set(p.vertices)
    elist = edges(p)
    terms: Dict[Tuple[int, ...], int] = {}
    for pt in lattice_points(p):
        if all(x == 0 for x in pt):
            continue
        if pt in vset:
            terms[pt] = 1
            continue
        for v, w in elist:
            pos = _edge_position(pt, v, w)
            if pos is not None:
                n, k = pos
                terms[pt] = comb(n, k)
                break
        else:
            raise InteriorFacetPoint(f"lattice point {pt} lies on no edge")
    return LaurentPoly(names, terms)


# ---------------------------------------------------------------------------
# Minkowski polynomials


def is_An_polygon(q: Polytope) -> Optional[int]:
    """n when q is an A-type polygon: a unit segment gives 0, a triangle
    with edge lengths (1, 1, n) gives n, anything else None."""
    if not q.is_lattice():
        return None
    if q.dim == 1:
        a, b = q.vertices[0], q.vertices[-1]
        g = 0
        for x in (y - z for y, z in zip(b, a)):
            g = gcd(g, x)
        return 0 if g == 1 else None
    if q.dim != 2 or len(q.vertices) != 3:
        return None
    lens = []
    for a, b in itertools.combinations(q.vertices, 2):
        g = 0
        for x in (y - z for y, z in zip(b, a)):
            g = gcd(g, x)
        lens.append(g)
    lens.sort()
    if lens[0] == 1 and lens[1] == 1:
        return lens[2]
    return None


def _a_type_terms(q: Polytope) -> Dict[Tuple[int, ...], int]:
    """Binomial coefficient placement on an A-type polygon."""
    n = is_An_polygon(q)
    if n is None:
        raise BadCertificate(f"summand {q!r} is not an A-type polygon")
    terms: Dict[Tuple[int, ...], int] = {v: 1 for v in q.vertices}
    if n >= 2:
        for a, b in itertools.combinations(q.vertices, 2):
            pos = _edge_position(b, a, b)
            g = 0
            for x in (y - z for y, z in zip(b, a)):
                g = gcd(g, x)
            if g == n:
                step = tuple(x // n for x in (y - z for y, z in zip(b, a)))
                for k in range(1, n):
                    pt = tuple(x + k * s for x, s in zip(a, step))
                    terms[pt] = comb(n, k)
    return terms


def a_type_polynomial(q: Polytope, variables: Sequence[str] = ("x", "y")
                      ) -> LaurentPoly:
    """Binomial placement on a single A-type polygon: 1 at the apex and
    the endpoints, C(n, k) along the long edge."""
    return LaurentPoly(tuple(variables), _a_type_terms(q))


@dataclass(frozen=True)
class FacetDecomposition:
    """A-type summands of one facet, written in that facet's chart."""

    normal: Tuple[int, ...]
    summands: Tuple[Polytope, ...]


@dataclass(frozen=True)
class MinkowskiCertificate:
    """Per-facet admissible decompositions witnessing Minkowski type."""

    facets: Tuple[FacetDecomposition, ...]

    def to_json_dict(self) -> dict:
        return {"facets": [{"normal": list(fd.normal),
                            "summands": [s.to_json_dict() for s in fd.summands]}
                           for fd in self.facets]}

    @classmethod
    def from_json_dict(cls, data) -> "MinkowskiCertificate":
        return cls(tuple(
            FacetDecomposition(tuple(fd["normal"]),
                               tuple(Polytope.from_json_dict(s)
                                     for s in fd["summands"]))
            for fd in data["facets"]))


def _diff_lattice(points: Sequence[Tuple[int, ...]]) -> List[List[int]]:
    base = points[0]
    return [list(b - a for a, b in zip(base, p)) for p in points[1:]]


def _lattice_equal(gens_a: List[List[int]], gens_b: List[List[int]]) -> bool:
    return (all(in_lattice(gens_b, g) for g in gens_a)
            and all(in_lattice(gens_a, g) for g in gens_b))


def _facet_chart_points(p: Polytope, normal, height):
    pts = [q for q in lattice_points(p)
           if sum(a * b for a, b in zip(normal, q)) + height == 0]
    base, basis, proj = lattice_chart(pts, normal)
    return pts, base, basis, proj


def _check_facet_decomposition(proj: Sequence[Tuple[int, int]],
                               summands: Sequence[Polytope]) -> None:
    """Raise BadCertificate unless summands sum to the facet admissibly."""
    total = summands[0]
    for s in summands[1:]:
        total = minkowski_sum(total, s)
    facet = Polytope(proj)
    if total != facet:
        raise BadCertificate("summands do not add up to the facet")
    facet_gens = _diff_lattice(sorted(proj))
    summand_gens: List[List[int]] = []
    for s in summands:
        summand_gens.extend(_diff_lattice(lattice_points(s)))
    if not _lattice_equal(facet_gens, summand_gens):
        raise BadCertificate("summand lattices do not generate the facet lattice")


def _facet_product(summands: Sequence[Polytope]) -> Dict[Tuple[int, int], int]:
    prod: Dict[Tuple[int, ...], int] = {(0, 0): 1}
    for s in summands:
        terms = _a_type_terms(s)
        new: Dict[Tuple[int, ...], int] = {}
        for e1, c1 in prod.items():
            for e2, c2 in terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                new[e] = new.get(e, 0) + c1 * c2
        prod = new
    return prod


def minkowski_polynomial(p: Polytope, cert: MinkowskiCertificate) -> LaurentPoly:
    """Assemble the Laurent polynomial whose facet restrictions are the
    certified products of A-type binomial polynomials."""
    if p.ambient_dim != 3 or not is_reflexive(p):
        raise ValueError("Minkowski polynomials live on reflexive 3-polytopes")
    by_normal = {fd.normal: fd.summands for fd in cert.facets}
    if set(by_normal) != {n for n, _ in p.facets}:
        raise BadCertificate("certificate facets do not match the polytope")
    names = _default_names(3)
    terms: Dict[Tuple[int, ...], int] = {}
    for normal, height in p.facets:
        summands = by_normal[normal]
        pts, base, basis, proj = _facet_chart_points(p, normal, height)
        _check_facet_decomposition(proj, summands)
        prod = _facet_product(summands)
        for e, c in prod.items():
            ambient = tuple(base[j] + sum(ck * basis[k][j] for k, ck in enumerate(e))
                            for j in range(3))
            if terms.setdefault(ambient, c) != c:
                raise BadCertificate(
                    f"facets disagree on the coefficient at {ambient}")
    return LaurentPoly(names, terms)


def _polygon_edge_budget(q: Polytope) -> Tuple[List[Tuple[int, int]], Dict[Tuple[int, int], int]]:
    """Counterclockwise primitive edge directions of a polygon with the
    total lattice length per direction."""
    cyc = ccw_vertices(q.vertices)
    budget: Dict[Tuple[int, int], int] = {}
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        dv = (w[0] - v[0], w[1] - v[1])
        g = gcd(abs(dv[0]), abs(dv[1]))
        d = (dv[0] // g, dv[1] // g)
        budget[d] = budget.get(d, 0) + g
    return list(budget), budget


def _candidate_summands(dirs: List[Tuple[int, int]],
                        budget: Dict[Tuple[int, int], int]
                        ) -> List[Tuple[Polytope, Dict[Tuple[int, int], int]]]:
    """A-type polygons whose edges fit the direction budget, with their
    per-direction consumption."""
    cands: List[Tuple[Polytope, Dict[Tuple[int, int], int]]] = []
    seen: Set[Tuple] = set()
    for b in dirs:
        for n in range(1, budget[b] + 1):
            for d2 in dirs:
                d3 = (-n * b[0] - d2[0], -n * b[1] - d2[1])
                if d3 not in budget:
                    continue
                if b[0] * d2[1] - b[1] * d2[0] <= 0:
                    continue
                tri = Polytope([(0, 0), (n * b[0], n * b[1]),
                                (n * b[0] + d2[0], n * b[1] + d2[1])])
                if tri.dim != 2:
                    continue
                v0 = tri.vertices[0]
                key = tuple(tuple(a - b0 for a, b0 in zip(v, v0))
                            for v in tri.vertices)
                if key in seen:
                    continue
                seen.add(key)
                cons = {b: n}
                cons[d2] = cons.get(d2, 0) + 1
                cons[d3] = cons.get(d3, 0) + 1
                cands.append((tri, cons))
    for d in dirs:
        nd = (-d[0], -d[1])
        if d < nd or nd not in budget:
            continue
        seg = Polytope([(0, 0), d])
        cands.append((seg, {d: 1, nd: 1}))
    return cands


def _decompose_facet(proj: Sequence[Tuple[int, int]],
                     target: Dict[Tuple[int, int], int],
                     max_summands: int,
                     should_cancel: Optional[Callable[[], bool]]
                     ) -> Optional[Tuple[Polytope, ...]]:
    facet = Polytope(proj)
    dirs, budget = _polygon_edge_budget(facet)
    cands = _candidate_summands(dirs, budget)

    def verify(chosen: List[Polytope]) -> Optional[Tuple[Polytope, ...]]:
        total = chosen[0]
        for s in chosen[1:]:
            total = minkowski_sum(total, s)
        shift = tuple(a - b for a, b in zip(facet.vertices[0], total.vertices[0]))
        moved = Polytope([tuple(a + s for a, s in zip(v, shift))
                          for v in total.vertices])
        if moved != facet:
            return None
        prod = _facet_product(chosen)
        shifted = {tuple(a + s for a, s in zip(e, shift)): c
                   for e, c in prod.items()}
        if shifted != target:
            return None
        summand_gens: List[List[int]] = []
        for s in chosen:
            summand_gens.extend(_diff_lattice(lattice_points(s)))
        if not _lattice_equal(_diff_lattice(sorted(proj)), summand_gens):
            return None
        first = Polytope([tuple(a + s for a, s in zip(v, shift))
                          for v in chosen[0].vertices])
        return (first,) + tuple(chosen[1:])

    def rec(start: int, remaining: Dict[Tuple[int, int], int],
            chosen: List[Polytope]) -> Optional[Tuple[Polytope, ...]]:
        if should_cancel is not None and should_cancel():
            raise InterruptedError("Minkowski search cancelled")
        if all(v == 0 for v in remaining.values()):
            if chosen:
                return verify(chosen)
            return None
        if len(chosen) == max_summands:
            return None
        for idx in range(start, len(cands)):
            shape, cons = cands[idx]
            if any(remaining.get(d, 0) < c for d, c in cons.items()):
                continue
            nxt = dict(remaining)
            for d, c in cons.items():
                nxt[d] -= c
            chosen.append(shape)
            got = rec(idx, nxt, chosen)
            chosen.pop()
            if got is not None:
                return got
        return None

    return rec(0, dict(budget), [])


def check_minkowski(f: LaurentPoly, max_summands: int = 4,
                    should_cancel: Optional[Callable[[], bool]] = None
                    ) -> Optional[MinkowskiCertificate]:
    """Search per-facet admissible A-type decompositions matching f.

    None means no certificate was found within the bounded search (at most
    max_summands per facet); it is not a proof that none exists.
    """
    p = newton_polytope(f)
    if p.ambient_dim != 3 or not is_reflexive(p):
        raise ValueError("Minkowski check needs a reflexive Newton 3-polytope")
    found: List[FacetDecomposition] = []
    for normal, height in p.facets:
        pts, base, basis, proj = _facet_chart_points(p, normal, height)
        target = {}
        for q, c in zip(proj, pts):
            coeff = f.coefficient(c)
            if coeff:
                target[q] = coeff
        dec = _decompose_facet(proj, target, max_summands, should_cancel)
        if dec is None:
            return None
        found.append(FacetDecomposition(normal, dec))
    return MinkowskiCertificate(tuple(found))


# ---------------------------------------------------------------------------
# del Pezzo chains

_BASES: Dict[str, Tuple[Dict[Tuple[int, int], Tuple[int, ...]], int]] = {}


def _base_markings(base: str, nparams: int) -> Dict[Tuple[int, int], Tuple[int, ...]]:
    """Initial boundary markings as exponent vectors over the parameters."""
    def e(*idx):
        v = [0] * nparams
        for i in idx:
            v[i] += 1
        return tuple(v)

    if base == "P2":
        return {(1, 0): e(), (0, 1): e(), (-1, -1): e(0)}
    if base == "quadric_square":
        return {(1, 0): e(), (-1, 0): e(0), (0, 1): e(), (0, -1): e(1)}
    if base == "quadric_F2":
        return {(0, 1): e(), (-1, -1): e(0), (0, -1): e(1), (1, -1): e()}
    raise BadBase(f"unknown base {base!r}")


_BASE_PARAM_COUNT = {"P2": 1, "quadric_square": 2, "quadric_F2": 2}


@dataclass(frozen=True)
class DelPezzoScript:
    """A starting polygon, points to attach, and parameter names to spend.

    The base consumes the first one (P2) or two (quadrics) parameters; each
    step consumes the next one.
    """

    base: str
    steps: Tuple[Tuple[int, int], ...] = ()
    params: Tuple[str, ...] = ()


def _boundary_cycle(markings_keys) -> List[Tuple[int, int]]:
    """All boundary lattice points of the hull, counterclockwise."""
    poly = Polytope(markings_keys)
    cyc = ccw_vertices(poly.vertices)
    out: List[Tuple[int, int]] = []
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        dv = (w[0] - v[0], w[1] - v[1])
        g = gcd(abs(dv[0]), abs(dv[1]))
        step = (dv[0] // g, dv[1] // g)
        for k in range(g):
            out.append((v[0] + k * step[0], v[1] + k * step[1]))
    return out


def del_pezzo_model(script: DelPezzoScript, mode: str = "toric") -> LaurentPoly:
    """Divisor-decorated model built by attaching vertices to a base polygon.

    Attaching K multiplies a fresh parameter by the markings of the two
    boundary lattice points next to K. Toric mode returns the markings as
    they stand; surface mode rewrites each boundary edge K_0..K_r so the
    coefficient at K_i is the s^i coefficient of
    m_{K_0} prod_j (1 + (m_{K_j}/m_{K_j-1}) s).
    """
    if mode not in ("toric", "surface"):
        raise ValueError(f"unknown mode {mode!r}")
    if script.base not in _BASE_PARAM_COUNT:
        raise BadBase(f"unknown base {script.base!r}")
    nbase = _BASE_PARAM_COUNT[script.base]
    need = nbase + len(script.steps)
    params = tuple(script.params)
    if len(params) != need:
        raise ValueError(f"base {script.base} with {len(script.steps)} steps "
                         f"needs {need} parameters, got {len(params)}")
    np_ = len(params)
    markings = _base_markings(script.base, np_)

    for s_idx, k_pt in enumerate(script.steps):
        k_pt = (int(k_pt[0]), int(k_pt[1]))
        poly = Polytope(markings.keys())
        if poly.contains(k_pt):
            raise PointInsideHull(f"step point {k_pt} is already inside")
        cycle = _boundary_cycle(list(markings.keys()) + [k_pt])
        pos = cycle.index(k_pt)
        left = cycle[pos - 1]
        right = cycle[(pos + 1) % len(cycle)]
        for nb in (left, right):
            if nb not in markings:
                raise ValueError(
                    f"step {s_idx}: boundary neighbor {nb} carries no marking")
        exp = tuple(a + b for a, b in zip(markings[left], markings[right]))
        exp = tuple(a + (1 if i == nbase + s_idx else 0) for i, a in enumerate(exp))
        markings[k_pt] = exp

    final = Polytope(markings.keys())
    if not all(h > 0 for _, h in final.facets):
        raise ValueError("origin must end up strictly inside the polygon")
    boundary = _boundary_cycle(markings.keys())
    missing = sorted(set(boundary) - set(markings))
    if missing:
        raise ValueError(f"boundary points {missing} never received markings")
    swallowed = sorted(set(markings) - set(boundary))
    if swallowed:
        raise ValueError(f"marked points {swallowed} fell inside the polygon")

    names = ("x", "y") + params
    if mode == "toric":
        terms = {(pt[0], pt[1]) + e: 1 for pt, e in markings.items()}
        return LaurentPoly(names, terms)

    # surface mode: rework every edge by the marking product rule
    cyc = ccw_vertices(final.vertices)
    terms: Dict[Tuple[int, ...], int] = {}
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        dv = (w[0] - v[0], w[1] - v[1])
        g = gcd(abs(dv[0]), abs(dv[1]))
        step = (dv[0] // g, dv[1] // g)
        pts = [(v[0] + k * step[0], v[1] + k * step[1]) for k in range(g + 1)]
        marks = [markings[pt] for pt in pts]
        coeffs: List[Dict[Tuple[int, ...], int]] = [{marks[0]: 1}]
        for j in range(1, len(marks)):
            ratio = tuple(a - b for a, b in zip(marks[j], marks[j - 1]))
            nxt: List[Dict[Tuple[int, ...], int]] = []
            for idx in range(len(coeffs) + 1):
                acc: Dict[Tuple[int, ...], int] = {}
                if idx < len(coeffs):
                    for e, c in coeffs[idx].items():
                        acc[e] = acc.get(e, 0) + c
                if idx > 0:
                    for e, c in coeffs[idx - 1].items():
                        shifted = tuple(a + r for a, r in zip(e, ratio))
                        acc[shifted] = acc.get(shifted, 0) + c
                nxt.append(acc)
            coeffs = nxt
        for pt, bag in zip(pts, coeffs):
            for e, c in bag.items():
                key = (pt[0], pt[1]) + e
                prev = terms.get(key)
                if prev is None:
                    terms[key] = c
                elif prev != c:
                    raise AssertionError(
                        f"edges disagree on the coefficient at {key}")
    return LaurentPoly(names, terms)
