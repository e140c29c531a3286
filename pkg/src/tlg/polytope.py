"""Exact lattice polytope geometry in low dimensions.

Convex hulls are computed incrementally with rational arithmetic, so every
facet normal, height and vertex is exact. Polytopes may have integer or
rational vertex coordinates; operations that need the induced lattice
structure (normalized volume, lattice point enumeration in the degenerate
case) insist on integer vertices.

Facets are stored as pairs (n, h) with n a primitive integer inner normal,
meaning the halfspace <n, x> >= -h. Heights are integers for lattice
polytopes and rationals otherwise. Facets and vertices are kept sorted so
that identical polytopes always print identically.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .intlinalg import (det_bareiss, inverse_rational, kernel_lattice_basis,
                        kernel_rational, snf_with_transforms, solve_rational)
from .laurent import LaurentPoly

Point = Tuple[object, ...]  # entries are int or Fraction


class PolytopeError(Exception):
    """Base class for polytope failures."""


class EmptyPolytope(PolytopeError):
    """No points were supplied."""


class ZeroPolynomial(PolytopeError):
    """The zero polynomial has no Newton polytope."""


class NotFullDimensional(PolytopeError):
    """The operation needs a polytope of full ambient dimension."""


class OriginNotInterior(PolytopeError):
    """Dual and reflexivity require the origin strictly inside."""


class DimensionTooLarge(PolytopeError):
    """The equivalence search is limited to ambient dimension <= 4."""


class DimensionMismatch(PolytopeError):
    """Operands live in different ambient dimensions."""


def _normc(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _norm_point(p: Sequence) -> Point:
    return tuple(_normc(Fraction(x) if not isinstance(x, (int, Fraction)) else x)
                 for x in p)


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _sub(a: Sequence, b: Sequence) -> Tuple:
    return tuple(x - y for x, y in zip(a, b))


def primitive_vector(vec: Sequence) -> Tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector."""
    fracs = [Fraction(x) for x in vec]
    mult = 1
    for f in fracs:
        mult = mult * f.denominator // gcd(mult, f.denominator)
    ints = [int(f * mult) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


class _Echelon:
    """Incremental rational row reduction used for rank bookkeeping."""

    def __init__(self, width: int):
        self.width = width
        self.rows: List[List[Fraction]] = []
        self.pivots: List[int] = []

    def residual(self, vec: Sequence) -> List[Fraction]:
        v = [Fraction(x) for x in vec]
        for row, piv in zip(self.rows, self.pivots):
            if v[piv]:
                c = v[piv]
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, vec: Sequence) -> bool:
        """Insert a vector; True when it enlarged the span."""
        v = self.residual(vec)
        for i, x in enumerate(v):
            if x:
                inv = 1 / x
                self.rows.append([a * inv for a in v])
                self.pivots.append(i)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def _affine_rank(points: Sequence[Point]) -> int:
    if not points:
        return -1
    ech = _Echelon(len(points[0]))
    for p in points[1:]:
        ech.add(_sub(p, points[0]))
    return ech.rank


def _hyperplane_through(points: Sequence[Point], inside: Point
                        ) -> Tuple[Tuple[int, ...], object]:
    """Primitive inner normal (n, h) with <n,x> = -h on points, <n,inside> > -h."""
    diffs = [list(_sub(p, points[0])) for p in points[1:]]
    basis = kernel_rational(diffs)
    if len(basis) != 1:
        raise ValueError("points do not span a unique hyperplane")
    n = primitive_vector(basis[0])
    h = -_dot(n, points[0])
    side = _dot(n, inside) + h
    if side < 0:
        n = tuple(-x for x in n)
        h = -h
        side = -side
    if side == 0:
        raise ValueError("reference point lies on the hyperplane")
    return n, _normc(Fraction(h))


class _Facet:
    __slots__ = ("normal", "height", "incidents")

    def __init__(self, normal, height, incidents):
        self.normal = normal
        self.height = height
        self.incidents: Set[int] = set(incidents)

    def value(self, p: Point):
        return _dot(self.normal, p) + self.height


def _full_hull(pts: List[Point]) -> Tuple[List[_Facet], Set[int]]:
    """Facets and vertex indices for points of full affine rank.

    Incremental insertion: each new point either lies inside the current
    hull (possibly on facet hyperplanes, which then absorb it) or sees a set
    of facets. Seen facets are replaced by facets spanned by each horizon
    ridge together with the new point. Incident sets are kept complete for
    every processed point, which is what makes exact ridge detection by
    affine rank possible.
    """
    d = len(pts[0])
    ech = _Echelon(d)
    simplex = [0]
    for i in range(1, len(pts)):
        if ech.add(_sub(pts[i], pts[0])):
            simplex.append(i)
        if len(simplex) == d + 1:
            break
    ref = tuple(Fraction(sum(col), d + 1) for col in zip(*[pts[i] for i in simplex]))

    facets: List[_Facet] = []
    for omit in range(d + 1):
        subset = [simplex[j] for j in range(d + 1) if j != omit]
        n, h = _hyperplane_through([pts[i] for i in subset], pts[simplex[omit]])
        facets.append(_Facet(n, h, subset))

    processed = set(simplex)
    for i in range(len(pts)):
        if i in processed:
            continue
        p = pts[i]
        values = [f.value(p) for f in facets]
        if all(v >= 0 for v in values):
            for f, v in zip(facets, values):
                if v == 0:
                    f.incidents.add(i)
            processed.add(i)
            continue
        visible = [f for f, v in zip(facets, values) if v < 0]
        survivors = [f for f, v in zip(facets, values) if v >= 0]
        survivor_keys = {(f.normal, f.height) for f in survivors}
        new_planes: Dict[Tuple, Tuple] = {}
        for F in visible:
            for G in survivors:
                common = F.incidents & G.incidents
                if not common:
                    continue
                common_pts = [pts[j] for j in sorted(common)]
                if _affine_rank(common_pts) != d - 2:
                    continue
                span = [common_pts[0]]
                ech2 = _Echelon(d)
                for q in common_pts[1:]:
                    if ech2.add(_sub(q, common_pts[0])):
                        span.append(q)
                span.append(p)
                n, h = _hyperplane_through(span, ref)
                key = (n, h)
                if key not in survivor_keys:
                    new_planes[key] = key
        for f in survivors:
            if f.value(p) == 0:
                f.incidents.add(i)
        processed.add(i)
        facets = survivors
        for n, h in new_planes:
            inc = {j for j in processed if _dot(n, pts[j]) + h == 0}
            facets.append(_Facet(n, h, inc))

    vertices: Set[int] = set()
    candidates = set()
    for f in facets:
        candidates |= f.incidents
    for i in candidates:
        ech3 = _Echelon(d)
        for f in facets:
            if i in f.incidents:
                ech3.add(f.normal)
        if ech3.rank == d:
            vertices.add(i)
    return facets, vertices


def _vertex_indices(pts: List[Point]) -> Set[int]:
    """Hull vertex indices for points of any affine rank."""
    d = len(pts[0]) if pts else 0
    rank = _affine_rank(pts)
    if rank <= 0:
        return {0}
    if rank == d:
        if d == 1:
            lo = min(range(len(pts)), key=lambda i: pts[i][0])
            hi = max(range(len(pts)), key=lambda i: pts[i][0])
            return {lo, hi}
        _, verts = _full_hull(pts)
        return verts
    # degenerate: rewrite the points in rational coordinates on their span
    p0 = pts[0]
    ech = _Echelon(d)
    basis: List[Tuple] = []
    for p in pts[1:]:
        v = _sub(p, p0)
        if ech.add(v):
            basis.append(v)
    cols = [list(col) for col in zip(*basis)]  # d x rank matrix
    coords = []
    for p in pts:
        sol = solve_rational(cols, list(_sub(p, p0)))
        coords.append(_norm_point(sol))
    sub = _vertex_indices(coords)
    return sub


class Polytope:
    """Convex hull of a finite point set, exact and immutable."""

    __slots__ = ("ambient_dim", "dim", "vertices", "_facets")

    def __init__(self, points: Iterable[Sequence]):
        pts = sorted({_norm_point(p) for p in points})
        if not pts:
            raise EmptyPolytope("need at least one point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise DimensionMismatch(f"mixed point lengths {sorted(dims)}")
        self.ambient_dim = dims.pop()
        self.dim = max(_affine_rank(pts), 0)
        vidx = _vertex_indices(pts)
        self.vertices: Tuple[Point, ...] = tuple(sorted(pts[i] for i in vidx))
        self._facets: Optional[Tuple[Tuple[Tuple[int, ...], object], ...]] = None
        if self.dim == self.ambient_dim and self.ambient_dim >= 1:
            if self.ambient_dim == 1:
                lo = min(p[0] for p in pts)
                hi = max(p[0] for p in pts)
                self._facets = (((1,), _normc(Fraction(-lo))),
                                ((-1,), _normc(Fraction(hi))))
            else:
                facets, _ = _full_hull(list(self.vertices))
                self._facets = tuple(sorted((f.normal, f.height) for f in facets))

    @property
    def facets(self) -> Tuple[Tuple[Tuple[int, ...], object], ...]:
        if self._facets is None:
            raise NotFullDimensional(
                f"dim {self.dim} < ambient {self.ambient_dim}: no facet description")
        return self._facets

    def is_full_dimensional(self) -> bool:
        return self._facets is not None or self.ambient_dim == 0

    def is_lattice(self) -> bool:
        return all(isinstance(x, int) for v in self.vertices for x in v)

    def contains(self, point: Sequence) -> bool:
        p = _norm_point(point)
        if len(p) != self.ambient_dim:
            raise DimensionMismatch("point has wrong length")
        if self.is_full_dimensional():
            return all(_dot(n, p) + h >= 0 for n, h in self.facets) \
                if self.ambient_dim else True
        # lower-dimensional: must sit in the affine span and inside the
        # projected hull
        base = self.vertices[0]
        diffs = [list(_sub(v, base)) for v in self.vertices[1:]]
        cols = [list(col) for col in zip(*diffs)] if diffs else [[] for _ in range(self.ambient_dim)]
        rhs = list(_sub(p, base))
        if not diffs:
            return p == base
        sol = solve_rational(cols, rhs)
        if sol is None:
            return False
        recon = [sum(c * diffs[k][j] for k, c in enumerate(sol))
                 for j in range(self.ambient_dim)]
        if any(a != b for a, b in zip(recon, rhs)):
            return False
        coords = []
        for v in self.vertices:
            s = solve_rational(cols, list(_sub(v, base)))
            coords.append(_norm_point(s))
        return Polytope(coords).contains(_norm_point(sol))

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        def enc(x):
            return x if isinstance(x, int) else str(x)
        return {"dim": self.ambient_dim,
                "vertices": [[enc(x) for x in v] for v in self.vertices]}

    @classmethod
    def from_json_dict(cls, data) -> "Polytope":
        pts = [[Fraction(x) if isinstance(x, str) else x for x in v]
               for v in data["vertices"]]
        p = cls(pts)
        if p.ambient_dim != data["dim"]:
            raise DimensionMismatch(
                f"declared dim {data['dim']} but points live in {p.ambient_dim}")
        return p

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self) -> str:
        return f"Polytope(dim {self.dim} in Z^{self.ambient_dim}, {len(self.vertices)} vertices)"


def convex_hull(points: Iterable[Sequence]) -> Polytope:
    return Polytope(points)


def newton_polytope(f: LaurentPoly) -> Polytope:
    """Convex hull of the exponents of f."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no Newton polytope")
    return Polytope(f.exponents())


def equals(p: Polytope, q: Polytope) -> bool:
    return p == q


def dual(p: Polytope) -> Polytope:
    """Polar dual {y : <y, x> >= -1 on p}; rational when p is not reflexive."""
    if not p.is_full_dimensional() or p.ambient_dim == 0:
        raise NotFullDimensional("dual needs a full-dimensional polytope")
    verts = []
    for n, h in p.facets:
        if h <= 0:
            raise OriginNotInterior("origin is not strictly inside")
        verts.append(tuple(Fraction(x, 1) / h for x in n))
    return Polytope(verts)


def is_reflexive(p: Polytope) -> bool:
    """True when every facet has lattice distance one from the origin."""
    if not p.is_full_dimensional() or p.ambient_dim == 0:
        raise NotFullDimensional("reflexivity needs a full-dimensional polytope")
    heights = [h for _, h in p.facets]
    if any(h <= 0 for h in heights):
        raise OriginNotInterior("origin is not strictly inside")
    return all(h == 1 for h in heights)


def _bbox(vertices: Sequence[Point]) -> List[Tuple[int, int]]:
    return [(math.ceil(min(col)), math.floor(max(col)))
            for col in zip(*vertices)]


def lattice_points(p: Polytope, region: str = "all") -> List[Tuple[int, ...]]:
    """Integer points of p: region is all, boundary or interior.

    Boundary and interior are taken relative to the affine span, so a
    segment has two boundary points no matter the ambient dimension.
    """
    if region not in ("all", "boundary", "interior"):
        raise ValueError(f"unknown region {region!r}")
    if p.ambient_dim == 0:
        return [()] if region != "boundary" else []
    if p.is_full_dimensional():
        box = _bbox(p.vertices)
        facets = p.facets
        out = []
        for cand in itertools.product(*[range(lo, hi + 1) for lo, hi in box]):
            vals = [_dot(n, cand) + h for n, h in facets]
            if any(v < 0 for v in vals):
                continue
            on_boundary = any(v == 0 for v in vals)
            if region == "boundary" and not on_boundary:
                continue
            if region == "interior" and on_boundary:
                continue
            out.append(cand)
        return out
    if not p.is_lattice():
        raise NotFullDimensional(
            "lattice point enumeration of a degenerate rational polytope")
    if p.dim == 0:
        v = p.vertices[0]
        if all(isinstance(x, int) for x in v):
            return [] if region == "boundary" else [v]
        return []
    base, basis, proj = _saturated_projection(p.vertices)
    inner = lattice_points(Polytope(proj), region)
    out = []
    for c in inner:
        pt = tuple(base[j] + sum(ci * basis[k][j] for k, ci in enumerate(c))
                   for j in range(p.ambient_dim))
        out.append(pt)
    return sorted(out)


def _saturated_projection(vertices: Sequence[Point]
                          ) -> Tuple[Point, List[Tuple[int, ...]], List[Point]]:
    """Coordinates on span(vertices) identifying span ∩ Z^n with Z^rank.

    Returns (base point, integer basis of the saturated direction lattice,
    coordinates of the vertices in that basis).
    """
    base = vertices[0]
    diffs = [list(_sub(v, base)) for v in vertices[1:]]
    cols = [list(col) for col in zip(*diffs)]  # n x m, columns are directions
    s, u, _v = snf_with_transforms(cols)
    rank = sum(1 for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i] != 0)
    uinv = inverse_rational(u)
    basis = []
    for k in range(rank):
        col = [uinv[j][k] for j in range(len(uinv))]
        assert all(f.denominator == 1 for f in col)
        basis.append(tuple(int(f) for f in col))
    bcols = [list(col) for col in zip(*basis)]
    proj = []
    for v in vertices:
        sol = solve_rational(bcols, list(_sub(v, base)))
        assert sol is not None and all(Fraction(x).denominator == 1 for x in sol)
        proj.append(tuple(int(x) for x in sol))
    return base, basis, proj


def normalized_volume(p: Polytope) -> int:
    """n! times the euclidean volume, an integer for lattice polytopes."""
    if not p.is_full_dimensional():
        raise NotFullDimensional("normalized volume needs full dimension")
    if not p.is_lattice():
        raise ValueError("normalized volume requires integer vertices")
    return _nvol(p)


def _nvol(p: Polytope) -> int:
    d = p.ambient_dim
    if d == 0:
        return 1
    if d == 1:
        return p.vertices[-1][0] - p.vertices[0][0]
    v0 = p.vertices[0]
    total = 0
    for n, h in p.facets:
        dist = _dot(n, v0) + h
        if dist == 0:
            continue
        face = [v for v in p.vertices if _dot(n, v) + h == 0]
        proj = lattice_project(face, n)
        total += dist * _nvol(Polytope(proj))
    return total


def lattice_chart(points_on_plane: Sequence[Point], normal: Sequence[int]
                  ) -> Tuple[Point, List[List[int]], List[Tuple[int, ...]]]:
    """Lattice-preserving coordinates on the hyperplane <normal, x> = c.

    Returns (base point, kernel lattice basis, projected points). The base
    point is the lexicographically smallest input point and the coordinate
    axes form a basis of the kernel lattice of the normal, so two calls with
    the same normal and point set give identical output. A projected point c
    lifts back to base + sum(c_k * basis_k).
    """
    basis = kernel_lattice_basis(list(normal))
    p0 = min(points_on_plane)
    cols = [list(col) for col in zip(*basis)]
    out = []
    for p in points_on_plane:
        sol = solve_rational(cols, list(_sub(p, p0)))
        assert sol is not None and all(Fraction(x).denominator == 1 for x in sol)
        out.append(tuple(int(x) for x in sol))
    return p0, basis, out


def lattice_project(points_on_plane: Sequence[Point], normal: Sequence[int]
                    ) -> List[Tuple[int, ...]]:
    """Projected coordinates from lattice_chart, when the lift is not needed."""
    return lattice_chart(points_on_plane, normal)[2]


def edges(p: Polytope) -> List[Tuple[Point, Point]]:
    """Vertex pairs spanning the one-dimensional faces of a full-dimensional p.

    Two vertices are joined exactly when the facets containing both have
    normals of rank dim - 1.
    """
    if not p.is_full_dimensional():
        raise NotFullDimensional("edge enumeration needs full dimension")
    d = p.ambient_dim
    if d == 1:
        return [(p.vertices[0], p.vertices[-1])]
    out = []
    verts = p.vertices
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            ech = _Echelon(d)
            for n, h in p.facets:
                if _dot(n, verts[a]) + h == 0 and _dot(n, verts[b]) + h == 0:
                    ech.add(n)
            if ech.rank == d - 1:
                out.append((verts[a], verts[b]))
    return out


def ccw_vertices(points: Sequence[Point]) -> List[Point]:
    """Convex hull of planar points, counterclockwise, by monotone chain."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: List[Point] = []
    for pt in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    upper: List[Point] = []
    for pt in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], pt) <= 0:
            upper.pop()
        upper.append(pt)
    return lower[:-1] + upper[:-1]


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    if p.ambient_dim != q.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {p.ambient_dim} vs {q.ambient_dim}")
    return Polytope(tuple(a + b for a, b in zip(v, w))
                    for v in p.vertices for w in q.vertices)


def unimodular_equivalent(p: Polytope, q: Polytope
                          ) -> Optional[List[List[int]]]:
    """A matrix U in GL(n, Z) with U.vertices(p) = vertices(q), or None.

    Linear maps only; polytopes whose vertex cones are based at the origin
    never need a translation part. Searches assignments of one fixed
    linearly independent vertex tuple of p to ordered vertex tuples of q.
    """
    if p.ambient_dim != q.ambient_dim:
        return None
    n = p.ambient_dim
    if n > 4:
        raise DimensionTooLarge("equivalence search supports ambient dimension <= 4")
    if not (p.is_full_dimensional() and q.is_full_dimensional()):
        raise NotFullDimensional("equivalence search needs full-dimensional polytopes")
    if len(p.vertices) != len(q.vertices):
        return None
    if sorted(h for _, h in p.facets) != sorted(h for _, h in q.facets):
        return None
    if n == 0:
        return []
    ech = _Echelon(n)
    chosen = []
    for v in p.vertices:
        if ech.add(v):
            chosen.append(v)
        if len(chosen) == n:
            break
    if len(chosen) < n:
        return None
    s_cols = [list(col) for col in zip(*chosen)]
    s_inv = inverse_rational(s_cols)
    pset = set(p.vertices)
    qset = set(q.vertices)
    for tup in itertools.permutations(sorted(qset), n):
        t_cols = [[tup[j][i] for j in range(n)] for i in range(n)]
        u = [[sum(t_cols[i][k] * s_inv[k][j] for k in range(n)) for j in range(n)]
             for i in range(n)]
        if any(x.denominator != 1 for row in u for x in row):
            continue
        ui = [[int(x) for x in row] for row in u]
        if abs(det_bareiss(ui)) != 1:
            continue
        image = {tuple(_dot(row, v) for row in ui) for v in pset}
        if image == qset:
            return ui
    return None
