"""Bundled Laurent models with a batch verification harness.

Each entry stores an explicit Laurent polynomial together with optional
anchors: a generator (weighted complete intersection, Grassmannian or toric
curve-class data) whose closed-form series the period must reproduce, or a
frozen series prefix for entries with no generating formula. The provenance
tag says which kind of anchor the entry carries, so reports can separate
genuine cross-checks from regression baselines.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from .builders import check_minkowski
from .laurent import LaurentPoly
from .polytope import dual, is_reflexive, newton_polytope, normalized_volume
from .series import (GrassSpec, PowerSeries, ToricCurveClassData, WciSpec,
                     iseries_grassmannian, iseries_toric, iseries_wci, phi)

PROVENANCE_PAPER = "paper"
PROVENANCE_REGRESSION = "derived-regression"


class ParseError(ValueError):
    """Malformed catalog data; the message carries the location."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


Generator = Union[WciSpec, GrassSpec, ToricCurveClassData]


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    laurent: LaurentPoly
    generator: Optional[Generator] = None
    expected_series_prefix: Optional[PowerSeries] = None
    provenance: Optional[str] = None
    polytope_notes: Optional[Tuple[Tuple[int, ...], ...]] = None
    minkowski_flag: bool = False
    degree: Optional[int] = None
    index: Optional[int] = None
    rho: Optional[int] = None

    @property
    def anchored(self) -> str:
        return PROVENANCE_PAPER if self.generator is not None \
            else PROVENANCE_REGRESSION

    def generator_series(self, order: int) -> Optional[PowerSeries]:
        if isinstance(self.generator, WciSpec):
            return iseries_wci(self.generator, order)
        if isinstance(self.generator, GrassSpec):
            return iseries_grassmannian(self.generator, order)
        if isinstance(self.generator, ToricCurveClassData):
            return iseries_toric(self.generator, order)
        return None


def _generator_to_json(g: Optional[Generator]) -> Optional[dict]:
    if g is None:
        return None
    if isinstance(g, WciSpec):
        return {"kind": "wci", "weights": list(g.weights),
                "degrees": list(g.degrees)}
    if isinstance(g, GrassSpec):
        return {"kind": "grass", "k": g.k, "n": g.n,
                "degrees": list(g.degrees)}
    if isinstance(g, ToricCurveClassData):
        return {"kind": "toric", "rows": [list(r) for r in g.rows]}
    raise TypeError(f"unknown generator {g!r}")


def _generator_from_json(data, location: str) -> Optional[Generator]:
    if data is None:
        return None
    kind = data.get("kind")
    if kind == "wci":
        return WciSpec(tuple(data["weights"]), tuple(data["degrees"]))
    if kind == "grass":
        return GrassSpec(int(data["k"]), int(data["n"]),
                         tuple(data["degrees"]))
    if kind == "toric":
        return ToricCurveClassData(tuple(tuple(r) for r in data["rows"]))
    raise ParseError(location, f"unknown generator kind {kind!r}")


def entry_to_json_dict(e: CatalogEntry) -> dict:
    out = {
        "id": e.id,
        "description": e.description,
        "laurent": e.laurent.to_json_dict(),
        "generator": _generator_to_json(e.generator),
        "expected_series_prefix": (None if e.expected_series_prefix is None
                                   else e.expected_series_prefix.to_json_dict()),
        "provenance": e.provenance,
        "polytope_notes": (None if e.polytope_notes is None
                           else [list(v) for v in e.polytope_notes]),
        "minkowski": e.minkowski_flag,
        "degree": e.degree,
        "index": e.index,
        "rho": e.rho,
    }
    return out


def entry_from_json_dict(data, location: str) -> CatalogEntry:
    try:
        laurent = LaurentPoly.from_json_dict(data["laurent"])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{location} field laurent", str(exc)) from exc
    prefix = data.get("expected_series_prefix")
    try:
        series = None if prefix is None else PowerSeries.from_json_dict(prefix)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{location} field expected_series_prefix",
                         str(exc)) from exc
    notes = data.get("polytope_notes")
    return CatalogEntry(
        id=str(data["id"]),
        description=str(data.get("description", "")),
        laurent=laurent,
        generator=_generator_from_json(data.get("generator"),
                                       f"{location} field generator"),
        expected_series_prefix=series,
        provenance=data.get("provenance"),
        polytope_notes=(None if notes is None
                        else tuple(tuple(int(x) for x in v) for v in notes)),
        minkowski_flag=bool(data.get("minkowski", False)),
        degree=data.get("degree"),
        index=data.get("index"),
        rho=data.get("rho"),
    )


def bundled_path() -> Path:
    override = os.environ.get("TLG_CATALOG")
    if override:
        return Path(override)
    return Path(__file__).parent / "data" / "catalog.json"


def load(path=None) -> List[CatalogEntry]:
    path = bundled_path() if path is None else Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(str(path), f"invalid JSON: {exc}") from exc
    if not isinstance(raw, list):
        raise ParseError(str(path), "top level must be a JSON array")
    entries = []
    seen = set()
    for ix, item in enumerate(raw):
        loc = f"{path} entry {ix}"
        entry = entry_from_json_dict(item, loc)
        if entry.id in seen:
            raise ParseError(loc, f"duplicate id {entry.id!r}")
        seen.add(entry.id)
        entries.append(entry)
    return entries


def save(entries: Sequence[CatalogEntry], path) -> None:
    data = [entry_to_json_dict(e) for e in entries]
    Path(path).write_text(json.dumps(data, indent=1) + "\n")


@dataclass(frozen=True)
class EntryReport:
    id: str
    anchored: str
    passed: bool
    period_ok: Optional[bool] = None
    compared_order: Optional[int] = None
    first_mismatch: Optional[int] = None
    reflexive: Optional[bool] = None
    degree_ok: Optional[bool] = None
    polytope_ok: Optional[bool] = None
    minkowski_ok: Optional[bool] = None
    messages: Tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {k: getattr(self, k) for k in
                ("id", "anchored", "passed", "period_ok", "compared_order",
                 "first_mismatch", "reflexive", "degree_ok", "polytope_ok",
                 "minkowski_ok")} | {"messages": list(self.messages)}


def verify_entry(entry: CatalogEntry, order: int) -> EntryReport:
    """Period, polytope and decomposition checks for one entry."""
    if order < 2:
        raise ValueError("verification order must be at least 2")
    messages: List[str] = []
    period = phi(entry.laurent, order)
    target = entry.generator_series(order)
    compared = order
    if target is None:
        stored = entry.expected_series_prefix
        if stored is None:
            messages.append("no generator and no stored series prefix")
            target = None
        else:
            compared = min(order, stored.order)
            if compared < order:
                messages.append(
                    f"stored prefix has only {stored.order} coefficients")
            target = stored.truncate(compared)

    period_ok: Optional[bool] = None
    first_mismatch = None
    if target is not None:
        period_ok = True
        for i in range(compared):
            if period.coeffs[i] != target.coeffs[i]:
                period_ok = False
                first_mismatch = i
                messages.append(
                    f"period coefficient {i}: expected {target.coeffs[i]}, "
                    f"found {period.coeffs[i]}")
                break

    delta = newton_polytope(entry.laurent)
    reflexive = is_reflexive(delta) if delta.dim == delta.ambient_dim else False
    degree_ok: Optional[bool] = None
    polytope_ok: Optional[bool] = None
    if reflexive:
        nabla = dual(delta)
        if entry.degree is not None:
            volume = normalized_volume(nabla)
            degree_ok = volume == entry.degree
            if not degree_ok:
                messages.append(
                    f"degree {entry.degree} but dual volume {volume}")
        if entry.polytope_notes is not None:
            expected = {tuple(v) for v in entry.polytope_notes}
            polytope_ok = {tuple(v) for v in nabla.vertices} == expected
            if not polytope_ok:
                messages.append("dual vertex set differs from the note")
    elif entry.polytope_notes is not None:
        polytope_ok = False
        messages.append("polytope note present but Newton polytope "
                        "is not reflexive")

    minkowski_ok: Optional[bool] = None
    if entry.minkowski_flag:
        minkowski_ok = check_minkowski(entry.laurent) is not None
        if not minkowski_ok:
            messages.append("no facet decomposition certificate found")

    passed = all(x is not False for x in
                 (period_ok, degree_ok, polytope_ok, minkowski_ok)) \
        and period_ok is not None
    return EntryReport(
        id=entry.id, anchored=entry.anchored, passed=passed,
        period_ok=period_ok, compared_order=compared,
        first_mismatch=first_mismatch, reflexive=reflexive,
        degree_ok=degree_ok, polytope_ok=polytope_ok,
        minkowski_ok=minkowski_ok, messages=tuple(messages))


@dataclass(frozen=True)
class CatalogSummary:
    reports: Tuple[EntryReport, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failed_ids(self) -> Tuple[str, ...]:
        return tuple(r.id for r in self.reports if not r.passed)

    def to_json_dict(self) -> dict:
        return {"passed": self.all_passed,
                "failed": list(self.failed_ids),
                "reports": [r.to_json_dict() for r in self.reports]}


def _verify_job(args) -> EntryReport:
    entry, order = args
    return verify_entry(entry, order)


def verify_all(entries: Sequence[CatalogEntry], order: int,
               jobs: int = 1) -> CatalogSummary:
    """Reports for every entry, ordered by id regardless of worker count."""
    ordered = sorted(entries, key=lambda e: e.id)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_job,
                                    [(e, order) for e in ordered]))
    else:
        reports = [verify_entry(e, order) for e in ordered]
    return CatalogSummary(tuple(reports))
