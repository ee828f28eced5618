"""Per-device analyses and the efficiency table.

Efficiency is ``log(dilatation) / p``: the entropy gained per full period when
the rods return to their starting set after a fraction ``p`` of it.  Devices
whose braid lifts to a linear map of the torus get an exact quadratic
polynomial from the Burau representation; the rest get a dilatation from the
loop-growth estimate and no polynomial.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .braids import BraidWord, IntPolynomial, burau_minus_one, char_poly, dominant_factor, largest_root
from .devices import RodMotionSpec, compile_braid, device
from .dynnikov import EntropyEstimate, entropy
from .errors import TaffyError, UnknownDevice

__all__ = [
    "PullerAnalysis",
    "DeviceEntry",
    "DEVICES",
    "APPENDIX",
    "MIXOGRAPH_BRAID",
    "analyze",
    "table",
    "to_csv",
    "to_json",
    "load_extra_braids",
    "CSV_HEADER",
]

CSV_HEADER = ("name", "rods", "fixed", "polynomial", "dilatation", "p", "entropy_per_period")
NOT_PA = "not pseudo-Anosov"
# below this growth rate a motion is treated as a twist rather than a stretch
ZERO_GROWTH = 0.01

# Braid of the co-rotating mixograph over a sixth of a period; its dilatation
# is the largest root of x^8 - 4x^7 - x^6 + 4x^4 - x^2 - 4x + 1.
MIXOGRAPH_BRAID = BraidWord.parse("3 2 3 5 -6 2 3 4 3 -1 -2 5", 7)


@dataclass(frozen=True)
class DeviceEntry:
    """How a named device is analysed.

    ``exact`` marks devices whose dilatation is a quadratic integer, so the
    Burau polynomial can be certified.  ``expected`` holds reference values
    (polynomial text, dilatation, efficiency) for checks and reports.
    """

    name: str
    rods: int
    fixed: int
    period_fraction: Fraction
    exact: bool
    spec_file: str | None = None
    braid: BraidWord | None = None
    expected: dict = field(default_factory=dict)


DEVICES: dict[str, DeviceEntry] = {
    e.name: e
    for e in [
        DeviceEntry("standard-3-rod", 3, 1, Fraction(1), True, "standard_3rod",
                    expected={"polynomial": "x^2 - 6x + 1", "dilatation": 5.8284, "efficiency": 1.7627}),
        DeviceEntry("nitz", 3, 0, Fraction(1, 3), True, "nitz_3rod",
                    expected={"polynomial": "x^2 - 3x + 1", "dilatation": 2.6180, "efficiency": 2.8873}),
        DeviceEntry("standard-4-rod", 4, 0, Fraction(1), True, "standard_4rod",
                    expected={"polynomial": "x^2 - 6x + 1", "dilatation": 5.8284, "efficiency": 1.7627}),
        DeviceEntry("six-rod", 6, 2, Fraction(1, 2), True, "six_rod",
                    expected={"polynomial": "x^2 - 4x + 1", "dilatation": 3.7321, "efficiency": 2.6339}),
        DeviceEntry("mixograph", 7, 0, Fraction(1, 6), False, "mixograph_corotating", MIXOGRAPH_BRAID,
                    expected={"polynomial": "x^8 - 4x^7 - x^6 + 4x^4 - x^2 - 4x + 1",
                              "dilatation": 4.1858, "efficiency": 8.5902}),
        DeviceEntry("firchau", 2, 0, Fraction(1), False, "firchau",
                    expected={"dilatation": 1.0, "efficiency": 0.0}),
    ]
}

# Devices known only by their reference values; a braid word must be supplied.
APPENDIX: dict[str, DeviceEntry] = {
    e.name: e
    for e in [
        DeviceEntry("thibodeau-1904", 4, 0, Fraction(1, 3), True,
                    expected={"polynomial": "x^2 - 3x + 1", "dilatation": 2.6180, "efficiency": 2.8873}),
        DeviceEntry("mccarthy-1916a", 4, 3, Fraction(1), True,
                    expected={"polynomial": "x^2 - 18x + 1", "dilatation": 17.9443, "efficiency": 2.8873}),
        DeviceEntry("mccarthy-1916b", 4, 3, Fraction(1), False,
                    expected={"polynomial": "x^4 - 36x^3 + 54x^2 - 36x + 1",
                              "dilatation": 34.4634, "efficiency": 3.5399}),
        DeviceEntry("jenner-1905", 5, 3, Fraction(1), False,
                    expected={"polynomial": "x^4 - 8x^3 - 2x^2 - 8x + 1",
                              "dilatation": 8.3524, "efficiency": 2.1226}),
        DeviceEntry("shean-1914", 6, 0, Fraction(1, 2), True,
                    expected={"polynomial": "x^2 - 4x + 1", "dilatation": 3.7321, "efficiency": 2.6339}),
        DeviceEntry("mccarthy-1915", 5, 2, Fraction(1), False,
                    expected={"polynomial": "x^4 - 20x^3 - 26x^2 - 20x + 1",
                              "dilatation": 21.2667, "efficiency": 3.0571}),
    ]
}


@dataclass(frozen=True)
class PullerAnalysis:
    name: str
    rods_total: int
    rods_fixed: int
    braid: BraidWord
    char_poly: IntPolynomial | None
    dilatation: float
    period_fraction: Fraction
    efficiency: float
    entropy: EntropyEstimate | None = None
    flag: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "rods_total": self.rods_total,
            "rods_fixed": self.rods_fixed,
            "braid": {"strands": self.braid.n_strands, "letters": list(self.braid.letters)},
            "char_poly": None if self.char_poly is None else str(self.char_poly),
            "dilatation": self.dilatation,
            "period_fraction": str(self.period_fraction),
            "efficiency": self.efficiency,
            "entropy": None
            if self.entropy is None
            else {
                "value": self.entropy.value,
                "iterations": self.entropy.iterations,
                "converged": self.entropy.converged,
                "residual": self.entropy.residual if math.isfinite(self.entropy.residual) else None,
            },
            "flag": self.flag,
        }


def _lookup(name: str) -> DeviceEntry:
    key = name.strip().lower().replace("_", "-")
    for registry in (DEVICES, APPENDIX):
        if key in registry:
            return registry[key]
    for entry in DEVICES.values():
        if entry.spec_file and entry.spec_file.replace("_", "-") == key:
            return entry
    raise UnknownDevice(f"unknown device {name!r}")


def _measure(braid: BraidWord, tol: float, max_iter: int) -> EntropyEstimate:
    # loop coordinates need three punctures; an extra untouched strand adds no growth
    padded = braid if braid.n_strands >= 3 else braid.with_strands(3)
    return entropy(padded, tol=tol, max_iter=max_iter)


def _build(name, rods, fixed, p, braid, exact, tol, max_iter, flag="") -> PullerAnalysis:
    estimate = _measure(braid, tol, max_iter)
    if estimate.value < ZERO_GROWTH or not estimate.converged:
        flag = "; ".join(filter(None, [NOT_PA, flag]))
        return PullerAnalysis(name, rods, fixed, braid, None, 1.0, p, 0.0, estimate, flag)
    poly = None
    dil = math.exp(estimate.value)
    if exact and braid.n_strands >= 3:
        candidate = dominant_factor(char_poly(burau_minus_one(braid)))
        # only a quadratic Burau factor that agrees with the growth rate is certified
        if candidate.degree == 2:
            root = largest_root(candidate)
            if abs(math.log(root) - estimate.value) < max(10 * tol, 1e-3):
                poly, dil = candidate, root
        if poly is None:
            flag = "; ".join(filter(None, [flag, "Burau polynomial not certified"]))
    return PullerAnalysis(name, rods, fixed, braid, poly, dil, p, math.log(dil) / p, estimate, flag)


def analyze(
    name_or_spec: str | RodMotionSpec,
    tol: float = 1e-4,
    braid: BraidWord | None = None,
    max_iter: int = 60,
    exact: bool | None = None,
    compiled: bool = False,
) -> PullerAnalysis:
    """Analyse a catalog device, an appendix device (with ``braid``), or a raw spec.

    For the mixograph the bundled braid word is used unless ``compiled`` is
    set, in which case the default planetary kinematics are compiled instead.
    """
    if isinstance(name_or_spec, RodMotionSpec):
        spec = name_or_spec
        word = braid if braid is not None else compile_braid(spec)
        return _build(spec.name, spec.n_rods, spec.n_fixed, spec.period_fraction,
                      word, bool(exact), tol, max_iter)

    entry = _lookup(name_or_spec)
    flag = ""
    if braid is None and entry.braid is not None and not compiled:
        braid = entry.braid
        flag = "supplied braid word"
    if braid is None:
        if entry.spec_file is None:
            raise TaffyError(f"{entry.name} has no bundled geometry; supply a braid word")
        braid = compile_braid(device(entry.spec_file))
    return _build(entry.name, entry.rods, entry.fixed, entry.period_fraction, braid,
                  entry.exact if exact is None else exact, tol, max_iter, flag)


def table(
    tol: float = 1e-4,
    extra_braids: dict[str, BraidWord] | None = None,
    max_iter: int = 60,
) -> list[PullerAnalysis | tuple[str, str]]:
    """One analysis per catalog device, then one per supplied appendix braid.

    A device that fails is reported as ``(name, error message)`` in its slot.
    """
    rows: list[PullerAnalysis | tuple[str, str]] = []
    names = list(DEVICES) + sorted(n for n in extra_braids or {} if n not in DEVICES)
    for name in names:
        try:
            supplied = (extra_braids or {}).get(name)
            rows.append(analyze(name, tol=tol, braid=supplied, max_iter=max_iter))
        except TaffyError as exc:
            rows.append((name, str(exc)))
    return rows


def _csv_row(row) -> list[str]:
    if isinstance(row, tuple):
        return [row[0], "", "", "", "", "", ""]
    return [
        row.name,
        str(row.rods_total),
        str(row.rods_fixed),
        "" if row.char_poly is None else str(row.char_poly),
        f"{row.dilatation:.4f}",
        str(row.period_fraction),
        f"{row.efficiency:.4f}",
    ]


def to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(_csv_row(row))
    return buf.getvalue()


def to_json(rows) -> str:
    payload = [
        {"name": row[0], "error": row[1]} if isinstance(row, tuple) else row.as_dict() for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def load_extra_braids(path) -> dict[str, BraidWord]:
    """Read ``{"name": {"strands": N, "braid": "1 -2 ..."}}`` from a JSON file."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return {
        name.lower(): BraidWord.parse(item["braid"], int(item["strands"]))
        for name, item in data.items()
    }
