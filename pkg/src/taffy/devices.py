"""Rod trajectories for stirring devices and their compilation into braid words.

Every rod follows ``center + sum(radius * exp(i (2 pi f t + phase)))`` over one
device period ``0 <= t <= 1``; integer frequencies close every orbit.  Rods are
projected onto an axis, their left-to-right order is tracked through time, and
each exchange of neighbours in positions ``k, k+1`` is emitted as ``sigma_k``
when the rod moving right passes on the far side (larger perpendicular
coordinate), which is a clockwise exchange, and as ``sigma_k^-1`` otherwise.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
from pathlib import Path

import numpy as np

from .braids import BraidWord
from .errors import CoincidentRods, ProjectionDegenerate, UnknownDevice

__all__ = [
    "Arm",
    "RodTrajectory",
    "RodMotionSpec",
    "positions",
    "compile_braid",
    "catalog",
    "device",
    "rotate_frame",
    "mixograph",
    "spec_from_dict",
    "spec_to_dict",
    "load_spec",
    "save_spec",
    "DEFAULT_AXIS",
]

# generic (irrational multiple of pi) projection angle
DEFAULT_AXIS = math.pi * (math.sqrt(2) - 1) / 7
_AXIS_RETRY = math.pi * (math.sqrt(5) - 2) / 3
TIME_FLOOR = 2.0**-20
_COINCIDENT = 1e-9


@dataclass(frozen=True)
class Arm:
    radius: float
    frequency: Fraction
    phase: float = 0.0

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("arm radius must be non-negative")
        object.__setattr__(self, "frequency", Fraction(self.frequency))


@dataclass(frozen=True)
class RodTrajectory:
    center: tuple[float, float]
    arms: tuple[Arm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))
        object.__setattr__(self, "arms", tuple(self.arms))

    @property
    def is_fixed(self) -> bool:
        return all(arm.radius == 0 or arm.frequency == 0 for arm in self.arms)

    def position(self, t: float) -> tuple[float, float]:
        z = complex(*self.center)
        for arm in self.arms:
            z += arm.radius * cmath.exp(1j * (2 * math.pi * float(arm.frequency) * t + arm.phase))
        return z.real, z.imag


@dataclass(frozen=True)
class RodMotionSpec:
    name: str
    rods: tuple[RodTrajectory, ...]
    period_fraction: Fraction = Fraction(1)
    notes: str = ""
    _kin: tuple = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rods", tuple(self.rods))
        object.__setattr__(self, "period_fraction", Fraction(self.period_fraction))
        if not 0 < self.period_fraction <= 1:
            raise ValueError("period fraction must lie in (0, 1]")
        if len(self.rods) < 2:
            raise ValueError("a device needs at least two rods")
        object.__setattr__(self, "_kin", _kinematics(self.rods))
        z = _evaluate(self._kin, np.array([0.0]))[0]
        if _min_separation(z) < _COINCIDENT:
            raise CoincidentRods(f"{self.name}: two rods coincide at t = 0")

    @property
    def n_rods(self) -> int:
        return len(self.rods)

    @property
    def n_fixed(self) -> int:
        return sum(rod.is_fixed for rod in self.rods)


def _kinematics(rods):
    """Flattened arrays (rod index, radius, angular rate, phase) plus centers."""
    centers = np.array([complex(*rod.center) for rod in rods])
    owner, radius, rate, phase = [], [], [], []
    for i, rod in enumerate(rods):
        for arm in rod.arms:
            owner.append(i)
            radius.append(arm.radius)
            rate.append(2 * math.pi * float(arm.frequency))
            phase.append(arm.phase)
    return (
        centers,
        np.array(owner, dtype=int),
        np.array(radius, dtype=float),
        np.array(rate, dtype=float),
        np.array(phase, dtype=float),
    )


def _evaluate(kin, ts: np.ndarray) -> np.ndarray:
    """Complex rod positions, shape ``(len(ts), n_rods)``."""
    centers, owner, radius, rate, phase = kin
    z = np.tile(centers, (len(ts), 1))
    if len(owner):
        terms = radius * np.exp(1j * (np.outer(ts, rate) + phase))
        for j, i in enumerate(owner):
            z[:, i] += terms[:, j]
    return z


def _min_separation(z: np.ndarray) -> float:
    d = np.abs(z[:, None] - z[None, :])
    d[np.diag_indices(len(z))] = np.inf
    return float(d.min())


def positions(spec: RodMotionSpec, t: float) -> np.ndarray:
    """Rod positions at time ``t`` as an ``(n_rods, 2)`` array."""
    z = _evaluate(spec._kin, np.array([float(t)]))[0]
    return np.column_stack([z.real, z.imag])


class _Compiler:
    def __init__(self, spec: RodMotionSpec, axis: float, floor: float):
        self.kin = spec._kin
        self.name = spec.name
        self.rotation = cmath.exp(-1j * axis)
        self.floor = floor
        self.letters: list[int] = []
        self.scale = max(1.0, float(np.abs(_evaluate(self.kin, np.array([0.0]))).max()))

    def frame(self, t: float) -> np.ndarray:
        return _evaluate(self.kin, np.array([t]))[0] * self.rotation

    def order(self, w: np.ndarray) -> tuple[int, ...]:
        return tuple(np.argsort(w.real, kind="stable"))

    def swap_sign(self, w: np.ndarray, left: int, right: int) -> int:
        gap = w[left].imag - w[right].imag
        if abs(gap) < _COINCIDENT * self.scale:
            if abs(w[left] - w[right]) < 1e3 * _COINCIDENT * self.scale:
                raise CoincidentRods(f"{self.name}: rods {left} and {right} collide")
            raise ProjectionDegenerate(f"{self.name}: rods {left} and {right} cross head-on")
        return 1 if gap > 0 else -1

    def run(self, ts: np.ndarray) -> list[int]:
        w = _evaluate(self.kin, ts) * self.rotation
        gaps = np.abs(w[:, :, None] - w[:, None, :])
        gaps[:, np.arange(w.shape[1]), np.arange(w.shape[1])] = np.inf
        if gaps.min() < _COINCIDENT * self.scale:
            raise CoincidentRods(f"{self.name}: rods collide during the motion")
        for row in (w[0], w[-1]):
            # the strand order at the ends must be unambiguous
            if np.diff(np.sort(row.real)).min() < _COINCIDENT * self.scale:
                raise ProjectionDegenerate(f"{self.name}: rods share a projected position at an endpoint")
        orders = np.argsort(w.real, axis=1, kind="stable")
        changed = np.any(orders[1:] != orders[:-1], axis=1)
        for j in np.flatnonzero(changed):
            self.resolve(ts[j], ts[j + 1], tuple(orders[j]), tuple(orders[j + 1]))
        return self.letters

    def resolve(self, t0, t1, o0, o1):
        """Emit the letters taking order ``o0`` at ``t0`` to ``o1`` at ``t1``."""
        target = {rod: i for i, rod in enumerate(o1)}
        inversions = sum(
            1
            for i in range(len(o0))
            for j in range(i + 1, len(o0))
            if target[o0[i]] > target[o0[j]]
        )
        if inversions == 1:
            k = next(i for i in range(len(o0)) if o0[i] != o1[i])
            self.single_swap(t0, t1, o0[k], o0[k + 1], k)
            return
        if t1 - t0 > self.floor:
            mid = (t0 + t1) / 2
            om = self.order(self.frame(mid))
            if om != o0:
                self.resolve(t0, mid, o0, om)
            if om != o1:
                self.resolve(mid, t1, om, o1)
            return
        # simultaneous crossings (e.g. collinear rods on one arm): sort through
        # adjacent swaps, each signed by the pair's perpendicular order
        w = self.frame((t0 + t1) / 2)
        current = list(o0)
        moved = True
        while moved:
            moved = False
            for k in range(len(current) - 1):
                left, right = current[k], current[k + 1]
                if target[left] > target[right]:
                    self.letters.append((k + 1) * self.swap_sign(w, left, right))
                    current[k], current[k + 1] = right, left
                    moved = True

    def single_swap(self, t0, t1, left, right, k):
        # bisect on the projected gap until the perpendicular order is unambiguous
        lo, hi = t0, t1
        while True:
            w_lo, w_hi = self.frame(lo), self.frame(hi)
            g_lo = w_lo[right].real - w_lo[left].real
            g_hi = w_hi[right].real - w_hi[left].real
            s = g_lo / (g_lo - g_hi) if g_lo != g_hi else 0.5
            t = lo + min(max(s, 0.0), 1.0) * (hi - lo)
            w = self.frame(t)
            ys = (w_lo[left].imag - w_lo[right].imag, w_hi[left].imag - w_hi[right].imag)
            if hi - lo <= self.floor or (ys[0] > 0) == (ys[1] > 0):
                self.letters.append((k + 1) * self.swap_sign(w, left, right))
                return
            mid = (lo + hi) / 2
            wm = self.frame(mid)
            if wm[right].real - wm[left].real > 0:
                lo = mid
            else:
                hi = mid


def _free_reduce(letters: list[int]) -> tuple[int, ...]:
    out: list[int] = []
    for k in letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def _compile_once(spec, duration, samples, axis):
    ts = np.linspace(0.0, duration, samples + 1)
    compiler = _Compiler(spec, axis, duration * TIME_FLOOR)
    return _free_reduce(compiler.run(ts))


def compile_braid(
    spec: RodMotionSpec,
    duration: Fraction | float | None = None,
    samples: int = 512,
    axis_angle: float = DEFAULT_AXIS,
    max_refinements: int = 6,
) -> BraidWord:
    """Braid word traced by the rods over ``[0, duration]`` (default: the period fraction).

    The sampling grid is doubled until two successive grids give the same
    freely reduced word.  Strand ``i`` is the rod in position ``i`` of the
    projected order at ``t = 0``.
    """
    duration = float(spec.period_fraction if duration is None else Fraction(duration))
    if duration <= 0:
        raise ValueError("duration must be positive")
    axes = (axis_angle, axis_angle + _AXIS_RETRY)
    error: Exception | None = None
    for axis in axes:
        try:
            word = _compile_once(spec, duration, samples, axis)
            for _ in range(max_refinements):
                samples *= 2
                finer = _compile_once(spec, duration, samples, axis)
                if finer == word:
                    break
                word = finer
            return BraidWord(spec.n_rods, word)
        except ProjectionDegenerate as exc:
            error = exc
    raise ProjectionDegenerate(f"{spec.name}: degenerate for every projection axis tried") from error


def rotate_frame(spec: RodMotionSpec, turns: Fraction | int) -> RodMotionSpec:
    """View the device from a frame turning ``turns`` times counterclockwise per period.

    Rod centres become arms of frequency ``-turns`` and every arm's frequency
    drops by ``turns``; arms left with frequency zero fold into the centre.
    """
    turns = Fraction(turns)
    rods = []
    for rod in spec.rods:
        arms = [Arm(a.radius, a.frequency - turns, a.phase) for a in rod.arms]
        c = complex(*rod.center)
        if c != 0:
            arms.insert(0, Arm(abs(c), -turns, cmath.phase(c)))
        rods.append(_fold_static(arms))
    return replace(spec, rods=tuple(rods), name=f"{spec.name}@{turns}")


def _fold_static(arms: list[Arm]) -> RodTrajectory:
    center = 0j
    moving = []
    for arm in arms:
        if arm.frequency == 0:
            center += cmath.rect(arm.radius, arm.phase)
        elif arm.radius != 0:
            moving.append(arm)
    return RodTrajectory((center.real, center.imag), tuple(moving))


def mixograph(
    vessel_radius: float = 0.8,
    gear_offset: float = 0.8,
    pin_radius: float = 0.4,
    vessel_turns: int = 2,
    gear_turns: tuple[int, int] = (-9, 9),
    vessel_phase: float = 0.0,
    gear_phases: tuple[float, float] = (math.pi / 2, math.pi / 2),
    corotating: bool = True,
) -> RodMotionSpec:
    """Planetary mixer: three vessel rods plus two gears carrying two rods each.

    In the frame of the rotating lid the gears sit at ``-gear_offset`` and
    ``+gear_offset`` and spin ``gear_turns`` times per period, while the three
    vessel rods, ``2 pi / 3`` apart on a circle, go round ``vessel_turns``
    times.  Odd gear turns and ``|vessel_turns| == 2`` return the rods to
    their starting set every sixth of a period.  ``corotating=False`` gives the
    lab frame instead, where the vessel rods are fixed and the motion only
    closes after half a period.  The defaults are a modelling choice: the
    machine's gear ratios are not known here.
    """
    for turns in gear_turns:
        if turns % 2 == 0:
            raise ValueError("gear turns must be odd for the rods to swap every sixth of a period")
    if abs(vessel_turns) != 2:
        raise ValueError("vessel_turns must be 2 or -2")
    rods = [
        RodTrajectory((0.0, 0.0), (Arm(vessel_radius, vessel_turns, vessel_phase + 2 * math.pi * k / 3),))
        for k in range(3)
    ]
    for side, turns, phase in zip((-1, 1), gear_turns, gear_phases):
        for half in (0.0, math.pi):
            rods.append(RodTrajectory((side * gear_offset, 0.0), (Arm(pin_radius, turns, phase + half),)))
    lid = RodMotionSpec(
        "mixograph_corotating",
        tuple(rods),
        Fraction(1, 6),
        "Planetary mixer seen from the rotating lid: four rods on two gears and three "
        "vessel rods circling them. Gear ratios are a modelling choice and do not "
        "reproduce the published mixograph braid.",
    )
    if corotating:
        return lid
    return replace(
        rotate_frame(lid, vessel_turns),
        name="mixograph_lab",
        period_fraction=Fraction(1, 2),
        notes="Planetary mixer in the lab frame: three fixed vessel rods.",
    )


# --- device files -----------------------------------------------------------


def spec_from_dict(data: dict) -> RodMotionSpec:
    rods = []
    for rod in data["rods"]:
        arms = tuple(
            Arm(float(a["radius"]), Fraction(str(a["frequency"])), float(a.get("phase", 0.0)))
            for a in rod.get("arms", [])
        )
        rods.append(RodTrajectory(tuple(rod["center"]), arms))
    return RodMotionSpec(
        name=data["name"],
        rods=tuple(rods),
        period_fraction=Fraction(str(data.get("period_fraction", "1"))),
        notes=data.get("notes", ""),
    )


def spec_to_dict(spec: RodMotionSpec) -> dict:
    return {
        "name": spec.name,
        "rods": [
            {
                "center": list(rod.center),
                "arms": [
                    {"radius": a.radius, "frequency": str(a.frequency), "phase": a.phase}
                    for a in rod.arms
                ],
            }
            for rod in spec.rods
        ],
        "period_fraction": str(spec.period_fraction),
        "notes": spec.notes,
    }


def load_spec(path: str | Path) -> RodMotionSpec:
    with open(path, encoding="utf-8") as fh:
        return spec_from_dict(json.load(fh))


def save_spec(spec: RodMotionSpec, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(spec_to_dict(spec), fh, indent=2)
        fh.write("\n")


_CATALOG_ORDER = (
    "firchau",
    "standard_3rod",
    "nitz_3rod",
    "standard_4rod",
    "six_rod",
    "mixograph_corotating",
)


def device(name: str) -> RodMotionSpec:
    """Load a bundled device by file stem, e.g. ``"six_rod"``."""
    key = name.replace("-", "_")
    source = resources.files("taffy") / "data" / f"{key}.json"
    if not source.is_file():
        raise UnknownDevice(f"no bundled device named {name!r}")
    return spec_from_dict(json.loads(source.read_text(encoding="utf-8")))


def catalog() -> list[RodMotionSpec]:
    return [device(name) for name in _CATALOG_ORDER]
