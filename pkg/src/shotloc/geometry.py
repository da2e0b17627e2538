"""Core domain types and geometric transforms.

Everything works in a scenario-local Cartesian frame: x east, y north,
z up, all in meters, with an arbitrary per-scenario origin. Geodetic
conversions belong to ingestion code, never here. All types are frozen
values; the transforms are pure functions, so everything is safe to share
between threads.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

# Digital full scale of the sensor chain in dB SPL; amplitude 1.0 in a
# normalized recording corresponds to this level.
FULL_SCALE_DBSPL = 93.0

# Maximum representable level: full scale plus sqrt(2) headroom.
MAX_DBSPL = FULL_SCALE_DBSPL + 20.0 * math.log10(math.sqrt(2.0))

MIRROR_SUFFIX = "#mirror"


class Algorithm(enum.Enum):
    """Multilateration algorithm identifiers."""

    REDDI = "reddi"
    MLG = "mlg"
    LEAST_SQUARES = "least_squares"
    IDT = "idt"


class ConstraintKind(enum.Enum):
    TWO_D = "2d"
    TWO_POINT_FIVE_D = "2.5d"
    THREE_D = "3d"


@dataclass(frozen=True)
class GeometricConstraint:
    """Geometric constraint applied to a solve.

    ``TWO_D`` projects sensors onto the z=0 plane and solves in two
    dimensions. ``TWO_POINT_FIVE_D`` solves in three dimensions on an
    array doubled by reflection through the horizontal plane z=z_star,
    which pins the solution elevation to ``z_star``. ``THREE_D`` uses
    elevations as-is.
    """

    kind: ConstraintKind
    z_star: float | None = None

    def __post_init__(self) -> None:
        if self.kind is ConstraintKind.TWO_POINT_FIVE_D:
            if self.z_star is None or not math.isfinite(self.z_star):
                raise ValueError("2.5D constraint requires a finite z_star")
        elif self.z_star is not None:
            raise ValueError(f"{self.kind.value} constraint takes no z_star")

    @classmethod
    def two_d(cls) -> "GeometricConstraint":
        return cls(ConstraintKind.TWO_D)

    @classmethod
    def two_point_five_d(cls, z_star: float) -> "GeometricConstraint":
        return cls(ConstraintKind.TWO_POINT_FIVE_D, z_star)

    @classmethod
    def three_d(cls) -> "GeometricConstraint":
        return cls(ConstraintKind.THREE_D)

    @property
    def dimension(self) -> int:
        """Number of free horizontal/vertical coordinates in the solve.

        2.5D counts as 2: the elevation is pinned by symmetry, so the
        observation minimums match the 2D case.
        """
        return 3 if self.kind is ConstraintKind.THREE_D else 2


@dataclass(frozen=True)
class Position:
    """Point in the local frame: x east, y north, z up, meters."""

    x: float
    y: float
    z: float = 0.0

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"Position.{name} must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def distance_to(self, other: "Position") -> float:
        return math.dist((self.x, self.y, self.z), (other.x, other.y, other.z))

    def horizontal_distance_to(self, other: "Position") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class SensorObservation:
    """One sensor's reported pulse: position, arrival time, and level.

    ``arrival_time`` is in seconds on an epoch shared by every sensor in
    the scenario. Field data carry millisecond precision; in-memory values
    are not re-quantized here.
    """

    sensor_id: str
    position: Position
    arrival_time: float
    amplitude_dbspl: float | None = None
    snr_db: float | None = None

    def __post_init__(self) -> None:
        if not self.sensor_id:
            raise ValueError("sensor_id must be nonempty")
        if not math.isfinite(self.arrival_time):
            raise ValueError("arrival_time must be finite")
        if self.amplitude_dbspl is not None and self.amplitude_dbspl > MAX_DBSPL + 1e-9:
            raise ValueError(
                f"amplitude {self.amplitude_dbspl:.2f} dB SPL exceeds the "
                f"{MAX_DBSPL:.2f} dB SPL full-scale bound"
            )


@dataclass(frozen=True)
class PulseSet:
    """Observations attributed to a single shot, in canonical order.

    Canonical order is ascending ``(arrival_time, sensor_id)``; the
    constructor sorts, so equality is order-insensitive. Sensor ids must
    be unique: one shot has one shortest acoustic path per sensor.
    """

    shot_id: str
    observations: tuple[SensorObservation, ...]

    def __post_init__(self) -> None:
        if not self.observations:
            raise ValueError("PulseSet needs at least one observation")
        ids = [o.sensor_id for o in self.observations]
        if len(set(ids)) != len(ids):
            raise ValueError("sensor_id values must be unique within a PulseSet")
        ordered = tuple(
            sorted(self.observations, key=lambda o: (o.arrival_time, o.sensor_id))
        )
        object.__setattr__(self, "observations", ordered)

    def __len__(self) -> int:
        return len(self.observations)

    def positions(self) -> np.ndarray:
        """(n, 3) array of sensor positions in canonical order."""
        return np.array([o.position.as_array() for o in self.observations])

    def arrival_times(self) -> np.ndarray:
        """(n,) array of arrival times in canonical order."""
        return np.array([o.arrival_time for o in self.observations])

    def earliest_arrival(self) -> float:
        return self.observations[0].arrival_time


@dataclass(frozen=True)
class ShotSolution:
    """A located shot: position, discharge time, and fit diagnostics.

    ``residuals`` maps each input sensor_id to ``t_i - t_* - S_i/c``
    seconds, where ``S_i`` is the distance implied by the constraint
    (horizontal for 2D). ``diagnostics`` carries solver-specific scalars
    (e.g. the MLG error term, iteration counts); treat it as read-only.
    """

    position: Position
    discharge_time: float
    residuals: dict[str, float]
    solver: Algorithm
    constraint: GeometricConstraint
    rms_residual: float
    condition_estimate: float
    diagnostics: dict[str, float] = field(default_factory=dict)


def project_to_plane(pulse_set: PulseSet) -> PulseSet:
    """Project every sensor onto the z=0 plane. Idempotent."""
    projected = tuple(
        SensorObservation(
            sensor_id=o.sensor_id,
            position=Position(o.position.x, o.position.y, 0.0),
            arrival_time=o.arrival_time,
            amplitude_dbspl=o.amplitude_dbspl,
            snr_db=o.snr_db,
        )
        for o in pulse_set.observations
    )
    return PulseSet(pulse_set.shot_id, projected)


def reflect_through_plane(pulse_set: PulseSet, z_star: float) -> PulseSet:
    """Double the array by mirroring each sensor through the plane z=z_star.

    Each observation (x, y, z, t) gains a twin (x, y, 2*z_star - z, t)
    whose sensor_id carries the ``#mirror`` suffix, so the output has
    exactly twice the input size. Arrival times are untouched: reflection
    is purely spatial.
    """
    if not math.isfinite(z_star):
        raise ValueError("z_star must be finite")
    doubled: list[SensorObservation] = []
    for o in pulse_set.observations:
        doubled.append(o)
        doubled.append(
            SensorObservation(
                sensor_id=o.sensor_id + MIRROR_SUFFIX,
                position=Position(
                    o.position.x, o.position.y, 2.0 * z_star - o.position.z
                ),
                arrival_time=o.arrival_time,
                amplitude_dbspl=o.amplitude_dbspl,
                snr_db=o.snr_db,
            )
        )
    return PulseSet(pulse_set.shot_id, tuple(doubled))
