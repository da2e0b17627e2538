"""Environmental corrections: speed of sound and homogeneous-wind shifts.

The propagation model everywhere else assumes a stationary medium. A
homogeneous wind is folded in by shifting each sensor to the apparent
position that would have received the signal in still air; gradients,
refraction, and shadow zones are out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import PulseSet, Position, SensorObservation

ABSOLUTE_ZERO_C = -273.15

# Fallback gap between the earliest arrival and the assumed discharge
# time when no estimate is available; suits deployment densities of
# roughly 2-12 sensors/km^2.
DEFAULT_DISCHARGE_OFFSET_S = 1.0

MAX_WIND_SPEED = 100.0


def speed_of_sound(temperature_c: float) -> float:
    """Dry-air speed of sound in m/s at the given temperature in Celsius.

    Humidity and pressure dependence are small enough to ignore for
    location purposes. Raises ValueError at or below absolute zero.
    """
    if temperature_c <= ABSOLUTE_ZERO_C:
        raise ValueError(
            f"temperature {temperature_c} degC is at or below absolute zero"
        )
    return 20.03 * math.sqrt(temperature_c - ABSOLUTE_ZERO_C)


@dataclass(frozen=True)
class Environment:
    """Ambient conditions: temperature and a horizontal wind vector.

    The vertical wind component is taken to be zero.
    """

    temperature_c: float
    wind: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self) -> None:
        if self.temperature_c <= ABSOLUTE_ZERO_C:
            raise ValueError("temperature must be above absolute zero")
        vx, vy = self.wind
        if not (math.isfinite(vx) and math.isfinite(vy)):
            raise ValueError("wind components must be finite")
        if math.hypot(vx, vy) >= MAX_WIND_SPEED:
            raise ValueError(f"wind speed must be below {MAX_WIND_SPEED} m/s")

    @property
    def speed_of_sound(self) -> float:
        return speed_of_sound(self.temperature_c)

    @property
    def has_wind(self) -> bool:
        return self.wind != (0.0, 0.0)


def wind_correct(
    pulse_set: PulseSet,
    env: Environment,
    discharge_estimate: float | None = None,
) -> PulseSet:
    """Shift sensor positions to cancel advection by a homogeneous wind.

    Each sensor moves by ``-(t_i - t_*) * (v_x, v_y)``; elevations and
    arrival times are unchanged, so the correction commutes with the 2D
    projection. When ``discharge_estimate`` is None, ``t_*`` falls back to
    one second before the earliest arrival; once a solve has produced a
    real discharge time, re-running the correction with it removes the
    fallback's bias.
    """
    t0 = pulse_set.earliest_arrival()
    if discharge_estimate is None:
        t_star = t0 - DEFAULT_DISCHARGE_OFFSET_S
    else:
        if discharge_estimate > t0:
            raise ValueError(
                f"discharge estimate {discharge_estimate} is after the "
                f"earliest arrival {t0}"
            )
        t_star = discharge_estimate
    vx, vy = env.wind
    corrected = tuple(
        SensorObservation(
            sensor_id=o.sensor_id,
            position=Position(
                o.position.x - (o.arrival_time - t_star) * vx,
                o.position.y - (o.arrival_time - t_star) * vy,
                o.position.z,
            ),
            arrival_time=o.arrival_time,
            amplitude_dbspl=o.amplitude_dbspl,
            snr_db=o.snr_db,
        )
        for o in pulse_set.observations
    )
    return PulseSet(pulse_set.shot_id, corrected)
