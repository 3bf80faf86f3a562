"""Per-environment constants and the TOML override mechanism.

Every tunable lives in a frozen dataclass; a config file overrides fields
by name, one table per environment::

    [cartpole]
    force_mag = 12.0

    [hover2d]
    max_steps = 300

Values are validated after overriding, so a nonsensical config fails at
load time rather than mid-episode.
"""

import dataclasses
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib


class ConfigError(ValueError):
    """Bad config file: unknown key, wrong type, or out-of-range value."""


@dataclass(frozen=True)
class CartPoleParams:
    gravity: float = 9.8
    cart_mass: float = 1.0
    pole_mass: float = 0.1
    pole_half_length: float = 0.5
    force_mag: float = 10.0
    dt: float = 0.02
    x_limit: float = 2.4
    theta_limit: float = math.radians(12.0)
    max_steps: int = 100
    init_range: float = 0.05

    def validate(self):
        if self.gravity <= 0 or self.cart_mass <= 0 or self.pole_mass <= 0:
            raise ConfigError("cartpole masses and gravity must be > 0")
        if self.pole_half_length <= 0 or self.dt <= 0 or self.force_mag <= 0:
            raise ConfigError("cartpole pole length, dt and force must be > 0")
        if not (0 < self.theta_limit < math.pi):
            raise ConfigError("cartpole theta_limit must be in (0, pi)")
        if self.x_limit <= 0 or self.max_steps < 1 or self.init_range < 0:
            raise ConfigError("cartpole bounds and step cap must be positive")


@dataclass(frozen=True)
class HoverParams:
    bound: float = 8.0
    spawn_range: float = 5.0
    altitude: float = 5.0
    pulse: float = 0.25
    dt: float = 0.1
    max_steps: int = 200
    target_radius: float = 2.0
    ring_inner: float = 1.9
    ring_outer: float = 2.1
    focal_length: float = 18.0
    sensor_width: float = 36.0
    ground_seed: int = 101

    def validate(self):
        if self.bound <= 0 or self.spawn_range <= 0 or self.altitude <= 0:
            raise ConfigError("hover2d bounds and altitude must be > 0")
        if self.spawn_range > self.bound:
            raise ConfigError("hover2d spawn_range cannot exceed bound")
        if self.pulse <= 0 or self.dt <= 0 or self.max_steps < 1:
            raise ConfigError("hover2d pulse, dt and max_steps must be > 0")
        if self.target_radius <= 0:
            raise ConfigError("hover2d target_radius must be > 0")
        if not (0 < self.ring_inner < self.ring_outer):
            raise ConfigError("hover2d ring radii must satisfy 0 < inner < outer")
        if self.focal_length <= 0 or self.sensor_width <= 0:
            raise ConfigError("hover2d camera parameters must be > 0")


@dataclass(frozen=True)
class GoalieParams:
    ball_start_distance: float = 20.0
    ball_speed: float = 1.0
    dir_limit_deg: float = 15.0
    goalie_bound: float = 6.0
    catch_radius: float = 1.0
    max_steps: int = 200
    camera_height: float = 1.2
    focal_length: float = 18.0
    sensor_width: float = 36.0
    field_seed: int = 202
    column_count: int = 9
    column_spacing: float = 3.0

    def validate(self):
        if self.ball_start_distance <= 0 or self.ball_speed <= 0:
            raise ConfigError("goalie ball distance and speed must be > 0")
        if not (0 <= self.dir_limit_deg < 90):
            raise ConfigError("goalie dir_limit_deg must be in [0, 90)")
        if self.goalie_bound <= 0 or self.catch_radius <= 0:
            raise ConfigError("goalie bound and catch radius must be > 0")
        if self.max_steps < 1 or self.camera_height <= 0:
            raise ConfigError("goalie max_steps and camera height must be > 0")
        if self.focal_length <= 0 or self.sensor_width <= 0:
            raise ConfigError("goalie camera parameters must be > 0")
        if self.column_count < 0 or self.column_spacing <= 0:
            raise ConfigError("goalie column layout must be positive")


@dataclass(frozen=True)
class EnvConfig:
    cartpole: CartPoleParams = CartPoleParams()
    hover2d: HoverParams = HoverParams()
    goalie: GoalieParams = GoalieParams()

    def validate(self):
        self.cartpole.validate()
        self.hover2d.validate()
        self.goalie.validate()


def _apply(params, table: dict, section: str):
    known = {f.name: f for f in dataclasses.fields(params)}
    updates = {}
    for key, value in table.items():
        if key not in known:
            raise ConfigError(f"unknown key {key!r} in [{section}]")
        want = known[key].type
        if want is int or want == "int":
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConfigError(f"[{section}] {key} must be an integer")
            updates[key] = value
        else:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f"[{section}] {key} must be a number")
            updates[key] = float(value)
    return dataclasses.replace(params, **updates)


def load_config(path: Optional[str] = None) -> EnvConfig:
    """Load an EnvConfig, applying TOML overrides when a path is given."""
    cfg = EnvConfig()
    if path is not None:
        raw = Path(path).read_bytes()
        try:
            doc = tomllib.loads(raw.decode("utf-8"))
        except (tomllib.TOMLDecodeError, UnicodeDecodeError) as e:
            raise ConfigError(f"cannot parse {path}: {e}") from e
        sections = {"cartpole", "hover2d", "goalie"}
        for name in doc:
            if name not in sections:
                raise ConfigError(f"unknown section [{name}]")
        cfg = EnvConfig(
            cartpole=_apply(cfg.cartpole, doc.get("cartpole", {}), "cartpole"),
            hover2d=_apply(cfg.hover2d, doc.get("hover2d", {}), "hover2d"),
            goalie=_apply(cfg.goalie, doc.get("goalie", {}), "goalie"),
        )
    cfg.validate()
    return cfg
