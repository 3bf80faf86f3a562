"""Vectors, Euler rotations and rigid transforms.

Conventions used throughout the package:

* right-handed world frame, +Z up, distances in meters
* Euler angles (rx, ry, rz) compose as ``R = Rz @ Ry @ Rx`` (intrinsic
  Z-Y-X, i.e. yaw about Z, then pitch about Y, then roll about X)
* a transform maps local points to world points as
  ``p_world = R @ (scale * p_local) + position``
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Vec3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        for v in (self.x, self.y, self.z):
            if not math.isfinite(v):
                raise ValueError(f"non-finite Vec3 component: {v!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=np.float64)

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def normalized(self) -> "Vec3":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize zero vector")
        return Vec3(self.x / n, self.y / n, self.z / n)

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def scaled(self, k: float) -> "Vec3":
        return Vec3(self.x * k, self.y * k, self.z * k)


ZERO = Vec3(0.0, 0.0, 0.0)
ONES = Vec3(1.0, 1.0, 1.0)


def rotation_matrix(rx: float, ry: float, rz: float) -> np.ndarray:
    """3x3 rotation for Euler angles composed as Rz @ Ry @ Rx."""
    cx, sx = math.cos(rx), math.sin(rx)
    cy, sy = math.cos(ry), math.sin(ry)
    cz, sz = math.cos(rz), math.sin(rz)
    rot_x = np.array([[1, 0, 0], [0, cx, -sx], [0, sx, cx]], dtype=np.float64)
    rot_y = np.array([[cy, 0, sy], [0, 1, 0], [-sy, 0, cy]], dtype=np.float64)
    rot_z = np.array([[cz, -sz, 0], [sz, cz, 0], [0, 0, 1]], dtype=np.float64)
    return rot_z @ rot_y @ rot_x


@dataclass(frozen=True)
class Transform:
    """Position + Euler rotation + per-axis scale."""

    position: Vec3 = ZERO
    rotation: Vec3 = ZERO  # radians, applied as Rz @ Ry @ Rx
    scale: Vec3 = ONES

    def __post_init__(self):
        if self.scale.x <= 0 or self.scale.y <= 0 or self.scale.z <= 0:
            raise ValueError(f"scale components must be > 0, got {self.scale}")

    def matrix(self) -> np.ndarray:
        r = self.rotation
        return rotation_matrix(r.x, r.y, r.z)

    def apply_point(self, p: Vec3) -> Vec3:
        s = self.scale
        local = np.array([p.x * s.x, p.y * s.y, p.z * s.z])
        w = self.matrix() @ local + self.position.as_array()
        return Vec3(float(w[0]), float(w[1]), float(w[2]))


IDENTITY = Transform()
