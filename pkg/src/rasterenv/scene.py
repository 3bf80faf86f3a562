"""Scene description: primitives, materials, lights, camera and the scene
container itself.

Scenes are immutable value objects.  The update operations
(:func:`scene_add_object`, :func:`scene_set_transform`, ...) return a new
``Scene`` sharing the untouched objects, so a scene handed to the renderer
or to another thread can never change underneath it.

A scene serializes to a plain JSON document; see :func:`scene_to_json` for
the exact field names (also documented in the README).
"""

import json
from dataclasses import dataclass, replace
from typing import Optional, Union

from .geometry import IDENTITY, Transform, Vec3


class DuplicateIdError(ValueError):
    """Object id already present in the scene."""


class UnknownIdError(KeyError):
    """Object id not present in the scene."""


class DegenerateCameraError(ValueError):
    """Camera parameters violate the pinhole-model invariants."""


@dataclass(frozen=True)
class Color:
    r: float
    g: float
    b: float

    def __post_init__(self):
        for c in (self.r, self.g, self.b):
            if not (0.0 <= c <= 1.0):
                raise ValueError(f"color channel out of [0,1]: {c!r}")

    def as_tuple(self) -> tuple:
        return (self.r, self.g, self.b)


BLACK = Color(0.0, 0.0, 0.0)
WHITE = Color(1.0, 1.0, 1.0)


# --- materials -------------------------------------------------------------

@dataclass(frozen=True)
class Flat:
    """Constant albedo."""

    albedo: Color


@dataclass(frozen=True)
class NoiseTexture:
    """Seeded value-noise blend between the two palette colors.

    The pattern is a hash of the integer lattice, so it never repeats;
    ``scale`` is the feature size in surface units.
    """

    seed: int
    scale: float
    palette: tuple  # (Color, Color)

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("noise scale must be > 0")
        if len(self.palette) != 2:
            raise ValueError("palette must hold exactly two colors")


@dataclass(frozen=True)
class CheckerHash:
    """Grid of cells, each colored by a hash of its integer cell index."""

    seed: int
    cell_size: float

    def __post_init__(self):
        if self.cell_size <= 0:
            raise ValueError("cell_size must be > 0")


Material = Union[Flat, NoiseTexture, CheckerHash]


# --- primitives ------------------------------------------------------------

@dataclass(frozen=True)
class Plane:
    """Square slab in the local z=0 plane, |x|,|y| <= half_extent."""

    half_extent: float

    def __post_init__(self):
        if self.half_extent <= 0:
            raise ValueError("half_extent must be > 0")


@dataclass(frozen=True)
class Box:
    half_extents: Vec3

    def __post_init__(self):
        h = self.half_extents
        if h.x <= 0 or h.y <= 0 or h.z <= 0:
            raise ValueError("box half_extents must be > 0")


@dataclass(frozen=True)
class Sphere:
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be > 0")


@dataclass(frozen=True)
class Cylinder:
    """Capped cylinder, axis along local Z, |z| <= half_height."""

    radius: float
    half_height: float

    def __post_init__(self):
        if self.radius <= 0 or self.half_height <= 0:
            raise ValueError("cylinder dimensions must be > 0")


@dataclass(frozen=True)
class Ring:
    """Flat annulus in the local z=0 plane."""

    inner_radius: float
    outer_radius: float

    def __post_init__(self):
        if self.inner_radius <= 0 or self.outer_radius <= 0:
            raise ValueError("ring radii must be > 0")
        if self.inner_radius >= self.outer_radius:
            raise ValueError("ring inner radius must be < outer radius")


Primitive = Union[Plane, Box, Sphere, Cylinder, Ring]


# --- scene objects ---------------------------------------------------------

@dataclass(frozen=True)
class SceneObject:
    id: str
    primitive: Primitive
    material: Material
    transform: Transform = IDENTITY
    visible: bool = True


@dataclass(frozen=True)
class DirectionalLight:
    direction: Vec3  # unit vector, points from the light toward the scene
    intensity: float = 1.0
    ambient: float = 0.0

    def __post_init__(self):
        if abs(self.direction.norm() - 1.0) > 1e-9:
            raise ValueError("light direction must be a unit vector")
        if self.intensity < 0:
            raise ValueError("light intensity must be >= 0")
        if not (0.0 <= self.ambient <= 1.0):
            raise ValueError("ambient must be in [0,1]")


@dataclass(frozen=True)
class Camera:
    """Pinhole camera.

    ``focal_length`` and ``sensor_width`` are in millimeters; the sensor
    height is derived from the pixel aspect ratio
    (``sensor_width * height / width``).  The camera looks along its local
    -Z axis with +Y up; horizontal FOV is
    ``2 * atan(sensor_width / (2 * focal_length))``.
    """

    focal_length: float
    sensor_width: float
    resolution: tuple  # (width_px, height_px)
    pose: Transform = IDENTITY

    def __post_init__(self):
        if self.focal_length <= 0:
            raise DegenerateCameraError("focal_length must be > 0")
        if self.sensor_width <= 0:
            raise DegenerateCameraError("sensor_width must be > 0")
        w, h = self.resolution
        if int(w) < 1 or int(h) < 1 or int(w) != w or int(h) != h:
            raise DegenerateCameraError(f"bad resolution {self.resolution!r}")

    @property
    def sensor_height(self) -> float:
        w, h = self.resolution
        return self.sensor_width * h / w


@dataclass(frozen=True)
class Scene:
    objects: tuple  # tuple[SceneObject, ...]
    light: DirectionalLight
    camera: Camera
    background: Color = BLACK

    def __post_init__(self):
        ids = [o.id for o in self.objects]
        if len(ids) != len(set(ids)):
            raise DuplicateIdError("duplicate object ids in scene")

    def get_object(self, obj_id: str) -> SceneObject:
        for o in self.objects:
            if o.id == obj_id:
                return o
        raise UnknownIdError(obj_id)


# --- operations ------------------------------------------------------------

def scene_add_object(scene: Scene, obj: SceneObject) -> Scene:
    """Return a scene with ``obj`` appended. Ids must stay unique."""
    if any(o.id == obj.id for o in scene.objects):
        raise DuplicateIdError(obj.id)
    return replace(scene, objects=scene.objects + (obj,))


def scene_set_transform(scene: Scene, obj_id: str, t: Transform) -> Scene:
    """Return a scene where only ``obj_id``'s transform is replaced."""
    for i, o in enumerate(scene.objects):
        if o.id == obj_id:
            new_obj = replace(o, transform=t)
            objs = scene.objects[:i] + (new_obj,) + scene.objects[i + 1:]
            return replace(scene, objects=objs)
    raise UnknownIdError(obj_id)


def camera_project(camera: Camera, p_world: Vec3) -> Optional[tuple]:
    """Project a world point to continuous pixel coordinates.

    Returns (u, v) with 0 <= u < W, 0 <= v < H when the point lies strictly
    in front of the camera and inside the frustum, else None.  Pixel (0,0)
    is the top-left corner; the image center is (W/2, H/2).  The camera
    pose's scale has no effect on projection.
    """
    w, h = camera.resolution
    rot = camera.pose.matrix()
    rel = p_world - camera.pose.position
    p_cam = rot.T @ rel.as_array()
    depth = -p_cam[2]
    if depth <= 0.0:
        return None
    x_mm = camera.focal_length * p_cam[0] / depth
    y_mm = camera.focal_length * p_cam[1] / depth
    u = w * (0.5 + x_mm / camera.sensor_width)
    v = h * (0.5 - y_mm / camera.sensor_height)
    if 0.0 <= u < w and 0.0 <= v < h:
        return (u, v)
    return None


# --- JSON serialization -----------------------------------------------------

def _vec(v: Vec3) -> list:
    return [v.x, v.y, v.z]


def _color(c: Color) -> list:
    return [c.r, c.g, c.b]


def _transform_dict(t: Transform) -> dict:
    return {
        "position": _vec(t.position),
        "rotation": _vec(t.rotation),
        "scale": _vec(t.scale),
    }


def _primitive_dict(p: Primitive) -> dict:
    if isinstance(p, Plane):
        return {"kind": "plane", "half_extent": p.half_extent}
    if isinstance(p, Box):
        return {"kind": "box", "half_extents": _vec(p.half_extents)}
    if isinstance(p, Sphere):
        return {"kind": "sphere", "radius": p.radius}
    if isinstance(p, Cylinder):
        return {"kind": "cylinder", "radius": p.radius,
                "half_height": p.half_height}
    if isinstance(p, Ring):
        return {"kind": "ring", "inner_radius": p.inner_radius,
                "outer_radius": p.outer_radius}
    raise TypeError(f"unknown primitive {p!r}")


def _material_dict(m: Material) -> dict:
    if isinstance(m, Flat):
        return {"kind": "flat", "albedo": _color(m.albedo)}
    if isinstance(m, NoiseTexture):
        return {"kind": "noise", "seed": m.seed, "scale": m.scale,
                "palette": [_color(m.palette[0]), _color(m.palette[1])]}
    if isinstance(m, CheckerHash):
        return {"kind": "checker_hash", "seed": m.seed,
                "cell_size": m.cell_size}
    raise TypeError(f"unknown material {m!r}")


def scene_to_dict(scene: Scene) -> dict:
    return {
        "background": _color(scene.background),
        "light": {
            "direction": _vec(scene.light.direction),
            "intensity": scene.light.intensity,
            "ambient": scene.light.ambient,
        },
        "camera": {
            "focal_length": scene.camera.focal_length,
            "sensor_width": scene.camera.sensor_width,
            "resolution": [scene.camera.resolution[0],
                           scene.camera.resolution[1]],
            "pose": _transform_dict(scene.camera.pose),
        },
        "objects": [
            {
                "id": o.id,
                "primitive": _primitive_dict(o.primitive),
                "material": _material_dict(o.material),
                "transform": _transform_dict(o.transform),
                "visible": o.visible,
            }
            for o in scene.objects
        ],
    }


def scene_to_json(scene: Scene, indent: Optional[int] = 2) -> str:
    return json.dumps(scene_to_dict(scene), indent=indent)


def _vec_from(v) -> Vec3:
    return Vec3(float(v[0]), float(v[1]), float(v[2]))


def _color_from(c) -> Color:
    return Color(float(c[0]), float(c[1]), float(c[2]))


def _transform_from(d: dict) -> Transform:
    return Transform(position=_vec_from(d["position"]),
                     rotation=_vec_from(d["rotation"]),
                     scale=_vec_from(d["scale"]))


def _primitive_from(d: dict) -> Primitive:
    kind = d["kind"]
    if kind == "plane":
        return Plane(float(d["half_extent"]))
    if kind == "box":
        return Box(_vec_from(d["half_extents"]))
    if kind == "sphere":
        return Sphere(float(d["radius"]))
    if kind == "cylinder":
        return Cylinder(float(d["radius"]), float(d["half_height"]))
    if kind == "ring":
        return Ring(float(d["inner_radius"]), float(d["outer_radius"]))
    raise ValueError(f"unknown primitive kind {kind!r}")


def _material_from(d: dict) -> Material:
    kind = d["kind"]
    if kind == "flat":
        return Flat(_color_from(d["albedo"]))
    if kind == "noise":
        return NoiseTexture(int(d["seed"]), float(d["scale"]),
                            (_color_from(d["palette"][0]),
                             _color_from(d["palette"][1])))
    if kind == "checker_hash":
        return CheckerHash(int(d["seed"]), float(d["cell_size"]))
    raise ValueError(f"unknown material kind {kind!r}")


def scene_from_dict(d: dict) -> Scene:
    light = DirectionalLight(
        direction=_vec_from(d["light"]["direction"]),
        intensity=float(d["light"]["intensity"]),
        ambient=float(d["light"]["ambient"]),
    )
    cam = d["camera"]
    camera = Camera(
        focal_length=float(cam["focal_length"]),
        sensor_width=float(cam["sensor_width"]),
        resolution=(int(cam["resolution"][0]), int(cam["resolution"][1])),
        pose=_transform_from(cam["pose"]),
    )
    objects = tuple(
        SceneObject(
            id=od["id"],
            primitive=_primitive_from(od["primitive"]),
            material=_material_from(od["material"]),
            transform=_transform_from(od["transform"]),
            visible=bool(od["visible"]),
        )
        for od in d["objects"]
    )
    return Scene(objects=objects, light=light, camera=camera,
                 background=_color_from(d["background"]))


def scene_from_json(text: str) -> Scene:
    return scene_from_dict(json.loads(text))
