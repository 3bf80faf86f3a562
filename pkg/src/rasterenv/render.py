"""CPU renderer: one primary ray per pixel, depth-tested against the
scene's analytic primitives, Lambert-shaded by the single directional
light.

The output is bit-deterministic: one sample per pixel, no anti-aliasing,
every pixel computed independently in float64 and quantized with
round-half-up.  Rendering the same scene twice yields byte-identical
buffers.
"""

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import raycast
from .scene import Camera, Color, DegenerateCameraError, DirectionalLight, Flat, Scene
from .textures import sample_albedo


@dataclass(frozen=True)
class FrameBuffer:
    """Row-major RGB image, top row first; pixels is (H, W, 3) uint8."""

    pixels: np.ndarray

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def tobytes(self) -> bytes:
        return self.pixels.tobytes()


@dataclass(frozen=True)
class GrayFrame:
    """Row-major 8-bit luminance image; pixels is (H, W) uint8."""

    pixels: np.ndarray

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def tobytes(self) -> bytes:
        return self.pixels.tobytes()


@dataclass(frozen=True)
class DepthBuffer:
    """Camera-space hit distance per pixel (m); +inf where nothing was hit."""

    depth: np.ndarray


@lru_cache(maxsize=16)
def _camera_dirs(width: int, height: int, focal: float, sensor_w: float):
    """Unit ray directions through pixel centers, camera frame, (H*W, 3)."""
    sensor_h = sensor_w * height / width
    xs = (np.arange(width, dtype=np.float64) + 0.5 - width / 2.0) * (
        sensor_w / width)
    ys = -(np.arange(height, dtype=np.float64) + 0.5 - height / 2.0) * (
        sensor_h / height)
    gx, gy = np.meshgrid(xs, ys)
    d = np.stack(
        [gx.ravel(), gy.ravel(), np.full(gx.size, -focal)], axis=1)
    d /= np.linalg.norm(d, axis=1, keepdims=True)
    d.setflags(write=False)
    return d


def _check_camera(camera: Camera):
    w, h = camera.resolution
    if camera.focal_length <= 0 or camera.sensor_width <= 0 or w < 1 or h < 1:
        raise DegenerateCameraError(f"degenerate camera: {camera!r}")


def render_with_depth(scene: Scene):
    """Render the scene from its camera; returns (FrameBuffer, DepthBuffer)."""
    cam = scene.camera
    _check_camera(cam)
    w, h = int(cam.resolution[0]), int(cam.resolution[1])
    n = w * h

    rot_cam = cam.pose.matrix()
    origin = cam.pose.position.as_array()
    dirs = _camera_dirs(w, h, cam.focal_length, cam.sensor_width) @ rot_cam.T

    objects = [o for o in scene.objects if o.visible]
    best_t = np.full(n, np.inf)
    winner = np.full(n, -1, dtype=np.int32)

    locals_cache = []
    for k, obj in enumerate(objects):
        rot = obj.transform.matrix()
        pos = obj.transform.position.as_array()
        s = obj.transform.scale
        scale = np.array([s.x, s.y, s.z])
        o_local = (rot.T @ (origin - pos)) / scale
        d_local = (dirs @ rot) / scale
        locals_cache.append((rot, scale, o_local, d_local))
        t = raycast.intersect(obj.primitive, o_local, d_local)
        closer = t < best_t
        best_t = np.where(closer, t, best_t)
        winner = np.where(closer, k, winner)

    rgb = np.empty((n, 3), dtype=np.float64)
    rgb[:] = scene.background.as_tuple()

    light = scene.light
    light_dir = light.direction.as_array()

    for k, obj in enumerate(objects):
        sel = np.nonzero(winner == k)[0]
        if sel.size == 0:
            continue
        rot, scale, o_local, d_local = locals_cache[k]
        t_sel = best_t[sel]
        p_local = o_local + t_sel[:, None] * d_local[sel]

        n_local = raycast.local_normal(obj.primitive, p_local)
        n_world = (n_local / scale) @ rot.T
        norms = np.linalg.norm(n_world, axis=1, keepdims=True)
        n_world /= norms
        # two-sided: flip normals facing away from the viewer
        facing = np.einsum("ij,ij->i", n_world, dirs[sel])
        n_world = np.where(facing[:, None] > 0.0, -n_world, n_world)

        if isinstance(obj.material, Flat):
            albedo = np.empty((sel.size, 3))
            albedo[:] = obj.material.albedo.as_tuple()
        else:
            u, v = raycast.surface_uv(p_local)
            albedo = sample_albedo(obj.material, u, v)

        lam = np.maximum(0.0, -(n_world @ light_dir))
        factor = light.ambient + light.intensity * lam
        rgb[sel] = np.clip(albedo * factor[:, None], 0.0, 1.0)

    pixels = np.floor(rgb * 255.0 + 0.5).astype(np.uint8).reshape(h, w, 3)
    pixels.setflags(write=False)
    depth = best_t.reshape(h, w)
    depth.setflags(write=False)
    return FrameBuffer(pixels), DepthBuffer(depth)


def render(scene: Scene) -> FrameBuffer:
    fb, _ = render_with_depth(scene)
    return fb


def shade(albedo: Color, normal, light: DirectionalLight) -> Color:
    """Lambert shading of one sample: clamp(albedo * (ambient + intensity
    * max(0, n . -light_dir)), 0, 1) per channel."""
    lam = max(0.0, normal.dot(-light.direction))
    f = light.ambient + light.intensity * lam
    clip = lambda c: min(1.0, max(0.0, c * f))
    return Color(clip(albedo.r), clip(albedo.g), clip(albedo.b))


# Rec. 601 luma, computed in float64 and rounded half-up so that
# achromatic (v, v, v) pixels map back to exactly v.
_LUMA = np.array([0.299, 0.587, 0.114])


def to_grayscale(fb: FrameBuffer) -> GrayFrame:
    y = fb.pixels.astype(np.float64) @ _LUMA
    g = np.floor(y + 0.5).astype(np.uint8)
    g.setflags(write=False)
    return GrayFrame(g)


def save_png(frame, path) -> None:
    """Write a GrayFrame or FrameBuffer as an 8-bit PNG."""
    from PIL import Image

    arr = frame.pixels
    mode = "L" if arr.ndim == 2 else "RGB"
    Image.fromarray(np.asarray(arr), mode=mode).save(Path(path), format="PNG")


def frame_filename(episode: int, step: int) -> str:
    return f"ep{episode:04d}_st{step:04d}.png"
