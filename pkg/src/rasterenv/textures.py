"""Procedural textures: seeded lattice-hash value noise and hashed checker
cells.

Everything here is a pure function of (seed, u, v).  The hash is a
SplitMix64-style avalanche over the integer lattice, so patterns are
deterministic across platforms and never repeat.
"""

import numpy as np

from .scene import CheckerHash, Color, Flat, Material, NoiseTexture


class NotATextureError(TypeError):
    """texture_sample called on a non-texture material."""


_U64 = np.uint64


def hash_lattice(seed, ix, iy):
    """64-bit avalanche hash of (seed, ix, iy); accepts numpy arrays."""
    ix = np.asarray(ix, dtype=np.int64)
    iy = np.asarray(iy, dtype=np.int64)
    with np.errstate(over="ignore"):
        z = (ix.view(_U64) * _U64(0x9E3779B97F4A7C15)
             ^ iy.view(_U64) * _U64(0xC2B2AE3D27D4EB4F)
             ^ _U64(seed & 0xFFFFFFFFFFFFFFFF) * _U64(0xD6E8FEB86659FD93))
        z = (z ^ (z >> _U64(30))) * _U64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> _U64(27))) * _U64(0x94D049BB133111EB)
        return z ^ (z >> _U64(31))


def _hash_unit(seed, ix, iy):
    """Hash mapped to floats in [0, 1)."""
    return (hash_lattice(seed, ix, iy) >> _U64(11)).astype(np.float64) * 2.0**-53


def value_noise(seed, u, v, scale):
    """Smoothly interpolated lattice noise in [0, 1).

    u, v are surface coordinates (numpy arrays or scalars); ``scale`` is
    the lattice cell size in the same units.
    """
    u = np.asarray(u, dtype=np.float64) / scale
    v = np.asarray(v, dtype=np.float64) / scale
    iu = np.floor(u)
    iv = np.floor(v)
    fu = u - iu
    fv = v - iv
    iu = iu.astype(np.int64)
    iv = iv.astype(np.int64)
    # smoothstep fade
    wu = fu * fu * (3.0 - 2.0 * fu)
    wv = fv * fv * (3.0 - 2.0 * fv)
    one = np.int64(1)
    c00 = _hash_unit(seed, iu, iv)
    c10 = _hash_unit(seed, iu + one, iv)
    c01 = _hash_unit(seed, iu, iv + one)
    c11 = _hash_unit(seed, iu + one, iv + one)
    top = c00 + wu * (c10 - c00)
    bot = c01 + wu * (c11 - c01)
    return top + wv * (bot - top)


def checker_rgb(seed, u, v, cell_size):
    """Per-cell hashed color; returns (r, g, b) float arrays in [0, 1]."""
    cu = np.floor(np.asarray(u, dtype=np.float64) / cell_size).astype(np.int64)
    cv = np.floor(np.asarray(v, dtype=np.float64) / cell_size).astype(np.int64)
    h = hash_lattice(seed, cu, cv)
    r = ((h >> _U64(0)) & _U64(0xFFFF)).astype(np.float64) / 65535.0
    g = ((h >> _U64(16)) & _U64(0xFFFF)).astype(np.float64) / 65535.0
    b = ((h >> _U64(32)) & _U64(0xFFFF)).astype(np.float64) / 65535.0
    return r, g, b


def sample_albedo(material: Material, u, v):
    """Vectorized albedo lookup; returns an (..., 3) float array."""
    u = np.asarray(u, dtype=np.float64)
    if isinstance(material, Flat):
        a = material.albedo
        out = np.empty(u.shape + (3,), dtype=np.float64)
        out[..., 0] = a.r
        out[..., 1] = a.g
        out[..., 2] = a.b
        return out
    if isinstance(material, NoiseTexture):
        t = value_noise(material.seed, u, v, material.scale)
        lo, hi = material.palette
        out = np.empty(t.shape + (3,), dtype=np.float64)
        out[..., 0] = lo.r + t * (hi.r - lo.r)
        out[..., 1] = lo.g + t * (hi.g - lo.g)
        out[..., 2] = lo.b + t * (hi.b - lo.b)
        return out
    if isinstance(material, CheckerHash):
        r, g, b = checker_rgb(material.seed, u, v, material.cell_size)
        return np.stack([r, g, b], axis=-1)
    raise TypeError(f"unknown material {material!r}")


def texture_sample(material: Material, u: float, v: float) -> Color:
    """Sample a texture material at surface coordinates (u, v).

    Raises NotATextureError for Flat materials.
    """
    if isinstance(material, Flat):
        raise NotATextureError("Flat material has no texture to sample")
    rgb = sample_albedo(material, np.float64(u), np.float64(v))
    return Color(float(rgb[..., 0]), float(rgb[..., 1]), float(rgb[..., 2]))
