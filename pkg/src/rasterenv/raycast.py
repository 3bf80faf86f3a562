"""Ray / analytic-primitive intersections, vectorized over ray bundles.

All functions work in the primitive's local frame: ``o`` is the shared ray
origin (3,), ``d`` an (N, 3) array of directions (not necessarily unit
length there; the returned t parameters are valid for ``o + t * d``).
Misses are +inf.
"""

import numpy as np

from .scene import Box, Cylinder, Plane, Primitive, Ring, Sphere

T_MIN = 1e-9  # reject hits closer than this (self-intersection guard)


def _finish(t, valid):
    return np.where(valid & (t > T_MIN), t, np.inf)


def intersect_plane_z0(o, d, inside):
    """Hit with the local z=0 plane where ``inside(x, y)`` holds."""
    with np.errstate(divide="ignore", invalid="ignore"):
        t = -o[2] / d[:, 2]
        x = o[0] + t * d[:, 0]
        y = o[1] + t * d[:, 1]
        ok = np.isfinite(t) & inside(x, y)
    return _finish(t, ok)


def intersect_plane(prim: Plane, o, d):
    e = prim.half_extent
    return intersect_plane_z0(
        o, d, lambda x, y: (np.abs(x) <= e) & (np.abs(y) <= e))


def intersect_ring(prim: Ring, o, d):
    r0 = prim.inner_radius * prim.inner_radius
    r1 = prim.outer_radius * prim.outer_radius
    def inside(x, y):
        rr = x * x + y * y
        return (rr >= r0) & (rr <= r1)
    return intersect_plane_z0(o, d, inside)


def intersect_sphere(prim: Sphere, o, d):
    a = np.einsum("ij,ij->i", d, d)
    b = 2.0 * (d @ o)
    c = float(o @ o) - prim.radius * prim.radius
    disc = b * b - 4.0 * a * c
    with np.errstate(invalid="ignore", divide="ignore"):
        sq = np.sqrt(np.maximum(disc, 0.0))
        t_near = (-b - sq) / (2.0 * a)
        t_far = (-b + sq) / (2.0 * a)
        t = np.where(t_near > T_MIN, t_near, t_far)
    return _finish(t, disc >= 0.0)


def intersect_box(prim: Box, o, d):
    h = prim.half_extents
    he = np.array([h.x, h.y, h.z])
    with np.errstate(divide="ignore", invalid="ignore"):
        inv = 1.0 / d
        t1 = (-he - o) * inv
        t2 = (he - o) * inv
        t_near = np.max(np.minimum(t1, t2), axis=1)
        t_far = np.min(np.maximum(t1, t2), axis=1)
        ok = (t_near <= t_far) & (t_far > T_MIN)
        t = np.where(t_near > T_MIN, t_near, t_far)
    return _finish(t, ok)


def intersect_cylinder(prim: Cylinder, o, d):
    r2 = prim.radius * prim.radius
    hh = prim.half_height
    dx, dy, dz = d[:, 0], d[:, 1], d[:, 2]
    ox, oy, oz = o[0], o[1], o[2]

    with np.errstate(divide="ignore", invalid="ignore"):
        # lateral surface
        a = dx * dx + dy * dy
        b = 2.0 * (ox * dx + oy * dy)
        c = ox * ox + oy * oy - r2
        disc = b * b - 4.0 * a * c
        sq = np.sqrt(np.maximum(disc, 0.0))
        side_ok = (disc >= 0.0) & (a > 0.0)

        def side_t(t):
            z = oz + t * dz
            ok = side_ok & (t > T_MIN) & (np.abs(z) <= hh)
            return np.where(ok, t, np.inf)

        ts1 = side_t((-b - sq) / (2.0 * a))
        ts2 = side_t((-b + sq) / (2.0 * a))

        # caps
        def cap_t(zcap):
            t = (zcap - oz) / dz
            x = ox + t * dx
            y = oy + t * dy
            ok = np.isfinite(t) & (t > T_MIN) & (x * x + y * y <= r2)
            return np.where(ok, t, np.inf)

        tc1 = cap_t(hh)
        tc2 = cap_t(-hh)

    return np.minimum(np.minimum(ts1, ts2), np.minimum(tc1, tc2))


def intersect(prim: Primitive, o, d):
    if isinstance(prim, Plane):
        return intersect_plane(prim, o, d)
    if isinstance(prim, Box):
        return intersect_box(prim, o, d)
    if isinstance(prim, Sphere):
        return intersect_sphere(prim, o, d)
    if isinstance(prim, Cylinder):
        return intersect_cylinder(prim, o, d)
    if isinstance(prim, Ring):
        return intersect_ring(prim, o, d)
    raise TypeError(f"unknown primitive {prim!r}")


def local_normal(prim: Primitive, p):
    """Outward local-frame normal at local surface points p (M, 3)."""
    n = np.zeros_like(p)
    if isinstance(prim, (Plane, Ring)):
        n[:, 2] = 1.0
        return n
    if isinstance(prim, Sphere):
        return p / prim.radius
    if isinstance(prim, Box):
        h = prim.half_extents
        he = np.array([h.x, h.y, h.z])
        rel = p / he
        axis = np.argmax(np.abs(rel), axis=1)
        rows = np.arange(p.shape[0])
        n[rows, axis] = np.sign(rel[rows, axis])
        return n
    if isinstance(prim, Cylinder):
        on_cap = np.abs(np.abs(p[:, 2]) - prim.half_height) <= 1e-7 * max(
            1.0, prim.half_height)
        n[:, 0] = np.where(on_cap, 0.0, p[:, 0] / prim.radius)
        n[:, 1] = np.where(on_cap, 0.0, p[:, 1] / prim.radius)
        n[:, 2] = np.where(on_cap, np.sign(p[:, 2]), 0.0)
        return n
    raise TypeError(f"unknown primitive {prim!r}")


def surface_uv(p):
    """Texture coordinates for a local hit point: its local (x, y)."""
    return p[:, 0], p[:, 1]
