"""Hovering over a randomly placed target, seen through a downward camera.

The agent is a double integrator on a horizontal plane at fixed altitude:
each action adds a fixed velocity pulse along one axis (+y, -y, -x, +x)
and position integrates the updated velocity.  The 90-degree camera makes
the visible ground half-width equal the altitude.
"""

import math
from dataclasses import dataclass, replace

from ..core import Discrete, Env, Reason
from ..geometry import Transform, Vec3
from ..params import HoverParams
from ..rng import SplitMix64
from ..scene import (Box, Camera, Color, DirectionalLight, Flat,
                     NoiseTexture, Plane, Ring, Scene, SceneObject, Sphere,
                     scene_set_transform)

# pulse directions keyed by action: +y, -y, -x, +x
PULSES = ((0.0, 1.0), (0.0, -1.0), (-1.0, 0.0), (1.0, 0.0))

BORESIGHT_RADIUS = 0.25
TARGET_HALF = 0.5


@dataclass(frozen=True)
class HoverState:
    pos: tuple  # (x, y) m
    vel: tuple  # (vx, vy) m/s
    target: tuple  # (x, y) m
    t: int


def step_dynamics(s: HoverState, action: int,
                  p: HoverParams = HoverParams()) -> HoverState:
    ux, uy = PULSES[action]
    vx = s.vel[0] + p.pulse * ux
    vy = s.vel[1] + p.pulse * uy
    return HoverState(
        pos=(s.pos[0] + vx * p.dt, s.pos[1] + vy * p.dt),
        vel=(vx, vy), target=s.target, t=s.t + 1)


def distance_to_target(s: HoverState) -> float:
    return math.hypot(s.pos[0] - s.target[0], s.pos[1] - s.target[1])


def judge(s: HoverState, p: HoverParams = HoverParams()):
    """Only terminal steps pay: +20 target, -20 out of bounds, +10 cap."""
    if distance_to_target(s) < p.target_radius:
        return 20.0, True, Reason.WIN
    if abs(s.pos[0]) > p.bound or abs(s.pos[1]) > p.bound:
        return -20.0, True, Reason.OUT_OF_BOUNDS
    if s.t >= p.max_steps:
        return 10.0, True, Reason.MAX_STEPS
    return 0.0, False, Reason.RUNNING


def _camera_pose(s: HoverState, p: HoverParams) -> Transform:
    # identity rotation already looks along world -Z: straight down
    return Transform(position=Vec3(s.pos[0], s.pos[1], p.altitude))


def _boresight_transform(s: HoverState) -> Transform:
    return Transform(position=Vec3(s.pos[0], s.pos[1], BORESIGHT_RADIUS))


def build_scene(s: HoverState, p: HoverParams = HoverParams(),
                resolution=(100, 100)) -> Scene:
    tx, ty = s.target
    ground_mat = NoiseTexture(
        seed=p.ground_seed, scale=1.5,
        palette=(Color(0.18, 0.30, 0.16), Color(0.55, 0.62, 0.45)))
    objects = (
        SceneObject("ground", Plane(50.0), ground_mat),
        SceneObject("target", Box(Vec3(TARGET_HALF, TARGET_HALF, TARGET_HALF)),
                    Flat(Color(0.0, 0.0, 0.0)),
                    Transform(position=Vec3(tx, ty, TARGET_HALF))),
        SceneObject("ring", Ring(p.ring_inner, p.ring_outer),
                    Flat(Color(0.92, 0.92, 0.92)),
                    Transform(position=Vec3(tx, ty, 0.005))),
        SceneObject("boresight", Sphere(BORESIGHT_RADIUS),
                    Flat(Color(0.95, 0.95, 0.95)), _boresight_transform(s)),
    )
    camera = Camera(focal_length=p.focal_length, sensor_width=p.sensor_width,
                    resolution=resolution, pose=_camera_pose(s, p))
    light = DirectionalLight(Vec3(0.25, -0.20, -0.95).normalized(),
                             intensity=0.85, ambient=0.30)
    return Scene(objects=objects, light=light, camera=camera,
                 background=Color(0.10, 0.10, 0.12))


class Hover2DEnv(Env):
    name = "hover2d"
    action_space = Discrete(4)

    def __init__(self, params: HoverParams = HoverParams(), spec=None):
        super().__init__(spec)
        self.params = params

    def _init_state(self, rng: SplitMix64) -> HoverState:
        r = self.params.spawn_range
        target = (rng.uniform(-r, r), rng.uniform(-r, r))
        pos = (rng.uniform(-r, r), rng.uniform(-r, r))
        return HoverState(pos=pos, vel=(0.0, 0.0), target=target, t=0)

    def _advance(self, state, action):
        return step_dynamics(state, action, self.params)

    def _judge(self, state):
        return judge(state, self.params)

    def _build_scene(self, state) -> Scene:
        return build_scene(state, self.params,
                           (self.spec.width, self.spec.height))

    def _update_scene(self, scene: Scene, state) -> Scene:
        scene = scene_set_transform(scene, "boresight",
                                    _boresight_transform(state))
        camera = replace(scene.camera, pose=_camera_pose(state, self.params))
        return replace(scene, camera=camera)
