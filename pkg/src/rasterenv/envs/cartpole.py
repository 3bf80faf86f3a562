"""Visual cart-pole balancing.

Hidden dynamics are the classic cart-pole equations with the standard
constants (gravity 9.8, cart mass 1.0, pole mass 0.1, half-length 0.5,
force 10, dt 0.02, explicit Euler).  The observation is the view of a
fixed camera on the -Y axis facing the track.
"""

import math
from dataclasses import dataclass, replace

from ..core import Discrete, Env, Reason
from ..geometry import Transform, Vec3
from ..params import CartPoleParams
from ..rng import SplitMix64
from ..scene import (Box, Camera, Color, Cylinder, DirectionalLight, Flat,
                     Plane, Scene, SceneObject, scene_set_transform)

CART_HALF = Vec3(0.25, 0.12, 0.1)
POLE_RADIUS = 0.05
CAMERA_DISTANCE = 6.0
CAMERA_HEIGHT = 1.0


@dataclass(frozen=True)
class CartPoleState:
    x: float
    x_dot: float
    theta: float  # pole angle from vertical, radians; positive tilts +X
    theta_dot: float
    t: int


def dynamics(s: CartPoleState, action: int,
             p: CartPoleParams = CartPoleParams()) -> CartPoleState:
    """One Euler step; action 0 pushes left, 1 pushes right."""
    force = p.force_mag if action == 1 else -p.force_mag
    cos_t = math.cos(s.theta)
    sin_t = math.sin(s.theta)
    total_mass = p.cart_mass + p.pole_mass
    polemass_length = p.pole_mass * p.pole_half_length

    temp = (force + polemass_length * s.theta_dot**2 * sin_t) / total_mass
    theta_acc = (p.gravity * sin_t - cos_t * temp) / (
        p.pole_half_length * (4.0 / 3.0 - p.pole_mass * cos_t**2 / total_mass))
    x_acc = temp - polemass_length * theta_acc * cos_t / total_mass

    return CartPoleState(
        x=s.x + p.dt * s.x_dot,
        x_dot=s.x_dot + p.dt * x_acc,
        theta=s.theta + p.dt * s.theta_dot,
        theta_dot=s.theta_dot + p.dt * theta_acc,
        t=s.t + 1,
    )


def judge(s: CartPoleState, p: CartPoleParams = CartPoleParams()):
    """Reward 1 on every step, including the terminal one."""
    if abs(s.theta) > p.theta_limit:
        return 1.0, True, Reason.FELL
    if abs(s.x) > p.x_limit:
        return 1.0, True, Reason.OUT_OF_BOUNDS
    if s.t >= p.max_steps:
        return 1.0, True, Reason.WIN
    return 1.0, False, Reason.RUNNING


def _cart_transform(s: CartPoleState) -> Transform:
    return Transform(position=Vec3(s.x, 0.0, CART_HALF.z))


def _pole_transform(s: CartPoleState, p: CartPoleParams) -> Transform:
    # hinge on the cart top; the pole's center sits half a length along
    # its own axis (full visual length = 2 * physical half-length)
    half_len = p.pole_half_length
    hinge_z = 2 * CART_HALF.z
    cx = s.x + half_len * math.sin(s.theta)
    cz = hinge_z + half_len * math.cos(s.theta)
    return Transform(position=Vec3(cx, 0.0, cz),
                     rotation=Vec3(0.0, s.theta, 0.0))


def build_scene(s: CartPoleState, p: CartPoleParams = CartPoleParams(),
                resolution=(100, 100)) -> Scene:
    objects = (
        SceneObject("ground", Plane(50.0), Flat(Color(0.55, 0.55, 0.55))),
        SceneObject("cart", Box(CART_HALF), Flat(Color(0.60, 0.15, 0.15)),
                    _cart_transform(s)),
        SceneObject("pole", Cylinder(POLE_RADIUS, p.pole_half_length),
                    Flat(Color(0.78, 0.58, 0.20)), _pole_transform(s, p)),
    )
    camera = Camera(
        focal_length=36.0, sensor_width=36.0, resolution=resolution,
        pose=Transform(position=Vec3(0.0, -CAMERA_DISTANCE, CAMERA_HEIGHT),
                       rotation=Vec3(math.pi / 2, 0.0, 0.0)))
    # light direction has no X component so mirrored states render mirrored
    light = DirectionalLight(Vec3(0.0, 0.35, -0.93).normalized(),
                             intensity=0.9, ambient=0.35)
    return Scene(objects=objects, light=light, camera=camera,
                 background=Color(0.86, 0.90, 0.95))


class CartPoleEnv(Env):
    name = "cartpole"
    action_space = Discrete(2)

    def __init__(self, params: CartPoleParams = CartPoleParams(), spec=None):
        super().__init__(spec)
        self.params = params

    def _init_state(self, rng: SplitMix64) -> CartPoleState:
        r = self.params.init_range
        return CartPoleState(
            x=rng.uniform(-r, r), x_dot=rng.uniform(-r, r),
            theta=rng.uniform(-r, r), theta_dot=rng.uniform(-r, r), t=0)

    def _advance(self, state, action):
        return dynamics(state, action, self.params)

    def _judge(self, state):
        return judge(state, self.params)

    def _build_scene(self, state) -> Scene:
        return build_scene(state, self.params,
                           (self.spec.width, self.spec.height))

    def _update_scene(self, scene, state) -> Scene:
        scene = scene_set_transform(scene, "cart", _cart_transform(state))
        return scene_set_transform(scene, "pole",
                                   _pole_transform(state, self.params))
