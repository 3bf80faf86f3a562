"""Goal-keeping: intercept a ball drifting toward the goal line y = 0.

The ball travels at constant speed along a direction drawn once per
episode; the goalie slides exactly one unit left or right per step.  The
camera rides on the goalie, looking down-field, so the view translates
with the agent.
"""

import math
from dataclasses import dataclass, replace

from ..core import Discrete, Env, Reason
from ..geometry import Transform, Vec3
from ..params import GoalieParams
from ..rng import SplitMix64
from ..scene import (Camera, Color, Cylinder, DirectionalLight, Flat,
                     NoiseTexture, Plane, Scene, SceneObject, Sphere,
                     scene_set_transform)
from ..textures import hash_lattice

BALL_RADIUS = 0.5
COLUMN_RADIUS = 0.5
COLUMN_HALF_HEIGHT = 1.5


@dataclass(frozen=True)
class GoalieState:
    goalie_x: float
    ball: tuple  # (x, y), y decreases toward the goal line at 0
    ball_dir: float  # radians from the field axis, fixed per episode
    t: int


def step_dynamics(s: GoalieState, action: int,
                  p: GoalieParams = GoalieParams()) -> GoalieState:
    dx = 1.0 if action == 1 else -1.0
    bx = s.ball[0] + p.ball_speed * math.sin(s.ball_dir)
    by = s.ball[1] - p.ball_speed * math.cos(s.ball_dir)
    return GoalieState(goalie_x=s.goalie_x + dx, ball=(bx, by),
                       ball_dir=s.ball_dir, t=s.t + 1)


def crossing_x(s: GoalieState) -> float:
    """Where the ball's track meets the goal line y = 0."""
    return s.ball[0] + s.ball[1] * math.tan(s.ball_dir)


def judge(s: GoalieState, p: GoalieParams = GoalieParams()):
    if s.ball[1] <= 0.0:
        if abs(s.goalie_x - crossing_x(s)) <= p.catch_radius:
            return 10.0, True, Reason.CAUGHT
        return -10.0, True, Reason.MISSED
    if abs(s.goalie_x) > p.goalie_bound:
        return -10.0, True, Reason.OUT_OF_BOUNDS
    if s.t >= p.max_steps:
        return 0.0, True, Reason.MAX_STEPS
    return 0.0, False, Reason.RUNNING


def _ball_transform(s: GoalieState) -> Transform:
    return Transform(position=Vec3(s.ball[0], s.ball[1], BALL_RADIUS))


def _camera_pose(s: GoalieState, p: GoalieParams) -> Transform:
    # at the goalie, looking along +Y (down-field)
    return Transform(position=Vec3(s.goalie_x, 0.0, p.camera_height),
                     rotation=Vec3(math.pi / 2, 0.0, 0.0))


def _column_color(seed: int, index: int) -> Color:
    h = int(hash_lattice(seed, index, 0))
    def chan(shift):
        return 0.25 + 0.75 * ((h >> shift) & 0xFFFF) / 65535.0
    return Color(chan(0), chan(16), chan(32))


def build_scene(s: GoalieState, p: GoalieParams = GoalieParams(),
                resolution=(100, 100)) -> Scene:
    field_mat = NoiseTexture(
        seed=p.field_seed, scale=2.0,
        palette=(Color(0.15, 0.35, 0.15), Color(0.50, 0.75, 0.50)))
    objects = [
        SceneObject("field", Plane(50.0), field_mat),
        SceneObject("ball", Sphere(BALL_RADIUS),
                    Flat(Color(0.97, 0.97, 0.97)), _ball_transform(s)),
    ]
    # landmark columns just past the ball's start line
    col_y = p.ball_start_distance + 2.0
    for i in range(p.column_count):
        cx = (i - (p.column_count - 1) / 2.0) * p.column_spacing
        objects.append(SceneObject(
            f"column{i}", Cylinder(COLUMN_RADIUS, COLUMN_HALF_HEIGHT),
            Flat(_column_color(p.field_seed + 1, i)),
            Transform(position=Vec3(cx, col_y, COLUMN_HALF_HEIGHT))))
    camera = Camera(focal_length=p.focal_length, sensor_width=p.sensor_width,
                    resolution=resolution, pose=_camera_pose(s, p))
    light = DirectionalLight(Vec3(0.0, 0.30, -0.95).normalized(),
                             intensity=0.9, ambient=0.35)
    return Scene(objects=tuple(objects), light=light, camera=camera,
                 background=Color(0.70, 0.82, 0.95))


class GoalieEnv(Env):
    name = "goalie"
    action_space = Discrete(2)

    def __init__(self, params: GoalieParams = GoalieParams(), spec=None):
        super().__init__(spec)
        self.params = params

    def _init_state(self, rng: SplitMix64) -> GoalieState:
        limit = math.radians(self.params.dir_limit_deg)
        direction = rng.uniform(-limit, limit)
        return GoalieState(goalie_x=0.0,
                           ball=(0.0, self.params.ball_start_distance),
                           ball_dir=direction, t=0)

    def _advance(self, state, action):
        return step_dynamics(state, action, self.params)

    def _judge(self, state):
        return judge(state, self.params)

    def _build_scene(self, state) -> Scene:
        return build_scene(state, self.params,
                           (self.spec.width, self.spec.height))

    def _update_scene(self, scene: Scene, state) -> Scene:
        scene = scene_set_transform(scene, "ball", _ball_transform(state))
        camera = replace(scene.camera,
                         pose=_camera_pose(state, self.params))
        return replace(scene, camera=camera)
