"""rasterenv: headless visual RL environments on a deterministic CPU
ray-casting renderer, with a rollout/benchmark CLI and a JSON-lines
environment server."""

__version__ = "0.1.0"

from .core import (Discrete, Env, InvalidActionError, NotResetError,
                   ObservationSpec, ObsStack, Reason, StepResult,
                   SteppedAfterDoneError, stack_to_tensor)
from .envs import ENV_NAMES, UnknownEnvError, make_env
from .geometry import Transform, Vec3
from .params import ConfigError, EnvConfig, load_config
from .render import (FrameBuffer, GrayFrame, render, save_png, shade,
                     to_grayscale)
from .rng import SplitMix64
from .scene import (Box, Camera, CheckerHash, Color, Cylinder,
                    DirectionalLight, DuplicateIdError, Flat, NoiseTexture,
                    Plane, Ring, Scene, SceneObject, Sphere, UnknownIdError,
                    camera_project, scene_add_object, scene_from_json,
                    scene_set_transform, scene_to_json)
from .textures import NotATextureError, texture_sample
