"""The reference environments and the name registry used by the CLI and
the wire protocol."""

from typing import Optional

from ..core import Env, ObservationSpec
from ..params import EnvConfig
from .cartpole import CartPoleEnv
from .goalie import GoalieEnv
from .hover2d import Hover2DEnv


class UnknownEnvError(KeyError):
    """No environment registered under that name."""


ENV_NAMES = ("cartpole", "hover2d", "goalie")


def make_env(name: str, config: Optional[EnvConfig] = None,
             spec: Optional[ObservationSpec] = None) -> Env:
    cfg = config or EnvConfig()
    if name == "cartpole":
        return CartPoleEnv(cfg.cartpole, spec)
    if name == "hover2d":
        return Hover2DEnv(cfg.hover2d, spec)
    if name == "goalie":
        return GoalieEnv(cfg.goalie, spec)
    raise UnknownEnvError(name)
