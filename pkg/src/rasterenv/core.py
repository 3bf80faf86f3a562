"""Environment contract: seeded reset/step lifecycle, action/observation
spaces, and the depth-4 frame stack every environment emits.

An environment instance is single-owner and strictly sequential; run
several independent instances for parallelism.
"""

import time
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from .render import GrayFrame, render, to_grayscale
from .rng import SplitMix64
from .scene import Scene


class InvalidActionError(ValueError):
    """Action outside the environment's discrete range."""


class NotResetError(RuntimeError):
    """step called before the first reset."""


class SteppedAfterDoneError(RuntimeError):
    """step called on a finished episode; reset first."""


class Reason(Enum):
    RUNNING = "running"
    WIN = "win"
    OUT_OF_BOUNDS = "out_of_bounds"
    FELL = "fell"
    MAX_STEPS = "max_steps"
    CAUGHT = "caught"
    MISSED = "missed"


@dataclass(frozen=True)
class Discrete:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("action count must be >= 1")


@dataclass(frozen=True)
class ObservationSpec:
    height: int = 100
    width: int = 100
    depth: int = 4

    def __post_init__(self):
        if self.height < 1 or self.width < 1 or self.depth < 1:
            raise ValueError("observation dimensions must be >= 1")


@dataclass(frozen=True)
class ObsStack:
    """The last ``depth`` grayscale frames, oldest first; never partial."""

    frames: Tuple[GrayFrame, ...]

    def __post_init__(self):
        if not self.frames:
            raise ValueError("empty observation stack")
        w, h = self.frames[0].width, self.frames[0].height
        for f in self.frames:
            if f.width != w or f.height != h:
                raise ValueError("stack frames must share one resolution")

    @property
    def depth(self) -> int:
        return len(self.frames)

    def push(self, frame: GrayFrame) -> "ObsStack":
        """Evict the oldest frame and append the new one."""
        return ObsStack(self.frames[1:] + (frame,))


def stack_to_tensor(stack: ObsStack) -> np.ndarray:
    """(H, W, D) uint8 tensor; channel d holds the d-th oldest frame.

    The serialized form (``.tobytes()``) is row-major with depth as the
    fastest-varying axis.
    """
    return np.stack([f.pixels for f in stack.frames], axis=-1)


@dataclass(frozen=True)
class StepResult:
    obs: ObsStack
    reward: float
    done: bool
    reason: Reason
    step_index: int

    def __post_init__(self):
        if (self.reason is Reason.RUNNING) == self.done:
            raise ValueError("reason must be RUNNING exactly when not done")


class Env:
    """Base class wiring hidden dynamics to rendered observations.

    Subclasses provide the hidden state via ``_init_state``, ``_advance``,
    ``_judge`` and describe what the camera sees via ``_build_scene`` /
    ``_update_scene``.
    """

    name: str = "env"
    action_space: Discrete

    def __init__(self, spec: Optional[ObservationSpec] = None):
        self.spec = spec or ObservationSpec()
        self._state = None
        self._scene: Optional[Scene] = None
        self._stack: Optional[ObsStack] = None
        self._done = False
        self._ready = False
        self.last_render_s = 0.0

    # --- subclass hooks ---------------------------------------------------

    def _init_state(self, rng: SplitMix64):
        raise NotImplementedError

    def _advance(self, state, action: int):
        raise NotImplementedError

    def _judge(self, state):
        """Return (reward, done, reason) for the state just produced."""
        raise NotImplementedError

    def _build_scene(self, state) -> Scene:
        raise NotImplementedError

    def _update_scene(self, scene: Scene, state) -> Scene:
        """Move the actors for a new state; default rebuilds from scratch."""
        return self._build_scene(state)

    # --- lifecycle ----------------------------------------------------------

    @property
    def state(self):
        return self._state

    @property
    def scene(self) -> Optional[Scene]:
        return self._scene

    def reset(self, seed: int) -> ObsStack:
        rng = SplitMix64(seed)
        self._state = self._init_state(rng)
        self._scene = self._build_scene(self._state)
        frame = self._render_frame()
        self._stack = ObsStack((frame,) * self.spec.depth)
        self._done = False
        self._ready = True
        return self._stack

    def step(self, action: int) -> StepResult:
        if not self._ready:
            raise NotResetError("reset the environment before stepping")
        if self._done:
            raise SteppedAfterDoneError("episode finished; reset first")
        n = self.action_space.n
        if not isinstance(action, (int, np.integer)) or not (0 <= action < n):
            raise InvalidActionError(f"action {action!r} not in [0, {n})")

        self._state = self._advance(self._state, int(action))
        reward, done, reason = self._judge(self._state)
        self._scene = self._update_scene(self._scene, self._state)
        frame = self._render_frame()
        self._stack = self._stack.push(frame)
        self._done = done
        return StepResult(obs=self._stack, reward=float(reward), done=done,
                          reason=reason, step_index=self._state.t)

    def _render_frame(self) -> GrayFrame:
        t0 = time.perf_counter()
        frame = to_grayscale(render(self._scene))
        self.last_render_s = time.perf_counter() - t0
        return frame
