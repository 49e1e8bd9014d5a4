# PyDRTracker/data/synthetic.py

from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Iterator, List, Tuple, Union

import numpy as np
from scipy import ndimage

from ..core.bbox import BBox
from ..core.image import Image
from ..imaging.image_io import save_image

Point = Tuple[float, float]
Placement = Tuple[Point, Tuple[float, float]]

EDGE_SOFTNESS = 6.0


@dataclass(frozen=True)
class TexturePattern:
    """Seeded sum of oriented sinusoids defining a target's appearance in box coordinates."""

    frequencies: np.ndarray
    phases: np.ndarray
    amplitudes: np.ndarray

    @classmethod
    def random(cls, rng: np.random.Generator, components: int = 4) -> "TexturePattern":
        return cls(
            frequencies=rng.uniform(0.8, 3.0, size=(components, 2)) * rng.choice([-1.0, 1.0], size=(components, 2)),
            phases=rng.uniform(0.0, 2.0 * np.pi, size=(components, 3)),
            amplitudes=rng.uniform(0.5, 1.0, size=components),
        )

    def render(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """RGB texture in [28, 228] at box coordinates u, v in [-1, 1]."""
        arg = np.pi * (self.frequencies[:, 0, None, None] * u + self.frequencies[:, 1, None, None] * v)
        waves = self.amplitudes[:, None, None, None] * np.sin(arg[..., None] + self.phases[:, None, None, :])
        return 128.0 + 100.0 * np.tanh(waves.sum(axis=0))


@dataclass
class SyntheticSequence:
    """
    Deterministic rendered sequence.

    placements[t] lists (center, size) of every object in frame t; the first
    object is the target and defines the groundtruth.
    """

    name: str
    frame_size: Tuple[int, int]
    background: np.ndarray
    pattern: TexturePattern
    placements: List[List[Placement]]
    attributes: FrozenSet[str] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.placements)

    @property
    def groundtruth(self) -> List[BBox]:
        return [BBox.from_center(objects[0][0], objects[0][1]) for objects in self.placements]

    def frame(self, index: int) -> Image:
        canvas = self.background.copy()
        height, width = canvas.shape[:2]
        for (cx, cy), (w, h) in self.placements[index]:
            x0, x1 = max(0, int(np.floor(cx - w / 2))), min(width, int(np.ceil(cx + w / 2)))
            y0, y1 = max(0, int(np.floor(cy - h / 2))), min(height, int(np.ceil(cy + h / 2)))
            if x0 >= x1 or y0 >= y1:
                continue
            u = (np.arange(x0, x1) + 0.5 - cx) / (w / 2.0)
            v = (np.arange(y0, y1) + 0.5 - cy) / (h / 2.0)
            grid_u, grid_v = np.meshgrid(u, v)
            alpha = np.clip((1.0 - np.maximum(np.abs(grid_u), np.abs(grid_v))) * EDGE_SOFTNESS, 0.0, 1.0)[..., None]
            region = canvas[y0:y1, x0:x1]
            canvas[y0:y1, x0:x1] = region * (1.0 - alpha) + self.pattern.render(grid_u, grid_v) * alpha
        return Image(np.clip(np.rint(canvas), 0, 255).astype(np.uint8))

    def load_frame(self, index: int) -> Image:
        return self.frame(index)

    def __iter__(self) -> Iterator[Image]:
        return (self.frame(index) for index in range(len(self)))

    def write(self, directory: Union[str, Path], img_subdir: str = "img", groundtruth_name: str = "groundtruth_rect.txt") -> Path:
        """Write frames as PNG plus a groundtruth file (and attributes.txt when tagged)."""
        directory = Path(directory)
        image_dir = directory / img_subdir
        image_dir.mkdir(parents=True, exist_ok=True)
        for index, frame in enumerate(self, start=1):
            save_image(frame, image_dir / f"{index:04d}.png")
        lines = [box.to_line() for box in self.groundtruth]
        (directory / groundtruth_name).write_text("\n".join(lines) + "\n", encoding="utf-8")
        if self.attributes:
            (directory / "attributes.txt").write_text(",".join(sorted(self.attributes)) + "\n", encoding="utf-8")
        return directory


def _background(frame_size: Tuple[int, int], rng: np.random.Generator) -> np.ndarray:
    width, height = frame_size
    coarse = rng.uniform(70.0, 130.0, size=(height // 16 + 2, width // 16 + 2, 3))
    smooth = ndimage.zoom(coarse, (16, 16, 1), order=1)[:height, :width]
    return smooth + rng.normal(0.0, 3.0, size=(height, width, 3))


def _sequence(name, frame_size, placements, seed, attributes=()) -> SyntheticSequence:
    rng = np.random.default_rng(seed)
    background = _background(frame_size, rng)
    return SyntheticSequence(
        name=name,
        frame_size=frame_size,
        background=background,
        pattern=TexturePattern.random(rng),
        placements=placements,
        attributes=frozenset(attributes),
    )


def static_sequence(
    num_frames: int = 20,
    frame_size: Tuple[int, int] = (160, 120),
    target_size: Tuple[float, float] = (32, 32),
    seed: int = 0,
    name: str = "static",
) -> SyntheticSequence:
    """Target fixed at the frame center."""
    center = (frame_size[0] / 2.0, frame_size[1] / 2.0)
    return _sequence(name, frame_size, [[(center, target_size)] for _ in range(num_frames)], seed)


def translating_sequence(
    num_frames: int = 30,
    frame_size: Tuple[int, int] = (240, 180),
    target_size: Tuple[float, float] = (32, 32),
    velocity: Point = (2.0, 1.0),
    start: Point = (60.0, 60.0),
    seed: int = 1,
    name: str = "translating",
) -> SyntheticSequence:
    """Target moving at constant velocity."""
    placements = [
        [((start[0] + t * velocity[0], start[1] + t * velocity[1]), target_size)]
        for t in range(num_frames)
    ]
    return _sequence(name, frame_size, placements, seed, attributes=("FM",) if max(map(abs, velocity)) > 20 else ())


def zooming_sequence(
    num_frames: int = 50,
    frame_size: Tuple[int, int] = (240, 180),
    target_size: Tuple[float, float] = (32, 32),
    growth_per_10_frames: float = 1.1,
    seed: int = 2,
    name: str = "zooming",
) -> SyntheticSequence:
    """Target fixed at the frame center, growing geometrically."""
    center = (frame_size[0] / 2.0, frame_size[1] / 2.0)
    placements = []
    for t in range(num_frames):
        factor = growth_per_10_frames ** (t / 10.0)
        placements.append([(center, (target_size[0] * factor, target_size[1] * factor))])
    return _sequence(name, frame_size, placements, seed, attributes=("SV",))


def distractor_sequence(
    num_frames: int = 30,
    frame_size: Tuple[int, int] = (240, 160),
    target_size: Tuple[float, float] = (32, 32),
    separation: float = 40.0,
    velocity: Point = (1.0, 0.5),
    start: Point = (80.0, 70.0),
    seed: int = 3,
    name: str = "distractor",
) -> SyntheticSequence:
    """Target and an identical blob `separation` pixels to its right, moving together."""
    placements = []
    for t in range(num_frames):
        cx, cy = start[0] + t * velocity[0], start[1] + t * velocity[1]
        placements.append([((cx, cy), target_size), ((cx + separation, cy), target_size)])
    return _sequence(name, frame_size, placements, seed, attributes=("SOB",))


def accelerating_sequence(
    num_frames: int = 12,
    frame_size: Tuple[int, int] = (900, 160),
    target_size: Tuple[float, float] = (32, 32),
    acceleration: Point = (12.0, 0.0),
    start: Point = (40.0, 80.0),
    seed: int = 4,
    name: str = "accelerating",
) -> SyntheticSequence:
    """
    Target starting at rest and speeding up by `acceleration` px per frame each frame.

    Frame t is displaced by acceleration * t from frame t - 1, so a
    constant-velocity prediction misses by exactly one acceleration step
    while a search centered on the last position falls further behind.
    """
    placements = []
    for t in range(num_frames):
        travelled = 0.5 * t * (t + 1)
        placements.append([((start[0] + travelled * acceleration[0], start[1] + travelled * acceleration[1]), target_size)])
    return _sequence(name, frame_size, placements, seed, attributes=("FM",))
