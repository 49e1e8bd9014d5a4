# PyDRTracker/data/sequence_loader.py

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, List, Optional, Union

from ..core.bbox import BBox
from ..core.image import Image
from ..exceptions import SequenceFormatError
from ..imaging.image_io import load_image

logger = logging.getLogger(__name__)

IMAGE_SUFFIXES = {".jpg", ".jpeg", ".png", ".bmp"}
ATTRIBUTES_NAME = "attributes.txt"
_SEPARATORS = re.compile(r"[,\t ]+")


@dataclass
class Sequence:
    """
    A benchmark sequence on disk.

    Attributes:
        name (str): Directory name.
        frame_paths (List[Path]): Frames in lexicographic order.
        groundtruth (List[Optional[BBox]]): One entry per frame; None marks a
            missing annotation.
        attributes (FrozenSet[str]): Optional challenge tags.
    """

    name: str
    frame_paths: List[Path]
    groundtruth: List[Optional[BBox]]
    attributes: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.frame_paths) < 2:
            raise SequenceFormatError(f"Sequence '{self.name}' needs at least 2 frames, got {len(self.frame_paths)}.")
        if len(self.groundtruth) != len(self.frame_paths):
            raise SequenceFormatError(
                f"Sequence '{self.name}' has {len(self.frame_paths)} frames but {len(self.groundtruth)} groundtruth entries."
            )
        if self.groundtruth[0] is None:
            raise SequenceFormatError(f"Sequence '{self.name}' has no valid groundtruth box on its first frame.")

    def __len__(self) -> int:
        return len(self.frame_paths)

    def load_frame(self, index: int) -> Image:
        return load_image(self.frame_paths[index])


def parse_groundtruth_line(line: str, lineno: int, source: Union[str, Path] = "<groundtruth>") -> Optional[BBox]:
    """
    Parse one "x,y,w,h" line; commas, tabs and spaces all separate values.

    Returns:
        The box, or None for blank, NaN or non-positive annotations.

    Raises:
        SequenceFormatError: If the line does not hold four numbers.
    """
    text = line.strip()
    if not text:
        return None
    parts = [part for part in _SEPARATORS.split(text) if part]
    if len(parts) != 4:
        raise SequenceFormatError(f"{source}:{lineno}: expected 4 values, got {len(parts)} in '{text}'.")
    try:
        values = [float(part) for part in parts]
    except ValueError as exc:
        raise SequenceFormatError(f"{source}:{lineno}: cannot parse '{text}' as x,y,w,h.") from exc
    return BBox.parse(values)


def _read_attributes(directory: Path) -> FrozenSet[str]:
    path = directory / ATTRIBUTES_NAME
    if not path.is_file():
        return frozenset()
    tags = re.split(r"[,\n]+", path.read_text(encoding="utf-8"))
    return frozenset(tag.strip() for tag in tags if tag.strip())


def load_sequence(
    directory: Union[str, Path],
    img_subdir: str = "img",
    groundtruth_name: str = "groundtruth_rect.txt",
) -> Sequence:
    """
    Load a sequence directory laid out as <dir>/<img_subdir>/* plus a groundtruth file.

    Groundtruth shorter than the frame list is padded with missing entries and
    longer groundtruth is truncated; both cases log a warning.

    Args:
        directory: Sequence directory.
        img_subdir: Name of the frame folder.
        groundtruth_name: Name of the groundtruth file.

    Returns:
        Sequence named after the directory.

    Raises:
        SequenceFormatError: If the folder, the groundtruth file or the frames
            are missing, or a groundtruth line cannot be parsed.

    Example:
        >>> seq = load_sequence("datasets/UAV123_10fps/bike1")
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise SequenceFormatError(f"Sequence directory not found: {directory}")
    image_dir = directory / img_subdir
    if not image_dir.is_dir():
        raise SequenceFormatError(f"Image folder not found: {image_dir}")
    gt_path = directory / groundtruth_name
    if not gt_path.is_file():
        raise SequenceFormatError(f"Groundtruth file not found: {gt_path}")

    frame_paths = sorted(p for p in image_dir.iterdir() if p.suffix.lower() in IMAGE_SUFFIXES)
    if not frame_paths:
        raise SequenceFormatError(f"No frames found in {image_dir}")

    lines = gt_path.read_text(encoding="utf-8").splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    groundtruth = [parse_groundtruth_line(line, lineno, gt_path) for lineno, line in enumerate(lines, start=1)]
    if len(groundtruth) != len(frame_paths):
        logger.warning(
            "Sequence %s: %d groundtruth lines for %d frames; %s",
            directory.name, len(groundtruth), len(frame_paths),
            "padding with missing entries" if len(groundtruth) < len(frame_paths) else "truncating",
        )
        groundtruth = (groundtruth + [None] * len(frame_paths))[: len(frame_paths)]

    return Sequence(
        name=directory.name,
        frame_paths=frame_paths,
        groundtruth=groundtruth,
        attributes=_read_attributes(directory),
    )


def list_sequences(dataset: Union[str, Path], img_subdir: str = "img") -> List[Path]:
    """
    Sequence directories of a dataset, sorted by name.

    Raises:
        SequenceFormatError: If the dataset directory is missing or holds no sequences.
    """
    dataset = Path(dataset)
    if not dataset.is_dir():
        raise SequenceFormatError(f"Dataset directory not found: {dataset}")
    found = sorted(p for p in dataset.iterdir() if (p / img_subdir).is_dir())
    if not found:
        raise SequenceFormatError(f"No sequence directories with an '{img_subdir}' folder in {dataset}")
    return found
