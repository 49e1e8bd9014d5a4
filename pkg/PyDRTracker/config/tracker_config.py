# PyDRTracker/config/tracker_config.py

import os
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..exceptions import ConfigError

CN_TABLE_ENV = "DRTRACK_CN_TABLE"


class TrackerConfig(BaseModel):
    """
    Every tunable parameter of the tracker and the evaluation harness.

    Instances are immutable; use `with_overrides` to derive variants.

    Example:
        >>> config = TrackerConfig(theta=8.0)
        >>> config.with_overrides(no_dr=True).no_dr
        True
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    # Filter training
    theta: float = Field(12.0, ge=0)
    mu: float = Field(0.25, ge=0, le=1)
    num_distractors: int = Field(30, ge=0)
    gamma0: float = Field(1.0, gt=0)
    beta: float = Field(10.0, gt=1)
    gamma_max: float = Field(10000.0, gt=0)
    admm_iterations: int = Field(4, ge=1)
    weight_min: float = Field(1e-3, gt=0)
    weight_amp: float = Field(0.1, ge=0)
    weight_max: float = Field(1e5, gt=0)
    weight_profile: Literal["box", "quadratic"] = "box"

    # Geometry and features
    cell_size: int = Field(4, ge=1)
    search_factor: float = Field(5.0, gt=1)
    sigma_factor: float = Field(1.0 / 16.0, gt=0)
    min_search_area: float = Field(150.0**2, gt=0)
    max_search_area: float = Field(200.0**2, gt=0)
    use_gray: bool = True
    use_hog: bool = True
    use_cn: bool = True
    cn_table_path: Optional[str] = None
    subpixel_peak: bool = False

    # Scale filter
    num_scales: int = Field(33, ge=1)
    scale_step: float = Field(1.02, gt=1)
    scale_sigma_factor: float = Field(0.25, gt=0)
    scale_learning_rate: float = Field(0.025, gt=0, le=1)
    scale_lambda: float = Field(1e-2, gt=0)
    scale_model_max_area: float = Field(512.0, gt=0)

    # Ablation toggles
    no_dr: bool = False
    no_ma: bool = False

    # Evaluation
    precision_strict: bool = False
    success_strict: bool = True
    img_subdir: str = "img"
    groundtruth_name: str = "groundtruth_rect.txt"
    check_symmetry: bool = True

    @field_validator("num_scales")
    @classmethod
    def _odd_scales(cls, value: int) -> int:
        if value % 2 == 0:
            raise ValueError(f"num_scales must be odd, got {value}")
        return value

    @model_validator(mode="after")
    def _consistent(self) -> "TrackerConfig":
        if self.gamma_max < self.gamma0:
            raise ValueError(f"gamma_max ({self.gamma_max}) must be at least gamma0 ({self.gamma0})")
        if self.weight_max < self.weight_min:
            raise ValueError(f"weight_max ({self.weight_max}) must be at least weight_min ({self.weight_min})")
        if self.max_search_area < self.min_search_area:
            raise ValueError(
                f"max_search_area ({self.max_search_area}) must be at least min_search_area ({self.min_search_area})"
            )
        if not (self.use_gray or self.use_hog or self.use_cn):
            raise ValueError("at least one of use_gray, use_hog, use_cn must be enabled")
        return self

    @classmethod
    def create(cls, **values: Any) -> "TrackerConfig":
        """
        Construct a config, reporting validation failures as ConfigError.

        Raises:
            ConfigError: If a value is out of range or a key is unknown.
        """
        try:
            return cls(**values)
        except ValidationError as exc:
            raise ConfigError(f"Invalid tracker configuration: {exc}") from exc

    @classmethod
    def baseline(cls) -> "TrackerConfig":
        """Configuration with distractor repression and motion-aware search both off."""
        return cls(no_dr=True, no_ma=True)

    def with_overrides(self, **overrides: Any) -> "TrackerConfig":
        """Return a validated copy with the given fields replaced; None values are ignored."""
        values = self.model_dump()
        values.update({key: value for key, value in overrides.items() if value is not None})
        return type(self).create(**values)

    def resolved_cn_table_path(self) -> Optional[str]:
        """Color-names table path; the DRTRACK_CN_TABLE environment variable wins."""
        return os.environ.get(CN_TABLE_ENV) or self.cn_table_path


def load_config(path: Union[str, Path, None]) -> TrackerConfig:
    """
    Read a flat YAML `key: value` file into a TrackerConfig.

    Args:
        path: Config file path; None returns the defaults.

    Raises:
        ConfigError: If the file is missing, not a flat mapping, or holds
            unknown keys or invalid values.
    """
    if path is None:
        return TrackerConfig()
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"Config file not found: {path}")
    try:
        values = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ConfigError(f"Config file {path} is not valid YAML: {exc}") from exc
    if values is None:
        values = {}
    if not isinstance(values, dict):
        raise ConfigError(f"Config file {path} must contain a key: value mapping.")
    nested = [key for key, value in values.items() if isinstance(value, (dict, list))]
    if nested:
        raise ConfigError(f"Config file {path} must be flat; nested values for: {', '.join(map(str, nested))}")
    return TrackerConfig.create(**values)


def save_config(config: TrackerConfig, path: Union[str, Path]) -> None:
    """Write every field, defaults included, sorted by key."""
    dumped: Dict[str, Any] = config.model_dump()
    Path(path).write_text(
        "# PyDRTracker configuration\n" + yaml.safe_dump(dumped, sort_keys=True, default_flow_style=False),
        encoding="utf-8",
    )
