import pytest
import yaml

from PyDRTracker.config.tracker_config import CN_TABLE_ENV, TrackerConfig, load_config, save_config
from PyDRTracker.exceptions import ConfigError


def test_defaults():
    """Test the published default parameters."""
    config = TrackerConfig()
    assert config.theta == 12.0
    assert config.mu == 0.25
    assert config.num_distractors == 30
    assert (config.gamma0, config.beta, config.gamma_max, config.admm_iterations) == (1.0, 10.0, 10000.0, 4)
    assert config.cell_size == 4
    assert config.sigma_factor == pytest.approx(1 / 16)
    assert not config.no_dr and not config.no_ma
    assert config.weight_profile == "box"
    assert (config.weight_min, config.weight_max) == (1e-3, 1e5)


def test_baseline_switches_both_components_off():
    """Test the baseline configuration toggles."""
    baseline = TrackerConfig.baseline()
    assert baseline.no_dr and baseline.no_ma


@pytest.mark.parametrize(
    "overrides",
    [{"mu": 1.5}, {"beta": 1.0}, {"num_scales": 4}, {"admm_iterations": 0}, {"unknown_key": 1}, {"gamma_max": 0.5}, {"weight_max": 1e-4}, {"weight_profile": "gaussian"}],
)
def test_invalid_values_raise_config_error(overrides):
    """Test range checks and unknown-key rejection."""
    with pytest.raises(ConfigError, match="Invalid tracker configuration"):
        TrackerConfig.create(**overrides)


def test_with_overrides_ignores_none():
    """Test that None overrides keep the current value."""
    config = TrackerConfig(theta=8.0)
    assert config.with_overrides(theta=None, no_dr=True).theta == 8.0
    assert config.with_overrides(no_dr=True).no_dr


def test_config_is_frozen():
    """Test that configs cannot be mutated in place."""
    with pytest.raises(Exception):
        TrackerConfig().theta = 3.0


def test_load_and_save_round_trip(tmp_path):
    """Test that saving a loaded file materializes every field and reloads identically."""
    source = tmp_path / "config.yaml"
    source.write_text("# experiment\ntheta: 8\nno_dr: true\n", encoding="utf-8")
    config = load_config(source)
    assert config.theta == 8.0 and config.no_dr

    target = tmp_path / "saved.yaml"
    save_config(config, target)
    assert set(yaml.safe_load(target.read_text(encoding="utf-8"))) == set(TrackerConfig.model_fields)
    assert load_config(target) == config


def test_load_config_errors(tmp_path):
    """Test missing, nested and non-mapping files."""
    with pytest.raises(ConfigError, match="not found"):
        load_config(tmp_path / "missing.yaml")
    nested = tmp_path / "nested.yaml"
    nested.write_text("theta:\n  value: 3\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="flat"):
        load_config(nested)
    scalar = tmp_path / "scalar.yaml"
    scalar.write_text("12\n", encoding="utf-8")
    with pytest.raises(ConfigError, match="mapping"):
        load_config(scalar)
    assert load_config(None) == TrackerConfig()


def test_cn_table_environment_override(monkeypatch):
    """Test that the environment variable wins over the config value."""
    config = TrackerConfig(cn_table_path="from_config.txt")
    monkeypatch.delenv(CN_TABLE_ENV, raising=False)
    assert config.resolved_cn_table_path() == "from_config.txt"
    monkeypatch.setenv(CN_TABLE_ENV, "from_env.txt")
    assert config.resolved_cn_table_path() == "from_env.txt"
