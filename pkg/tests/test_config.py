import json

import pytest

from ghzcc.config import ConfigManager, ConfigurationError, GridSpec, get_config
from ghzcc.config.config_manager import CONFIG_FILE


def test_defaults_load():
    config = get_config()
    assert config.limits.witness_cap == 1024
    assert config.limits.search_max_n == 6
    assert config.output.default_format == "pretty"
    assert config.tolerances.sigma_bound == 4.0


@pytest.mark.parametrize(
    "spec,values",
    [
        ("0:1:11", [i / 10 for i in range(11)]),
        ("0.5:0.5:1", [0.5]),
        ("0.2:0.4:3", [0.2, 0.3, 0.4]),
    ],
)
def test_parse_grid(spec, values):
    grid = ConfigManager.parse_grid(spec)
    assert grid.values() == pytest.approx(values)
    assert len(grid.values()) == grid.steps


def test_grid_endpoints_are_exact():
    values = GridSpec(0.0, 1.0, 11).values()
    assert values[0] == 0.0
    assert values[5] == 0.5
    assert values[-1] == 1.0


@pytest.mark.parametrize(
    "spec", ["", "0:1", "a:1:3", "0:1:0", "1:0:3", "0:1:1", "0:2:3", "-0.1:0.5:3"]
)
def test_bad_grids(spec):
    with pytest.raises(ConfigurationError):
        ConfigManager.parse_grid(spec)


def test_build_run_config_defaults():
    run = get_config().build_run_config("quantum", n=3, p=0.5)
    assert run.shots == 0
    assert run.seed == 0
    assert run.output_format == "pretty"
    assert run.threads >= 1


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 1},
        {"n": 17},
        {"p": 1.5},
        {"shots": -1},
        {"seed": -1},
        {"seed": 2**64},
        {"output_format": "xml"},
        {"threads": 0},
        {"n": 7, "n_range": (2, 6)},
    ],
)
def test_build_run_config_rejects(kwargs):
    with pytest.raises(ConfigurationError):
        get_config().build_run_config("test", **kwargs)


def test_custom_config_file(tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    data = json.loads(CONFIG_FILE.read_text(encoding="utf-8"))
    data["limits"]["witness_cap"] = 7
    path.write_text(json.dumps(data), encoding="utf-8")
    monkeypatch.setenv("GHZCC_THREADS", "3")

    manager = ConfigManager(path)
    assert manager.limits.witness_cap == 7
    assert manager.config.threads == 3


@pytest.mark.parametrize(
    "content",
    ["{not json", json.dumps({"limits": {"bogus": 1}}), json.dumps({"limits": {"witness_cap": 0}})],
)
def test_invalid_config_files(tmp_path, content):
    path = tmp_path / "config.json"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ConfigurationError):
        ConfigManager(path)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigurationError):
        ConfigManager(tmp_path / "absent.json")
