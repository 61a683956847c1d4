"""Unit tests for environment configuration, grid expansion and the grid catalog."""

from pathlib import Path

import pytest

from src.config import (
    EngineConfig,
    GridCatalog,
    SystemConfig,
    expand_grid,
    get_config,
    load_config,
    read_grid_file,
    reset_config,
)
from src.errors import ConfigError
from src.models.pvalues import MarginalModelKind, PValueKind

GRIDS_DIR = Path(__file__).parent.parent.parent / "grids"


def test_engine_config_from_env(monkeypatch):
    monkeypatch.setenv("RANDREP_WORKERS", "3")
    monkeypatch.setenv("RANDREP_SEED", "99")
    monkeypatch.setenv("RANDREP_LOG_LEVEL", "debug")
    config = SystemConfig.from_env()
    assert config.engine.workers == 3
    assert config.engine.seed == 99
    assert config.engine.chunk_size == 250
    assert config.logging.level == "DEBUG"


def test_engine_config_rejects_bad_values(monkeypatch):
    monkeypatch.setenv("RANDREP_WORKERS", "many")
    with pytest.raises(ConfigError):
        SystemConfig.from_env()
    monkeypatch.setenv("RANDREP_WORKERS", "0")
    with pytest.raises(ConfigError):
        SystemConfig.from_env()


def test_config_is_cached(monkeypatch):
    monkeypatch.setenv("RANDREP_REPS", "77")
    first = load_config()
    monkeypatch.setenv("RANDREP_REPS", "88")
    assert get_config() is first
    assert get_config().engine.reps == 77
    reset_config()
    assert get_config().engine.reps == 88


def test_expand_grid_product_order():
    settings = expand_grid({
        "m": 100,
        "gamma": [2, 4],
        "pi0": "0.6, 0.7",
        "mu_pairs": [[0, 2], [-1, 4]],
        "pvalue_kinds": "lfc, stouffer",
    }, EngineConfig(seed=5, reps=10))
    assert len(settings) == 8
    first, last = settings[0], settings[-1]
    assert (first.gamma, first.pi0, first.mu_min, first.mu_max) == (2, 0.6, 0.0, 2.0)
    assert (last.gamma, last.pi0, last.mu_min, last.mu_max) == (4, 0.7, -1.0, 4.0)
    assert settings[1].mu_min == -1.0
    assert all(s.seed == 5 and s.reps == 10 for s in settings)
    assert first.pvalue_kinds == (PValueKind.LFC, PValueKind.STOUFFER)


def test_expand_grid_scalars_and_aliases():
    (setting,) = expand_grid({"m": 10, "pi0": 0.5, "lambda": 0.25, "model": "T",
                              "observations": "yes", "mu_pairs": "-1:3", "seed": 4})
    assert setting.lambda_ == 0.25
    assert setting.model is MarginalModelKind.T_UNKNOWN_VARIANCE
    assert setting.observations is True
    assert (setting.mu_min, setting.mu_max) == (-1.0, 3.0)
    assert setting.seed == 4


@pytest.mark.parametrize("entries", [
    {"colour": "red"},
    {"mu_pairs": [[0, 2]], "mu_min": -1},
    {"gamma": "2,,4"},
    {"gamma": 2.5},
    {"pvalue_kinds": "lfc, bonferroni"},
    {"model": "chi"},
    {"m": 10, "pi0": 0.75},
])
def test_expand_grid_errors(entries):
    with pytest.raises(ConfigError):
        expand_grid(entries)


def test_read_grid_file(tmp_path):
    path = tmp_path / "tiny.yaml"
    path.write_text("description: two cells\ngamma: [2, 3]\ns: 3\nm: 10\npi0: 0.5\n")
    grid = read_grid_file(path)
    assert grid.name == "tiny"
    assert grid.description == "two cells"
    assert len(grid.settings()) == 2

    bad = tmp_path / "bad.yaml"
    bad.write_text("gamma: 2\nflavour: sweet\n")
    with pytest.raises(ConfigError):
        read_grid_file(bad)
    with pytest.raises(FileNotFoundError):
        read_grid_file(tmp_path / "missing.yaml")


FLAT_GRID = """\
# spot cells, flat format
name = spot
m = 100
s = 10
gamma = 2, 6
pi0 = 0.6
mu_pairs = 0:2, -1.5:5
pvalue_kinds = lfc, rand
seed = 5
observations = false
"""


def test_read_flat_grid_file(tmp_path):
    for filename in ("tables.cfg", "tables.txt"):
        path = tmp_path / filename
        path.write_text(FLAT_GRID)
        grid = read_grid_file(path)
        assert grid.name == "spot"
        settings = grid.settings()
        assert [(s.gamma, s.mu_min, s.mu_max) for s in settings] == [
            (2, 0.0, 2.0), (2, -1.5, 5.0), (6, 0.0, 2.0), (6, -1.5, 5.0),
        ]
        assert {s.seed for s in settings} == {5}
        assert settings[0].pvalue_kinds == (PValueKind.LFC, PValueKind.RAND)


@pytest.mark.parametrize("text", [
    "gamma = 2\nflavour = sweet\n",
    "gamma = 2\ngamma = 3\n",
    "gamma =\n",
    "gamma = 2\nthis line has no separator\n",
])
def test_flat_grid_file_errors(tmp_path, text):
    path = tmp_path / "bad.cfg"
    path.write_text(text)
    with pytest.raises(ConfigError):
        read_grid_file(path)


def test_malformed_yaml_is_a_config_error(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("gamma: [2, 6\n")
    with pytest.raises(ConfigError, match="invalid YAML"):
        read_grid_file(path)


def test_catalog_skips_broken_files(tmp_path, caplog):
    (tmp_path / "good.yaml").write_text("name: good\nm: 10\npi0: 0.5\n")
    (tmp_path / "broken.yaml").write_text("gamma: [2, 6\n")
    (tmp_path / "flat.cfg").write_text("name = flat\nm = 10\n")
    with caplog.at_level("ERROR", logger="src.config.grid_catalog"):
        catalog = GridCatalog(str(tmp_path))
    assert catalog.list_grids() == ["flat", "good"]
    assert "broken.yaml" in caplog.text


def test_shipped_catalog():
    catalog = GridCatalog(str(GRIDS_DIR))
    assert set(catalog.list_grids()) >= {
        "table-means", "table-combiners", "ecdf-realization", "lambda-sweep", "acceptance-spot",
    }
    means = catalog.settings("table-means")
    assert len(means) == 80
    assert {s.m for s in means} == {100}
    assert len(catalog.settings("acceptance-spot")) == 12
    combiners = catalog.settings("table-combiners")
    assert combiners[0].pvalue_kinds == (PValueKind.STOUFFER, PValueKind.FISHER)
    (ecdf_setting,) = catalog.settings("ecdf-realization")
    assert (ecdf_setting.m, ecdf_setting.mu_min, ecdf_setting.mu_max) == (500, -2.5, 1.5)


def test_catalog_resolve(tmp_path):
    catalog = GridCatalog(str(GRIDS_DIR))
    with pytest.raises(ConfigError):
        catalog.resolve("no-such-grid")
    path = tmp_path / "own.yaml"
    path.write_text("name: own\nm: 10\npi0: 0.5\n")
    assert catalog.resolve(str(path)).name == "own"
    assert GridCatalog(str(tmp_path / "absent")).list_grids() == []
