import pytest
from pathlib import Path
from qgcontract.prog import ConfigManager  # type: ignore


@pytest.fixture
def toml_file_path():
    testsdir = Path(__file__).resolve().parents[1]
    toml_file = testsdir / "fixtures/example_config.toml"
    return Path(toml_file).resolve()


@pytest.fixture
def config_manager(toml_file_path):
    # Ensure the TOML file exists before proceeding
    assert toml_file_path.exists(), f"TOML file not found at: {toml_file_path}"

    # Load the configuration from the TOML file
    return ConfigManager(config_file=toml_file_path)


def test_load_general_config(config_manager):
    assert config_manager.general.verbosity == 1
    assert config_manager.general.parallel == 1
    assert config_manager.general.print_config is False


def test_load_model_config(config_manager):
    assert config_manager.model.n == 2
    assert config_manager.model.m == 2
    assert config_manager.model.trunc == 5


def test_load_emit_config(config_manager):
    assert config_manager.emit.matrix == "c_h"
    assert config_manager.emit.format == "latex"
    assert config_manager.emit.out is None


def test_load_verify_config(config_manager):
    assert config_manager.verify.suite == "coupled"
    assert config_manager.verify.negative_controls is False
    assert config_manager.verify.perturb == (1, 4)


def test_load_rewrite_config(config_manager):
    assert config_manager.rewrite.max_degree == 6
    assert config_manager.rewrite.confluence_degree == 4


def test_identifiers(config_manager):
    assert sorted(config_manager.get_all_identifiers()) == [
        "emit",
        "general",
        "model",
        "rewrite",
        "verify",
    ]
    text = str(config_manager)
    assert "Model configuration:" in text
    assert "trunc:   5" in text


def test_unknown_section():
    config = ConfigManager()
    with pytest.raises(KeyError):
        config.load_from_dict({"fock": {"truncation": 5}})


def test_none_and_unknown_keys_are_skipped():
    config = ConfigManager()
    config.load_from_dict({"model": {"n": None, "colour": "red", "trunc": 7}})
    assert config.model.n == 2
    assert config.model.trunc == 7


def test_invalid_value_in_dict():
    config = ConfigManager()
    with pytest.raises(ValueError):
        config.load_from_dict({"verify": {"suite": "everything"}})


def test_load_from_env():
    config = ConfigManager()
    config.load_from_env({"QGC_MAX_DEGREE": "10"})
    assert config.rewrite.max_degree == 10
    config.load_from_env({"QGC_MAX_DEGREE": ""})
    assert config.rewrite.max_degree == 10
    config.load_from_env({})
    assert config.rewrite.max_degree == 10


@pytest.mark.parametrize("value", ["ten", "2"])
def test_load_from_env_invalid(value):
    config = ConfigManager()
    with pytest.raises(ValueError):
        config.load_from_env({"QGC_MAX_DEGREE": value})


def test_load_from_env_reads_environment(monkeypatch):
    monkeypatch.setenv("QGC_MAX_DEGREE", "9")
    config = ConfigManager()
    config.load_from_env()
    assert config.rewrite.max_degree == 9
