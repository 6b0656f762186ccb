from pathlib import Path

import pytest
from qgcontract.prog import (  # type: ignore
    ConfigManager,
    EmitConfig,
    GeneralConfig,
    ModelConfig,
    RewriteConfig,
    VerifyConfig,
)


# Tests for GeneralConfig
@pytest.mark.parametrize(
    "property_name, valid_value, invalid_value, expected_exception",
    [
        ("verbosity", 2, "high", TypeError),
        ("verbosity", 2, 4, ValueError),
        ("print_config", True, "yes", TypeError),
        ("parallel", 4, 0, ValueError),
        ("parallel", 4, "four", TypeError),
    ],
)
def test_general_config_property_setters(
    property_name, valid_value, invalid_value, expected_exception
):
    config = GeneralConfig()

    # Test valid value
    setattr(config, property_name, valid_value)
    assert getattr(config, property_name) == valid_value

    # Test invalid value
    with pytest.raises(expected_exception):
        setattr(config, property_name, invalid_value)


@pytest.mark.parametrize(
    "property_name, initial_value",
    [
        ("verbosity", 1),
        ("print_config", False),
        ("parallel", 1),
    ],
)
def test_general_config_default_values(property_name, initial_value):
    config = GeneralConfig()
    assert getattr(config, property_name) == initial_value


# Tests for ModelConfig
@pytest.mark.parametrize(
    "property_name, valid_value, invalid_value, expected_exception",
    [
        ("n", 4, 0, ValueError),
        ("n", 4, "two", TypeError),
        ("n", 4, True, TypeError),
        ("m", 2, 3, ValueError),
        ("m", 2, 2.0, TypeError),
        ("trunc", 8, 1, ValueError),
        ("trunc", 8, "6", TypeError),
    ],
)
def test_model_config_property_setters(
    property_name, valid_value, invalid_value, expected_exception
):
    config = ModelConfig()

    setattr(config, property_name, valid_value)
    assert getattr(config, property_name) == valid_value

    with pytest.raises(expected_exception):
        setattr(config, property_name, invalid_value)


@pytest.mark.parametrize(
    "property_name, initial_value",
    [
        ("n", 2),
        ("m", 1),
        ("trunc", 6),
    ],
)
def test_model_config_default_values(property_name, initial_value):
    config = ModelConfig()
    assert getattr(config, property_name) == initial_value


def test_model_config_small_truncation_warns():
    config = ModelConfig()
    config.trunc = 3
    with pytest.warns(UserWarning):
        config.check_config(verbosity=1)


# Tests for EmitConfig
@pytest.mark.parametrize(
    "property_name, valid_value, invalid_value, expected_exception",
    [
        ("matrix", "c_q", "r_x", ValueError),
        ("matrix", "cgc-h", 3, TypeError),
        ("format", "latex", "xml", ValueError),
        ("format", "latex", None, TypeError),
    ],
)
def test_emit_config_property_setters(
    property_name, valid_value, invalid_value, expected_exception
):
    config = EmitConfig()

    setattr(config, property_name, valid_value)
    assert getattr(config, property_name) == valid_value

    with pytest.raises(expected_exception):
        setattr(config, property_name, invalid_value)


def test_emit_config_out_path(tmp_path):
    config = EmitConfig()
    assert config.out is None
    config.out = tmp_path / "r.json"
    assert config.out == (tmp_path / "r.json").resolve()
    config.out = str(tmp_path / "r.tex")
    assert isinstance(config.out, Path)
    with pytest.raises(TypeError):
        config.out = 5


@pytest.mark.parametrize(
    "property_name, initial_value",
    [
        ("matrix", "r_h"),
        ("format", "json"),
        ("out", None),
    ],
)
def test_emit_config_default_values(property_name, initial_value):
    config = EmitConfig()
    assert getattr(config, property_name) == initial_value


# Tests for VerifyConfig
@pytest.mark.parametrize(
    "property_name, valid_value, invalid_value, expected_exception",
    [
        ("suite", "ybe", "ybe2", ValueError),
        ("suite", "coupled", 1, TypeError),
        ("negative_controls", False, "no", TypeError),
    ],
)
def test_verify_config_property_setters(
    property_name, valid_value, invalid_value, expected_exception
):
    config = VerifyConfig()

    setattr(config, property_name, valid_value)
    assert getattr(config, property_name) == valid_value

    with pytest.raises(expected_exception):
        setattr(config, property_name, invalid_value)


@pytest.mark.parametrize(
    "value, expected",
    [
        ("1,2", (1, 2)),
        ([3, 4], (3, 4)),
        ((1, 16), (1, 16)),
        (None, None),
    ],
)
def test_verify_config_perturb(value, expected):
    config = VerifyConfig()
    config.perturb = value
    assert config.perturb == expected


@pytest.mark.parametrize(
    "value, expected_exception",
    [
        ("1;2", ValueError),
        ("1,2,3", ValueError),
        ("0,2", ValueError),
        ([1, "2"], TypeError),
        (12, TypeError),
    ],
)
def test_verify_config_perturb_invalid(value, expected_exception):
    config = VerifyConfig()
    with pytest.raises(expected_exception):
        config.perturb = value


@pytest.mark.parametrize(
    "property_name, initial_value",
    [
        ("suite", "all"),
        ("out", None),
        ("perturb", None),
        ("negative_controls", True),
    ],
)
def test_verify_config_default_values(property_name, initial_value):
    config = VerifyConfig()
    assert getattr(config, property_name) == initial_value


# Tests for RewriteConfig
@pytest.mark.parametrize(
    "property_name, valid_value, invalid_value, expected_exception",
    [
        ("max_degree", 10, 2, ValueError),
        ("max_degree", 10, "8", TypeError),
        ("confluence_degree", 4, 2, ValueError),
        ("confluence_degree", 4, 3.0, TypeError),
    ],
)
def test_rewrite_config_property_setters(
    property_name, valid_value, invalid_value, expected_exception
):
    config = RewriteConfig()

    setattr(config, property_name, valid_value)
    assert getattr(config, property_name) == valid_value

    with pytest.raises(expected_exception):
        setattr(config, property_name, invalid_value)


def test_rewrite_config_degrees_must_be_ordered():
    config = RewriteConfig()
    config.max_degree = 4
    config.confluence_degree = 5
    with pytest.raises(ValueError):
        config.check_config()


# Tests for the cross-section checks
@pytest.mark.parametrize(
    "command, section, values, n",
    [
        ("emit", "emit", {"matrix": "c_h"}, 3),
        ("emit", "emit", {"matrix": "rtilde_h"}, 5),
        ("emit", "emit", {"matrix": "r_h"}, 1),
        ("emit", "emit", {"matrix": "cgc-h"}, 4),
        ("verify", "verify", {"suite": "coupled"}, 3),
        ("verify", "verify", {"suite": "ybe"}, 1),
        ("verify", "verify", {"suite": "ybe", "perturb": "1,17"}, 4),
    ],
)
def test_check_config_rejects(command, section, values, n):
    config = ConfigManager()
    config.model.n = n
    for key, value in values.items():
        setattr(getattr(config, section), key, value)
    with pytest.raises(ValueError):
        config.check_config(verbosity=0, command=command)


def test_check_config_parity_message():
    config = ConfigManager()
    config.model.n = 3
    config.emit.matrix = "c_h"
    with pytest.raises(ValueError, match="no contraction limit: n must be even"):
        config.check_config(verbosity=0, command="emit")


@pytest.mark.parametrize(
    "command, values, n",
    [
        ("emit", {"matrix": "c_h"}, 1),
        ("emit", {"matrix": "c_h"}, 4),
        ("emit", {"matrix": "r_q"}, 3),
        ("verify", {"suite": "ybe"}, 4),
        ("verify", {"suite": "all"}, 2),
    ],
)
def test_check_config_accepts(command, values, n):
    config = ConfigManager()
    config.model.n = n
    for key, value in values.items():
        setattr(getattr(config, command), key, value)
    config.check_config(verbosity=0, command=command)
