"""
Contains the configuration classes for the program.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Mapping
import multiprocessing as mp
import os
from pathlib import Path
import warnings

import toml

MATRICES = ("r_q", "r_h", "c_q", "c_h", "rtilde_h", "cgc-h")
FORMATS = ("json", "latex")
SUITES = (
    "ybe",
    "triangular",
    "hecke",
    "limit-equivalence",
    "c-parity",
    "boson-fock",
    "boson-abstract",
    "confluence",
    "covariance",
    "coupled",
    "all",
)
# suites working in the two-mode boson algebra
N2_SUITES = ("boson-fock", "boson-abstract", "confluence", "covariance", "coupled")
MAX_DEGREE_ENV = "QGC_MAX_DEGREE"


# abstract base class for configuration
class BaseConfig(ABC):
    """
    Abstract base class for configuration settings.
    """

    @abstractmethod
    def __init__(self):
        pass

    @abstractmethod
    def get_identifier(self) -> str:
        """
        Get the identifier of the configuration.
        """


class GeneralConfig(BaseConfig):
    """
    Configuration class for general settings.
    """

    def __init__(self: GeneralConfig) -> None:
        self._verbosity: int = 1
        self._parallel: int = 1
        self._print_config: bool = False

    def get_identifier(self) -> str:
        return "general"

    @property
    def verbosity(self):
        """
        Get the verbosity level.
        """
        return self._verbosity

    @verbosity.setter
    def verbosity(self, verbosity: int):
        """
        Set the verbosity level.
        """
        if not isinstance(verbosity, int):
            raise TypeError("Verbosity should be an integer.")
        if verbosity not in [-1, 0, 1, 2, 3]:
            raise ValueError("Verbosity can only be -1, 0, 1, 2, or 3.")
        self._verbosity = verbosity

    @property
    def parallel(self):
        """
        Get the number of parallel worker processes.
        """
        return self._parallel

    @parallel.setter
    def parallel(self, parallel: int):
        """
        Set the number of parallel worker processes.
        """
        if not isinstance(parallel, int):
            raise TypeError("Parallel should be an integer.")
        if parallel < 1:
            raise ValueError("Parallel should be greater than 0.")
        self._parallel = parallel

    @property
    def print_config(self):
        """
        Get the print config flag.
        """
        return self._print_config

    @print_config.setter
    def print_config(self, print_config: bool):
        """
        Set the print config flag.
        """
        if not isinstance(print_config, bool):
            raise TypeError("Print config should be a boolean.")
        self._print_config = print_config

    def check_config(self, verbosity: int = 1) -> None:
        if self.parallel > mp.cpu_count() and verbosity > -1:
            warnings.warn(
                f"Number of processes requested ({self.parallel}) is greater "
                + f"than the number of available cores ({mp.cpu_count()})."
            )


class ModelConfig(BaseConfig):
    """
    Configuration class for the model dimensions and the truncation degree.
    """

    def __init__(self: ModelConfig) -> None:
        self._n: int = 2
        self._m: int = 1
        self._trunc: int = 6

    def get_identifier(self) -> str:
        return "model"

    @property
    def n(self):
        """
        Get the dimension of the first factor.
        """
        return self._n

    @n.setter
    def n(self, n: int):
        """
        Set the dimension of the first factor.
        """
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("n should be an integer.")
        if n < 1:
            raise ValueError("n should be greater than 0.")
        self._n = n

    @property
    def m(self):
        """
        Get the dimension of the second factor.
        """
        return self._m

    @m.setter
    def m(self, m: int):
        """
        Set the dimension of the second factor.
        """
        if not isinstance(m, int) or isinstance(m, bool):
            raise TypeError("m should be an integer.")
        if m not in (1, 2):
            raise ValueError("m can only be 1 or 2.")
        self._m = m

    @property
    def trunc(self):
        """
        Get the truncation degree of the Fock representation.
        """
        return self._trunc

    @trunc.setter
    def trunc(self, trunc: int):
        """
        Set the truncation degree of the Fock representation.
        """
        if not isinstance(trunc, int) or isinstance(trunc, bool):
            raise TypeError("Truncation degree should be an integer.")
        if trunc < 2:
            raise ValueError("Truncation degree should be at least 2.")
        self._trunc = trunc

    def check_config(self, verbosity: int = 1) -> None:
        if self.trunc < 4 and verbosity > 0:
            warnings.warn(
                f"Truncation degree {self.trunc} leaves only states of degree "
                + f"<= {self.trunc - 2} for the relation checks."
            )


def _to_path(value: str | Path | None, name: str) -> Path | None:
    if value is None:
        return None
    if not isinstance(value, (str, Path)):
        raise TypeError(f"{name} should be a string or a Path.")
    return Path(value).resolve()


class EmitConfig(BaseConfig):
    """
    Configuration class for the emit command.
    """

    def __init__(self: EmitConfig) -> None:
        self._matrix: str = "r_h"
        self._format: str = "json"
        self._out: Path | None = None

    def get_identifier(self) -> str:
        return "emit"

    @property
    def matrix(self):
        """
        Get the name of the emitted object.
        """
        return self._matrix

    @matrix.setter
    def matrix(self, matrix: str):
        """
        Set the name of the emitted object.
        """
        if not isinstance(matrix, str):
            raise TypeError("Matrix name should be a string.")
        if matrix not in MATRICES:
            raise ValueError(f"Matrix name should be one of {', '.join(MATRICES)}.")
        self._matrix = matrix

    @property
    def format(self):
        """
        Get the output format.
        """
        return self._format

    @format.setter
    def format(self, fmt: str):
        """
        Set the output format.
        """
        if not isinstance(fmt, str):
            raise TypeError("Format should be a string.")
        if fmt not in FORMATS:
            raise ValueError(f"Format should be one of {', '.join(FORMATS)}.")
        self._format = fmt

    @property
    def out(self):
        """
        Get the output file path (None for stdout).
        """
        return self._out

    @out.setter
    def out(self, out: str | Path | None):
        """
        Set the output file path.
        """
        self._out = _to_path(out, "Output path")


class VerifyConfig(BaseConfig):
    """
    Configuration class for the verify command.
    """

    def __init__(self: VerifyConfig) -> None:
        self._suite: str = "all"
        self._out: Path | None = None
        self._perturb: tuple[int, int] | None = None
        self._negative_controls: bool = True

    def get_identifier(self) -> str:
        return "verify"

    @property
    def suite(self):
        """
        Get the verification suite.
        """
        return self._suite

    @suite.setter
    def suite(self, suite: str):
        """
        Set the verification suite.
        """
        if not isinstance(suite, str):
            raise TypeError("Suite should be a string.")
        if suite not in SUITES:
            raise ValueError(f"Suite should be one of {', '.join(SUITES)}.")
        self._suite = suite

    @property
    def out(self):
        """
        Get the report file path (None for stdout).
        """
        return self._out

    @out.setter
    def out(self, out: str | Path | None):
        """
        Set the report file path.
        """
        self._out = _to_path(out, "Report path")

    @property
    def perturb(self):
        """
        Get the 1-based (row, col) entry perturbed by +h, or None.
        """
        return self._perturb

    @perturb.setter
    def perturb(self, perturb: str | list[int] | tuple[int, int] | None):
        """
        Set the perturbed entry from "ROW,COL" or a pair of integers.
        """
        if perturb is None:
            self._perturb = None
            return
        if isinstance(perturb, str):
            try:
                parts = [int(part) for part in perturb.split(",")]
            except ValueError as e:
                raise ValueError(
                    f"Perturbation '{perturb}' should have the form ROW,COL."
                ) from e
        elif isinstance(perturb, (list, tuple)):
            parts = list(perturb)
            if not all(isinstance(part, int) for part in parts):
                raise TypeError("Perturbation entries should be integers.")
        else:
            raise TypeError("Perturbation should be a string or a pair of integers.")
        if len(parts) != 2:
            raise ValueError("Perturbation needs exactly a row and a column.")
        if min(parts) < 1:
            raise ValueError("Perturbation indices are 1-based.")
        self._perturb = (parts[0], parts[1])

    @property
    def negative_controls(self):
        """
        Get the negative controls flag.
        """
        return self._negative_controls

    @negative_controls.setter
    def negative_controls(self, negative_controls: bool):
        """
        Set the negative controls flag.
        """
        if not isinstance(negative_controls, bool):
            raise TypeError("Negative controls should be a boolean.")
        self._negative_controls = negative_controls


class RewriteConfig(BaseConfig):
    """
    Configuration class for free-algebra rewriting.
    """

    def __init__(self: RewriteConfig) -> None:
        self._max_degree: int = 8
        self._confluence_degree: int = 3

    def get_identifier(self) -> str:
        return "rewrite"

    @property
    def max_degree(self):
        """
        Get the degree bound of the rewrite systems.
        """
        return self._max_degree

    @max_degree.setter
    def max_degree(self, max_degree: int):
        """
        Set the degree bound of the rewrite systems.
        """
        if not isinstance(max_degree, int) or isinstance(max_degree, bool):
            raise TypeError("Max degree should be an integer.")
        if max_degree < 3:
            raise ValueError("Max degree should be at least 3.")
        self._max_degree = max_degree

    @property
    def confluence_degree(self):
        """
        Get the word length of the confluence check.
        """
        return self._confluence_degree

    @confluence_degree.setter
    def confluence_degree(self, confluence_degree: int):
        """
        Set the word length of the confluence check.
        """
        if not isinstance(confluence_degree, int) or isinstance(
            confluence_degree, bool
        ):
            raise TypeError("Confluence degree should be an integer.")
        if confluence_degree < 3:
            raise ValueError("Confluence degree should be at least 3.")
        self._confluence_degree = confluence_degree

    def check_config(self, verbosity: int = 1) -> None:
        if self.confluence_degree > self.max_degree:
            raise ValueError(
                f"Confluence degree ({self.confluence_degree}) exceeds "
                + f"the max degree ({self.max_degree})."
            )


class ConfigManager:
    """
    Overall configuration manager for the program.
    """

    def __init__(self, config_file: str | Path | None = None):
        """
        Initialize configuration sections with default values
        """
        self.general = GeneralConfig()
        self.model = ModelConfig()
        self.emit = EmitConfig()
        self.verify = VerifyConfig()
        self.rewrite = RewriteConfig()

        if config_file:
            self.load_from_toml(config_file)

    def check_config(self, verbosity: int = 1, command: str | None = None) -> None:
        """
        Checks the configuration for incompatibilities; ``command`` selects
        the cross-section checks of "emit" or "verify".

        Raises:
            ValueError: For combinations that cannot be run.
        """

        ### Config-specific checks ###
        ##############################
        for attr_name in dir(self):
            attr_value = getattr(self, attr_name)
            if isinstance(attr_value, BaseConfig):
                if hasattr(attr_value, "check_config"):
                    attr_value.check_config(verbosity)

        ### Overlapping checks ###
        ##############################
        n = self.model.n
        if command == "emit":
            if self.emit.matrix == "c_h" and n > 1 and n % 2:
                raise ValueError("no contraction limit: n must be even")
            if self.emit.matrix in ("r_h", "rtilde_h") and n < 2:
                raise ValueError(f"'{self.emit.matrix}' needs n >= 2.")
            if self.emit.matrix == "rtilde_h" and n % 2:
                raise ValueError("no contraction limit: n must be even")
            if self.emit.matrix == "cgc-h" and n != 2:
                raise ValueError("The coupling table is defined for n = 2.")
        if command == "verify":
            suite = self.verify.suite
            if (suite in N2_SUITES or suite == "all") and n != 2:
                raise ValueError(f"Suite '{suite}' needs n = 2.")
            if n < 2:
                raise ValueError("Verification needs n >= 2.")
            if self.verify.perturb is not None:
                row, col = self.verify.perturb
                if max(row, col) > n * n:
                    raise ValueError(
                        f"Perturbed entry ({row}, {col}) lies outside the "
                        + f"{n * n} x {n * n} R-matrix."
                    )

    def get_all_identifiers(self):
        """
        Returns the identifiers of all subconfiguration classes, e.g. "model", "verify", ...
        """
        identifiers = []
        for attr_name in dir(self):
            attr_value = getattr(self, attr_name)
            # Check if the attribute is an instance of BaseConfig
            if isinstance(attr_value, BaseConfig):
                identifiers.append(attr_value.get_identifier())
        return identifiers

    def load_from_toml(self, config_file: str | Path) -> None:
        """
        Load configuration from TOML file that is structured as follows:
        [general]
        verbosity = 1

        [model]
        n = 2
        m = 1

        Arguments:
            config_file (str): Path to the configuration file
        """
        config_data = toml.load(config_file)
        self.load_from_dict(config_data)

    def load_from_dict(self, config_dict: dict) -> None:
        """
        Load configuration from a dictionary structured as follows:
        {
            "general": {
                "verbosity": 1,
                "parallel": 2
            },
            "model": {
                "n": 2,
                "trunc": 6
            },
        }

        Arguments:
            config_dict (dict): Dictionary containing the configuration
        """
        # Check for unknown keys
        all_identifiers = self.get_all_identifiers()
        for key in config_dict:
            if key not in all_identifiers:
                raise KeyError(f"Unknown key in configuration file: {key}")

        for sub_config in all_identifiers:
            if sub_config not in config_dict:
                continue
            for config_key, config_value in config_dict[sub_config].items():
                # check if config_value is not None and if the attribute exists
                if config_value is not None and hasattr(
                    getattr(self, sub_config), config_key
                ):
                    setattr(getattr(self, sub_config), config_key, config_value)

    def load_from_env(self, environ: Mapping[str, str] | None = None) -> None:
        """
        Apply environment overrides; QGC_MAX_DEGREE sets rewrite.max_degree.
        """
        environ = os.environ if environ is None else environ
        value = environ.get(MAX_DEGREE_ENV)
        if value is None or not value.strip():
            return
        try:
            self.rewrite.max_degree = int(value)
        except ValueError as e:
            raise ValueError(
                f"{MAX_DEGREE_ENV} should be an integer >= 3, got '{value}'."
            ) from e

    def __str__(self) -> str:
        """
        Automated method to display the current configuration.
        """
        configstr = ""
        for attr_name in dir(self):
            attr_value = getattr(self, attr_name)
            if isinstance(attr_value, BaseConfig):
                configstr += (
                    f"{attr_value.get_identifier().capitalize()} configuration:\n"
                )
                for key, value in attr_value.__dict__.items():
                    configstr += (
                        f"{key[1:]:>30}:   {value}\n"  # Skip the leading underscore
                    )
                configstr += "\n"
        return configstr
