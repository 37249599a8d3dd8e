"""
Run configuration for MorseLab

Flattens the configuration sections into one validated, immutable value that
the CLI and the verification harness pass around.
"""

from dataclasses import asdict, dataclass, replace
from typing import Any

from ..exceptions import ConfigValidationError
from .config_manager import ConfigManager

COMPAT_MODES = ("paper", "classical")
SBU_MODES = ("strict", "weak")
OUTPUT_FORMATS = ("json", "table")
HEIGHT_ORDERS = ("relative", "literal")


@dataclass(frozen=True)
class RunConfig:
    """
    Bounds, modes and output settings for one run.

    @brief Immutable run configuration.
    """

    min_rank: int = 1
    max_rank: int = 3
    max_vertices: int = 4
    sigma_max_n: int = 6
    max_partitions_per_vertex: int = 2
    max_blowup_degree: int = 6
    max_join_simplices: int = 20000
    max_poset_elements: int = 5000
    compat: str = "paper"
    sbu_mode: str = "strict"
    output_format: str = "json"
    workers: int = 1
    seed: int = 0
    min_basepoint_degree: int = 1
    height_order: str = "relative"

    @classmethod
    def from_config(cls, manager: ConfigManager) -> "RunConfig":
        """
        Build a run configuration from a configuration manager.

        @brief Assemble and validate from config sections.
        @param manager Loaded configuration manager
        @return Validated RunConfig
        """
        harness = manager.get_harness_config()
        partitions = manager.get_partition_config()
        graph = manager.get_graph_config()
        config = cls(
            min_rank=harness["min_rank"],
            max_rank=harness["max_rank"],
            max_vertices=harness["max_vertices"],
            sigma_max_n=harness["sigma_max_n"],
            max_partitions_per_vertex=harness["max_partitions_per_vertex"],
            max_blowup_degree=harness["max_blowup_degree"],
            max_join_simplices=harness["max_join_simplices"],
            max_poset_elements=harness["max_poset_elements"],
            compat=partitions["compat"],
            sbu_mode=partitions["sbu_mode"],
            output_format=manager.get_output_config()["format"],
            workers=harness["workers"],
            seed=harness["seed"],
            min_basepoint_degree=graph["min_basepoint_degree"],
            height_order=graph["height_order"],
        )
        config.validate()
        return config

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        """
        Return a copy with the given non-None fields replaced, validated.

        @brief Apply command-line overrides.
        """
        changes = {key: value for key, value in overrides.items() if value is not None}
        config = replace(self, **changes)
        config.validate()
        return config

    def validate(self) -> None:
        """
        Check bounds and modes.

        @brief Raise ConfigValidationError on any invalid field.
        """
        for name in (
            "min_rank",
            "max_rank",
            "max_vertices",
            "sigma_max_n",
            "max_partitions_per_vertex",
            "max_blowup_degree",
            "max_join_simplices",
            "max_poset_elements",
            "workers",
            "min_basepoint_degree",
        ):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ConfigValidationError(
                    f"'{name}' must be a positive integer", details={name: value}
                )
        if self.min_rank > self.max_rank:
            raise ConfigValidationError(
                "'min_rank' must not exceed 'max_rank'",
                details={"min_rank": self.min_rank, "max_rank": self.max_rank},
            )
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ConfigValidationError("'seed' must be an integer", details={"seed": self.seed})
        for name, allowed in (
            ("compat", COMPAT_MODES),
            ("sbu_mode", SBU_MODES),
            ("output_format", OUTPUT_FORMATS),
            ("height_order", HEIGHT_ORDERS),
        ):
            if getattr(self, name) not in allowed:
                raise ConfigValidationError(
                    f"'{name}' must be one of {', '.join(allowed)}",
                    details={name: getattr(self, name)},
                )

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)
