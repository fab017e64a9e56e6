"""
Parameters Schema

Configuration options shared by the library, the verify harness and the CLI.
"""

import os
from enum import Enum
from typing import Any, Dict, Literal

from pydantic import BaseModel, Field


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


ENV_PREFIX = "RESTRICTED_RANGE_"


class Params(BaseModel):
    """
    Runtime parameters.

    Example:
    {
        "materialization_bound": 100000,
        "relation_max_n": 4,
        "output_format": "json"
    }
    """
    # Memory guard for anything that lists the whole semigroup
    materialization_bound: int = Field(
        default=100_000,
        ge=1,
        description="Largest |S| that class computation, oracles and empirical abundance will materialize"
    )

    # Verify harness bounds
    count_max_n: int = Field(default=5, ge=1, description="Largest n accepted by verify_counts")
    relation_max_n: int = Field(
        default=4,
        ge=1,
        description="Largest n accepted by the relations, regularity, abundance and witness suites"
    )
    stirling_max_n: int = Field(default=20, ge=0, description="Largest n accepted by verify_stirling")

    # Execution
    workers: int = Field(default=1, ge=1, description="Universes verified concurrently")

    # CLI options
    enumerate_limit: int = Field(default=10_000, ge=1, description="Default --limit of enumerate")
    output_format: OutputFormat = Field(default=OutputFormat.TABLE, description="Rendering of results")
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="WARNING")

    @classmethod
    def from_env(cls, **overrides: Any) -> "Params":
        """Defaults, overlaid by RESTRICTED_RANGE_<FIELD> variables, overlaid by overrides."""
        values: Dict[str, Any] = {}
        for name in cls.model_fields:
            raw = os.environ.get(ENV_PREFIX + name.upper())
            if raw is not None:
                values[name] = raw
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(values)
