# ABOUTME: RunConfig, the validated form of the command-line flags.
# ABOUTME: Every numeric flag is checked against the domain preconditions before any computation.

import cmath
import math
from enum import StrEnum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from autobots_graph_entropy.common.errors import DomainError
from autobots_graph_entropy.configs.constants import MAX_SCAN_DECIMATION, MIN_DECIMATION
from autobots_graph_entropy.domains.entropy import Convention


class Command(StrEnum):
    ZETA = "zeta"
    POLES = "poles"
    HEAT = "heat"
    ENTROPY = "entropy"
    SCAN = "scan"
    CORRECTIONS = "corrections"


class OutputFormat(StrEnum):
    CSV = "csv"
    SVG = "svg"


_NEEDS_SINGLE_L = {Command.ZETA, Command.POLES, Command.HEAT, Command.ENTROPY}
_NEEDS_L_RANGE = {Command.SCAN, Command.CORRECTIONS}


def _check_decimation(value: int, flag: str) -> int:
    if value < MIN_DECIMATION:
        raise ValueError(f"{flag} must satisfy l >= {MIN_DECIMATION}, got {value}")
    return value


class RunConfig(BaseModel):
    """One CLI invocation."""

    model_config = ConfigDict(frozen=True)

    command: Command
    decimation: int | None = None
    l_min: int | None = None
    l_max: int | None = None
    log_steps: int | None = Field(default=None, ge=1)
    s_values: tuple[complex, ...] = ()
    n_max: int | None = Field(default=None, ge=0)
    t_min: float | None = None
    t_max: float | None = None
    points: int = Field(default=16, ge=1)
    check_decimation: bool = False
    epsilons: tuple[float, ...] = ()
    convention: Convention = Convention.PAPER
    orders: tuple[int, ...] = ()
    verify: bool = False
    output: Path | None = None
    output_format: OutputFormat = OutputFormat.CSV

    @field_validator("decimation")
    @classmethod
    def _decimation_in_range(cls, value: int | None) -> int | None:
        return None if value is None else _check_decimation(value, "--l")

    @field_validator("l_min")
    @classmethod
    def _l_min_in_range(cls, value: int | None) -> int | None:
        return None if value is None else _check_decimation(value, "--l-min")

    @field_validator("l_max")
    @classmethod
    def _l_max_in_range(cls, value: int | None) -> int | None:
        if value is None:
            return None
        _check_decimation(value, "--l-max")
        if value > MAX_SCAN_DECIMATION:
            raise ValueError(f"--l-max must not exceed {MAX_SCAN_DECIMATION}, got {value}")
        return value

    @field_validator("epsilons")
    @classmethod
    def _positive_cutoffs(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        for epsilon in value:
            if not (epsilon > 0.0 and math.isfinite(epsilon)):
                raise ValueError(f"--epsilon values must be positive and finite, got {epsilon}")
        return value

    @field_validator("s_values")
    @classmethod
    def _finite_arguments(cls, value: tuple[complex, ...]) -> tuple[complex, ...]:
        for s in value:
            if not cmath.isfinite(s):
                raise ValueError(f"--s values must be finite, got {s}")
        return value

    @field_validator("t_min", "t_max")
    @classmethod
    def _finite_times(cls, value: float | None) -> float | None:
        if value is not None and not math.isfinite(value):
            raise ValueError(f"diffusion times must be finite, got {value}")
        return value

    @field_validator("orders")
    @classmethod
    def _positive_orders(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        for order in value:
            if order < 1:
                raise ValueError(f"--n values must be >= 1, got {order}")
        return value

    @model_validator(mode="after")
    def _command_requirements(self) -> "RunConfig":
        if self.command in _NEEDS_SINGLE_L and self.decimation is None:
            raise ValueError(f"{self.command} requires --l")
        if self.command in _NEEDS_L_RANGE:
            if self.l_min is None or self.l_max is None:
                raise ValueError(f"{self.command} requires --l-min and --l-max")
            if self.l_max < self.l_min:
                raise ValueError(f"--l-max {self.l_max} is below --l-min {self.l_min}")
            if self.log_steps is not None and self.log_steps > self.l_max - self.l_min + 1:
                raise ValueError(
                    f"--log-steps {self.log_steps} exceeds the integers in "
                    f"[{self.l_min}, {self.l_max}]"
                )
        if self.command is Command.ZETA and not self.s_values:
            raise ValueError("zeta requires --s")
        if self.command is Command.HEAT:
            if self.t_min is None or self.t_max is None:
                raise ValueError("heat requires --t-min and --t-max")
            if not self.t_min > 0.0:
                raise ValueError(f"--t-min must be positive, got {self.t_min}")
            if self.t_max < self.t_min:
                raise ValueError(f"--t-max {self.t_max} is below --t-min {self.t_min}")
        if self.command is Command.ENTROPY and not self.epsilons:
            raise ValueError("entropy requires --epsilon")
        if self.command is Command.CORRECTIONS and not self.orders:
            raise ValueError("corrections requires a nonempty --n list")
        if self.output_format is OutputFormat.SVG and self.output is None:
            raise ValueError("--format svg requires --output")
        return self

    def single_decimation(self) -> int:
        if self.decimation is None:
            raise DomainError(f"{self.command} requires --l")
        return self.decimation

    def decimation_range(self) -> tuple[int, int]:
        if self.l_min is None or self.l_max is None:
            raise DomainError(f"{self.command} requires --l-min and --l-max")
        return self.l_min, self.l_max

    def time_range(self) -> tuple[float, float]:
        if self.t_min is None or self.t_max is None:
            raise DomainError(f"{self.command} requires --t-min and --t-max")
        return self.t_min, self.t_max
