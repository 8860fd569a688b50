# ABOUTME: CLI settings and figure presets.
# ABOUTME: Extends AppSettings with output defaults; presets are read from the packaged YAML file.

from pathlib import Path
from typing import Any

import yaml
from pydantic import Field

from autobots_graph_entropy.configs.constants import PRESETS_FILE
from autobots_graph_entropy.configs.settings import AppSettings, init_app_settings

DEFAULT_PRESETS_PATH = Path(__file__).resolve().parent.parent / "configs" / PRESETS_FILE


class CliSettings(AppSettings):
    """CLI settings.
    Extends AppSettings with output and preset configuration."""

    default_format: str = Field(default="csv", description="Output format when --format is absent")
    presets_path: Path = Field(
        default=DEFAULT_PRESETS_PATH, description="YAML file with default figure ranges"
    )


def init_cli_settings() -> CliSettings:
    """Initialize CLI settings and register them as the shared instance.

    Call at CLI startup.
    """
    settings = CliSettings()
    init_app_settings(settings)
    return settings


def load_presets(path: Path | None = None) -> dict[str, Any]:
    """Read the figure presets; a missing file yields no presets."""
    target = path if path is not None else DEFAULT_PRESETS_PATH
    if not target.exists():
        return {}
    with target.open(encoding="utf-8") as handle:
        data = yaml.safe_load(handle)
    return data or {}
