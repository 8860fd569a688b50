# ABOUTME: Pydantic settings for application configuration.
# ABOUTME: Numerical budgets (caps, tolerances, truncations) shared by every domain.

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class AppSettings(BaseSettings):
    """Pydantic settings for application configuration.
    Values can be overridden with GRAPH_ENTROPY_* environment variables or a .env file."""

    model_config = SettingsConfigDict(
        env_prefix="GRAPH_ENTROPY_",
        env_file=".env",
        extra="ignore",
    )

    # Resource limits
    ladder_entry_cap: int = Field(
        default=10**8, gt=0, description="Maximum number of ladder terms before refusing"
    )
    direct_min_time: float = Field(
        default=1e-8, gt=0, description="Direct heat trace refuses diffusion times below this"
    )

    # Truncations and tolerances
    default_n_max: int = Field(default=8, ge=0, description="Default pole-tower truncation")
    zeta_precision_budget: float = Field(
        default=1e-9, gt=0, description="Relative error budget for the closed-form zeta"
    )
    quad_abs_tol: float = Field(
        default=1e-10, gt=0, description="Absolute tolerance of the Frullani quadrature"
    )
    quad_interval_limit: int = Field(
        default=200, gt=0, description="scipy quad subdivision limit per interval"
    )

    # Output
    csv_significant_digits: int = Field(
        default=12, ge=1, le=17, description="Significant digits written to CSV cells"
    )
    max_workers: int = Field(
        default=1, ge=1, description="Worker processes for grid evaluation (1 = sequential)"
    )
    debug: bool = Field(default=False, description="Enable debug logging")


_settings: AppSettings | None = None


def get_app_settings() -> AppSettings:
    """Get the shared settings instance, creating it on first use."""
    global _settings
    if _settings is None:
        _settings = AppSettings()
    return _settings


def init_app_settings(settings: AppSettings | None = None) -> AppSettings:
    """Initialize app settings and register them as the shared instance.

    Args:
        settings: Optional AppSettings instance or subclass. If None, creates default AppSettings.

    Returns:
        The initialized settings instance.

    Call at app startup.
    """
    global _settings
    _settings = settings if settings is not None else AppSettings()
    return _settings


def reset_app_settings() -> None:
    """Drop the cached settings so the next access re-reads the environment."""
    global _settings
    _settings = None
