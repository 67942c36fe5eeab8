from pathlib import Path
from typing import Optional, Tuple, Type

from pydantic import ValidationError
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)

from app.core.errors import UsageError

# Optional config file looked up in the working directory
DEFAULT_CONFIG_FILE = Path("macias.toml")


class Settings(BaseSettings):
    model_config = SettingsConfigDict(toml_file=DEFAULT_CONFIG_FILE, extra="ignore")

    # Size guards
    MAX_INTEGER_BITS: int = 256
    MAX_DEGREE: int = 64

    # Windows / rings
    DEFAULT_WINDOW: int = 100
    DEFAULT_RING: str = "Z"

    # Oracle search space = operand height * factor
    ORACLE_BOUND_FACTOR: int = 8

    # Sweeps
    WORKERS: int = 1

    # Compute the support path next to the gcd path in in_basic_open
    CROSS_CHECK_SUPPORTS: bool = False

    LOG_LEVEL: str = "WARNING"

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        # No environment configuration: kwargs first, then the TOML file
        return (init_settings, TomlConfigSettingsSource(settings_cls))


def load_settings(config_path: Optional[str] = None, **overrides) -> Settings:
    """Build settings from an explicit TOML file (or the default one) plus overrides."""
    settings_cls = Settings
    if config_path is not None:
        if not Path(config_path).is_file():
            raise UsageError(f"config file {config_path} does not exist")

        class _FileSettings(Settings):
            model_config = SettingsConfigDict(toml_file=Path(config_path), extra="ignore")

        settings_cls = _FileSettings
    try:
        return settings_cls(**overrides)
    except ValidationError as exc:
        raise UsageError(f"invalid settings: {exc.errors()[0]['msg']}") from exc


settings = Settings()


def apply_settings(new_settings: Settings) -> None:
    """Swap the process-wide settings in place so every importer sees the change."""
    for name in Settings.model_fields:
        setattr(settings, name, getattr(new_settings, name))
