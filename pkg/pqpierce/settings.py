import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from pqpierce.models import RationalField

logger = logging.getLogger(__name__)

ROOT = Path(__file__).parent.parent
DEFAULT_CONFIG = ROOT / "config" / "pqpierce.yaml"


class PiercingSettings(BaseModel):
    bound: int = Field(13, ge=1)
    max_size: Optional[int] = Field(None, ge=0)


class EscapeSettings(BaseModel):
    window: int = Field(20, ge=1)


class RenderSettings(BaseModel):
    clip_box: Tuple[RationalField, RationalField, RationalField, RationalField] = (
        Fraction(-2),
        Fraction(-3),
        Fraction(3),
        Fraction(4),
    )
    width_px: int = Field(600, gt=0)


class LogSettings(BaseModel):
    level: str = "WARNING"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="PQPIERCE_", env_nested_delimiter="__")

    piercing: PiercingSettings = PiercingSettings()
    escape: EscapeSettings = EscapeSettings()
    render: RenderSettings = RenderSettings()
    log: LogSettings = LogSettings()
    progress: bool = False

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ):
        # Environment beats the YAML file, which arrives as init kwargs.
        return env_settings, init_settings


def load_settings(config_path: Optional[Path] = None) -> Settings:
    path = Path(config_path) if config_path else DEFAULT_CONFIG
    data = {}
    if path.exists():
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        logger.debug("loaded settings from %s", path)
    elif config_path:
        logger.warning("config file %s not found, using defaults", path)
    return Settings(**data)
