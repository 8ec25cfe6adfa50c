from importlib.resources import files
from pathlib import Path
from typing import Optional, Union, Dict, Any, Type, TypeVar

import yaml
from pydantic import ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from alphaperm.core.base_config import (
    EnumerationConfig,
    SeriesConfig,
    HyperbolicConfig,
    SamplingConfig,
    HessianConfig,
    WitnessConfig,
    LogConfig,
)
from alphaperm.utils.exceptions.config import ConfigError, InvalidConfigError

T = TypeVar("T")

SECTIONS = {
    'enumeration': EnumerationConfig,
    'series': SeriesConfig,
    'hyperbolic': HyperbolicConfig,
    'sampling': SamplingConfig,
    'hessian': HessianConfig,
    'witness': WitnessConfig,
    'log': LogConfig,
}


class EnvSettings(BaseSettings):
    """Environment lookup; only the default config path lives here"""
    model_config = SettingsConfigDict(env_prefix="ALPHAPERM_")

    config: Optional[Path] = None


class Config:
    def __init__(
        self,
        enumeration: Optional[Union[Dict[str, Any], EnumerationConfig]] = None,
        series: Optional[Union[Dict[str, Any], SeriesConfig]] = None,
        hyperbolic: Optional[Union[Dict[str, Any], HyperbolicConfig]] = None,
        sampling: Optional[Union[Dict[str, Any], SamplingConfig]] = None,
        hessian: Optional[Union[Dict[str, Any], HessianConfig]] = None,
        witness: Optional[Union[Dict[str, Any], WitnessConfig]] = None,
        log: Optional[Union[Dict[str, Any], LogConfig]] = None,
    ):
        self.enumeration = self._init_config(enumeration, EnumerationConfig)
        self.series = self._init_config(series, SeriesConfig)
        self.hyperbolic = self._init_config(hyperbolic, HyperbolicConfig)
        self.sampling = self._init_config(sampling, SamplingConfig)
        self.hessian = self._init_config(hessian, HessianConfig)
        self.witness = self._init_config(witness, WitnessConfig)
        self.log = self._init_config(log, LogConfig)

    def _init_config(self, config: Optional[Union[Dict[str, Any], T]], config_class: Type[T]) -> T:
        """Initialize configuration object from dict or existing object"""
        if config is None:
            return config_class()
        elif isinstance(config, dict):
            try:
                return config_class(**config)
            except (TypeError, ValidationError) as e:
                raise InvalidConfigError(f"{config_class.__name__}: {str(e)}", section=config_class.__name__)
        elif isinstance(config, config_class):
            return config
        else:
            raise InvalidConfigError(
                f"Config must be a dict or {config_class.__name__} instance, got {type(config).__name__}"
            )

    def update_config(self, section: str, data: Union[Dict[str, Any], object]) -> None:
        """Replace one section; dicts are merged over the current values"""
        if section not in SECTIONS:
            raise ConfigError(f"Unknown config section: {section}")
        if isinstance(data, dict):
            data = {**getattr(self, section).model_dump(), **data}
        setattr(self, section, self._init_config(data, SECTIONS[section]))

    def to_dict(self) -> Dict[str, Any]:
        """Convert all configurations to dictionary"""
        return {name: getattr(self, name).model_dump(mode="json") for name in SECTIONS}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Config':
        unknown = set(data) - set(SECTIONS)
        if unknown:
            raise ConfigError(f"Unknown config sections: {sorted(unknown)}")
        return cls(**data)


def _read_yaml(text: str, source: str) -> Dict[str, Any]:
    try:
        data = yaml.safe_load(text) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Error parsing YAML {source}: {str(e)}")
    if not isinstance(data, dict):
        raise ConfigError(f"Config {source} must be a mapping")
    return data


def default_settings() -> Dict[str, Any]:
    """Defaults bundled with the package"""
    resource = files("alphaperm.defaults") / "defaults.yaml"
    return _read_yaml(resource.read_text(encoding="utf-8"), "defaults.yaml")


def load_config(path: Optional[Union[str, Path]] = None) -> Config:
    """
    Build a Config from the bundled defaults overlaid with a user YAML file.

    Args:
        path: Optional YAML path; falls back to $ALPHAPERM_CONFIG

    Returns:
        Config with every section populated
    """
    data = default_settings()
    path = path or EnvSettings().config
    if path:
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"Config file not found: {path}")
        overlay = _read_yaml(path.read_text(encoding="utf-8"), str(path))
        for section, values in overlay.items():
            if not isinstance(values, dict):
                raise ConfigError(f"Section {section} must be a mapping")
            data[section] = {**data.get(section, {}), **values}
    return Config.from_dict(data)


GLOBAL_CONFIG: Optional[Config] = None


def set_global_config(config: Config):
    global GLOBAL_CONFIG
    GLOBAL_CONFIG = config


def get_global_config() -> Config:
    global GLOBAL_CONFIG
    if GLOBAL_CONFIG is None:
        GLOBAL_CONFIG = Config.from_dict(default_settings())
    return GLOBAL_CONFIG
