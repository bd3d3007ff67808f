# config.py
import logging
from typing import Sequence

from dotenv import load_dotenv
from hydra import compose, initialize
from hydra.core.global_hydra import GlobalHydra
from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException

from .exceptions import ConfigError
from .types import Settings

logger = logging.getLogger(__name__)

CONFIG_PATH = "../conf"

_LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def _as_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{name} must be an integer, got {value!r}")
    return value


def load_settings(overrides: Sequence[str] = ()) -> Settings:
    """Compose conf/default_values.yaml with a .env file, the environment and hydra overrides"""
    load_dotenv()

    # Clear any existing Hydra instance
    if GlobalHydra.instance().is_initialized():
        GlobalHydra.instance().clear()

    try:
        with initialize(version_base=None, config_path=CONFIG_PATH, job_name="wilf"):
            cfg = compose(config_name="default_values", overrides=list(overrides))
        values = OmegaConf.to_container(cfg, resolve=True)
    except (OmegaConfBaseException, ValueError) as e:
        raise ConfigError(f"Could not load configuration: {e}") from e
    except Exception as e:
        # hydra reports bad override syntax with its own exception types
        raise ConfigError(f"Could not apply overrides {list(overrides)}: {e}") from e

    oracle = values.get('oracle', {})
    settings = Settings(
        ss_limit=_as_int(oracle.get('ss_limit'), 'oracle.ss_limit'),
        shift_limit=_as_int(oracle.get('shift_limit'), 'oracle.shift_limit'),
        prefix_limit=_as_int(oracle.get('prefix_limit'), 'oracle.prefix_limit'),
        workers=_as_int(oracle.get('workers'), 'oracle.workers'),
        block_size=_as_int(oracle.get('block_size'), 'oracle.block_size'),
        log_level=str(values.get('logging', {}).get('level', 'WARNING')).upper(),
        table_n_max=_as_int(values.get('tables', {}).get('n_max'), 'tables.n_max'),
    )
    for name in ('ss_limit', 'shift_limit', 'prefix_limit'):
        if getattr(settings, name) < 2:
            raise ConfigError(f"oracle.{name} must be at least 2, got {getattr(settings, name)}")
    if settings.workers < 1 or settings.block_size < 1:
        raise ConfigError("oracle.workers and oracle.block_size must be positive")
    if settings.log_level not in _LOG_LEVELS:
        raise ConfigError(f"logging.level must be one of {_LOG_LEVELS}, got {settings.log_level!r}")

    logger.debug(f"Loaded settings: {settings}")
    return settings
