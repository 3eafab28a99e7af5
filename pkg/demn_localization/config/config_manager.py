"""
Configuration Manager
Loads experiment settings from JSON with an environment override for the worker count
"""

from typing import Dict, Any, Optional
import copy
import json
import logging
import os
from pathlib import Path

from dotenv import load_dotenv

from ..exceptions import ConfigError
from ..evaluation.experiment_runner import ExperimentConfig

logger = logging.getLogger(__name__)

WORKERS_ENV = 'DEMN_MAX_WORKERS'


def _default_settings() -> Dict[str, Any]:
    return ExperimentConfig().to_dict()


class ConfigManager:
    """Manages benchmark configuration"""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path
        self.config: Dict[str, Any] = {}
        self.load()

    def load(self) -> Dict[str, Any]:
        """Load configuration from file and environment"""
        self.config = _default_settings()
        if self.config_path:
            if not os.path.exists(self.config_path):
                raise ConfigError(f"config file not found: {self.config_path}")
            try:
                with open(self.config_path, 'r') as f:
                    loaded = json.load(f)
            except json.JSONDecodeError as e:
                raise ConfigError(f"{self.config_path} is not valid JSON: {e}") from e
            if not isinstance(loaded, dict):
                raise ConfigError(f"{self.config_path} must hold a JSON object")
            self._merge(loaded)

        self._load_from_environment()
        return self.config

    def _merge(self, loaded: Dict[str, Any]):
        for key, value in loaded.items():
            if key.startswith('#'):
                continue
            if key == 'ga' and isinstance(value, dict):
                self.config['ga'].update(value)
            else:
                self.config[key] = value

    def _load_from_environment(self):
        """Worker count is the only setting the environment may override"""
        load_dotenv()
        raw = os.environ.get(WORKERS_ENV)
        if raw is None or raw == '':
            return
        try:
            workers = int(raw)
        except ValueError as e:
            raise ConfigError(f"{WORKERS_ENV} must be an integer, got '{raw}'") from e
        logger.info("Worker count overridden by %s=%d", WORKERS_ENV, workers)
        self.config['max_workers'] = workers

    def save(self, path: Optional[str] = None) -> Path:
        """Save configuration to file"""
        target = Path(path or self.config_path or 'benchmark_config.json')
        with open(target, 'w') as f:
            json.dump(self.config, f, indent=2)
        return target

    def get(self, key: str, default: Any = None) -> Any:
        return self.config.get(key, default)

    def set(self, key: str, value: Any):
        self.config[key] = value

    def get_experiment_config(self) -> ExperimentConfig:
        """Validated experiment configuration"""
        return ExperimentConfig.from_dict(copy.deepcopy(self.config))

    def create_example_config(self, output_path: Optional[str] = None) -> str:
        """Create example configuration file"""
        example = {
            "# Benchmark configuration": f"set {WORKERS_ENV} to override max_workers",
            **_default_settings()
        }
        output_path = output_path or 'benchmark_config.example.json'
        with open(output_path, 'w') as f:
            json.dump(example, f, indent=2)
        return output_path


def load_config(config_path: Optional[str] = None) -> ConfigManager:
    """Load configuration"""
    return ConfigManager(config_path)


def save_config(config_manager: ConfigManager, path: Optional[str] = None) -> Path:
    """Save configuration"""
    return config_manager.save(path)
