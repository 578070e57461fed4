"""
Harness Package

Configuration, artifact writing and the subcommand handlers behind main.py:

- RunConfig / Caps: settings from flags, SKELETAL_* variables and .env (config.py)
- write_artifacts: JSON artifacts with config echo, optional CSV tables (artifacts.py)
- HANDLERS / validate_file: one handler per subcommand (handlers.py)
"""

from .artifacts import Outcome, envelope, summary_csv, write_artifacts
from .config import Caps, RunConfig, load_config
from .handlers import HANDLERS, failure_outcome, parse_seed_range, validate_file

__all__ = [
    'RunConfig',
    'Caps',
    'load_config',
    'Outcome',
    'envelope',
    'summary_csv',
    'write_artifacts',
    'HANDLERS',
    'failure_outcome',
    'parse_seed_range',
    'validate_file',
]
