"""
Command-line interface: run configuration, suites and report files.
"""

from .config import RunConfig, build_config
from .main import main
from .settings import VerificationSettings
from .suites import SuiteResult, run_suite

__all__ = ["RunConfig", "build_config", "main", "VerificationSettings", "SuiteResult", "run_suite"]
