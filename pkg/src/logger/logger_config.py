"""
Logger configuration module.

This module provides the LoggerConfig class, which defines configuration
settings for the logger, including log level, log file paths, and console
logging options.
"""

from datetime import datetime
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LoggerConfig(BaseSettings):
    """
    Configuration settings for the logger.

    Attributes
    ----------
    logger_name : str
        Name of the application-wide logger.
    log_level : str
        The logging level (e.g., DEBUG, INFO, WARNING, ERROR).
    logger_folder : Path
        The directory where log files will be stored.
    enable_console_logging : bool
        Whether to mirror log records on stderr.
    enable_file_logging : bool
        Whether to write a timestamped log file under ``logger_folder``.
    """

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    logger_name: str = "nonabelian_zeta"
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")
    logger_folder: Path = Field(
        default=Path(__file__).parents[2].joinpath("logs"),
        alias="LOG_FOLDER",
        description="Folder to store log files.",
    )
    enable_console_logging: bool = True
    enable_file_logging: bool = Field(default=True, alias="LOG_TO_FILE")

    @property
    def log_file(self) -> Path:
        """Construct the log file path with a timestamped filename."""
        self.logger_folder.mkdir(parents=True, exist_ok=True)
        return self.logger_folder.joinpath(f"app_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log")
