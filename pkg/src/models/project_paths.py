"""Project paths settings module."""
from pathlib import Path

from pydantic import DirectoryPath, Field
from pydantic_settings import BaseSettings


class ProjectPathsSettings(BaseSettings):
    """Settings for project paths.

    This class manages the location of the data folder holding curve
    catalogs and the folder where reports are written by default.
    """

    data_folder: DirectoryPath = Field(
        default=Path(__file__).parents[2].joinpath("data").resolve(),
        alias="DATA_FOLDER_PATH",
        description="Path to the data folder.",
    )

    @property
    def default_catalog(self) -> Path:
        """Path to the bundled demo catalog.

        Returns
        -------
        Path
            ``<data_folder>/catalog.json``.
        """
        return self.data_folder.joinpath("catalog.json")

    @property
    def reports_folder(self) -> Path:
        """Path to the reports folder.

        Returns
        -------
        Path
            The folder receiving ``--emit csv`` tables when no ``--out`` is given.
        """
        return self.data_folder.joinpath("reports")
