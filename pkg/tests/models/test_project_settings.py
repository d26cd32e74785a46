from src.models.project_paths import ProjectPathsSettings


def test_project_paths_settings():
    project_paths = ProjectPathsSettings()

    assert project_paths.data_folder.name == "data"
    assert project_paths.default_catalog.name == "catalog.json"
    assert project_paths.default_catalog.exists()
    assert project_paths.reports_folder.name == "reports"
    assert project_paths.reports_folder.parent == project_paths.data_folder


def test_data_folder_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("DATA_FOLDER_PATH", str(tmp_path))

    assert ProjectPathsSettings().default_catalog == tmp_path / "catalog.json"
