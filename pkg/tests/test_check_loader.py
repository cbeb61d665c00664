import types

import pytest

from checks.rigidity_check import RigidityCheck
from checks.seed_check import SeedCheck
from config_loader import ConfigError
from loaders.check_loader import load_checks


# Mock check class for testing
class MockCheck:
    def __init__(self, config):
        self.id = config.get("id")
        self.max_rank = config.get("max_rank")
        self.samples = config.get("samples")


def _mock_import_module(module_name):
    if module_name == "checks.mock_check":
        mock_module = types.ModuleType("checks.mock_check")
        mock_module.MockCheck = MockCheck
        return mock_module
    raise ModuleNotFoundError(f"No module named '{module_name}'")


def test_load_valid_check(monkeypatch):
    """Test successful loading of a check with defaults merged in."""
    monkeypatch.setattr("loaders._entity_loader.import_module", _mock_import_module)

    checks = load_checks(
        [{"id": "mock", "how": "mock_check", "max_rank": 4}],
        defaults={"max_rank": 8, "samples": 10},
    )

    assert len(checks) == 1
    check = checks[0]
    assert check.id == "mock"
    assert check.max_rank == 4
    assert check.samples == 10


def test_missing_check_module(monkeypatch):
    """A missing check module stops the whole suite from loading."""
    monkeypatch.setattr("loaders._entity_loader.import_module", _mock_import_module)

    with pytest.raises(ConfigError, match=r"Could not load check\(s\): ghost"):
        load_checks([{"id": "ghost", "how": "ghost_check"}])


def test_missing_class_fails_the_suite(monkeypatch):
    """Every definition is tried; the error names each one that failed."""
    monkeypatch.setattr("loaders._entity_loader.import_module", _mock_import_module)

    with pytest.raises(ConfigError, match="bad, ghost"):
        load_checks(
            [
                {"id": "bad", "how": "mock_check.NotThere"},
                {"id": "mock", "how": "mock_check"},
                {"id": "ghost", "how": "ghost_check"},
            ]
        )


def test_load_real_checks():
    """Shipped checks resolve from their module names."""
    checks = load_checks(
        [{"id": "rigidity", "how": "rigidity_check"}, {"id": "seed", "how": "seed_check.SeedCheck"}],
        defaults={"max_rank": 5, "seed": 3},
    )

    assert isinstance(checks[0], RigidityCheck)
    assert isinstance(checks[1], SeedCheck)
    assert checks[0].max_rank == 5
    assert checks[1].seed == 3
    assert checks[0].get_metadata() == {"id": "rigidity", "how": "rigidity_check", "max_rank": 5}
