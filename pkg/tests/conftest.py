import pytest

from app.core.config import Settings, apply_settings, settings


@pytest.fixture(autouse=True)
def restore_settings():
    saved = settings.model_dump()
    yield
    apply_settings(Settings(**saved))


@pytest.fixture
def cross_check():
    """in_basic_open also compares supports and raises on disagreement."""
    settings.CROSS_CHECK_SUPPORTS = True
    yield
