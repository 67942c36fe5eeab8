from app.core.config import settings
from app.utils.sweep import _init_worker, ordered_map
from tests.helpers import max_degree_setting


def test_init_worker_applies_the_parent_settings():
    values = settings.model_dump()
    values.update(MAX_DEGREE=7, CROSS_CHECK_SUPPORTS=True)
    _init_worker(values)
    assert settings.MAX_DEGREE == 7
    assert settings.CROSS_CHECK_SUPPORTS is True


def test_workers_see_overridden_settings():
    settings.MAX_DEGREE = 7
    assert ordered_map(max_degree_setting, range(6), workers=2) == [7] * 6


def test_ordered_map_keeps_input_order():
    assert ordered_map(abs, [-3, 1, -2, 5], workers=2) == [3, 1, 2, 5]
