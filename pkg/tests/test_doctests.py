import doctest

import deltadyn.series


def test_series_doctests():
    results = doctest.testmod(deltadyn.series)
    assert results.failed == 0
    assert results.attempted > 0
