"""Shared frozen reference data.

TABLE1 is the 10 x 19 base-4 star defect matrix, transcribed by hand
and kept as a literal so the generator is tested against fixed data,
not against itself.  Rows are n = 1..10, columns k = 1..19.
"""

import pytest

TABLE1 = (
    (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, -3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 2, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, -2, 0, 0, 0, -4, 0, 0, 0, 4, 0, 0, 0, -3, 0, 0, 0, 0),
    (0, 0, 4, 0, 0, 0, 2, 0, 0, 0, -2, 0, 0, 0, 3, 0, 0, 0, 0),
    (0, 0, -1, -1, 0, 0, 0, 2, 0, 0, -1, -3, 0, 0, -1, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 1, 1, 0, 0, -1, -2, 0, 0, -2, 0, 0, 0, 0),
    (0, 0, -3, 0, 0, 0, 1, 0, 0, 0, -5, 0, 0, 0, 6, 0, 0, 0, 0),
)


@pytest.fixture
def table1():
    return TABLE1
