import pytest

# classical r-Bell numbers, rows r = 0..6, columns n = 0..6
REFERENCE_TABLE = [
    [1, 1, 2, 5, 15, 52, 203],
    [1, 2, 5, 15, 52, 203, 877],
    [1, 3, 10, 37, 151, 674, 3263],
    [1, 4, 17, 77, 372, 1915, 10481],
    [1, 5, 26, 141, 799, 4736, 29371],
    [1, 6, 37, 235, 1540, 10427, 73013],
    [1, 7, 50, 365, 2727, 20878, 163967],
]


@pytest.fixture
def reference_table():
    return [row[:] for row in REFERENCE_TABLE]
