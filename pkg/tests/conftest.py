import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from activeset import parse_path  # noqa: E402

FIG1_DOMAIN = "2,0 2,1 3,2 2,1 1,2 0,1 1,1 1,2 0,1 0,1"
FIG1_IMAGE = "2,0 5,1 2,1 1,2 0,1 1,1 1,4 0,1 0,1"
FIG2_DOMAIN = "3,0 2,0 1,5 3,2 1,0 1,3 1,1 0,1"
FIG2_IMAGE = "3,0 2,0 4,3 1,0 1,7 1,1 0,1"
FIG4_DOMAIN = "2,0 0,2 2,1 1,0 0,4 1,1 2,0"
FIG4_IMAGE = "2,0 2,1 1,0 0,6 1,1 2,0"

# the six subdiagonal Delannoy paths of order 2 and their images at k = 1,
# read off the panels of the third figure, left to right
FIG3_PANELS = [
    ("1,1 1,1", "2,2"),
    ("1,1 1,0 0,1", "2,1 0,1"),
    ("1,0 0,1 1,1", "1,0 1,2"),
    ("1,0 0,1 1,0 0,1", "1,0 1,0 0,2"),
    ("1,0 1,1 0,1", "2,0 0,2"),
    ("1,0 1,0 0,1 0,1", "2,0 0,1 0,1"),
]


@pytest.fixture
def fig1():
    return parse_path(FIG1_DOMAIN)


@pytest.fixture
def fig2():
    return parse_path(FIG2_DOMAIN)


@pytest.fixture
def fig4():
    return parse_path(FIG4_DOMAIN)
