import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from partgen.counting import build_tables


@pytest.fixture(scope="session")
def tables():
    return build_tables(250)
