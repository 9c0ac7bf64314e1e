import pytest

from ramsey.families import graph_from_name


@pytest.fixture
def g():
    """Build a graph from its family name."""
    return graph_from_name
