import pytest

from sgcolor.data.catalog import clique, cycle_graph, get_catalog, path_graph
from sgcolor.models.graph import Sign, SignedGraph
from sgcolor.services.envelope import find_envelope


@pytest.fixture
def catalog():
    return get_catalog()


@pytest.fixture
def neg_triangle() -> SignedGraph:
    return clique(3, Sign.NEG)


@pytest.fixture
def neg_c5() -> SignedGraph:
    return cycle_graph(5, Sign.NEG)


@pytest.fixture
def pos_p4() -> SignedGraph:
    return path_graph(4)


@pytest.fixture(scope="session")
def envelope():
    found = find_envelope(5)
    assert found is not None
    return found


@pytest.fixture
def sg_file(tmp_path):
    """텍스트를 SG 파일로 저장하고 경로를 돌려주는 헬퍼"""

    def write(text: str, name: str = "graph.sg"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
