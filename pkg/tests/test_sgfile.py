import pytest

from sgcolor.data.catalog import k4m, q3_sigma
from sgcolor.exceptions import GraphIOError, ParseError
from sgcolor.models.graph import Sign
from sgcolor.services.sgfile import (
    graph_from_text,
    graph_to_text,
    load_sg_file,
    parse_sg_text,
    read_sg,
    write_sg,
)

TRIANGLE = """\
c negative triangle
c seed=3

p sg 3 3
e 1 2 -
e 2 3 -
e 3 1 -
"""


def test_parse_sg_text():
    sg = parse_sg_text(TRIANGLE)
    assert (sg.n, sg.m) == (3, 3)
    assert sg.comments == ["negative triangle", "seed=3"]
    g = graph_from_text(TRIANGLE)
    assert g.edges == ((0, 1, Sign.NEG), (0, 2, Sign.NEG), (1, 2, Sign.NEG))


def test_render_sorts_edges_and_uses_one_based_vertices():
    text = graph_to_text(k4m(), comments=["k4m"])
    assert text.splitlines() == [
        "c k4m",
        "p sg 4 6",
        "e 1 2 -",
        "e 1 3 +",
        "e 1 4 +",
        "e 2 3 +",
        "e 2 4 +",
        "e 3 4 -",
    ]
    assert graph_from_text(text) == k4m()


def test_isolated_vertices_survive():
    g = graph_from_text("p sg 4 1\ne 2 3 +\n")
    assert g.n == 4
    assert g.m == 1


@pytest.mark.parametrize(
    "text, line",
    [
        ("p sg 2 0\np sg 2 0\n", 2),
        ("p graph 2 0\n", 1),
        ("p sg x 0\n", 1),
        ("p sg -1 0\n", 1),
        ("e 1 2 +\np sg 2 1\n", 1),
        ("p sg 2 1\ne 1 2 *\n", 2),
        ("p sg 2 1\ne 1 3 +\n", 2),
        ("p sg 2 1\ne 2 2 +\n", 2),
        ("p sg 3 2\ne 1 2 +\ne 2 1 -\n", 3),
        ("p sg 2 1\nx 1 2 +\n", 2),
        ("c only a comment\n", 1),
        ("p sg 3 2\ne 1 2 +\n", 2),
    ],
)
def test_parse_errors_report_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_sg_text(text, "bad.sg")
    assert info.value.line == line
    assert info.value.path == "bad.sg"


def test_write_and_read_file(tmp_path):
    path = tmp_path / "nested" / "q3.sg"
    write_sg(q3_sigma(), path, comments=["family=q3-sigma"])
    assert read_sg(path) == q3_sigma()
    assert load_sg_file(path).comments == ["family=q3-sigma"]


def test_read_sg_from_fixture_file(sg_file):
    path = sg_file(TRIANGLE)
    assert read_sg(path).m == 3


def test_missing_file_is_an_io_error(tmp_path):
    with pytest.raises(GraphIOError):
        read_sg(tmp_path / "missing.sg")


def test_non_utf8_file_is_an_io_error(tmp_path):
    path = tmp_path / "latin.sg"
    path.write_bytes(b"c \xff\xfe\np sg 2 0\n")
    with pytest.raises(GraphIOError) as info:
        read_sg(path)
    assert "latin.sg" in str(info.value)


def test_comment_whitespace_round_trips():
    comments = ["  indented", "a  b", ""]
    text = graph_to_text(k4m(), comments=comments)
    assert parse_sg_text(text).comments == comments
    assert parse_sg_text("c\tseed=1\np sg 1 0\n").comments == ["seed=1"]
