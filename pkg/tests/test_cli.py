import json

import pandas as pd
import pytest

from sgcolor.data.catalog import clique, positive_completion_of_cycle
from sgcolor.exceptions import BadParams
from sgcolor.main import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main
from sgcolor.models.graph import Sign
from sgcolor.routers.verify import parse_params
from sgcolor.services.envelope import envelope_violations
from sgcolor.services.sgfile import graph_to_text, load_sg_file, read_sg, write_sg


@pytest.fixture
def neg_k5_file(tmp_path):
    path = tmp_path / "negk5.sg"
    write_sg(clique(5, Sign.NEG), path)
    return str(path)


@pytest.fixture
def pc_c5_file(sg_file):
    return str(sg_file(graph_to_text(positive_completion_of_cycle(5)), "pcc5.sg"))


def test_version(capsys):
    assert main(["--version"]) == EXIT_OK
    assert "sgcolor" in capsys.readouterr().out


def test_missing_command_is_usage_error():
    assert main([]) == EXIT_USAGE
    assert main(["color", "x.sg", "--algo", "magic"]) == EXIT_USAGE


def test_gen_writes_sg_file(tmp_path, capsys):
    out = tmp_path / "graphs" / "k5.sg"
    assert main(["gen", "neg-clique", "--i", "5", "-o", str(out)]) == EXIT_OK
    assert read_sg(out) == clique(5, Sign.NEG)
    assert "i=5" in load_sg_file(out).comments
    assert capsys.readouterr().out.strip() == f"{out}: n=5 m=10"


def test_gen_missing_option(tmp_path):
    assert main(["gen", "shift", "--k", "2", "-o", str(tmp_path / "s.sg")]) == EXIT_USAGE


def test_gen_from_input(tmp_path, neg_k5_file):
    out = tmp_path / "pc.sg"
    assert main(["gen", "positive-completion", "--input", neg_k5_file, "-o", str(out)]) == EXIT_OK
    g = read_sg(out)
    assert g.m == 10
    assert len(g.negative_edges()) == 10


@pytest.mark.parametrize("family", ["signed-shift", "p4class", "k3free", "line-graph"])
def test_gen_seeded_families(tmp_path, family):
    out = tmp_path / f"{family}.sg"
    assert main(["gen", family, "--n", "6", "--seed", "3", "-o", str(out)]) == EXIT_OK
    assert out.exists()


def test_check_reports_witnesses(neg_k5_file, capsys):
    assert main(["check", neg_k5_file, "--forbid", "neg-k3"]) == EXIT_VIOLATION
    payload = json.loads(capsys.readouterr().out)
    assert payload["member"] is False
    assert payload["forbid"] == ["neg-k3"]
    assert len(payload["witnesses"][0]["vertices"]) == 3
    assert all(1 <= v <= 5 for v in payload["witnesses"][0]["vertices"])


def test_check_member(pc_c5_file, capsys):
    assert main(["check", pc_c5_file, "--forbid", "k3neg-exact,k4m-exact,p4"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["member"] is True


def test_check_unknown_pattern(pc_c5_file):
    assert main(["check", pc_c5_file, "--forbid", "nonsense"]) == EXIT_USAGE


def test_check_missing_and_malformed_files(tmp_path, sg_file):
    assert main(["check", str(tmp_path / "missing.sg"), "--forbid", "p4"]) == EXIT_USAGE
    bad = sg_file("p sg 2 1\ne 1 5 +\n", "bad.sg")
    assert main(["check", str(bad), "--forbid", "p4"]) == EXIT_USAGE


def test_color_exact(neg_k5_file, capsys):
    assert main(["color", neg_k5_file]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "coloring"
    assert payload["num_colors"] == 3
    assert payload["valid"] is True


def test_color_thm30(pc_c5_file, neg_k5_file, capsys):
    assert main(["color", pc_c5_file, "--algo", "thm30"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["num_colors"] <= 6
    assert main(["color", neg_k5_file, "--algo", "thm30"]) == EXIT_VIOLATION


def test_color_thm20_returns_path(sg_file, capsys):
    path = sg_file("p sg 6 5\ne 1 2 +\ne 2 3 +\ne 3 4 +\ne 4 5 +\ne 5 6 +\n")
    assert main(["color", str(path), "--algo", "thm20", "--k", "2"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "path"
    assert payload["path"] == [1, 2, 3, 4]


def test_color_needs_k_and_valid_start(pc_c5_file):
    assert main(["color", pc_c5_file, "--algo", "thm20"]) == EXIT_USAGE
    assert main(["color", pc_c5_file, "--algo", "thm23", "--k", "4"]) == EXIT_USAGE
    assert main(["color", pc_c5_file, "--algo", "thm20", "--k", "2", "--start", "9"]) == EXIT_USAGE


def test_verify_list(capsys):
    assert main(["verify", "--list"]) == EXIT_OK
    assert "neg-clique-chi" in capsys.readouterr().out


def test_verify_writes_report_and_csv(tmp_path, capsys):
    out = tmp_path / "report.json"
    argv = [
        "verify", "neg-clique-chi",
        "--param", "min_i=2", "--param", "max-i=5",
        "--seed", "4", "--out", str(out), "--csv",
    ]
    assert main(argv) == EXIT_OK
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["verdict"] == "PASS"
    assert data["params"] == {"min_i": 2, "max_i": 5}
    assert len(pd.read_csv(out.with_suffix(".csv"))) == 4
    assert "neg-clique-chi: PASS" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify"],
        ["verify", "no-such-experiment"],
        ["verify", "neg-clique-chi", "--param", "min_i"],
        ["verify", "neg-clique-chi", "--param", "bogus=1"],
    ],
)
def test_verify_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_parse_params():
    assert parse_params(["count=3", "ks=[3, 4]", "name=abc", "neg-prob=0.5"]) == {
        "count": 3,
        "ks": [3, 4],
        "name": "abc",
        "neg_prob": 0.5,
    }
    with pytest.raises(BadParams):
        parse_params(["=3"])


def test_envelope_command(tmp_path, capsys):
    assert main(["envelope", "--max-n", "4"]) == EXIT_VIOLATION
    assert json.loads(capsys.readouterr().out)["found"] is False

    out = tmp_path / "envelope.sg"
    assert main(["envelope", "--max-n", "5", "-o", str(out)]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 5
    cycle = tuple(v - 1 for v in payload["cycle"])
    assert envelope_violations(read_sg(out), cycle) == []


def test_non_utf8_input_is_usage_error(tmp_path, capsys):
    path = tmp_path / "latin.sg"
    path.write_bytes(b"c \xff\xfe\np sg 2 0\n")
    assert main(["check", str(path), "--forbid", "p4"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err
