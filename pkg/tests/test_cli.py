import json

import pytest

from radiolabel import parse_edge_list
from radiolabel.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    target = tmp_path / name
    target.write_text(text)
    return str(target)


def test_builtin_petersen(capsys):
    code, out, err = run(capsys, "builtin", "petersen")
    assert code == 0
    g = parse_edge_list(out)
    assert g.vertex_count == 10 and g.edge_count == 15


def test_builtin_to_file_round_trip(capsys, tmp_path):
    target = tmp_path / "c5.txt"
    code, out, err = run(capsys, "builtin", "cycle", "--n", "5",
                         "--out", str(target))
    assert code == 0 and out == ""
    g = parse_edge_list(target.read_text())
    assert g.vertex_count == 5 and g.edge_count == 5


def test_product_and_power(capsys, tmp_path):
    k3 = write(tmp_path, "k3.txt", "3 3\n0 1\n0 2\n1 2\n")
    p3 = write(tmp_path, "p3.txt", "3 2\n0 1\n1 2\n")
    code, out, _ = run(capsys, "product", k3, p3)
    assert code == 0
    assert parse_edge_list(out).edge_count == 15
    code, out, _ = run(capsys, "power", k3, "--t", "2")
    assert code == 0
    assert parse_edge_list(out).edge_count == 18


def test_order_knt_shapes(capsys):
    code, out, _ = run(capsys, "order-knt", "--n", "3", "--t", "2")
    assert code == 0
    data = json.loads(out)
    assert data["order"][:4] == [[0, 0], [1, 1], [2, 2], [0, 1]]
    code, out, _ = run(capsys, "order-knt", "--n", "3", "--t", "2", "--flat")
    data = json.loads(out)
    assert data["order"] == [0, 4, 8, 1, 5, 6, 2, 3, 7]


def test_order_knt_methods_agree(capsys):
    _, a, _ = run(capsys, "order-knt", "--n", "4", "--t", "3")
    _, b, _ = run(capsys, "order-knt", "--n", "4", "--t", "3",
                  "--method", "recursive")
    assert json.loads(a)["order"] == json.loads(b)["order"]


def test_induce_verify_pipeline(capsys, tmp_path):
    k3 = write(tmp_path, "k3.txt", "3 3\n0 1\n0 2\n1 2\n")
    code, power_out, _ = run(capsys, "power", k3, "--t", "2")
    power_file = write(tmp_path, "k3p2.txt", power_out)
    code, order_out, _ = run(capsys, "order-knt", "--n", "3", "--t", "2")
    order_file = write(tmp_path, "order.json", order_out)
    labeling_file = str(tmp_path / "labeling.json")
    code, out, _ = run(capsys, "induce", power_file, order_file,
                       "--out", labeling_file)
    assert code == 0
    assert "span 9" in out and "consecutive: true" in out
    code, out, _ = run(capsys, "verify", power_file, labeling_file)
    assert code == 0
    assert out.startswith("valid")


def test_induce_json_format(capsys, tmp_path):
    p3 = write(tmp_path, "p3.txt", "3 2\n0 1\n1 2\n")
    order_file = write(tmp_path, "order.json", '{"order": [0, 2, 1]}\n')
    code, out, _ = run(capsys, "induce", p3, order_file, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["labels"] == [1, 4, 2]
    assert data["span"] == 4
    assert data["consecutive"] is False


def test_verify_invalid_exits_one(capsys, tmp_path):
    p3 = write(tmp_path, "p3.txt", "3 2\n0 1\n1 2\n")
    bad = write(tmp_path, "bad.json", '{"labels": [1, 2, 3], "span": 3}\n')
    code, out, _ = run(capsys, "verify", p3, bad)
    assert code == 1
    assert "invalid" in out
    code, out, _ = run(capsys, "verify", p3, bad, "--all-violations")
    assert out.count("required") == 2
    code, out, _ = run(capsys, "verify", p3, bad, "--format", "json")
    assert code == 1
    assert json.loads(out)["valid"] is False


def test_verify_with_k_flag(capsys, tmp_path):
    p3 = write(tmp_path, "p3.txt", "3 2\n0 1\n1 2\n")
    lab = write(tmp_path, "lab.json", '{"labels": [1, 2, 3]}\n')
    code, out, _ = run(capsys, "verify", p3, lab, "--k", "1")
    assert code == 0 and out.startswith("valid")


def test_radio_number_table_and_json(capsys, tmp_path):
    c4 = write(tmp_path, "c4.txt", "4 4\n0 1\n0 3\n1 2\n2 3\n")
    code, out, _ = run(capsys, "radio-number", c4)
    assert code == 0
    assert "span" in out and "5" in out
    code, out, _ = run(capsys, "radio-number", c4, "--format", "json")
    data = json.loads(out)
    assert data["span"] == 5
    assert data["ordering"] == [0, 2, 1, 3]
    code, out2, _ = run(capsys, "radio-number", c4, "--format", "json")
    assert out == out2  # byte-for-byte deterministic
    code, out3, _ = run(capsys, "radio-number", c4, "--format", "json",
                        "--no-prune")
    assert json.loads(out3)["span"] == 5


def test_radio_number_guard_suggests_search(capsys, tmp_path):
    code, out, _ = run(capsys, "builtin", "petersen")
    pet = write(tmp_path, "pet.txt", out)
    code, out, err = run(capsys, "radio-number", pet)
    assert code == 1
    assert "search-consecutive" in err


def test_search_consecutive(capsys, tmp_path):
    code, out, _ = run(capsys, "builtin", "petersen")
    pet = write(tmp_path, "pet.txt", out)
    code, out, _ = run(capsys, "search-consecutive", pet, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "witness-found"
    assert data["span"] == 10
    c4 = write(tmp_path, "c4.txt", "4 4\n0 1\n0 3\n1 2\n2 3\n")
    code, out, _ = run(capsys, "search-consecutive", c4)
    assert code == 0
    assert "exhausted-no-witness" in out


def test_threshold_params(capsys):
    code, out, _ = run(capsys, "threshold", "--n", "3", "--diam", "1",
                       "--t", "5")
    assert code == 0
    assert "s 5" in out
    assert "no-consecutive" in out
    code, out, _ = run(capsys, "threshold", "--n", "10", "--diam", "2",
                       "--format", "json")
    data = json.loads(out)
    assert data["s"] == 71
    assert data["closed_form_s"] is None


def test_threshold_from_graph(capsys, tmp_path):
    k4 = write(tmp_path, "k4.txt",
               "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, out, _ = run(capsys, "threshold", "--graph", k4,
                       "--t", "3", "--t", "7", "--t", "11")
    assert code == 0
    assert "has-consecutive" in out
    assert "unknown" in out
    assert "no-consecutive" in out


def test_threshold_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["threshold"])
    assert info.value.code == 2
    k4 = write(tmp_path, "k4.txt", "2 1\n0 1\n")
    with pytest.raises(SystemExit) as info:
        main(["threshold", "--graph", k4, "--n", "2"])
    assert info.value.code == 2
    capsys.readouterr()


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as info:
        main(["builtin", "petersen", "--frobnicate"])
    assert info.value.code == 2
    capsys.readouterr()


def test_disconnected_file_reports_error(capsys, tmp_path):
    bad = write(tmp_path, "bad.txt", "4 2\n0 1\n2 3\n")
    code, out, err = run(capsys, "radio-number", bad)
    assert code == 1
    assert "disconnected" in err


def test_missing_file_reports_error(capsys):
    code, out, err = run(capsys, "radio-number", "/nonexistent/graph.txt")
    assert code == 1
    assert "error" in err


def test_threads_flag_accepted(capsys, tmp_path):
    c4 = write(tmp_path, "c4.txt", "4 4\n0 1\n0 3\n1 2\n2 3\n")
    code, a, _ = run(capsys, "radio-number", c4, "--threads", "4",
                     "--format", "json")
    assert code == 0
    _, b, _ = run(capsys, "radio-number", c4, "--threads", "1",
                  "--format", "json")
    assert a == b
    with pytest.raises(SystemExit) as info:
        main(["radio-number", c4, "--threads", "0"])
    assert info.value.code == 2
    capsys.readouterr()
