import json

from cyclads.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_inv(capsys):
    code, out, _ = run(capsys, "inv", "--perm", "3,2,1")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "inv", "--perm", "1,2,3")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(
        capsys,
        "inv",
        "--perm", "10,9,8,7,6,5,4,3,2,1",
        "--dv=-1,-3,5,3,1,-1,-3,-5,3,1",
    )
    assert code == 0 and out.strip() == "21"


def test_inv_errors(capsys):
    code, _, err = run(capsys, "inv", "--perm", "1,1,2")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "inv", "--perm", "2,1", "--dv", "1,1")
    assert code == 2


def test_optimal_dv(capsys):
    code, out, _ = run(capsys, "optimal-dv", "--perm", "1,2,3,4")
    assert code == 0 and json.loads(out) == [0, 0, 0, 0]


def test_enum_counts(capsys):
    code, out, _ = run(capsys, "enum", "--perm", "1,2,3", "--mode", "all", "--count")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(
        capsys, "enum", "--perm", "4,2,6,1,5,3", "--mode", "dvs", "--count"
    )
    assert code == 0 and out.strip() == "6"
    code, out, _ = run(
        capsys,
        "enum", "--perm", "3,2,1,4", "--mode", "lotteries", "--dv", "2,0,-2,0",
        "--count",
    )
    assert code == 0 and out.strip() == "2"


def test_enum_streams_json_lines(capsys):
    code, out, _ = run(
        capsys, "enum", "--perm", "3,2,1,4", "--mode", "lotteries", "--dv", "2,0,-2,0"
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert {tuple(obj["word"]) for obj in lines} == {(1, 2, 1), (2, 1, 2)}
    code, out, _ = run(capsys, "enum", "--perm", "2,1", "--mode", "dvs")
    # prepostorder: the odd-depth child precedes the even-depth root
    assert [json.loads(line) for line in out.strip().splitlines()] == [[-1, 1], [1, -1]]


def test_enum_requires_dv_for_lotteries(capsys):
    code, _, err = run(capsys, "enum", "--perm", "2,1", "--mode", "lotteries")
    assert code == 2 and "requires --dv" in err
    code, _, err = run(
        capsys, "enum", "--perm", "2,1", "--mode", "lotteries", "--dv", "0,0"
    )
    assert code == 2 and "not a valid displacement vector" in err


def test_reconfigure_dv(capsys):
    code, out, _ = run(
        capsys,
        "reconfigure", "--kind", "dv", "--perm", "4,2,6,1,5,3",
        "--from=-3,0,-3,3,0,3", "--to=-3,0,3,-3,0,3",
    )
    assert code == 0
    payload, length = out.strip().splitlines()
    assert json.loads(payload)["steps"] == [{"contract": [4, 3]}]
    assert length == "length 1"


def test_reconfigure_identical(capsys):
    code, out, _ = run(
        capsys,
        "reconfigure", "--kind", "dv", "--perm", "2,1",
        "--from", "1,-1", "--to", "1,-1",
    )
    assert code == 0 and out.strip().splitlines()[1] == "length 0"


def test_reconfigure_lottery(capsys):
    code, out, _ = run(
        capsys,
        "reconfigure", "--kind", "lottery",
        "--from", '{"n":4,"word":[1,2,1]}', "--to", '{"n":4,"word":[2,1,2]}',
    )
    assert code == 0
    assert json.loads(out.strip().splitlines()[0])["steps"] == [{"braid": [1, 2, 3]}]


def test_reconfigure_unreachable(capsys):
    # two optimal lotteries of the same permutation with different vectors
    code, out, err = run(
        capsys,
        "reconfigure", "--kind", "lottery",
        "--from", '{"n":6,"word":[2,6,1,5,2,4,5,6]}',
        "--to", '{"n":6,"word":[3,6,2,5,1,4,2,5]}',
    )
    assert code == 3 and "unreachable" in err


def test_render(tmp_path, capsys):
    out_path = tmp_path / "lot.svg"
    code, _, _ = run(capsys, "render", '{"n":2,"word":[2]}', "--out", str(out_path))
    assert code == 0
    svg = out_path.read_text()
    assert svg.startswith("<svg") and svg.count('stroke-width="2"') == 2
    again = tmp_path / "lot2.svg"
    run(capsys, "render", '{"n":2,"word":[2]}', "--out", str(again))
    assert again.read_bytes() == out_path.read_bytes()


def test_render_empty(tmp_path, capsys):
    out_path = tmp_path / "empty.svg"
    code, _, _ = run(capsys, "render", '{"n":4,"word":[]}', "--out", str(out_path))
    assert code == 0
    assert out_path.read_text().count('stroke-width="1"') == 4


def test_render_from_file(tmp_path, capsys):
    src = tmp_path / "in.json"
    src.write_text('{"n":3,"word":[1]}')
    out_path = tmp_path / "out.svg"
    code, _, _ = run(capsys, "render", f"@{src}", "--out", str(out_path))
    assert code == 0 and out_path.exists()


def test_verify_pass_and_reports(tmp_path, capsys):
    code, out, err = run(
        capsys, "verify", "reverse-identity", "--max-n", "5",
        "--report-dir", str(tmp_path),
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines and all(obj["ok"] for obj in lines)
    assert (tmp_path / "reverse-identity.tsv").exists()
    assert (tmp_path / "reverse-identity.png").exists()
    header = (tmp_path / "reverse-identity.tsv").read_text().splitlines()[0]
    assert header == "instance\texpected\tactual\tok"


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2 and "unknown suite" in err


def test_usage_error_exit_code(capsys):
    assert run(capsys, "nonsense")[0] == 2


def test_deterministic_output(capsys):
    a = run(capsys, "enum", "--perm", "4,2,6,1,5,3", "--mode", "dvs")
    b = run(capsys, "enum", "--perm", "4,2,6,1,5,3", "--mode", "dvs")
    assert a == b
