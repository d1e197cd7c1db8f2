import json

import pytest

from weylcsm.cli import main
from weylcsm.io import ratfunc_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_constant_latex(capsys):
    code, out, _ = run(capsys, "constant", "--type", "A2", "--basis", "ssm", "--u", "1", "--v", "2", "--w", "121")
    assert code == 0
    assert out == r"-\frac{2}{(1+\alpha_1)(1+\alpha_2)(1+\alpha_1+\alpha_2)}"


def test_constant_identity(capsys):
    code, out, _ = run(capsys, "constant", "--type", "A2", "--basis", "ssm", "--u", "", "--v", "", "--w", "")
    assert (code, out) == (0, "1")


def test_constant_stable_prints_h(capsys):
    code, out, _ = run(
        capsys, "constant", "--type", "A2", "--basis", "stable", "--u", "1", "--v", "2", "--w", "121", "--format", "text"
    )
    assert code == 0 and "h" in out


def test_constant_json(capsys):
    code, out, _ = run(
        capsys, "constant", "--type", "B2", "--basis", "ssm", "--u", "1", "--v", "1", "--w", "1", "--format", "json"
    )
    rec = json.loads(out)
    assert code == 0 and rec["type"] == "B2" and rec["basis"] == "ssm"
    assert ratfunc_from_json(rec["value"]).specialize_zero() == rec["euler_limit"]


def test_cartan_file_matches_type(capsys, tmp_path):
    path = tmp_path / "a2.json"
    path.write_text("[[2,-1],[-1,2]]")
    _, by_file, _ = run(capsys, "constant", "--cartan", str(path), "--u", "1", "--v", "2", "--w", "121")
    _, by_type, _ = run(capsys, "constant", "--type", "A2", "--u", "1", "--v", "2", "--w", "121")
    assert by_file == by_type


def test_euler(capsys):
    assert run(capsys, "euler", "--type", "A2", "--u", "1", "--v", "2", "--w", "121")[:2] == (0, "-2")


def test_parabolic_requires_minimal(capsys):
    code, _, err = run(capsys, "parabolic", "--type", "A2", "--parabolic", "1", "--u", "1", "--v", "", "--w", "")
    assert code == 2 and "minimal" in err
    code, out, _ = run(capsys, "parabolic", "--type", "A2", "--parabolic", "1", "--u", "2", "--v", "2", "--w", "12")
    assert code == 0 and out


@pytest.mark.parametrize(
    "argv",
    [
        ["constant", "--type", "Z9", "--u", "", "--v", "", "--w", ""],
        ["constant", "--type", "A2", "--u", "13", "--v", "", "--w", ""],
        ["constant", "--type", "A2", "--u", "1x", "--v", "", "--w", ""],
        ["constant", "--u", "", "--v", "", "--w", ""],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "duality", "--type", "A2")
    assert code == 0 and "[36 checked]" in out
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--type", "B2")
    assert code == 0 and "[64 checked]" in out


def test_table_counts_cache_and_determinism(capsys, tmp_path):
    out1, out2, out3 = tmp_path / "a.jsonl", tmp_path / "b.jsonl", tmp_path / "c.jsonl"
    cache = tmp_path / "cache"
    assert main(["table", "--type", "A2", "--out", str(out1), "--cache-dir", str(cache)]) == 0
    lines = out1.read_text().splitlines()
    assert len(lines) == 216
    assert main(["table", "--type", "A2", "--out", str(out2), "--cache-dir", str(cache)]) == 0
    assert "216 from cache" in capsys.readouterr().err
    assert out1.read_bytes() == out2.read_bytes()
    assert main(["table", "--type", "A2", "--out", str(out3), "--jobs", "2"]) == 0
    assert out3.read_bytes() == out1.read_bytes()


def test_table_b2_count(tmp_path):
    out = tmp_path / "b2.jsonl"
    assert main(["table", "--type", "B2", "--out", str(out), "--jobs", "2"]) == 0
    assert len(out.read_text().splitlines()) == 512


def test_table_max_length(tmp_path):
    out = tmp_path / "t.jsonl"
    assert main(["table", "--type", "A2", "--max-length", "1", "--out", str(out)]) == 0
    recs = [json.loads(x) for x in out.read_text().splitlines()]
    assert recs and all(len(r["w"].split(",")) <= 1 for r in recs)


def test_cache_corruption_detected(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "cache"
    monkeypatch.setenv("WEYLCSM_CACHE", str(cache))
    out = tmp_path / "t.jsonl"
    assert main(["table", "--type", "A1", "--out", str(out)]) == 0
    victim = next(cache.rglob("*.json"))
    victim.write_text(victim.read_text().replace("ssm", "csm"))
    assert main(["table", "--type", "A1", "--out", str(out)]) == 2
    assert "corrupt" in capsys.readouterr().err


def test_unwritable_table(capsys, tmp_path):
    assert main(["table", "--type", "A1", "--out", str(tmp_path / "missing" / "t.jsonl")]) == 2
