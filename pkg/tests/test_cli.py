import json
import subprocess
import sys

import pytest

from defectscope.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_chartab_text_and_json(capsys):
    code, out, _ = run(capsys, "chartab", "--group", "sym(3)")
    assert code == 0 and "k(G) = 3" in out
    code, out, _ = run(capsys, "chartab", "--group", "sym(4)", "--method", "mn", "--json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 24 and len(data["values"]) == 5


def test_chartab_ingest(capsys, tmp_path):
    from defectscope.chartab import mn_table, write_table
    path = tmp_path / "s4.json"
    write_table(mn_table(4), path)
    code, out, _ = run(capsys, "chartab", "--group", "sym(4)", "--method", "ingest", "--table", str(path))
    assert code == 0 and "method ingest" in out


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "--group", "alt(4)", "--p", "3")
    assert code == 0 and "2 blocks" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--group", "alt(5)", "--p", "5", "--json")
    data = json.loads(out)
    assert code == 0 and data["exotic"] and data["blocks"][0]["verdict"] == "Exotic"


def test_classify_writes_csv_and_figures(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "--group", "sl23", "--p", "2", "--out-dir", str(tmp_path))
    assert code == 0 and "KD" in out
    assert (tmp_path / "blocks.csv").read_text().splitlines()[1].startswith("sl23,2,0,1,3,8,7,4,5,")
    assert (tmp_path / "kb_vs_kd.png").stat().st_size > 1000
    assert (tmp_path / "verdicts.png").stat().st_size > 1000


def test_dade_table(capsys):
    code, out, _ = run(capsys, "dade", "--p", "7", "--d", "1")
    assert code == 0
    assert len(out.strip().splitlines()) == 2 + 4
    code, out, _ = run(capsys, "dade", "--p", "5", "--d", "1", "--e", "2", "--json")
    assert json.loads(out) == [{"p": 5, "d": 1, "e": 2, "predicted_k": 4, "k_D": 5,
                                "strong": False, "congruent": False}]


def test_dade_bad_e_is_an_error(capsys):
    code, _, err = run(capsys, "dade", "--p", "7", "--d", "1", "--e", "4")
    assert code == 1 and "NonDivisor" in err


def test_scan_empty_corpus(capsys, tmp_path):
    corpus = tmp_path / "empty.json"
    corpus.write_text("[]")
    code, out, _ = run(capsys, "scan", "--corpus", str(corpus))
    assert code == 0 and "0 errors" in out


def test_scan_bundle(capsys, tmp_path):
    corpus = tmp_path / "c.json"
    corpus.write_text(json.dumps([{"group": "alt(5)", "primes": [2, 5]}, {"group": "bogus", "primes": [2]}]))
    out_dir = tmp_path / "out"
    code, out, _ = run(capsys, "scan", "--corpus", str(corpus), "--out-dir", str(out_dir),
                       "--checkpoint", str(tmp_path / "ck.jsonl"))
    assert code == 0 and "1 errors" in out and "error in group" in out
    report = json.loads((out_dir / "report.json").read_text())
    assert report["counts"]["Exotic"] == 1
    rows = (out_dir / "blocks.csv").read_text().splitlines()
    assert rows[0].startswith("group,p,block") and len(rows) == 1 + 2 + 2
    assert (out_dir / "kb_vs_kd.png").exists() and (out_dir / "verdicts.png").exists()


def test_pipeline_error_exit_code(capsys):
    code, _, err = run(capsys, "classify", "--group", "nonsense", "--p", "2")
    assert code == 1 and "group stage failed" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "defectscope", "dade", "--p", "3", "--d", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "congruent" in res.stdout


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
