import csv
import io
import json
import subprocess
import sys

import pytest

from mpmspread.cli import FIELDS, main, parse_grid, read_records

FAST = ["--samples", "1000"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_grid_parsing():
    assert parse_grid("0:180:5")[-1] == 180.0
    assert len(parse_grid("0:180:5")) == 37
    assert parse_grid("-180:180:30") == [float(x) for x in range(-180, 181, 30)]


def test_run_emits_one_record(capsys):
    code, out, _ = run_cli(capsys, "run", "--scenario", "Sc5", "--tdl", "TDL-B", *FAST)
    assert code == 0
    (row,) = rows(out)
    assert list(row) == FIELDS
    assert (row["scenario"], row["tdl"], row["ds_ns"], row["distance_m"]) == ("Sc5", "TDL-B", "61", "100")
    assert row["as_rx_output_deg"] == ""
    assert 0 < float(row["as_reception_deg"]) <= 180


def test_sweep_alpha_default_grid(capsys):
    code, out, _ = run_cli(capsys, "sweep-alpha", *FAST)
    assert code == 0
    got = rows(out)
    assert len(got) == 37
    assert [float(r["alpha_t_deg"]) for r in got] == parse_grid("0:180:5")


def test_sweep_ds_defaults_to_family(capsys):
    code, out, _ = run_cli(capsys, "sweep-ds", "--scenario", "Sc6", *FAST)
    assert code == 0
    assert [r["ds_ns"] for r in rows(out)] == ["30", "61", "297"]


def test_table_and_jsonl(capsys, tmp_path):
    out_file = tmp_path / "t.jsonl"
    code, _, _ = run_cli(capsys, "table", "--format", "jsonl", "--output", str(out_file), *FAST)
    assert code == 0
    recs = [json.loads(line) for line in out_file.read_text().splitlines()]
    assert len(recs) == 44
    assert isinstance(recs[0]["as_reception_deg"], float)
    assert recs[0]["as_rx_output_deg"] is None


def test_rx_output_table_has_output_spread(capsys):
    code, out, _ = run_cli(capsys, "table", "--which", "rx-output", *FAST)
    assert code == 0
    got = rows(out)
    assert len(got) == 44
    assert all(r["rx_kind"] == r["tx_kind"] for r in got)
    assert all(float(r["as_rx_output_deg"]) > 0 for r in got)


def test_csv_round_trip(capsys, tmp_path):
    path = tmp_path / "r.csv"
    main(["run", "--tx", "wba", "--rx", "nba", "--output", str(path), *FAST])
    (rec,) = read_records(str(path))
    assert rec["tx_kind"] == "wba" and rec["rx_kind"] == "nba"
    assert rec["seed"] == 42
    assert isinstance(rec["as_rx_output_deg"], float)


def test_same_seed_same_bytes(capsys):
    argv = ["sweep-alpha", "--grid", "0:180:90", "--seed", "9", *FAST]
    _, a, _ = run_cli(capsys, *argv)
    _, b, _ = run_cli(capsys, *argv)
    assert a == b


def test_no_negative_zero(capsys):
    _, out, _ = run_cli(capsys, "run", *FAST)
    assert "-0.000000" not in out


@pytest.mark.parametrize("argv", [
    ["run", "--tx", "bogus"],
    ["run", "--samples", "many"],
    ["sweep-alpha", "--grid", "5:0:1"],
    ["run", "--tx", "custom"],
    ["run", "--tx-hpbw", "10"],
    ["plotdata"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


@pytest.mark.parametrize("argv", [
    ["run", "--scenario", "Sc99"],
    ["run", "--samples", "10"],
    ["run", "--kappa", "-1"],
    ["plotdata", "--input", "/nonexistent/records.csv"],
])
def test_runtime_errors_exit_1(capsys, argv):
    assert main(argv) == 1
    assert "error" in capsys.readouterr().err


def test_config_file_presets(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("# preset\nscenario = Sc8\ntdl = TDL-B\nsamples = 1000\n")
    code, out, _ = run_cli(capsys, "run", "--config", str(cfg))
    assert code == 0
    (row,) = rows(out)
    assert (row["scenario"], row["tdl"]) == ("Sc8", "TDL-B")
    # command-line flags win over the file
    _, out, _ = run_cli(capsys, "run", "--config", str(cfg), "--scenario", "Sc2")
    assert rows(out)[0]["scenario"] == "Sc2"


def test_config_file_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("flux = 3\n")
    assert main(["run", "--config", str(cfg)]) == 2


def test_plotdata_from_figure(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "plotdata", "--figure", "2", "--grid", "0:180:90", "--outdir",
                           str(tmp_path), *FAST)
    assert code == 0
    files = sorted(tmp_path.iterdir())
    assert [f.name for f in files] == [f"fig02_{s}_TDL-A_nba.dat" for s in ("Sc1", "Sc2", "Sc3")]
    lines = files[0].read_text().splitlines()
    assert lines[0].startswith("#")
    assert [float(x.split()[0]) for x in lines[1:]] == [0.0, 90.0, 180.0]


def test_plotdata_figure_10(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "plotdata", "--figure", "10", "--outdir", str(tmp_path), *FAST)
    assert code == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert len(files) == 4
    assert all(f.startswith("fig10_") and f.endswith("_TDL-A_wba.dat") for f in files)


def test_plotdata_from_records(capsys, tmp_path):
    records = tmp_path / "sweep.csv"
    main(["sweep-alpha", "--grid", "0:180:60", "--output", str(records), *FAST])
    code, out, _ = run_cli(capsys, "plotdata", "--input", str(records), "--outdir", str(tmp_path / "o"))
    assert code == 0
    (name,) = out.split()
    data = open(name).read().splitlines()[1:]
    assert len(data) == 4


def test_plotdata_empty_input(capsys, tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    assert main(["plotdata", "--input", str(empty), "--outdir", str(tmp_path)]) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mpmspread", "run", *FAST], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("scenario,")
