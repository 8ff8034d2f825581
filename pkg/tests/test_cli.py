import argparse
import csv
import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from intertwining.cli import main, parse_sweep, project, rational, triple
from intertwining.systems import Ell, System


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parsers():
    assert rational("-3/7") == rational("-6/14")
    assert triple("1,0,-4") == Ell(1, 0, -4)
    assert parse_sweep("q=1..3", System.SPHERE) == [Ell(0, 0, q) for q in (1, 2, 3)]
    assert parse_sweep("1,0,-4;0,0,-3", System.HYPERBOLOID) == [Ell(1, 0, -4), Ell(0, 0, -3)]
    with pytest.raises(argparse.ArgumentTypeError):
        parse_sweep("q=1..3", System.HYPERBOLOID)
    assert project((0, 0, 0)) == (0.0, 0.0)


def test_verify_passes_and_is_byte_identical(capsys):
    a = run(capsys, "verify", "--system", "hyperboloid", "--l", "1,0,-4")
    b = run(capsys, "verify", "--system", "hyperboloid", "--l", "1,0,-4")
    assert a[0] == 0 and a[1] == b[1]
    doc = json.loads(a[1])
    assert all(e["pass"] for e in doc["entries"]) and "wall_time" not in doc


def test_verify_empty_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--system", "sphere", "--sweep", "")
    assert code == 0 and json.loads(out)["entries"] == []


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--system", "hyperboloid", "--l", "a,b,c")[0] == 2
    assert run(capsys, "lattice", "--so6", "q=1/2")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--system", "hyperboloid", "--l", "0,0,-9")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0][0] == "system" and len(rows) == 5 and rows[1][5] == "-195/4"


def test_lattice_json_counts(capsys):
    for q, n in [(0, 1), (1, 6), (3, 44)]:
        code, out, _ = run(capsys, "lattice", "--so6", f"q={q}")
        doc = json.loads(out)
        assert code == 0 and len(doc["points"]) == n
    out = run(capsys, "lattice", "--so6", "q=3")[1]
    assert sum(p["mult"] for p in json.loads(out)["points"]) == 50


def test_lattice_svg_markers(capsys):
    code, out, _ = run(capsys, "lattice", "--su21", "base=1,0,-4", "--cmax", "1", "--format", "svg")
    root = ET.fromstring(out)
    circles = [c for c in root.iter("{http://www.w3.org/2000/svg}circle") if c.get("class") == "state"]
    assert code == 0 and len(circles) == 5
    code, out, _ = run(capsys, "plot", "--so6", "q=1")
    assert code == 0 and out.count('class="state"') == 6


def test_orbit_outputs(capsys):
    code, out, _ = run(capsys, "orbit", "--E", "20", "--steps", "50")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 50
    hs = [float(r["H"]) for r in rows]
    assert max(hs) - min(hs) < 1e-5
    assert run(capsys, "orbit", "--E", "20", "--steps", "0")[1].strip() == "t,phi1,phi2,H,Q1,Q2,Q3"
    code, out, _ = run(capsys, "plot", "--E", "20")
    assert code == 0 and "<polyline" in out


def test_orbit_violation_exit(capsys):
    code, _, err = run(capsys, "orbit", "--E", "8")
    assert code == 3 and "E >= " in err


def test_out_file(tmp_path, capsys):
    path = tmp_path / "l.csv"
    assert main(["lattice", "--su3", "1,0", "--format", "csv", "--out", str(path)]) == 0
    assert len(path.read_text().splitlines()) == 4


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "intertwining.cli", "lattice", "--su2", "1,0"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and len(json.loads(r.stdout)["points"]) == 2
