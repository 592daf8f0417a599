"""Command-line surface: documents, schema, CSV shape, exit codes."""

import csv
import json
import subprocess
import sys

import pytest
from jsonschema import validate

from dubinseq.cli import bench_seed, build_parser, main

SOLUTION_SCHEMA = {
    "type": "object",
    "required": ["cost", "chosen", "candidates", "lb", "headings", "segments"],
    "properties": {
        "cost": {"type": "number", "exclusiveMinimum": 0},
        "chosen": {"enum": ["F1", "F2", "F3"]},
        "candidates": {
            "type": "object",
            "required": ["F1", "F2", "F3"],
            "additionalProperties": {
                "type": "object",
                "required": ["cost", "headings", "pieces"],
            },
        },
        "lb": {
            "type": "object",
            "required": ["euclidean", "grid_proxy", "guaranteed"],
            "properties": {
                "euclidean": {"type": "number"},
                "grid_proxy": {"type": "number"},
                "guaranteed": {
                    "type": "object",
                    "required": ["euclidean", "grid_proxy"],
                    "properties": {
                        "euclidean": {"const": True},
                        "grid_proxy": {"const": False},
                    },
                },
            },
        },
        "headings": {"type": "array", "items": {"type": "number"}},
        "segments": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "extent"],
                "properties": {
                    "kind": {"enum": ["L", "R", "S"]},
                    "extent": {"type": "number", "minimum": 0},
                },
            },
        },
    },
}

CSV_HEADER = (
    "n,theoretical_bound,max_ratio,avg_ratio,avg_runtime_ms,"
    "max_ratio_guaranteed,avg_ratio_guaranteed"
)


def test_gen_then_solve_validates_schema(tmp_path):
    inst = tmp_path / "a.json"
    sol = tmp_path / "sol.json"
    assert main(["gen", "--n", "6", "--rho", "100", "--seed", "7", "-o", str(inst)]) == 0
    assert main(["solve", str(inst), "-o", str(sol)]) == 0
    doc = json.loads(sol.read_text())
    validate(doc, SOLUTION_SCHEMA)
    assert len(doc["headings"]) == 6
    assert doc["cost"] == min(c["cost"] for c in doc["candidates"].values())


def test_solve_svg_has_three_candidate_groups(tmp_path):
    inst = tmp_path / "a.json"
    out = tmp_path / "p.svg"
    main(["gen", "--n", "5", "--rho", "50", "--seed", "3", "-o", str(inst)])
    assert main(["solve", str(inst), "-o", str(tmp_path / "s.json"), "--svg", str(out)]) == 0
    svg = out.read_text()
    for needle in ('id="F1"', 'id="F2"', 'id="F3"', 'id="waypoints"', "<circle", ">p1<", ">p5<"):
        assert needle in svg
    assert svg.startswith("<svg ")


def test_svg_is_deterministic(tmp_path):
    inst = tmp_path / "a.json"
    main(["gen", "--n", "4", "--rho", "50", "--seed", "11", "-o", str(inst)])
    outs = []
    for name in ("x.svg", "y.svg"):
        main(["solve", str(inst), "-o", str(tmp_path / "s.json"), "--svg", str(tmp_path / name)])
        outs.append((tmp_path / name).read_bytes())
    assert outs[0] == outs[1]


def test_lb_document(tmp_path, capsys):
    inst = tmp_path / "a.json"
    main(["gen", "--n", "5", "--rho", "80", "--seed", "2", "-o", str(inst)])
    assert main(["lb", str(inst)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["euclidean"] <= doc["grid_upper"]
    assert doc["grid_proxy"] <= doc["grid_upper"]
    assert doc["guaranteed"] == {"euclidean": True, "grid_proxy": False}


def test_solve_default_eps_and_intervals():
    parser = build_parser()
    args = parser.parse_args(["solve", "x.json"])
    assert args.eps == 1e-4
    assert args.intervals == 32
    bench = parser.parse_args(["bench"])
    assert bench.sizes == "12,15,18,21,24,27,30"
    assert bench.count == 100
    assert bench.rho == 100.0


def test_bench_csv_shape(tmp_path, capsys):
    assert main(["bench", "--sizes", "3,6", "--count", "4", "--rho", "60",
                 "--seed", "9", "--intervals", "16"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 3
    rows = list(csv.DictReader(out.splitlines()))
    for row in rows:
        assert row["theoretical_bound"] == "2.0472"
        mx, av = float(row["max_ratio"]), float(row["avg_ratio"])
        assert mx >= av >= 1.0
        assert float(row["max_ratio_guaranteed"]) >= float(row["avg_ratio_guaranteed"]) >= 1.0
        assert float(row["avg_runtime_ms"]) >= 0.0
    assert [r["n"] for r in rows] == ["3", "6"]


def test_bench_reproducible_without_timing(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for path in (a, b):
        assert main(["bench", "--sizes", "4,5", "--count", "3", "--rho", "70",
                     "--seed", "5", "--intervals", "8", "--no-timing", "--csv", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r\n" in a.read_bytes()  # RFC-4180 line endings survive the file write
    # a chart lands next to each csv
    assert (tmp_path / "a.png").stat().st_size > 1000


def test_bench_seed_derivation_is_injective():
    seen = set()
    for n in (12, 15, 30):
        for rep in range(100):
            s = bench_seed(1, n, rep)
            assert s not in seen
            seen.add(s)
    assert bench_seed(2, 12, 0) != bench_seed(1, 12, 0)


def test_missing_instance_file_exits_1(capsys):
    assert main(["solve", "/definitely/not/here.json"]) == 1
    assert "error:" in capsys.readouterr().err


def test_malformed_instance_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rho": 1.0}')
    assert main(["solve", str(bad)]) == 1
    assert "error:" in capsys.readouterr().err


def test_infeasible_instance_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rho": 100.0, "points": [[0,0],[50,0],[400,0]]}')
    assert main(["lb", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "error:" in err and "2*rho" in err


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["solve"])  # missing the instance argument
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "dubinseq", "gen", "--n", "3", "--rho", "1", "--seed", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert len(doc["points"]) == 3
