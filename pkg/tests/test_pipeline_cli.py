import json
import os

from mapfibers.cli import main
from mapfibers.mapfile import parse_map_file
from mapfibers.pipeline import PipelineOptions, run_pipeline
from mapfibers.report import SCHEMA_VERSION, dumps, render_text

from conftest import map_path

GOLDEN = os.path.join(os.path.dirname(__file__), "golden",
                      "quintic_report.json")


def test_exit_code_zero_and_schema(quintic_result):
    assert quintic_result.exit_code == 0
    rep = quintic_result.report
    assert rep["schema_version"] == SCHEMA_VERSION
    for key in ("input", "options", "hypotheses", "image", "fibers",
                "divisor_bound", "factorization", "module", "presentation",
                "surface_bounds", "timings"):
        assert key in rep, key


def test_golden_report(quintic_result):
    with open(GOLDEN, "r", encoding="utf-8") as fh:
        golden = json.load(fh)
    # timings vary run to run; everything else is exact and reproducible
    current = json.loads(dumps(quintic_result.report))
    current.pop("timings", None)
    assert current == golden


def test_hypothesis_failure_stops_early(ngf_map):
    res = run_pipeline(ngf_map)
    assert res.exit_code == 2
    assert "fibers" not in res.report
    assert res.report["hypotheses"]["generically_finite"] is False
    assert "image" in res.report


def test_shared_factor_is_a_hypothesis_failure():
    pm = parse_map_file(
        "source = x y z\nf0 = x^2\nf1 = x*y\nf2 = x*z\nf3 = x^2 + x*y\n")
    res = run_pipeline(pm)
    assert res.exit_code == 2
    assert res.report["hypotheses"]["gcd_is_one"] is False
    assert res.report["input"]["common_factor"] == "x"


def test_base_point_free_run(bpf_map):
    res = run_pipeline(bpf_map)
    assert res.exit_code == 0
    assert res.report["fibers"]["count"] == 0
    assert res.report["fibers"]["complete"] is True
    assert all(v == 0 for v in res.report["module"]["table"].values())
    assert res.report["module"]["stable_value"] == 0
    assert res.report["presentation"]["support_points"] == []
    assert res.report["presentation"]["fitting"] == ["1"]


def test_irrational_fiber_points_give_partial_inventory():
    from mapfibers.mapfile import load_map_file
    res = run_pipeline(load_map_file(map_path("irrational_fibers.map")),
                       PipelineOptions(s_max=2))
    assert res.exit_code == 3
    assert res.report["fibers"]["complete"] is False
    assert res.report["fibers"]["count"] == 6
    assert any("no rational point" in n for n in res.report["fibers"]["notes"])


def test_render_text_contains_key_lines(quintic_result):
    text = render_text(quintic_result.report)
    assert "inventory complete" in text
    assert "sum deg h_y = 8 <= nu = 8 < sd = 10: holds" in text
    assert "ranks l = 15, m = 23, n = 8" in text


def test_cli_image(capsys):
    assert main(["image", map_path("quintic_surface.map")]) == 0
    out = capsys.readouterr().out
    assert "degree 7" in out and "generically finite: True" in out


def test_cli_image_not_finite(capsys):
    assert main(["image", map_path("non_generically_finite.map")]) == 2
    assert "generically finite: False" in capsys.readouterr().out


def test_cli_cohomology(capsys):
    rc = main(["cohomology", map_path("quintic_surface.map"),
               "--mu", "-2", "--s-max", "2"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "s = 1: 8" in out and "s = 2: 10" in out


def test_cli_analyze_json(tmp_path, capsys):
    out_path = str(tmp_path / "bpf.json")
    rc = main(["analyze", map_path("base_point_free.map"),
               "--json", out_path])
    assert rc == 0
    capsys.readouterr()
    with open(out_path) as fh:
        doc = json.load(fh)
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["fibers"]["count"] == 0


def test_cli_analyze_exit_two(capsys):
    rc = main(["analyze", map_path("non_generically_finite.map")])
    capsys.readouterr()
    assert rc == 2


def test_cli_fibers(capsys):
    rc = main(["fibers", map_path("base_point_free.map")])
    out = capsys.readouterr().out
    assert rc == 0
    assert "0 point(s)" in out


def test_cli_missing_file(capsys):
    rc = main(["analyze", map_path("no_such.map")])
    err = capsys.readouterr().err
    assert rc == 1
    assert "error" in err


def test_cli_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.map"
    bad.write_text("source = x y\nf0 = x +\nf1 = y\n")
    rc = main(["analyze", str(bad)])
    err = capsys.readouterr().err
    assert rc == 1
    assert "line 2" in err
