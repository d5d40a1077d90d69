"""CLI surface: subcommands, flags, exit codes, output discipline."""

from __future__ import annotations

import json
from pathlib import Path

from roughconcepts.cli import run_cli

DATA = Path(__file__).parent / "data"
CONTEXT = ["--context", str(DATA / "living.cxt")]
PARTITION = ["--partition", str(DATA / "living_partition.txt")]


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lattice_listing(capsys):
    code, out, _ = run(capsys, "lattice", *CONTEXT)
    assert code == 0
    assert out.startswith("concepts 19\n")
    assert "covers 32" in out


def test_report_concept_counts(capsys):
    code, out, _ = run(capsys, "report", *CONTEXT, *PARTITION)
    assert code == 0
    report = json.loads(out)
    sizes = [len(report["lattices"][k]["concepts"]) for k in ("base", "upper", "lower")]
    assert sizes == [19, 9, 10]
    assert report["definable_attributes"] == ["nw", "lw", "nc", "mo", "sk"]
    assert len(report["kernels"]["possibility"]) == 9
    assert len(report["kernels"]["necessity"]) == 10
    non_singleton = [c for c in report["rough_classes"] if len(c["members"]) > 1]
    assert len(non_singleton) == 2


def test_report_with_rules(capsys):
    code, out, _ = run(capsys, "report", *CONTEXT, *PARTITION, "--rule", "lb=>ll", "--rule", "lb=>sk")
    assert code == 0
    rules = json.loads(out)["rules"]
    assert rules[0]["measure"]["value"] == "2/3"
    assert rules[0]["holds"] is False
    assert rules[0]["possible"] is True
    assert rules[1]["measure"]["value"] == "1/3"
    assert rules[1]["certain"] is True


def test_rules_measure(capsys):
    code, out, _ = run(capsys, "rules", *CONTEXT, *PARTITION, "--premise", "lb", "--conclusion", "ll", "--measure")
    assert (code, out) == (0, "2/3\n")


def test_rules_measure_undefined(capsys):
    code, out, _ = run(capsys, "rules", *CONTEXT, "--premise", "2lg,1lg", "--conclusion", "nw", "--measure")
    assert (code, out) == (0, "undefined\n")


def test_rules_modalities(capsys):
    assert run(capsys, "rules", *CONTEXT, *PARTITION, "--premise", "lb", "--conclusion", "ll")[1] == "false\n"
    assert run(capsys, "rules", *CONTEXT, *PARTITION, "--premise", "lb", "--conclusion", "ll", "--possible")[1] == "true\n"
    assert run(capsys, "rules", *CONTEXT, *PARTITION, "--premise", "lb", "--conclusion", "sk", "--certain")[1] == "true\n"


def test_definable(capsys):
    code, out, _ = run(capsys, "definable", *CONTEXT, *PARTITION)
    assert (code, out) == (0, "nw,lw,nc,mo,sk\n")


def test_definable_via_partition_by(capsys):
    code, out, _ = run(capsys, "definable", *CONTEXT, "--partition-by", "lw,nc")
    assert (code, out) == (0, "nw,lw,nc,mo,sk\n")


def test_definable_via_embedded_partition(capsys):
    code, out, _ = run(capsys, "definable", "--context", str(DATA / "living.json"))
    assert (code, out) == (0, "nw,lw,nc,mo,sk\n")


def test_approx_matches_expected_matrix(capsys, living_space, living_upper):
    from roughconcepts import parse_context

    code, out, _ = run(capsys, "approx", *CONTEXT, *PARTITION, "--mode", "upper")
    assert code == 0
    assert parse_context(out, "cxt").context == living_upper


def test_extent_free_vs_strict(capsys):
    free = run(capsys, "extent", *CONTEXT, *PARTITION, "--attrs", "2lg,1lg", "--approx", "upper")
    assert free[0:2] == (0, "Bn,Mz\n")
    strict = run(capsys, "extent", *CONTEXT, *PARTITION, "--attrs", "2lg,1lg", "--approx", "upper", "--strict-upper")
    assert strict[0:2] == (0, "\n")
    base = run(capsys, "extent", *CONTEXT, "--attrs", "lb")
    assert base[0:2] == (0, "Br,Fr,Dg\n")
    lower = run(capsys, "extent", *CONTEXT, *PARTITION, "--attrs", "lb", "--approx", "lower")
    assert lower[0:2] == (0, "Dg\n")


def test_assignments(capsys):
    code, out, _ = run(capsys, "assignments", *CONTEXT, *PARTITION)
    assert code == 0
    data = json.loads(out)
    assert len(data["to_upper"]) == 19
    assert len(data["kernels"]["possibility"]) == 9
    assert len(data["kernels"]["necessity"]) == 10


def test_rough_classes(capsys):
    code, out, _ = run(capsys, "rough-classes", *CONTEXT, *PARTITION)
    assert code == 0
    classes = json.loads(out)
    members = sorted(i for cls in classes for i in cls["members"])
    assert members == list(range(19))


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", *CONTEXT, "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("label=") == 19
    code, out, _ = run(capsys, "export", *CONTEXT, *PARTITION, "--dot", "--which", "upper", "--labeling", "reduced")
    assert code == 0
    assert out.count("label=") == 9


# ── errors and exit codes ───────────────────────────────────────────


def test_usage_errors(capsys):
    code, out, err = run(capsys, "definable", *CONTEXT)  # no partition
    assert code == 1 and out == "" and err.startswith("error: usage:")
    code, out, err = run(capsys, "lattice")  # missing --context
    assert code == 1 and out == ""
    code, out, err = run(capsys, "frobnicate", *CONTEXT)
    assert code == 1
    code, out, err = run(capsys, "definable", *CONTEXT, *PARTITION, "--partition-by", "lw")
    assert code == 1


def test_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.cxt"
    bad.write_text("not a context\n")
    code, out, err = run(capsys, "lattice", "--context", str(bad))
    assert code == 2 and out == "" and err.startswith("error: parse:")
    code, out, err = run(capsys, "lattice", "--context", str(tmp_path / "missing.cxt"))
    assert code == 2 and out == ""


def test_format_inference_failure(capsys, tmp_path):
    mystery = tmp_path / "context.dat"
    mystery.write_text("B\n\n0\n0\n\n")
    code, _, err = run(capsys, "lattice", "--context", str(mystery))
    assert code == 1
    code, out, _ = run(capsys, "lattice", "--context", str(mystery), "--format", "cxt")
    assert code == 0 and out.startswith("concepts 1")


def test_semantic_errors(capsys):
    code, out, err = run(capsys, "definable", *CONTEXT, "--partition-by", "nope")
    assert code == 3 and out == "" and err.startswith("error: semantic:")
    code, out, err = run(capsys, "rules", *CONTEXT, "--premise", "bogus", "--conclusion", "ll")
    assert code == 3 and out == ""


def test_resource_cap(capsys):
    code, out, err = run(capsys, "lattice", *CONTEXT, "--max-concepts", "3")
    assert code == 4 and out == "" and err.startswith("error: resource:")


def test_partition_file_error_is_parse_error(capsys, tmp_path):
    part = tmp_path / "bad_partition.txt"
    part.write_text("Le, Br\n")
    code, out, err = run(capsys, "definable", *CONTEXT, "--partition", str(part))
    assert code == 2 and out == ""


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "roughconcepts" in out
