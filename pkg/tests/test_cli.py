"""CLI surface: subcommands, determinism, exit codes."""

import json

import pytest

from focalcurves.cli import main

EMCH_DUAL = ('{"vars":["u","v","w"],"degree":2,"terms":['
             '{"exp":[0,0,2],"coef":{"re":"1","im":"0"}},'
             '{"exp":[0,2,0],"coef":{"re":"-1","im":"0"}},'
             '{"exp":[2,0,0],"coef":{"re":"-2","im":"0"}}]}')
CIRCLE_PRIMAL = ('{"vars":["u","v","w"],"degree":2,"terms":['
                 '{"exp":[2,0,0],"coef":{"re":"1","im":"0"}},'
                 '{"exp":[0,2,0],"coef":{"re":"1","im":"0"}},'
                 '{"exp":[0,0,2],"coef":{"re":"-1","im":"0"}}]}')
NODAL_CUBIC_PARAM = ('{"var":"t","components":['
                     '{"degree":2,"coeffs":[{"re":"-1","im":"0"},{"re":"0","im":"0"},'
                     '{"re":"1","im":"0"}]},'
                     '{"degree":3,"coeffs":[{"re":"0","im":"0"},{"re":"-1","im":"0"},'
                     '{"re":"0","im":"0"},{"re":"1","im":"0"}]},'
                     '{"degree":0,"coeffs":[{"re":"1","im":"0"}]}]}')


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_foci_dual(capsys):
    code, out = run_cli(capsys, "foci", "--dual", EMCH_DUAL)
    assert code == 0
    xs = sorted(f[0] for f in out["real_foci"])
    assert xs == pytest.approx([-1.0, 1.0])


def test_foci_primal_circle(capsys):
    code, out = run_cli(capsys, "foci", "--primal", CIRCLE_PRIMAL)
    assert code == 0
    assert out["focal_divisor"][0]["mult"] == 2
    assert abs(out["focal_divisor"][0]["re"]) < 1e-8


def test_foci_param_nodal_cubic(capsys):
    code, out = run_cli(capsys, "foci", "--param", NODAL_CUBIC_PARAM)
    assert code == 0
    total = sum(e["mult"] for e in out["focal_divisor"]) + out["degree_drop"]
    assert total == 4  # class of a nodal cubic


def test_foci_requires_exactly_one_input(capsys):
    code, out = run_cli(capsys, "foci", "--dual", EMCH_DUAL, "--primal", CIRCLE_PRIMAL)
    assert code == 2 and "error" in out


def test_construct_family_dimensions(capsys):
    code, out = run_cli(capsys, "construct", "--foci", "[[1,0],[-1,0]]", "--family")
    assert code == 0
    assert out["family"]["dimension"] == 1
    assert out["verification"]["matching_distance"] < 1e-10

    code, out = run_cli(capsys, "construct", "--foci",
                        "[[1,0],[-1,0],[0,1],[0.3,-0.4]]", "--family")
    assert out["family"]["dimension"] == 6


def test_construct_random_q_needs_seed(capsys):
    code, out = run_cli(capsys, "construct", "--foci", "[[1,0],[-1,0]]", "--random-q")
    assert code == 2

    code, out = run_cli(capsys, "construct", "--foci", "[[1,0],[-1,0]]",
                        "--random-q", "--seed", "5")
    assert code == 0
    assert out["verification"]["matching_distance"] < 1e-9


def test_siebeck_equilateral(capsys):
    import math

    roots = [[math.cos(2 * math.pi * k / 3), math.sin(2 * math.pi * k / 3)]
             for k in range(3)]
    code, out = run_cli(capsys, "siebeck", "--roots", json.dumps(roots))
    assert code == 0
    assert out["foci"][0][2] == 2  # double focus at the centroid
    assert abs(out["foci"][0][0]) < 1e-9 and abs(out["foci"][0][1]) < 1e-9
    assert out["matching_distance"] < 1e-9


def test_rank_experiment_exit_and_summary(capsys):
    code, out = run_cli(capsys, "rank-experiment", "-c", "2", "--kappa", "0",
                        "--trials", "3", "--seed", "123")
    assert code == 0
    assert out["summary"]["violations"] == 0
    assert out["summary"]["clean"] == 3
    assert all(t["rank"] == 4 and t["kernel_dim"] == 1 for t in out["trials"])


def test_rank_experiment_needs_seed(capsys):
    code, out = run_cli(capsys, "rank-experiment", "-c", "2")
    assert code == 2


def test_plucker_single(capsys):
    code, out = run_cli(capsys, "plucker", "--d", "4", "--kappa", "3")
    assert code == 0
    assert out["c"] == 3 and out["g"] == 0 and out["expected_confocal_dim"] == 2


def test_plucker_table(capsys):
    code, out = run_cli(capsys, "plucker", "--table", "2:4")
    assert code == 0
    assert [r["maximal_class_rational_dim"] for r in out["rows"]] == [1, 0, -1]


def test_dualize_and_implicitize(capsys):
    code, out = run_cli(capsys, "dualize", "--param", NODAL_CUBIC_PARAM)
    assert code == 0
    assert max(c["degree"] for c in out["components"]) == 4

    code, out = run_cli(capsys, "implicitize", "--param", NODAL_CUBIC_PARAM)
    assert code == 0
    assert out["degree"] == 3


def test_kernel_command(capsys):
    param = ('{"var":"t","components":['
             '{"degree":2,"coeffs":[{"re":"-1/2","im":"0"},{"re":"0","im":"0"},'
             '{"re":"1","im":"0"}]},'
             '{"degree":3,"coeffs":[{"re":"1/3","im":"0"},{"re":"-1","im":"0"},'
             '{"re":"0","im":"0"},{"re":"1","im":"0"}]},'
             '{"degree":0,"coeffs":[{"re":"1","im":"0"}]}]}')
    code, out = run_cli(capsys, "kernel", "--param", param)
    assert code == 0
    assert out["rank"] == 6 and out["kernel_dim"] == 2
    assert out["kernel_dim"] == out["shifted_section_dim"]


def test_validation_error_is_machine_readable(capsys):
    code, out = run_cli(capsys, "foci", "--dual", '{"bad": true}')
    assert code == 2
    assert "error" in out and "type" in out["error"]


def test_determinism(capsys):
    code1 = main(["rank-experiment", "-c", "3", "--kappa", "0", "--trials", "2",
                  "--seed", "77"])
    out1 = capsys.readouterr().out
    code2 = main(["rank-experiment", "-c", "3", "--kappa", "0", "--trials", "2",
                  "--seed", "77"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
