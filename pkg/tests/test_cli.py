import csv
import io
import json

import numpy as np
import pytest

from hermlap.cli import JobSpec, main, read_samples, run_job


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_zeros_csv():
    code, out, _ = run(["zeros", "-N", "3"])
    assert code == 0
    r = rows(out)
    assert list(r[0]) == ["index", "node", "re", "im"]
    nodes = [float(x["node"]) for x in r]
    np.testing.assert_allclose(nodes, [-1.224744871391589, 0, 1.224744871391589], atol=1e-15)


def test_zeros_json():
    code, out, _ = run(["zeros", "-N", "2", "--format", "json"])
    obj = json.loads(out)
    assert code == 0 and obj["kind"] == "zeros" and obj["order"] == 2
    assert set(obj) == {"kind", "order", "nodes", "re", "im"}


def test_laplace_compare_builtin():
    code, out, err = run(["laplace", "-N", "40", "--builtin", "ex2", "--compare", "builtin:ex2"])
    assert code == 0
    err_value = float(err.strip().split()[-1])
    assert err_value == pytest.approx(0.023758, abs=1e-3)
    assert len(rows(out)) == 40


def test_mellin_expression_compare():
    code, _, err = run(["mellin", "-N", "40", "--expr", "exp(-x/sqrt(2))*sin(x/sqrt(2))",
                        "--compare", "builtin:ex4"])
    assert code == 0
    assert float(err.split()[-1]) == pytest.approx(0.00702041, abs=1e-3)


def test_mellin_inverse_nodes_are_x(tmp_path):
    out_file = tmp_path / "f.csv"
    code, out, _ = run(["mellin-inv", "-N", "6", "--builtin", "ex4", "-o", str(out_file),
                        "--compare", "builtin:ex4"])
    assert code == 0 and "relative L2 error" in out
    nodes = [float(r["node"]) for r in rows(out_file.read_text())]
    assert all(x > 0 for x in nodes) and nodes == sorted(nodes, reverse=True)


def test_laplace_inverse_delta_train_area():
    code, _, err = run(["laplace-inv", "-N", "100", "--builtin", "ex1", "--compare", "builtin:ex1"])
    assert code == 0
    assert float(err.split()[1]) == pytest.approx(2.0025, abs=5e-3)


def test_demo_example_2():
    code, out, _ = run(["demo", "--example", "2", "-N", "40"])
    assert code == 0
    assert "0.023758" in out and "0.0236836" in out and out.strip().endswith("PASS")


def test_demo_writes_figure_data(tmp_path):
    code, _, _ = run(["demo", "--example", "4", "--outdir", str(tmp_path)])
    assert code == 0
    assert {p.name for p in tmp_path.iterdir()} >= {"fig4a_exact.csv", "fig4a_approx.csv", "fig4b_approx.csv"}


def test_file_round_trip(tmp_path):
    g_file, f_file = tmp_path / "g.csv", tmp_path / "f.csv"
    assert run(["laplace", "-N", "30", "--expr", "exp(-t^2)*cos(3*t)", "-o", str(g_file)])[0] == 0
    assert run(["laplace-inv", "-N", "30", "--input", str(g_file), "-o", str(f_file)])[0] == 0
    t = np.array([float(r["node"]) for r in rows(f_file.read_text())])
    back = read_samples(f_file)
    np.testing.assert_allclose(back, np.exp(-t ** 2) * np.cos(3 * t), rtol=0, atol=1e-9)


def test_json_round_trip(tmp_path):
    g_file = tmp_path / "g.json"
    assert run(["laplace", "-N", "12", "--expr", "1/(1+t^2)", "--format", "json", "-o", str(g_file)])[0] == 0
    code, out, _ = run(["laplace-inv", "-N", "12", "--input", str(g_file)])
    t = np.array([float(r["node"]) for r in rows(out)])
    vals = np.array([float(r["re"]) + 1j * float(r["im"]) for r in rows(out)])
    np.testing.assert_allclose(vals, 1 / (1 + t ** 2), atol=1e-12)


def test_deterministic_bytes(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["mellin", "-N", "24", "--builtin", "ex4"]
    run(argv + ["-o", str(a)])
    run(argv + ["-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_multidimensional_expression_and_order():
    code, out, _ = run(["laplace", "-N", "3,4", "--expr", "exp(-(t1^2+t2^2)/2)"])
    assert code == 0
    r = rows(out)
    assert len(r) == 12
    # first axis varies fastest
    first = [tuple(map(float, x["node"].split(";"))) for x in r[:4]]
    assert first[0][1] == first[1][1] == first[2][1] != first[3][1]


def test_multidimensional_round_trip(tmp_path):
    g_file = tmp_path / "g.csv"
    assert run(["laplace", "-N", "4,3,2", "--expr", "t1 + 2*t2 - t3", "-o", str(g_file)])[0] == 0
    code, out, _ = run(["laplace-inv", "-N", "4,3,2", "--input", str(g_file)])
    coords = np.array([list(map(float, x["node"].split(";"))) for x in rows(out)])
    vals = np.array([float(x["re"]) for x in rows(out)])
    np.testing.assert_allclose(vals, coords[:, 0] + 2 * coords[:, 1] - coords[:, 2], atol=1e-9)


def test_causal_flag():
    code, out, err = run(["laplace", "-N", "40", "--causal", "--expr", "exp(-t)*sin(t)",
                          "--compare", "builtin:ex2"])
    assert code == 0 and float(err.split()[-1]) == pytest.approx(0.023758, abs=1e-3)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["zeros"],
        ["zeros", "-N", "0"],
        ["zeros", "-N", "99999"],
        ["laplace", "-N", "4"],
        ["laplace", "-N", "4", "--expr", "t", "--builtin", "ex2"],
        ["laplace", "-N", "4", "--expr", "3 +"],
        ["laplace", "-N", "4", "--expr", "s+1"],
        ["laplace", "-N", "4", "--builtin", "ex42"],
        ["laplace", "-N", "4", "--input", "/nonexistent.csv"],
        ["laplace", "-N", "x"],
        ["fourier", "-N", "3,4", "--expr", "t1"],
    ],
)
def test_usage_errors_exit_1(argv):
    assert run(argv)[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["mellin", "-N", "41", "--expr", "sqrt(x)/(1-x)"],
        ["mellin", "-N", "41", "--builtin", "ex3"],
        ["laplace-inv", "-N", "8", "--builtin", "ex1:n=4"],
        ["laplace", "-N", "4", "--expr", "log(t)"],
    ],
)
def test_numerical_failures_exit_2(argv):
    code, _, err = run(argv)
    assert code == 2 and "numerical failure" in err


def test_node_level_message():
    _, _, err = run(["mellin", "-N", "41", "--expr", "sqrt(x)/(1-x)"])
    assert "index 20" in err


def test_length_mismatch_from_file(tmp_path):
    f = tmp_path / "f.csv"
    run(["laplace", "-N", "5", "--expr", "t", "-o", str(f)])
    assert run(["laplace-inv", "-N", "6", "--input", str(f)])[0] == 2


def test_run_job_directly():
    out, err = io.StringIO(), io.StringIO()
    assert run_job(JobSpec("zeros", (1,)), out, err) == 0
    assert run_job(JobSpec("laplace", (4,)), out, err) == 1
