import json

from tropstab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code in (0, 1), err
    return code, json.loads(out)


def test_stabilize_identity(capsys):
    code, doc = run_json(capsys, "stabilize",
                         "--matrix", '[["1","0"],["0","1"]]',
                         "--point", '["0","0"]')
    assert code == 0
    assert doc["stabilizes"] is True
    assert doc["image"] == ["0", "0"]
    assert doc["tropicalized"] == [["0", "-inf"], ["-inf", "0"]]


def test_stabilize_reports_both_composite_evaluations(capsys):
    code, doc = run_json(
        capsys, "stabilize",
        "--matrix", '[[["1","1"],["0","1"]],[["1","0"],["-1","1"]]]',
        "--point", '["1","0"]')
    assert code == 0
    assert doc["product_image"] == ["0", "1"]
    assert doc["composed_image"] == ["1", "1"]


def test_stabilize_boundary_point(capsys):
    code, doc = run_json(capsys, "stabilize",
                         "--matrix", '[["1","7"],["0","1"]]',
                         "--point", '["0","-inf"]')
    assert code == 0
    assert doc["stabilizes"] is True


def test_stabilize_malformed_input_exit_2(capsys):
    code, out, err = run_cli(capsys, "stabilize",
                             "--matrix", "not json and not a file",
                             "--point", '["0","0"]')
    assert code == 2
    assert "error" in err


def test_stabilize_precondition_exit_3(capsys):
    code, out, err = run_cli(capsys, "stabilize",
                             "--matrix", '[["2","0"],["0","1"]]',
                             "--point", '["0","0"]')
    assert code == 3


def test_singular_matrix_exit_3(capsys):
    code, out, err = run_cli(capsys, "stabilize",
                             "--matrix", '[["1","1"],["1","1"]]',
                             "--point", '["0","0"]')
    assert code == 3


def test_verify_semiring_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "verify", "--suite", "semiring",
                             "--seed", "3", "--count", "50")
    code2, out2, _ = run_cli(capsys, "verify", "--suite", "semiring",
                             "--seed", "3", "--count", "50")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["pass"] is True
    assert doc["params"]["seed"] == 3


def test_verify_requires_seed(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "semiring")
    assert code == 2


def test_verify_unknown_suite(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "nonsense", "--seed", "1")
    assert code == 2


def test_verify_stabilizer_small(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "stabilizer",
                         "--n", "2", "--seed", "5", "--matrices", "20",
                         "--points", "5", "--count", "10")
    assert code == 0 and doc["pass"]


def test_verify_boundary_sp_group(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "boundary",
                         "--group", "sp2n", "--seed", "5", "--count", "10")
    assert code == 0 and doc["pass"]
    assert doc["suite"] == "sp-boundary"


def test_fan_counts(capsys):
    for args, expected in (
            (("--rep", "identity", "--n", "4"), 4),
            (("--rep", "sp", "--n", "2"), 4),
            (("--rep", "schur", "--lambda", "2,1,0", "--n", "3"), 6)):
        code, doc = run_json(capsys, "fan", *args)
        assert code == 0
        assert len(doc["cones"]) == expected
        assert len(doc["vertices"]) == expected


def test_fan_vertices_are_canonical(capsys):
    code, doc = run_json(capsys, "fan", "--rep", "identity", "--n", "3")
    assert [0, 0, 1] not in doc["vertices"]
    assert [-1, -1, 0] in doc["vertices"]
    assert [1, 0, 0] in doc["vertices"]


def test_schur_command(capsys):
    code, doc = run_json(capsys, "schur", "--lambda", "2,1", "--z", "1,2")
    assert code == 0
    assert doc["tableaux"] == "6"
    assert doc["bialternant"] == "6"
    assert doc["agree"] is True


def test_schur_command_rejects_repeats(capsys):
    code, out, err = run_cli(capsys, "schur", "--lambda", "2,1", "--z", "2,2")
    assert code == 3


def test_hypersurface_samples(capsys):
    code, doc = run_json(capsys, "hypersurface", "--rep", "identity", "--n", "3",
                         "--sample", "60", "--seed", "11", "--p", "2")
    assert code == 0
    assert doc["agree_all"] is True
    assert len(doc["samples"]) == 60
    assert {"member", "point", "skeleton"} <= set(doc["samples"][0])


def test_boundary_stabilize_command(capsys):
    code, doc = run_json(capsys, "boundary-stabilize",
                         "--point", '["0","-inf"]',
                         "--matrix", '[["1","5"],["0","1"]]')
    assert code == 0
    assert doc["stabilizes"] is True
    assert doc["stratum"] == [0]
    code, doc = run_json(capsys, "boundary-stabilize",
                         "--point", '["0","-inf"]',
                         "--matrix", '[["1","0"],["1","1"]]')
    assert doc["stabilizes"] is False


def test_plot_identity_rank_two(capsys):
    code, out, err = run_cli(capsys, "plot", "--target", "fan",
                             "--rep", "identity", "--n", "3")
    assert code == 0
    assert out.startswith("<svg")
    rays = [line for line in out.splitlines() if "data-ray" in line]
    assert len(rays) == 3
    assert 'data-ray="1,1,-2"' in out


def test_plot_sp_rank_two(capsys):
    code, out, err = run_cli(capsys, "plot", "--target", "fan",
                             "--rep", "sp", "--n", "2", "--walls")
    assert code == 0
    rays = [line for line in out.splitlines() if "data-ray" in line]
    assert len(rays) == 4
    assert 'data-ray="1,1"' in out and 'data-ray="1,-1"' in out


def test_plot_hypersurface_overlay_deterministic(capsys):
    args = ("plot", "--target", "hypersurface", "--rep", "sp", "--n", "2",
            "--sample", "200", "--seed", "7")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "circle" in out1


def test_plot_unsupported_rank(capsys):
    code, out, err = run_cli(capsys, "plot", "--target", "fan",
                             "--rep", "identity", "--n", "4")
    assert code == 3


def test_matrix_payload_from_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text('[["1","0"],["0","1"]]', encoding="utf-8")
    code, doc = run_json(capsys, "stabilize", "--matrix", str(path),
                         "--point", '["1","0"]')
    assert code == 0
    assert doc["stabilizes"] is True


def test_fpt_matrix_payload(capsys):
    matrix = json.dumps([
        [{"num": {"0": 1}, "den": {"0": 1}}, {"num": {"1": 1}, "den": {"0": 1}}],
        [{"num": {}, "den": {"0": 1}}, {"num": {"0": 1}, "den": {"0": 1}}],
    ])
    code, doc = run_json(capsys, "stabilize", "--field", "fpt", "--p", "3",
                         "--matrix", matrix, "--point", '["0","0"]')
    assert code == 0
    assert doc["stabilizes"] is True
    assert doc["tropicalized"] == [["0", "-1"], ["-inf", "0"]]

    translation = json.dumps([
        [{"num": {"1": 1}, "den": {"0": 1}}, {"num": {}, "den": {"0": 1}}],
        [{"num": {}, "den": {"0": 1}}, {"num": {"0": 1}, "den": {"1": 1}}],
    ])
    code, doc = run_json(capsys, "stabilize", "--field", "fpt", "--p", "3",
                         "--matrix", translation, "--point", '["0","0"]')
    assert code == 0
    assert doc["stabilizes"] is False


def test_stabilize_symplectic_group(capsys):
    code, doc = run_json(capsys, "stabilize", "--group", "sp2n",
                         "--matrix",
                         '[["1","0","0","0"],["0","1","0","0"],'
                         '["0","0","1","0"],["0","0","0","1"]]',
                         "--point", '["0","0"]')
    assert code == 0
    assert doc["stabilizes"] is True
    assert doc["embedded_point"] == ["0", "0", "0", "0"]
    code, out, err = run_cli(capsys, "stabilize", "--group", "sp2n",
                             "--matrix",
                             '[["2","0","0","0"],["0","1","0","0"],'
                             '["0","0","1","0"],["0","0","0","1"]]',
                             "--point", '["0","0"]')
    assert code == 3


def test_verify_sp_and_parahoric_and_schur(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "sp", "--n", "1",
                         "--seed", "9", "--count", "20")
    assert code == 0 and doc["pass"]
    code, doc = run_json(capsys, "verify", "--suite", "parahoric", "--n", "2",
                         "--seed", "9", "--count", "15")
    assert code == 0 and doc["pass"]
    code, doc = run_json(capsys, "verify", "--suite", "schur",
                         "--seed", "9", "--count", "2")
    assert code == 0 and doc["pass"]


def test_verify_fans_reports_cone_count(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "fans", "--rep", "sp",
                         "--n", "2", "--seed", "4", "--samples", "50")
    assert code == 0
    count_check = [c for c in doc["checks"] if c["name"] == "maximal_cone_count"]
    assert count_check and count_check[0]["pass"]


def test_hypersurface_sp_representation(capsys):
    code, doc = run_json(capsys, "hypersurface", "--rep", "sp", "--n", "2",
                         "--sample", "40", "--seed", "2", "--p", "3")
    assert code == 0 and doc["agree_all"]


def test_out_file(tmp_path, capsys):
    out_path = tmp_path / "fan.json"
    code, out, err = run_cli(capsys, "fan", "--rep", "identity", "--n", "3",
                             "--out", str(out_path))
    assert code == 0
    assert out == ""
    doc = json.loads(out_path.read_text(encoding="utf-8"))
    assert len(doc["cones"]) == 3
