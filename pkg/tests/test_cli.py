from stripmwis.cli import main

K3 = "p 3 3\nw 0 5\ne 0 1\ne 0 2\ne 1 2\n"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_brute(tmp_path, capsys):
    gp = write(tmp_path, "g.gr", K3)
    code, out, err = run(capsys, ["solve", "--algo", "brute", "--t", "2", gp])
    assert code == 0
    assert "value 5" in out.splitlines()
    assert any(line.startswith("config ") for line in err.splitlines())


def test_solve_ind_with_stats_and_banner(tmp_path, capsys):
    gp = write(tmp_path, "g.gr", K3)
    code, out, _ = run(capsys, ["solve", "--algo", "ind", "--t", "2",
                                "--test-mode", "--witness", gp])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "test-mode thresholds active"
    assert "value 5" in lines
    assert any(l.startswith("stat base=") for l in lines)
    assert any(l.startswith("path_max ") for l in lines)
    assert "witness 0" in lines


def test_validate_and_clean(tmp_path, capsys):
    gp = write(tmp_path, "g.gr", "p 3 2\ne 0 1\ne 1 2\n")
    good = ("hv 0\nhv 1\nhe 0 1\n"
            "ee 0 1: 0 1 2\nix 0 1 @ 0: 0\nix 0 1 @ 1: 2\n")
    ep = write(tmp_path, "d.esdf", good)
    code, out, _ = run(capsys, ["validate-esd", gp, ep])
    assert code == 0 and out.strip() == "ok"
    code, out, _ = run(capsys, ["clean-esd", gp, ep])
    assert code == 0 and out.startswith("hv ")

    # vertex 1 sits in the edge set but not in the interface at host 0,
    # yet it is adjacent to vertex 0 living in the host-vertex set
    bad = "hv 0\nhv 1\nhe 0 1\nev 0: 0\nee 0 1: 1 2\nix 0 1 @ 1: 2\n"
    bp = write(tmp_path, "bad.esdf", bad)
    code, out, _ = run(capsys, ["validate-esd", gp, bp])
    assert code == 1 and "illegal base edge" in out


def test_gyarfas_and_detect(tmp_path, capsys):
    gp = write(tmp_path, "g.gr", "p 4 3\ne 0 1\ne 0 2\ne 0 3\n")
    code, out, _ = run(capsys, ["gyarfas", gp])
    assert code == 0 and out.startswith("path ")
    code, out, _ = run(capsys, ["detect-sttt", "--t", "1", gp])
    assert code == 0 and "center 0" in out
    code, out, _ = run(capsys, ["detect-sttt", "--t", "2", gp])
    assert code == 0 and out.strip().endswith("none")


def test_gen_reproducible_and_particle_algo(tmp_path, capsys):
    esd_out = str(tmp_path / "lg.esdf")
    argv = ["gen", "--kind", "line-graph", "--n", "5", "--seed", "3",
            "--esd-out", esd_out]
    code, out1, _ = run(capsys, argv)
    assert code == 0
    code, out2, _ = run(capsys, argv)
    assert out1 == out2  # byte-identical for identical seeds
    gp = write(tmp_path, "lg.gr", out1)
    code, out, _ = run(capsys, ["solve", "--algo", "particle", "--t", "2",
                                "--esd", esd_out, gp])
    assert code == 0 and out.startswith("value ")


def test_usage_and_io_errors(tmp_path, capsys):
    import pytest
    with pytest.raises(SystemExit) as e:
        main(["solve", "--algo", "wat", "x"])
    assert e.value.code == 2
    capsys.readouterr()
    code, _, err = run(capsys, ["gyarfas", str(tmp_path / "missing.gr")])
    assert code == 1 and "error:" in err
    gp = write(tmp_path, "bad.gr", "e 0 1\n")
    code, _, err = run(capsys, ["gyarfas", gp])
    assert code == 1 and "missing header" in err
