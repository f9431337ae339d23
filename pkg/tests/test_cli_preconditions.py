from curvebracket.cli import main


def test_excluded_target_exit_code(tmp_path, capsys):
    (tmp_path / "torus.srf").write_text("rank 2\norder a b A B\n")
    (tmp_path / "cyl.srf").write_text("rank 1\norder a A\n")
    (tmp_path / "m.map").write_text(
        "source torus.srf\ntarget cyl.srf\nmap a -> a\nmap b -> a\n"
    )
    status = main(["audit", "bracket", str(tmp_path / "m.map"), "--max-len", "2"])
    assert status == 4
    err = capsys.readouterr().err
    assert "plane or the cylinder" in err


def test_trivial_word_exit_code(tmp_path, capsys):
    (tmp_path / "torus.srf").write_text("rank 2\norder a b A B\n")
    status = main(["selfint", str(tmp_path / "torus.srf"), "aA"])
    assert status == 4
