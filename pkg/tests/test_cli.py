import json

from curvesgp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_local_prints_minimal_generators(capsys):
    code, out, _ = run(capsys, "local", "x^4+x^5,x^6,x^15+x^16")
    assert code == 0
    assert "minimal generators: [4, 6, 13, 15]" in out


def test_local_show_reduced(capsys):
    code, out, _ = run(capsys, "local", "x^4+x^5,x^6,x^15+x^16",
                       "--show", "reduced")
    assert code == 0
    assert "value 13: x^13" in out


def test_local_char_option(capsys):
    code, out, _ = run(capsys, "local", "x^4,x^6+x^7,x^13", "--char", "2")
    assert code == 0
    assert "minimal generators: [4, 6, 13, 15]" in out


def test_global_command(capsys):
    code, out, _ = run(capsys, "global", "x^6+x^3,x^4")
    assert code == 0
    assert "minimal generators: [4, 6, 9]" in out


def test_global_char_option(capsys):
    code, out, _ = run(capsys, "global", "x^6+x^3,x^4", "--char", "5")
    assert code == 0
    assert "minimal generators: [4, 6, 9]" in out
    # over GF(2) the cross term of (x^6+x^3)^2 vanishes and x^3 appears
    code, out, _ = run(capsys, "global", "x^6+x^3,x^4", "--char", "2")
    assert code == 0
    assert "minimal generators: [3, 4]" in out


def test_semigroup_full_monoid(capsys):
    code, out, _ = run(capsys, "semigroup", "1")
    assert code == 0
    assert "conductor: 0" in out
    assert "genus: 0" in out


def test_semigroup_remark_facts(capsys):
    code, out, _ = run(capsys, "semigroup", "4,6,13,15")
    assert code == 0
    assert "conductor: 12" in out
    assert "type set: [2, 9, 11]" in out


def test_curve_infinity_transcript(capsys):
    code, out, _ = run(capsys, "curve-infinity",
                       "y^6-2*x^2*y^3-4*x*y^3-y^3+x^4")
    assert code == 0
    assert "minimal generators: [4, 6, 9]" in out
    assert "y^3-x^2-2*x-1/2" in out


def test_plane_infinity(capsys):
    code, out, _ = run(capsys, "plane-infinity", "x^6+x", "x^4")
    assert code == 0
    assert "minimal generators: [4, 6, 7]" in out
    assert "y^3-x^2" in out


def test_plane_local(capsys):
    code, out, _ = run(capsys, "plane-local", "x^4", "x^6+x^7")
    assert code == 0
    assert "minimal generators: [4, 6, 13]" in out
    assert "y^2-x^3" in out


def test_plane_local_series_branch(capsys):
    code, out, _ = run(capsys, "plane-local", "t^7", "t^4+t^2")
    assert code == 0
    assert "minimal generators: [2, 7]" in out


def test_deform_command(capsys):
    code, out, _ = run(capsys, "deform", "local", "x^4,x^6+x^7")
    assert code == 0
    assert "H:" in out


def test_reduce_command(capsys):
    code, out, _ = run(capsys, "reduce", "local", "x^13+x^14",
                       "--against", "x^4,x^6+x^7")
    assert code == 0
    assert "remainder:" in out


def test_local_non_numerical_semigroup(capsys):
    code, out, _ = run(capsys, "local", "x^4,x^6")
    assert code == 0
    assert "gcd: 2" in out


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "local", "x^^4")
    assert code == 2
    assert "parse error" in err


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "semigroup", "0,3")
    assert code == 1
    assert "error[ValueError]" in err


def test_limit_exceeded_exit_code(capsys):
    code, _, err = run(capsys, "local", "x^2+x^4,x^4")
    assert code == 3
    assert "LimitExceeded" in err


def test_plane_commands_reject_char(capsys):
    code, _, err = run(capsys, "plane-local", "x^4", "x^6+x^7", "--char", "5")
    assert code == 1
    assert "characteristic zero" in err


def test_json_output_deterministic(capsys):
    code, out1, _ = run(capsys, "local", "x^4+x^5,x^6,x^15+x^16",
                        "--show", "all", "--json")
    assert code == 0
    code, out2, _ = run(capsys, "local", "x^4+x^5,x^6,x^15+x^16",
                        "--show", "all", "--json")
    assert out1 == out2
    data = json.loads(out1)
    assert data["semigroup"]["minimal_generators"] == [4, 6, 13, 15]
    assert data["semigroup"]["conductor"] == 12
    assert all(isinstance(c, str) for _, c in data["basis"][0]["terms"])


def test_json_deform(capsys):
    code, out, _ = run(capsys, "deform", "global", "x^6+x^3,x^4", "--json")
    assert code == 0
    data = json.loads(out)
    d = data["deformation"]
    assert d["variables"][0] == "u"
    assert len(d["toric"]) == len(d["homogenized"]) == len(d["complete"])


def test_json_semigroup_presentation(capsys):
    code, out, _ = run(capsys, "semigroup", "4,6,15", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["presentation"]) == 2
