import json
import math

import numpy as np
import pytest

from muculants import EmptySample, Geometric, validate_pmf, zoo_muculants, zoo_pmf
from muculants.cli import main
from muculants.io import (
    dumps_json,
    flat_csv,
    format_number,
    indexed_csv,
    muculants_from_dict,
    muculants_to_dict,
    pmf_from_dict,
    pmf_to_dict,
    read_samples,
)


# -------------------------------------------------------------------- text


def test_format_number_round_trips_doubles():
    for x in (0.1, 1 / 3, 2.0, -1e-17, math.pi, 1e300):
        assert float(format_number(x)) == x
    assert format_number(3) == "3"
    assert format_number(True) == "true"
    assert format_number(False) == "false"


def test_format_number_rejects_non_finite():
    with pytest.raises(ValueError):
        format_number(float("nan"))
    with pytest.raises(ValueError):
        format_number(float("inf"))


def test_json_output_is_standard_json():
    doc = {"a": 1, "b": [0.1, 0.2], "c": {"d": True, "e": None}, "f": "text"}
    parsed = json.loads(dumps_json(doc))
    assert parsed == doc


def test_json_and_csv_print_identical_numbers():
    doc = {"x": 1 / 3, "y": {"z": [0.1, -2.5e-11]}}
    js = dumps_json(doc)
    csv = flat_csv(doc)
    for token in (format_number(1 / 3), format_number(0.1), format_number(-2.5e-11)):
        assert token in js
        assert token in csv


def test_flat_csv_layout():
    lines = flat_csv({"a": {"b": 1}, "c": [True, 2.5]}).splitlines()
    assert lines[0] == "field,value"
    assert "a.b,1" in lines
    assert "c[0],true" in lines
    assert "c[1],2.5" in lines


def test_indexed_csv_layout():
    out = indexed_csv("n", [-1, 0, 1], [0.5, -1.0, 0.25]).splitlines()
    assert out[0] == "n,value"
    assert out[1] == "-1,0.5"


def test_strings_with_control_characters_are_refused():
    with pytest.raises(ValueError):
        dumps_json({"a": 'quote "'})
    with pytest.raises(ValueError):
        dumps_json({"a": "line\nbreak"})


# ---------------------------------------------------------------- documents


def test_pmf_document_round_trip():
    f = zoo_pmf(Geometric(0.3))
    d = pmf_to_dict(f)
    g = pmf_from_dict(json.loads(dumps_json(d)))
    assert g.offset == f.offset
    np.testing.assert_array_equal(g.probs, f.probs)
    assert g.tail_mass_bound >= 1.0 - g.total_mass


def test_muculant_document_round_trip():
    m = zoo_muculants(Geometric(0.3), (-4, 9))
    d = muculants_to_dict(m)
    r = muculants_from_dict(json.loads(dumps_json(d)))
    assert (r.n_min, r.n_max, r.kind) == (m.n_min, m.n_max, m.kind)
    np.testing.assert_array_equal(r.values, m.values)


def test_muculant_document_defaults_residual():
    r = muculants_from_dict(
        {"kind": "complex", "n_min": 0, "n_max": 1, "values": [-0.5, 0.5]}
    )
    assert r.imag_residual == 0.0


# ------------------------------------------------------------ sample files


def test_read_samples_parses_lines(tmp_path):
    p = tmp_path / "xs.txt"
    p.write_text("# counts\n3\n0\n\n-2\n 7 \n")
    np.testing.assert_array_equal(read_samples(p), [3, 0, -2, 7])


def test_read_samples_reports_bad_line(tmp_path):
    p = tmp_path / "xs.txt"
    p.write_text("1\n2.5\n")
    with pytest.raises(ValueError, match=":2: not an integer"):
        read_samples(p)


def test_read_samples_empty_file(tmp_path):
    p = tmp_path / "xs.txt"
    p.write_text("# nothing\n")
    with pytest.raises(EmptySample):
        read_samples(p)


# ----------------------------------------------------------------- commands


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_coefficients_from_family(capsys):
    code, out, _ = run_cli(capsys, "muculants", "--dist", "poisson:lambda=2", "--n-max", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "complex"
    assert doc["values"][5] == -2.0  # index n = 0
    assert doc["values"][6] == 2.0


def test_cli_csv_matches_json_numbers(capsys):
    args = ("muculants", "--dist", "geometric:p=0.3", "--n-max", "4")
    _, js, _ = run_cli(capsys, *args)
    code, csv, _ = run_cli(capsys, *args, "--output", "csv")
    assert code == 0
    json_numbers = [format_number(v) for v in json.loads(js)["values"]]
    csv_numbers = [line.split(",")[1] for line in csv.splitlines()[1:]]
    assert json_numbers == csv_numbers


def test_cli_coefficients_from_pmf_file(capsys, tmp_path):
    f = zoo_pmf(Geometric(0.4))
    p = tmp_path / "law.json"
    p.write_text(dumps_json(pmf_to_dict(f)))
    code, out, _ = run_cli(capsys, "muculants", "--input", str(p), "--n-max", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["values"][6] == pytest.approx(math.log(0.4), abs=1e-9)


def test_cli_estimates_from_sample_file(capsys, tmp_path):
    rng = np.random.default_rng(4)
    p = tmp_path / "xs.txt"
    p.write_text("\n".join(str(x) for x in rng.poisson(2.0, 20000)))
    code, out, _ = run_cli(capsys, "muculants", "--input", str(p), "--n-max", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["values"][3] == pytest.approx(-2.0, abs=0.1)


def test_cli_cumulants_exact_for_geometric(capsys):
    code, out, _ = run_cli(
        capsys, "cumulants", "--dist", "geometric:p=0.5", "--k-max", "2"
    )
    assert code == 0
    assert json.loads(out)["values"] == [1.0, 2.0]


def test_cli_reconstruct_round_trip(capsys):
    code, out, _ = run_cli(
        capsys,
        "reconstruct", "--dist", "poisson:lambda=2", "--support", "0:12", "--n-max", "30",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["offset"] == 0
    assert doc["values"][0] == pytest.approx(math.exp(-2), abs=1e-9)
    assert doc["sum"] == pytest.approx(1.0, abs=1e-6)


def test_cli_decompose_reports_both_factors(capsys, tmp_path):
    g = zoo_pmf(Geometric(0.5))
    left = validate_pmf(-(len(g) - 1), g.probs[::-1])
    p = tmp_path / "left.json"
    p.write_text(dumps_json(pmf_to_dict(left)))
    code, out, _ = run_cli(capsys, "decompose", "--input", str(p), "--n-max", "60")
    assert code == 0
    doc = json.loads(out)
    assert doc["minphase"]["is_pmf"] is True
    assert doc["allpass"]["is_pmf"] is False
    assert doc["allpass"]["sum"] == pytest.approx(1.0, abs=1e-8)


def test_cli_zoo_lists_closed_form(capsys):
    code, out, _ = run_cli(capsys, "zoo", "--dist", "degenerate:m=2", "--n-max", "3")
    assert code == 0
    doc = json.loads(out)
    want = [2 * (-1) ** (n + 1) / n if n else 0.0 for n in range(-3, 4)]
    assert doc["values"] == [pytest.approx(v) for v in want]


def test_cli_poisson_test_accepts_and_rejects(capsys, tmp_path):
    rng = np.random.default_rng(1)
    ok = tmp_path / "pois.txt"
    ok.write_text("\n".join(str(x) for x in rng.poisson(3.0, 2000)))
    code, out, _ = run_cli(
        capsys, "poisson-test", "--input", str(ok), "--bootstrap", "200"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["reject"] is False

    bad = tmp_path / "geom.txt"
    bad.write_text("\n".join(str(x) for x in rng.geometric(0.6, 2000) - 1))
    code, out, _ = run_cli(
        capsys, "poisson-test", "--input", str(bad), "--bootstrap", "200"
    )
    assert code == 3
    assert json.loads(out)["reject"] is True


def test_cli_requires_exactly_one_source(capsys, tmp_path):
    code, _, err = run_cli(capsys, "muculants", "--n-max", "5")
    assert code == 2 and "ValueError" in err
    p = tmp_path / "xs.txt"
    p.write_text("1\n2\n")
    code, _, err = run_cli(
        capsys, "muculants", "--input", str(p), "--dist", "poisson:lambda=1"
    )
    assert code == 2


def test_cli_domain_errors_exit_one(capsys, tmp_path):
    p = tmp_path / "half.json"
    p.write_text(dumps_json({"offset": 0, "probs": [0.5, 0.5]}))
    code, _, err = run_cli(capsys, "muculants", "--input", str(p), "--n-max", "5")
    assert code == 1
    assert "CharFnVanishes" in err


def test_cli_missing_file_exits_two(capsys):
    code, _, err = run_cli(capsys, "muculants", "--input", "/no/such/file.txt")
    assert code == 2


def test_cli_bad_family_exits_two(capsys):
    code, _, err = run_cli(capsys, "muculants", "--dist", "zeta:s=2")
    assert code == 2 and "ValueError" in err


def test_cli_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
