import json

import pytest

from weavelink import cheb_lucas, cli
from weavelink.cli import OutputRecord, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def as_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, OutputRecord.from_json(out)


def test_alexander_default(capsys):
    code, rec = as_json(capsys, "alexander", "--n", "6")
    assert code == 0
    assert rec.coefficients == "1 7 21 40 58 66 58 40 21 7 1".split()
    assert rec.variable == "s" and rec.offset == 0


def test_alexander_oracle(capsys):
    code, rec = as_json(capsys, "alexander", "--n", "2", "--route", "oracle")
    assert code == 0 and rec.coefficients == ["1", "3", "1"]


@pytest.mark.parametrize(
    "argv",
    [
        ["alexander", "--n", "0"],
        ["alexander", "--n", "3", "--m", "2", "--route", "explicit"],
        ["alexander"],
        ["braid", "--word", "3 1"],
        ["jones", "--n", "-1"],
        ["verify", "--suite", "nope"],
        ["table", "--family", "fib"],
        ["zeros", "--n", "3", "--tol", "0"],
        ["nosuch"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_alexander_check(capsys):
    code, rec = as_json(capsys, "alexander", "--n", "7", "--check")
    assert code == 0 and all(rec.extras["check"].values())


def test_alexander_check_mismatch(capsys, monkeypatch):
    routes = dict(cli.weaving.ALEXANDER_ROUTES)
    routes["recurrence"] = lambda n: cheb_lucas.CoeffRow([1, 2, 1])
    monkeypatch.setattr(cli.weaving, "ALEXANDER_ROUTES", routes)
    code, rec = as_json(capsys, "alexander", "--n", "2", "--check")
    assert code == 1 and rec.extras["check"]["recurrence"] is False


def test_jones(capsys):
    code, rec = as_json(capsys, "jones", "--n", "2")
    assert rec.offset == -2 and rec.coefficients == ["1"] * 5
    code, rec = as_json(capsys, "jones", "--n", "3", "--m", "2", "--check")
    assert code == 0
    code, rec = as_json(capsys, "jones", "--n", "1")
    assert rec.poly().coeffs == (1,) and rec.offset == 0


def test_braid_jones_trefoil(capsys):
    code, rec = as_json(capsys, "braid", "--word", "1 2 1 2", "--invariant", "jones")
    assert code == 0 and rec.variable == "t"
    assert rec.poly().terms() == {1: 1, 3: 1, 4: -1}


def test_braid_jones_odd_exponent_uses_x(capsys):
    code, rec = as_json(capsys, "braid", "--word", "1", "--invariant", "jones")
    assert code == 0 and rec.variable == "x"


def test_braid_alexander(capsys):
    code, rec = as_json(capsys, "braid", "--word", "1 -2 1 -2", "--invariant", "alexander")
    assert rec.coefficients == ["1", "3", "1"]
    code, rec = as_json(capsys, "braid", "--word", "1 -2 1 -2", "--invariant", "alexander", "--variable", "t")
    assert rec.coefficients == ["1", "-3", "1"]


def test_det(capsys):
    code, rec = as_json(capsys, "det", "--n", "3", "--m", "2", "--check")
    assert code == 0 and rec.coefficients == [str(cheb_lucas.lucas_general(2, 6) - 2)]
    code, rec = as_json(capsys, "det", "--word", "1 -2 1 -2")
    assert rec.coefficients == ["5"]


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "whitney", "--max-n", "3", "--format", "csv")
    assert out == "0,2\n1,1,1,1\n2,1,2,1,2,1\n3,1,3,3,4,3,3,1\n"
    code, out, _ = run(capsys, "table", "--family", "jones", "--max-n", "2", "--format", "csv")
    assert out == "1,0,1,0\n2,1,1,1,1,1\n"


def test_zeros(capsys):
    code, rec = as_json(capsys, "zeros", "--n", "4")
    assert code == 0
    assert rec.extras["hoste"] and rec.extras["unit_modulus"] and rec.extras["cross_validated"]
    assert len(rec.extras["zeros"]) == 4


def test_zeros_n1(capsys):
    code, rec = as_json(capsys, "zeros", "--n", "1")
    assert code == 0 and rec.extras["zeros"] == [] and rec.extras["hoste"] is True


def test_zeros_cross_validation_failure(capsys, monkeypatch):
    monkeypatch.setattr(cli.shape, "cross_validate_zeros", lambda *a, **k: False)
    code, _, _ = run(capsys, "zeros", "--n", "5")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["alexander", "--n", "5"],
        ["jones", "--n", "4", "--m", "2"],
        ["braid", "--word", "1 1 -2", "--invariant", "jones"],
        ["det", "--n", "4"],
        ["table", "--family", "alexander", "--max-n", "5"],
        ["zeros", "--n", "6"],
        ["verify", "--suite", "series", "--max-n", "5"],
    ],
)
def test_json_round_trip(capsys, argv):
    _, out, _ = run(capsys, *argv, "--format", "json")
    rec = OutputRecord.from_json(out)
    assert OutputRecord.from_json(rec.to_json()) == rec
    assert json.loads(rec.to_json()) == json.loads(out)


def _numbers_from_csv(out):
    return [line.split(",") for line in out.splitlines()]


@pytest.mark.parametrize("argv", [["alexander", "--n", "5"], ["jones", "--n", "3", "--m", "2"]])
def test_formats_agree_on_polynomials(capsys, argv):
    _, rec = as_json(capsys, *argv)
    _, csv_out, _ = run(capsys, *argv, "--format", "csv")
    pairs = _numbers_from_csv(csv_out)
    assert [int(e) for e, _ in pairs] == list(range(rec.offset, rec.offset + len(rec.coefficients)))
    assert [c for _, c in pairs] == rec.coefficients
    _, text_out, _ = run(capsys, *argv)
    fields = dict(line.split(": ", 1) for line in text_out.splitlines())
    assert int(fields["offset"]) == rec.offset
    assert fields["coefficients"].split(",") == rec.coefficients


def test_formats_agree_on_tables(capsys):
    argv = ["table", "--family", "alexander", "--max-n", "6"]
    _, rec = as_json(capsys, *argv)
    _, csv_out, _ = run(capsys, *argv, "--format", "csv")
    _, text_out, _ = run(capsys, *argv)
    from_json = [[str(r["n"])] + r["coefficients"] for r in rec.extras["rows"]]
    from_text = [[n] + rest.split(",") for n, rest in (l.split(": ") for l in text_out.splitlines()[1:])]
    assert _numbers_from_csv(csv_out) == from_json == from_text


def test_big_integers_are_strings(capsys):
    _, out, _ = run(capsys, "det", "--n", "60", "--m", "3", "--format", "json")
    raw = json.loads(out)
    assert raw["coefficients"] == [str(cheb_lucas.lucas_general(3, 120) - 2)]


def test_record_rejects_unknown_kind():
    with pytest.raises(ValueError):
        OutputRecord("spline")


def test_verify_pass_and_notes(capsys):
    code, rec = as_json(capsys, "verify", "--suite", "whitney", "--max-n", "60")
    assert code == 0
    assert [s["name"] for s in rec.extras["suites"]] == ["whitney-routes"]
    assert any("Lucas seeds" in n for n in rec.extras["notes"])


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "series,shape", "--max-n", "8", "--format", "csv")
    assert code == 0
    assert [line.split(",")[:2] for line in out.splitlines()] == [["shape", "pass"], ["series", "pass"]]
