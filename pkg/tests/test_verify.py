import pytest

from weavelink import cheb_lucas, verify
from weavelink.cli import main


@pytest.fixture
def corrupt_whitney_seed(monkeypatch):
    # row 2 of the entrywise recurrence seeded wrong; rows 0 and 1 stay intact
    bad = cheb_lucas._RowCache([(2,), (1, 1, 1), (1, 2, 2, 2, 1)], cheb_lucas._recurrence_whitney_step)
    monkeypatch.setattr(cheb_lucas, "_WHITNEY_REC", bad)


def test_all_suites_small():
    report = verify.run(list(verify.SUITES), 8, 2)
    assert report.passed
    assert [r.name for r in report.results] == list(verify.SUITES)
    assert all(r.checked > 0 for r in report.results)


def test_fault_injection_located(corrupt_whitney_seed):
    report = verify.run(["whitney-routes"], 10, 1)
    (res,) = report.results
    assert not res.passed
    assert "n=2, k=2" in res.failure


def test_fault_injection_exit_code(corrupt_whitney_seed, capsys):
    assert main(["verify", "--suite", "whitney", "--max-n", "10"]) == 1
    assert "FAIL whitney-routes" in capsys.readouterr().out


def test_corrupted_trace_is_reported(monkeypatch):
    from weavelink import weaving

    real = weaving.weaving_trace

    def off_by_one(spec):
        out = real(spec)
        return out + 1 if (spec.n, spec.m) == (3, 2) else out

    monkeypatch.setattr(weaving, "weaving_trace", off_by_one)
    (res,) = verify.run(["trace"], 5, 3).results
    assert not res.passed and "n=3, m=2" in res.failure


def test_order_independent_of_threads(monkeypatch):
    names = ["series", "shape", "trace", "whitney-routes"]
    monkeypatch.setenv("WEAVE_THREADS", "1")
    serial = [r.name for r in verify.run(names, 6, 2).results]
    monkeypatch.setenv("WEAVE_THREADS", "4")
    parallel = [r.name for r in verify.run(names, 6, 2).results]
    assert serial == parallel == ["trace", "whitney-routes", "shape", "series"]


@pytest.mark.parametrize("raw, expected", [("3", 3), ("0", None), ("", None), ("abc", None)])
def test_thread_count(monkeypatch, raw, expected):
    monkeypatch.setenv("WEAVE_THREADS", raw)
    n = verify.thread_count()
    assert n == expected if expected else n >= 1


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run(["bogus"], 3, 1)


def test_notes_present():
    text = " ".join(verify.NOTES)
    assert "sign convention" in text and "Lucas seeds" in text
