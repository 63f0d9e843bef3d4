import pytest

from bentkit import regressions


@pytest.mark.parametrize("reg", regressions.REGRESSIONS, ids=lambda r: r.id)
def test_regression(reg):
    (res,) = regressions.run([reg.id])
    assert res.got == res.expected


def test_failures_are_reported_as_data(monkeypatch):
    def boom():
        raise ValueError("nope")

    reg = regressions.Regression("x", "x", "ok", boom)
    monkeypatch.setitem(regressions.BY_ID, "x", reg)
    (res,) = regressions.run(["x"])
    assert not res.passed and res.got.startswith("error: ValueError")
