from wreathpow.models.report import CheckReport


def test_lines():
    report = CheckReport("demo")
    report.check(True, "one")
    report.check(False, "two")

    assert not report.passed
    assert report.failures == ["two"]
    assert report.lines() == ["PASS\tone", "FAIL\ttwo", "FAIL\tdemo\t1/2 checks"]


def test_all_passed():
    report = CheckReport("demo")
    report.check(True, "one")

    assert report.passed
    assert report.status == "PASS"


def test_empty_report_does_not_pass():
    report = CheckReport("nothing")

    assert not report.passed
    assert report.lines() == ["FAIL\tnothing\t0/0 checks"]
