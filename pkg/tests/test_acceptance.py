"""One test per acceptance criterion; each prints a PASS/FAIL line."""
import pytest

from quaddt.verify import CHECKS, run_checks


@pytest.mark.parametrize("number,group,title,fn", CHECKS, ids=[g for _, g, _, _ in CHECKS])
def test_criterion(number, group, title, fn):
    (result,) = run_checks([group])
    print(result.line())
    assert result.passed, result.line()


def test_negative_control():
    results = run_checks(["golden"], corrupt_signs=True)
    print("negative control:", results[0].line())
    assert not results[0].passed
