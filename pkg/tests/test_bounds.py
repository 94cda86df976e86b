import pytest

from cellprofile import check_bounds, parse

from fixtures import BOUNDS_FIXTURES


@pytest.mark.parametrize("expr", BOUNDS_FIXTURES)
def test_fixture_bounds_hold(expr):
    report = check_bounds(parse(expr), 32)
    assert report.passed, [c.to_json() for c in report.checks if not c.passed]


def test_examples_emit_expected_checks():
    rep = check_bounds(parse("mset(2,set)"), 32)
    assert {c.lemma for c in rep.checks} >= {"sandwich", "colors", "monotone"}
    rep = check_bounds(parse("union(set,set)"), 32)
    lemmas = [c.lemma for c in rep.checks]
    assert "product" in lemmas and "sandwich" in lemmas


def test_subexponential_only_without_order():
    assert check_bounds(parse("mset_inf(set)"), 32).by_lemma("subexponential")
    assert not check_bounds(parse("seq_dlo(kset(2))"), 32).by_lemma("subexponential")


def test_failures_are_reported_per_n():
    from cellprofile.cellcalc.bounds import _check

    check = _check("product", "root", 10, lambda n: n < 7)
    assert not check.passed
    assert check.failures == [7, 8, 9, 10]


def test_json_shape():
    js = check_bounds(parse("mset(2,set)"), 32).to_json()
    assert js["n"] == 32 and js["passed"] is True
    assert {"lemma", "path", "passed", "failures", "detail"} <= set(js["checks"][0])
