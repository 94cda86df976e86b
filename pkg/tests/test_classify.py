import math

import pytest

from cellprofile import classify, depth, parse, profile
from cellprofile.cellcalc.classify import (
    EXPONENTIAL,
    iterated_log,
    normalizer,
    structural_report,
)
from cellprofile.cellcalc.tree import contains_seq
from cellprofile.errors import InputError

from fixtures import CLASSIFY_MATRIX

PHI = (1 + math.sqrt(5)) / 2


@pytest.mark.parametrize("expr, regime, d, degree, k, r", CLASSIFY_MATRIX)
def test_matrix_labels(expr, regime, d, degree, k, r):
    rep = classify(parse(expr), 512)
    assert (rep.regime, rep.depth, rep.degree, rep.k, rep.r) == (regime, d, degree, k, r)
    assert "degree_uncertain" not in rep.flags


@pytest.mark.parametrize("expr", [row[0] for row in CLASSIFY_MATRIX if "seq_dlo" not in row[0]])
def test_regime_follows_depth(expr):
    tree = parse(expr)
    d = depth(tree)
    regime = structural_report(tree).regime
    expected = {0: "finite", 1: "polynomial", 2: "stretched_exponential"}.get(d, "log_iterated")
    if d == 1 and expr.startswith("union(") and "mset_inf" not in expr:
        expected = "polynomial"
    assert regime == expected


def test_fitted_constants():
    assert classify(parse("mset_inf(point)"), 256).fitted_constant == pytest.approx(1.0)
    assert classify(parse("mset_inf(edge)"), 256).fitted_constant == pytest.approx(0.5, rel=1e-3)
    assert classify(parse("union(set,set,set)"), 512).fitted_constant == pytest.approx(0.5, rel=1e-3)
    assert classify(parse("mset_inf(path3)"), 512).fitted_constant == pytest.approx(1 / 288, rel=2e-2)


def test_exponential_bases():
    assert classify(parse("seq_dlo(kset(2))"), 512).base == pytest.approx(PHI, abs=1e-12)
    beyond = classify(parse("mset_inf(seq_dlo(kset(2)))"), 256)
    assert beyond.regime == EXPONENTIAL
    assert "beyond_paper_examples" in beyond.flags


def test_dominant_path_points_at_deeper_child():
    rep = classify(parse("union(mset_inf(edge),mset_inf(set))"), 256)
    assert rep.dominant_path == "root/union[1]"
    assert rep.k == 2


def test_order_floor():
    with pytest.raises(InputError):
        classify(parse("mset_inf(set)"), 100)


def test_normalizers():
    assert iterated_log(math.e**math.e, 2) == pytest.approx(1.0)
    assert iterated_log(2, 3) is None
    rep = structural_report(parse("mset_inf(edge)"))
    assert normalizer(rep)(10, 6) == pytest.approx(0.6)
    rep = structural_report(parse("seq_dlo(kset(2))"))
    assert normalizer(rep)(10, 89) == pytest.approx(89 / PHI**10)
    assert normalizer(structural_report(parse("kset(2)")))(1, 1) is None


def test_depth3_normalizer_settles():
    tree = parse("mset_inf(mset_inf(set))")
    rep = structural_report(tree)
    f = profile(tree, 1000).values
    norm = normalizer(rep)
    a, b = norm(500, f[500]), norm(1000, f[1000])
    assert abs(a - b) / b < 0.1
