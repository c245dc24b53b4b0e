import pytest

import liftexp


def test_vp_bigint_roundtrip():
    # arbitrary-precision integers cross the boundary exactly
    assert liftexp.vp(2**364 - 1, 1093) == 2
    assert liftexp.vp(24, 2) == 3
    assert liftexp.vp(-24, 2) == 3


def test_vp_zero_raises():
    with pytest.raises(liftexp.InputError):
        liftexp.vp(0, 3)


def test_modpow_and_order():
    assert liftexp.modpow(2, 1092, 1093**2) == 1
    assert liftexp.multiplicative_order(2, 1093) == 364


def test_defect_report_fields():
    rep = liftexp.defect_report(2, 1, 364, 1093)
    assert rep["lhs_valuation"] == 2
    assert rep["vp_n"] == 0
    assert rep["rhs_valuation"] == 2
    assert rep["defect"] == 2
    assert rep["identity_holds"] is True
    assert rep["sign"] == "minus"


def test_predicted_matches_direct():
    for n in (9, 18, 171):
        assert liftexp.predicted_valuation(3, 13, n, 19) == liftexp.direct_valuation(
            3, 13, n, 19
        )


def test_scan_pair():
    records = liftexp.scan_pair(3, 13, 1000)
    assert [(r["p"], r["order"]) for r in records] == [(19, 2), (269, 2)]


def test_wieferich_order():
    assert liftexp.wieferich_order(19, 3, 13) == (2, False)


def test_construct_base():
    assert liftexp.construct_base(3, 2) == (25, 29)


def test_verify_triple_exact():
    verdicts = liftexp.verify_triple(3, 4, 5)
    assert len(verdicts) == 3
    assert all(v["exact_multiplicity"] for v in verdicts)
    by_member = {v["divides"]: v for v in verdicts}
    assert by_member["x"]["order"] == 2
    assert by_member["z"]["pair"] == (3, 4)


def test_factor_split_pinned():
    s = liftexp.factor_split(2, 6)
    assert (s["m1"], s["m2"], s["mN"], s["mW"]) == (7, 9, 9, 1)
    assert s["complete"] is True
    assert s["bound_mN_ok"] is True


def test_avg_power_bound():
    rep = liftexp.avg_power(2, 10)
    assert rep["bound_holds"] is True
    assert rep["w_effective"] == 1
    assert all(s["complete"] for s in rep["samples"])


def test_lemma13_hypothesis_gap():
    with pytest.raises(liftexp.InputError):
        liftexp.lemma13_check(5, 4, 2, 3)


def test_radical_certified():
    assert liftexp.radical(63, [(3, 2), (7, 1)]) == 21
    with pytest.raises(liftexp.InputError):
        liftexp.radical(63, [(3, 2), (7, 2)])
