import pytest

from cycbar.monoid import BASEPOINT, PointedMonoid, truncated_monoid


def test_truncated_products():
    m = truncated_monoid(3)
    assert m.multiply(0, 2) == 2
    assert m.multiply(1, 1) == 2
    assert m.multiply(1, 2) is BASEPOINT
    assert m.multiply(2, 2) is BASEPOINT
    assert m.multiply(BASEPOINT, 1) is BASEPOINT
    assert m.multiply(2, BASEPOINT) is BASEPOINT


def test_element_layout():
    m = truncated_monoid(4)
    assert m.elements[0] is BASEPOINT
    assert m.elements[1] == 0
    assert len(m) == 5
    assert m.basepoint is BASEPOINT
    assert m.unit == 0


def test_weights():
    m = truncated_monoid(5)
    for a in range(5):
        assert m.weight(a) == a
    assert m.weight(BASEPOINT) is None


def test_weight_additive_when_nonzero():
    for k in range(2, 7):
        m = truncated_monoid(k)
        for a in range(k):
            for b in range(k):
                ab = m.multiply(a, b)
                if ab is not BASEPOINT:
                    assert m.weight(ab) == m.weight(a) + m.weight(b)


def test_laws_exhaustively():
    # construction already validates, but spell the laws out once
    for k in (2, 3, 6):
        m = truncated_monoid(k)
        els = m.elements
        for a in els:
            assert m.multiply(m.basepoint, a) is BASEPOINT
            assert m.multiply(m.unit, a) == a
            for b in els:
                assert m.multiply(a, b) == m.multiply(b, a)
                for c in els:
                    assert m.multiply(m.multiply(a, b), c) == m.multiply(
                        a, m.multiply(b, c)
                    )


def test_rejects_small_truncation():
    for bad in (1, 0, -3):
        with pytest.raises(ValueError):
            truncated_monoid(bad)
    with pytest.raises(ValueError):
        truncated_monoid("2")


def test_unknown_elements_rejected():
    m = truncated_monoid(3)
    with pytest.raises(ValueError):
        m.multiply(3, 1)
    with pytest.raises(ValueError):
        m.multiply(1, -1)
    with pytest.raises(ValueError):
        m.weight(7)


def _pi2_data():
    els = [BASEPOINT, 0, 1]
    table = {}
    for a in els:
        table[a, BASEPOINT] = BASEPOINT
        table[BASEPOINT, a] = BASEPOINT
    for a in (0, 1):
        for b in (0, 1):
            table[a, b] = a + b if a + b < 2 else BASEPOINT
    return els, table, {0: 0, 1: 1}


def test_validation_accepts_good_table():
    els, table, weight = _pi2_data()
    PointedMonoid(els, table, weight)


def test_validation_rejects_broken_absorption():
    els, table, weight = _pi2_data()
    table[BASEPOINT, 1] = 1
    with pytest.raises(ValueError):
        PointedMonoid(els, table, weight)


def test_validation_rejects_broken_unit():
    els, table, weight = _pi2_data()
    table[0, 1] = 0
    with pytest.raises(ValueError):
        PointedMonoid(els, table, weight)


def test_validation_rejects_noncommutative():
    els, table, weight = _pi2_data()
    table[1, 0] = BASEPOINT
    with pytest.raises(ValueError):
        PointedMonoid(els, table, weight)


def test_validation_rejects_nonassociative():
    # z absorbs once but not twice: (a*a)*a != a*(a*a) forced by hand
    els = [BASEPOINT, "e", "a"]
    table = {}
    for x in els:
        table[x, BASEPOINT] = BASEPOINT
        table[BASEPOINT, x] = BASEPOINT
        table[x, "e"] = x
        table["e", x] = x
    table["a", "a"] = "e"
    weight = {"e": 0, "a": 1}
    # a*a = e makes weight non-additive (0 != 2), caught even earlier;
    # the point is simply that a bad table never validates
    with pytest.raises(ValueError):
        PointedMonoid(els, table, weight)


def test_validation_rejects_partial_table():
    els, table, weight = _pi2_data()
    del table[1, 1]
    with pytest.raises(ValueError):
        PointedMonoid(els, table, weight)


def test_validation_rejects_bad_weights():
    els, table, weight = _pi2_data()
    with pytest.raises(ValueError):
        PointedMonoid(els, table, {0: 0})
    with pytest.raises(ValueError):
        PointedMonoid(els, table, {0: 0, 1: -1})
    with pytest.raises(ValueError):
        PointedMonoid(els, table, {0: 1, 1: 1})


def test_truncated_weight_additivity_violation_detected():
    els, table, _ = _pi2_data()
    # fine for k=2 (1+1 overflows), so use k=3 where 1*1 = 2 is visible
    m3 = truncated_monoid(3)
    bad = dict(m3.weights)
    bad[2] = 5
    with pytest.raises(ValueError):
        PointedMonoid(m3.elements, m3.table, bad)
