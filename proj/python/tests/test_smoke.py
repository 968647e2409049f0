import pytest

import tribch


def test_field_basics():
    f = tribch.Field(5)
    assert f.modulus == 37
    assert f.size == 32
    for x in range(1, 32):
        assert f.mul(x, f.inverse(x)) == 1
    assert sum(f.trace(x) for x in range(32)) == 16
    with pytest.raises(tribch.InvalidArgument):
        f.mul(32, 1)
    with pytest.raises(tribch.InvalidArgument):
        tribch.Field(6)


def test_exponents_and_conditions():
    assert tribch.family_exponents("kasami5", 5) == (3, 11)
    assert tribch.family_exponents("th", 7) == (9, 35)
    with pytest.raises(tribch.ConditionViolated, match=r"gcd\(9,3\)"):
        tribch.Code("gold2", 9, 3)
    assert issubclass(tribch.ConditionViolated, tribch.TribchError)
    assert tribch.is_apn_power(7, 3)
    assert not tribch.is_apn_power(7, 2)


@pytest.mark.parametrize("family", tribch.FAMILIES)
def test_code_parameters_and_distance(family):
    code = tribch.Code(family, 5)
    assert (code.length, code.dimension, code.rank) == (31, 16, 15)
    spec = code.spectrum()
    assert spec["five_valued"] and spec["witness"] is None
    assert set(spec["histogram"]) <= {-16, -8, 0, 8, 16}
    dual, dist = code.weight_distributions()
    assert sum(dual) == 2**15 and sum(dist) == 2**16
    assert dist[:8] == [1, 0, 0, 0, 0, 0, 0, 155]
    assert tribch.verify_distance7(dist)
    assert tribch.macwilliams(dist, 16) == dual
    assert code.syndrome_distinctness()["distinct"]


def test_big_coefficients_are_exact():
    _, dist = tribch.Code("gold2", 7).weight_distributions(workers=2)
    assert dist[7] == 48387
    assert sum(dist) == 2**106


def test_encode_decode_round_trip():
    code = tribch.Code("kasami5", 7)
    assert code.dimension == 106
    msg = "5a" * 13 + "03"
    word = code.encode(msg)
    assert code.syndrome(word) == (0, 0, 0)
    raw = bytearray.fromhex(word)
    for pos in (0, 50, 126):
        raw[pos // 8] ^= 1 << (pos % 8)
    out = code.decode(raw.hex())
    assert out["status"] == "corrected"
    assert out["error_positions"] == [0, 50, 126]
    assert out["corrected"] == word
    assert code.decode(word)["status"] == "clean"
    with pytest.raises(tribch.InvalidArgument):
        code.decode("zz")


def test_kernel_checks():
    g = tribch.Code("gold2", 5).kernel_check(samples=50, exhaustive=True)
    assert g["ok"] and g["s_histogram"] == {1: 806, 3: 155}
    k = tribch.Code("kasami5", 7).kernel_check(samples=200, seed=3)
    assert k["ok"] and set(k["s0_histogram"]) <= {2, 8}


def test_macwilliams_rejects_inconsistent_input():
    with pytest.raises(tribch.NonIntegralResult):
        tribch.macwilliams([1, 3, 0, 0], 2)
    assert tribch.krawtchouk(5, 2, 1) == 2
