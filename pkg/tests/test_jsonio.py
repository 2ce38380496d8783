import random

import pytest

from schurtoeplitz.algebras import b_algebra_basis
from schurtoeplitz.classify import classify
from schurtoeplitz.errors import FormatError
from schurtoeplitz.exact import ComplexRational
from schurtoeplitz.jsonio import (
    decode_algebra,
    decode_bt,
    decode_scalar,
    decode_schur,
    dumps,
    encode_algebra,
    encode_bt,
    encode_result,
    encode_scalar,
    encode_schur,
    loads,
)
from schurtoeplitz.sampling import random_bt, random_schur
from schurtoeplitz.schur import SchurShape

S21 = SchurShape(2, 1)


def test_scalar_round_trip():
    z = ComplexRational("-3/4", "1/2")
    assert encode_scalar(z) == {"re": "-3/4", "im": "1/2"}
    assert decode_scalar(encode_scalar(z)) == z
    assert decode_scalar("5") == 5


@pytest.mark.parametrize("bad", [{"re": "0.5"}, {"re": "1/0"}, {"im": "1"}, [1], True, {"re": "x"}])
def test_scalar_errors(bad):
    with pytest.raises(FormatError):
        decode_scalar(bad)


def test_schur_and_bt_round_trip():
    rng = random.Random(1)
    for _ in range(10):
        a = random_schur(rng, S21)
        assert decode_schur(loads(dumps(encode_schur(a)))) == a
        t = random_bt(rng, 3, S21)
        assert decode_bt(loads(dumps(encode_bt(t)))) == t


def test_schur_x_defaults_to_zero():
    a = decode_schur({"sigma": 2, "tau": 1, "lambda": {"re": "2", "im": "0"}})
    assert a.lam == 2 and a.X.is_zero()


def test_error_paths_are_reported():
    obj = encode_bt(random_bt(random.Random(2), 3, S21))
    obj["blocks"]["0"]["X"] = [[{"re": "1/1"}, {"re": "2/1"}]]
    with pytest.raises(FormatError, match=r"blocks\['0'\]\.X"):
        decode_bt(obj)
    obj = encode_bt(random_bt(random.Random(2), 3, S21))
    obj["blocks"]["7"] = obj["blocks"]["0"]
    with pytest.raises(FormatError):
        decode_bt(obj)


def test_shape_guard_and_relaxed():
    obj = {"sigma": 3, "tau": 1, "lambda": "1"}
    with pytest.raises(FormatError):
        decode_schur(obj)
    assert decode_schur(obj, relaxed=True).shape.sigma == 3


def test_algebra_payloads():
    elems = b_algebra_basis(2, S21).elements()
    for closed in (False, True):
        payload = loads(dumps(encode_algebra(elems, closed=closed)))
        assert decode_algebra(payload) == elems
    with pytest.raises(FormatError):
        decode_algebra({"generators": []})
    with pytest.raises(FormatError):
        decode_algebra({"things": []})


def test_mixed_ambient_rejected():
    a = encode_bt(random_bt(random.Random(3), 3, S21))
    b = encode_bt(random_bt(random.Random(3), 2, S21))
    with pytest.raises(FormatError, match="ambient"):
        decode_algebra({"generators": [a, b]})


def test_truncated_json_position():
    with pytest.raises(FormatError, match="line 1 column"):
        loads('{"generators": [')


def test_result_encoding():
    out = encode_result(classify(b_algebra_basis(3, S21)))
    assert out["verdict"] == "type_ii"
    assert out["dimension"] == 11 and out["certificate"] == "certified"
    assert dumps(out).endswith("\n")
