import json
import random
from fractions import Fraction

import pytest

from quasilie.catalog import builtin, canonical_names
from quasilie.double import build_double
from quasilie.homogeneous import HomDatum
from quasilie.liealg import Verdict
from quasilie.serialize import (bivector_from_entries,
                                bivector_to_entries, datum_from_dict,
                                datum_to_dict, double_to_dict, dumps_canonical,
                                frac_str, parse_frac, qb_from_dict, qb_to_dict,
                                rmatrix_from_dict, subspace_from_rows,
                                subspace_to_rows, tensor_to_entries,
                                verdict_to_dict)
from quasilie.subspace import Subspace
from quasilie.tensor import Tensor, rarray

from conftest import rand_antisym


def test_fraction_text_forms():
    assert frac_str(Fraction(3, 2)) == "3/2"
    assert frac_str(Fraction(-7)) == "-7"
    assert parse_frac("3/2") == Fraction(3, 2)
    assert parse_frac("4") == Fraction(4)
    assert parse_frac(5) == Fraction(5)
    for bad in ("1/0", "a", None, 1.5):
        with pytest.raises(ValueError):
            parse_frac(bad)


def test_qb_roundtrip_all_catalog():
    for name in canonical_names():
        qb = builtin(name).algebra
        again = qb_from_dict(qb_to_dict(qb))
        assert again == qb
        assert again.algebra.labels == qb.algebra.labels


def test_qb_dict_sparse_conventions():
    d = qb_to_dict(builtin("sl2_coboundary").algebra)
    for i, j, k, _ in d["bracket"]:
        assert i < j
    for i, j, k, _ in d["delta"]:
        assert j < k
    for i, j, k, _ in d["phi"]:
        assert i < j < k


def test_qb_from_dict_rejects_garbage():
    with pytest.raises(ValueError):
        qb_from_dict({"bracket": []})
    with pytest.raises(ValueError):
        qb_from_dict({"dim": 2, "bracket": [[1, 0, 0, "1"]]})    # needs i < j
    with pytest.raises(ValueError):
        qb_from_dict({"dim": 2, "bracket": [[0, 1, 5, "1"]]})    # out of range
    with pytest.raises(ValueError):
        qb_from_dict({"dim": 2, "delta": [[0, 1, 1, "1"]]})      # needs j < k
    with pytest.raises(ValueError):
        qb_from_dict({"dim": 3, "phi": [[0, 2, 1, "1"]]})        # needs i<j<k


def test_bivector_roundtrip():
    rng = random.Random(60)
    for _ in range(10):
        r = rand_antisym(rng, 4)
        entries = bivector_to_entries(r)
        for i, j, _ in entries:
            assert i < j
        assert bivector_from_entries(4, entries) == r


def test_rmatrix_general_index_forms():
    t = rmatrix_from_dict({"dim": 2, "r": [[0, 1, "1/2"]]})
    assert t.data[0, 1] == Fraction(1, 2) and t.data[1, 0] == Fraction(-1, 2)
    t2 = rmatrix_from_dict({"dim": 2, "r": [[1, 0, "-1/2"]]})
    assert t2 == t
    t3 = rmatrix_from_dict({"dim": 2, "r": [[0, 1, "1/2"], [1, 0, "-1/2"]]})
    assert t3 == t
    with pytest.raises(ValueError, match="not antisymmetric"):
        rmatrix_from_dict({"dim": 2, "r": [[0, 1, "1"], [1, 0, "1"]]})
    with pytest.raises(ValueError, match="not antisymmetric"):
        rmatrix_from_dict({"dim": 2, "r": [[0, 0, "1"]]})
    with pytest.raises(ValueError, match="duplicate"):
        rmatrix_from_dict({"dim": 2, "r": [[0, 1, "1"], [0, 1, "1"]]})


def test_subspace_roundtrip():
    s = Subspace(3, rarray([[1, 2, 3], [0, 1, Fraction(1, 2)]]))
    rows = subspace_to_rows(s)
    assert subspace_from_rows(rows, 3) == s
    assert subspace_from_rows([], 3) == Subspace.zero(3)


def test_datum_roundtrip_inline_and_default():
    entry = builtin("aff1")
    d = HomDatum(entry.algebra, Subspace(2, rarray([[0, 1]])),
                 Tensor.from_alternating_entries(2, 2, [((0, 1), Fraction(1, 2))]))
    obj = datum_to_dict(d)
    back = datum_from_dict(obj)
    assert back.qb == d.qb and back.h == d.h and back.r == d.r
    obj2 = datum_to_dict(d, inline_algebra=False)
    assert "algebra" not in obj2
    back2 = datum_from_dict(obj2, default_qb=entry.algebra)
    assert back2.h == d.h and back2.r == d.r
    with pytest.raises(ValueError):
        datum_from_dict(obj2)


def test_double_dict_shape():
    dbl = build_double(builtin("sl2_coboundary").algebra)
    d = double_to_dict(dbl)
    assert d["dim"] == 6
    assert d["source"] == qb_to_dict(dbl.source)
    assert len(d["q_matrix"]) == 6
    assert d["q_matrix"][0][3] == "1" and d["q_matrix"][0][0] == "0"
    # bracket entries rebuild the double's algebra
    from quasilie.liealg import LieAlgebra
    rebuilt = LieAlgebra.from_brackets(6, [(i, j, k, v) for i, j, k, v in d["bracket"]])
    assert rebuilt == dbl.algebra


def test_verdict_serialization():
    v = Verdict(True)
    assert verdict_to_dict(v) == {"ok": True, "witness": None, "residual": None}
    v2 = Verdict(False, witness=(0, 1), residual=rarray([0, 2, 0]))
    d = verdict_to_dict(v2)
    assert d["ok"] is False and d["witness"] == [0, 1]
    assert d["residual"] == [[[1], "2"]]


def test_dumps_canonical_is_stable():
    obj = {"b": 1, "a": [1, 2], "c": {"y": "2", "x": "1"}}
    assert dumps_canonical(obj) == dumps_canonical(json.loads(dumps_canonical(obj)))


def test_tensor_entries_sorted():
    t = rand_antisym(random.Random(61), 4, 3)
    entries = tensor_to_entries(t)
    assert entries == sorted(entries)
