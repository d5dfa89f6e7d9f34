import pytest

import zpscodes


def test_gray_tables():
    assert zpscodes.gray_table(3, 2, [4, 7]) == "4 -> (211)\n7 -> (022)\n"
    assert zpscodes.gray_scalar(2, 2, 3) == [1, 0]
    assert zpscodes.gray_vec(3, 2, [1, 8]) == [1, 0, 0, 0, 0, 2]
    assert zpscodes.gray_preimage(3, 2, [2, 2, 1]) == [5]
    assert zpscodes.gray_preimage(3, 2, [0, 1, 0]) is None


def test_lee_weight():
    assert zpscodes.lee_weight(3, 2, [4, 8]) == 4


def test_code_type_and_dual():
    assert zpscodes.code_type(3, 2, [[3, 3], [0, 3]]) == [0, 2]
    assert zpscodes.dual(3, 2, [[3]]) == [[3]]
    assert zpscodes.dual(3, 2, [[1]]) == []
    assert len(zpscodes.codewords(3, 2, [[1, 2]])) == 9


def test_analyze_report():
    report = zpscodes.analyze(3, 2, [[3]])
    assert report["is_mldr"] is True
    assert report["is_self_dual"] is True
    assert report["kernel_dim"] == 1
    assert report["mlds_slack"] == {"num": 1, "den": 2}
    zero = zpscodes.analyze(3, 2, [], n=2)
    assert zero["size"] == 1
    assert zero["d_lee"] is None


def test_kernel():
    assert zpscodes.kernel_dim(3, 2, [[1]]) == 1
    assert zpscodes.kernel_dim_bounds([1, 0]) == {1, 2}


def test_search():
    records = zpscodes.search(3, 2, 1, exhaustive=True, targets=["mldr"])
    assert [r["rows"] for r in records] == [[[1]], [[3]]]
    again = zpscodes.search(2, 3, 2, budget=40, seed=9)
    assert again == zpscodes.search(2, 3, 2, budget=40, seed=9)


def test_errors():
    with pytest.raises(zpscodes.ZpsError):
        zpscodes.gray_scalar(4, 2, 1)
    with pytest.raises(ValueError):
        zpscodes.search(2, 2, 1, budget=0)
    with pytest.raises(zpscodes.LimitExceeded):
        zpscodes.codewords(3, 2, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], max_enum=100)
