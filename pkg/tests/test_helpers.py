import pytest

from services.partitions import Partition
from utils.exceptions import PartitionError
from utils.helpers import monomial_str, parse_eta, render_table, run_parallel


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2,1,1", Partition.of(2, 1, 1)),
        ("1,2,1", Partition.of(2, 1, 1)),
        ("1^2,2", Partition.of(2, 1, 1)),
        ("(3, 1)", Partition.of(3, 1)),
        ("()", Partition()),
        ("", Partition()),
    ],
)
def test_parse_eta(text, expected):
    assert parse_eta(text) == expected


@pytest.mark.parametrize("text", ["0", "2,-1", "a", "2^x"])
def test_parse_eta_rejects(text):
    with pytest.raises(PartitionError):
        parse_eta(text)


def test_monomial_str():
    assert monomial_str(Partition()) == "1"
    assert monomial_str(Partition.of(2, 1, 1)) == "p1^2*p2"


def test_render_table():
    assert render_table([[1, -1], [10, 2]]) == " 1 -1\n10  2"
    assert render_table([[1]], labels=["(1)"]) == "(1)  1"


def test_run_parallel_inline_preserves_order():
    assert run_parallel(abs, [-3, 2, -1]) == [3, 2, 1]


def test_run_parallel_uses_a_process_pool(mocker):
    executor = mocker.patch("utils.helpers.ProcessPoolExecutor")
    executor.return_value.__enter__.return_value.map.return_value = iter([3, 2, 1])
    assert run_parallel(abs, [-3, 2, -1], jobs=2) == [3, 2, 1]
    executor.assert_called_once_with(max_workers=2)
