import pytest

from wreathpow.utils import iterate_in_chunks


def test_splits_generator():
    generator = iterate_in_chunks((x for x in range(7)), 3)
    assert next(generator) == [0, 1, 2]
    assert next(generator) == [3, 4, 5]
    assert next(generator) == [6]
    with pytest.raises(StopIteration):
        next(generator)


def test_exact_multiple():
    assert list(iterate_in_chunks("abcd", 2)) == [["a", "b"], ["c", "d"]]


def test_zero_items():
    generator = iterate_in_chunks([], 5)
    with pytest.raises(StopIteration):
        next(generator)
