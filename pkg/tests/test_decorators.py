from concurrent.futures import ThreadPoolExecutor

from layerhom.utils.decorators import memoize


def test_caches_by_arguments():
    calls = []

    @memoize
    def square(x):
        calls.append(x)
        return x * x

    assert square(3) == 9
    assert square(3) == 9
    assert square(4) == 16
    assert calls == [3, 4]
    assert square.hits == 1


def test_unhashable_arguments():
    calls = []

    @memoize
    def total(values):
        calls.append(values)
        return sum(values)

    assert total([1, 2]) == 3
    assert total([1, 2]) == 3
    assert len(calls) == 1


def test_clear():
    @memoize
    def ident(x):
        return x

    ident(1)
    ident(1)
    ident.clear()
    assert ident.hits == 0
    assert ident.cache == {}


def test_keeps_metadata():
    @memoize
    def documented(x):
        """Docs."""
        return x

    assert documented.__name__ == 'documented'
    assert documented.__doc__ == 'Docs.'


def test_shared_between_threads():
    @memoize
    def slow(x):
        return object()

    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda _: slow(1), range(16)))
    # every caller ends up with the first stored value
    assert all(r is slow(1) for r in results)
