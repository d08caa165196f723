from collections.abc import Hashable
import functools
from hashlib import sha1 as hash_
import logging
import threading


class memoize(object):
    """
    Decorator that caches a function's return value each time it is called with
    the same arguments. Insertion is guarded by a lock so worker threads can
    share one cache.
    """
    def __init__(self, func):
        self.func = func
        self.cache = {}
        self.hits = 0
        self._lock = threading.Lock()
        self.log = logging.getLogger('memoize')
        functools.update_wrapper(self, func)

    @classmethod
    def _hash(cls, string):
        return hash_(string.encode()).hexdigest()

    def _key(self, args, kwargs):
        key = (args, tuple(sorted(kwargs.items())))
        if isinstance(key, Hashable):
            try:
                hash(key)
                return key
            except TypeError:
                pass
        # Unhashable arguments fall back to their text form
        return self._hash(str(args) + str(kwargs))

    def __call__(self, *args, **kwargs):
        key = self._key(args, kwargs)
        with self._lock:
            if key in self.cache:
                self.hits += 1
                return self.cache[key]

        self.log.debug('Cache miss for {}'.format(self.func.__name__))
        value = self.func(*args, **kwargs)

        with self._lock:
            # another thread may have won the race; keep the first value
            value = self.cache.setdefault(key, value)

        return value

    def clear(self):
        with self._lock:
            self.cache.clear()
            self.hits = 0

    def __get__(self, obj, objtype):
        return functools.partial(self.__call__, obj)
