import functools
import logging
import time

log = logging.getLogger(__name__)


def time_method(f):
    @functools.wraps(f)
    def wrap(*args, **kwargs):
        time1 = time.perf_counter()
        ret = f(*args, **kwargs)
        time2 = time.perf_counter()
        log.debug(f"{f.__qualname__} function took {(time2 - time1) * 1000.0:.3f} ms")
        return ret

    return wrap
