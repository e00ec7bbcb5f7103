import logging
from concurrent.futures.thread import ThreadPoolExecutor

log = logging.getLogger(__name__)


# Same as using the ThreadPoolExecutor directly, plus a done-callback that logs uncaught exceptions
# of the oracle's enumeration chunks.
class ActionQueue:
    def __init__(self, workers=None):
        self.thread_pool_executor = ThreadPoolExecutor(max_workers=workers, thread_name_prefix="oracle")

    def submit(self, function, *args, **kwargs):
        future = self.thread_pool_executor.submit(function, *args, **kwargs)
        future.add_done_callback(self._on_future_done)
        return future

    def shutdown(self):
        self.thread_pool_executor.shutdown(wait=True)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.shutdown()

    def _on_future_done(self, future):
        exc = future.exception()
        if exc is not None:
            log.exception("Logging an uncaught exception (ActionQueue)", exc_info=exc)
