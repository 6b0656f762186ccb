"""
Process pool used to run verification suites side by side.
"""

from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager


@contextmanager
def setup_managers(max_workers: int):
    executor: ProcessPoolExecutor = ProcessPoolExecutor(max_workers=max_workers)
    try:
        yield executor
    finally:
        executor.shutdown(False, cancel_futures=True)
