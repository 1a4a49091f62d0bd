import logging
from concurrent.futures import ProcessPoolExecutor

from tqdm import tqdm

logger = logging.getLogger(__name__)


class ChunkedJob:
    """Maps ``func`` over ``items`` in chunks, optionally across processes.

    ``func`` takes a list of items and returns a list of results of the same
    length. Results come back in input order whatever the worker count.
    """

    def __init__(self, func, items, workers=1, chunk_size=256, progress=False,
                 log_callback=None, description="encoding"):
        self.func = func
        self.items = list(items)
        self.workers = max(1, int(workers or 1))
        self.chunk_size = max(1, int(chunk_size))
        self.progress = progress
        self.log_callback = log_callback
        self.description = description
        self.is_running = True

    def log(self, message):
        if self.log_callback:
            self.log_callback(message)
        else:
            logger.info(message)

    def stop(self):
        self.is_running = False

    def _chunks(self):
        return [self.items[i:i + self.chunk_size]
                for i in range(0, len(self.items), self.chunk_size)]

    def run(self):
        chunks = self._chunks()
        total = len(self.items)
        self.log(f"{self.description}: {total} item(s) in {len(chunks)} chunk(s), "
                 f"{self.workers} worker(s)")
        results = []
        with tqdm(total=total, desc=self.description, disable=not self.progress,
                  leave=False) as bar:
            if self.workers == 1 or len(chunks) <= 1:
                for chunk in chunks:
                    if not self.is_running:
                        break
                    results.extend(self.func(chunk))
                    bar.update(len(chunk))
            else:
                with ProcessPoolExecutor(max_workers=self.workers) as pool:
                    futures = [pool.submit(self.func, chunk) for chunk in chunks]
                    for future, chunk in zip(futures, chunks):
                        if not self.is_running:
                            for pending in futures:
                                pending.cancel()
                            break
                        results.extend(future.result())
                        bar.update(len(chunk))
        if len(results) != total:
            self.log(f"{self.description}: stopped after {len(results)}/{total} item(s)")
        return results


def run_chunked(func, items, workers=1, chunk_size=256, progress=False,
                log_callback=None, description="encoding"):
    return ChunkedJob(func, items, workers, chunk_size, progress,
                      log_callback, description).run()
