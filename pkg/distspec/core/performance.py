"""
Timing, counters and the process pool used to spread eigen-solves over workers.
"""
import time
from concurrent.futures import ProcessPoolExecutor
from functools import wraps
from typing import Any, Callable, Dict, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class MetricsCollector:
    """Simple counters for the command-line run summary"""

    def __init__(self):
        self.metrics = {
            "canonicalizations": 0,
            "solves": 0,
            "durations": [],
            "errors_total": 0,
            "cache_hits": 0,
            "cache_misses": 0,
        }

    def increment(self, name: str, amount: int = 1):
        self.metrics[name] += amount

    def add_duration(self, duration: float):
        self.metrics["durations"].append(duration)
        # Keep only last 1000 measurements
        if len(self.metrics["durations"]) > 1000:
            self.metrics["durations"] = self.metrics["durations"][-1000:]

    def reset(self):
        self.__init__()

    def get_stats(self) -> Dict[str, Any]:
        durations = self.metrics["durations"]
        lookups = self.metrics["cache_hits"] + self.metrics["cache_misses"]
        return {
            "canonicalizations": self.metrics["canonicalizations"],
            "solves": self.metrics["solves"],
            "errors_total": self.metrics["errors_total"],
            "cache_hit_ratio": self.metrics["cache_hits"] / lookups if lookups else 0,
            "total_time": sum(durations),
            "max_time": max(durations) if durations else 0,
        }


metrics_collector = MetricsCollector()


def timed(func: Callable):
    """Decorator for timing function execution"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        try:
            return func(*args, **kwargs)
        except Exception:
            metrics_collector.increment("errors_total")
            raise
        finally:
            metrics_collector.add_duration(time.perf_counter() - start_time)

    return wrapper


class ComputePool:
    """
    Order-preserving parallel map. Runs in-process when workers == 1 so that
    results do not depend on the worker count.
    """

    def __init__(self, workers: int = 1, chunksize: int = 16):
        self.workers = max(1, workers)
        self.chunksize = chunksize

    def map(self, func: Callable[[T], R], items: Iterable[T]) -> List[R]:
        items = list(items)
        if self.workers == 1 or len(items) < 2 * self.chunksize:
            return [func(item) for item in items]
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(func, items, chunksize=self.chunksize))
