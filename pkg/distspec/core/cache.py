"""
Caches for enumerated isomorphism classes: an in-process LRU and an optional
on-disk store with one graph6 string per line.
"""
from pathlib import Path
from typing import Dict, List, Optional

from distspec.models.enumeration import EnumScope
from distspec.models.graph import Graph
from distspec.utils.graph6 import from_graph6, to_graph6
from distspec.utils.hash import scope_key
from distspec.utils.logger import get_logger

logger = get_logger("cache")


class LRUCache:
    """
    Bounded in-memory cache; the least recently used key is evicted when full.
    """

    def __init__(self, max_size: int):
        self.max_size = max_size
        self.cache: Dict[str, List[Graph]] = {}
        self.order: List[str] = []  # for LRU eviction

    def get(self, key: str) -> Optional[List[Graph]]:
        if key not in self.cache:
            return None
        self.order.remove(key)
        self.order.append(key)
        return self.cache[key]

    def set(self, key: str, value: List[Graph]) -> None:
        if key in self.cache:
            self.order.remove(key)
        elif len(self.cache) >= self.max_size:
            oldest = self.order.pop(0)
            del self.cache[oldest]
        self.cache[key] = value
        self.order.append(key)


class EnumerationCache:
    """Two-level cache keyed by the scope description"""

    def __init__(self, cache_dir: Optional[str] = None, max_size: int = 64):
        self.memory = LRUCache(max_size)
        self.directory = Path(cache_dir) if cache_dir else None

    def _path(self, key: str) -> Optional[Path]:
        return self.directory / f"{key}.g6" if self.directory else None

    def get(self, scope: EnumScope) -> Optional[List[Graph]]:
        key = scope_key(scope.describe())
        hit = self.memory.get(key)
        if hit is not None:
            return hit
        path = self._path(key)
        if path is None or not path.exists():
            return None
        try:
            graphs = [from_graph6(line) for line in path.read_text().splitlines() if line.strip()]
        except Exception as exc:
            # A corrupt file is treated as a miss and rewritten on the next store.
            logger.warning("cache_read_failed", path=str(path), error=str(exc))
            return None
        self.memory.set(key, graphs)
        return graphs

    def set(self, scope: EnumScope, graphs: List[Graph]) -> None:
        key = scope_key(scope.describe())
        self.memory.set(key, graphs)
        path = self._path(key)
        if path is None:
            return
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text("".join(f"{to_graph6(g)}\n" for g in graphs))
        except OSError as exc:
            logger.warning("cache_write_failed", path=str(path), error=str(exc))
