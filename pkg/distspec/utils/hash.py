# distspec/utils/hash.py
# Hashing helpers for cache keys and report digests.

import hashlib
import json
from typing import Any


def scope_key(*args: Any, **kwargs: Any) -> str:
    """
    Build a stable cache key from arguments.

    Args:
        args, kwargs: JSON-serialisable description of an enumeration scope.

    Returns:
        str: "distspec_<md5 hex>".
    """
    key_data = json.dumps({"args": args, "kwargs": kwargs}, sort_keys=True, default=str)
    return f"distspec_{hashlib.md5(key_data.encode()).hexdigest()}"


def digest(payload: str) -> str:
    """SHA-256 of a serialised report, used to check byte-identical reruns."""
    return hashlib.sha256(payload.encode()).hexdigest()
