from functools import wraps
from typing import Any, Dict, Optional
import hashlib
import json

import redis

from ..config import settings
from .logging import logger

redis_client = redis.Redis(
    host=settings.REDIS_HOST,
    port=settings.REDIS_PORT,
    db=settings.REDIS_DB,
    decode_responses=True
)


def payload_key(prefix: str, payload: Dict[str, Any]) -> str:
    """Cache key: prefix, schema version and the SHA-256 digest of the canonical JSON payload."""
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)
    digest = hashlib.sha256(canonical.encode("utf-8")).hexdigest()
    return f"{prefix}:v{settings.SCHEMA_VERSION}:{digest}"


def _lookup(key: str) -> Optional[Any]:
    cached = redis_client.get(key)
    if not cached:
        return None
    logger.info(f"Cache hit for key: {key}")
    return json.loads(cached)


def _store(key: str, result: Any, expiration: Optional[int]) -> None:
    redis_client.setex(key, expiration or settings.CACHE_DURATION, json.dumps(result))
    logger.info(f"Cached result for key: {key}")


def cache_result(prefix: str, expiration: int = None) -> Any:
    """
    Cache decorator for async route handlers returning JSON-ready dicts.

    Errors raised by the handler are never cached. When Redis is unreachable
    the handler runs uncached.

    Args:
        prefix (str): Cache key prefix for the endpoint
        expiration (int, optional): Seconds to keep a result, settings.CACHE_DURATION by default
    """
    def decorator(func):
        @wraps(func)
        async def wrapper(*args, **kwargs):
            if not settings.CACHE_ENABLED:
                return await func(*args, **kwargs)

            key = payload_key(prefix, {
                name: (value.dict() if hasattr(value, "dict") else value)
                for name, value in kwargs.items()
            })
            try:
                hit = _lookup(key)
                if hit is not None:
                    return hit
                result = await func(*args, **kwargs)
                _store(key, result, expiration)
                return result
            except redis.RedisError as e:
                logger.error(f"Redis error, serving uncached: {e}")
                return await func(*args, **kwargs)

        return wrapper
    return decorator
