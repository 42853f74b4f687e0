"""
Base service class with common functionality for all services.
"""
from typing import Any, Optional

from distspec.core.config import RunConfig
from distspec.core.exceptions import ScopeLimitError
from distspec.utils.logger import get_logger

logger = get_logger("services")


class BaseService:
    """Common plumbing: bound logger, run configuration and scope checks"""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig()
        self.logger = logger.bind(service=self.__class__.__name__)

    def _check_limit(self, limit: str, value: Any, ceiling: Any) -> None:
        """Reject requests beyond a desk-scale limit"""
        if value > ceiling:
            self.logger.warning("scope_rejected", limit=limit, value=value, ceiling=ceiling)
            raise ScopeLimitError(limit, value, ceiling)

    def _log_operation(self, operation: str, **kwargs: Any) -> None:
        """Log service operations"""
        self.logger.info(f"service_operation_{operation}", operation=operation, **kwargs)
