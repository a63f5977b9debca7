# core/errors/handlers.py
import logging
import traceback
from typing import Any, Dict, Optional, Tuple

from core.errors.exceptions import PvcError

logger = logging.getLogger(__name__)


class ErrorResponse:
    @staticmethod
    def create_error_response(
        error_type: str,
        message: str,
        details: Optional[Dict[str, Any]] = None,
    ) -> Dict[str, Any]:
        return {
            "error": {
                "type": error_type,
                "message": message,
                "details": details or {},
            }
        }


def handle_exception(exc: BaseException) -> Tuple[int, Dict[str, Any]]:
    """Map an exception to (exit code, error payload)."""
    if isinstance(exc, PvcError):
        logger.debug(f"{type(exc).__name__}: {exc.message}")
        return exc.exit_code, ErrorResponse.create_error_response(
            exc.category, exc.message, exc.details
        )

    logger.error(f"Unhandled exception: {str(exc)}")
    logger.error(traceback.format_exc())
    return 1, ErrorResponse.create_error_response(
        "internal_error", "An unexpected error occurred", {"exception": type(exc).__name__}
    )
