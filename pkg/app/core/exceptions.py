# =====================================================================
# FILE: app/core/exceptions.py
# =====================================================================

from typing import Optional


class MagmaError(Exception):
    """Base error; `detail` is the user-facing message, `exit_code` the CLI status"""

    exit_code = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class UsageError(MagmaError):
    pass


class InvalidCodeError(MagmaError):
    """Malformed table or partial-map code"""


class OrderMismatchError(MagmaError):
    pass


class ShapeMismatchError(MagmaError):
    """Partial functions compared across different arities or carriers"""


class NonTotalError(MagmaError):
    pass


class BudgetExceededError(MagmaError):
    pass


class CatalogError(MagmaError):
    pass
