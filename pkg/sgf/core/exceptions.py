"""Errors raised by sgf operations.

Every error carries a machine-readable ``reason`` which the command line front end
reports verbatim, so callers can tell a malformed input from a construction that ran
out of budget.
"""

# Copyright (C) 2026 sgf contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions
# and limitations under the License.

from typing import Any, Dict, Optional


class SgfError(Exception):
    """Base class of every error raised by sgf."""

    reason = "SGF_ERROR"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = dict(details or {})

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable form used by the command line front end."""
        return {"error": self.reason, "message": self.message, "details": self.details}


class InvalidInput(SgfError):
    """Raised when an input violates the precondition of an operation."""

    reason = "INVALID_INPUT"


class AlphabetError(InvalidInput):
    """Raised when a letter lies outside the generators of the free group."""


class InfiniteIndex(SgfError):
    """Raised when an operation needs a finite-index subgroup."""

    reason = "INFINITE_INDEX"


class AvoidInSubgroup(SgfError):
    """Raised when a word that should be avoided already lies in the subgroup."""

    reason = "AVOID_IN_SUBGROUP"


class AlreadySmaller(SgfError):
    """Raised when a finite-index subgroup cannot be enlarged to the requested index."""

    reason = "ALREADY_SMALLER"


class CapExceeded(SgfError):
    """Raised when an enumeration would exceed one of the configured caps."""

    reason = "CAP_EXCEEDED"

    def __init__(self, cap: str, limit: int, needed: Optional[int] = None):
        details: Dict[str, Any] = {"cap": cap, "limit": limit}
        if needed is not None:
            details["needed"] = needed
        message = f"{cap} cap of {limit} exceeded"
        if needed is not None:
            message += f" (needed {needed})"
        super().__init__(message + "; raise the cap or pick a smaller quotient", details)
        self.cap = cap
        self.limit = limit


class LiftNotFound(SgfError):
    """Raised when no short word maps outside an image product set."""

    reason = "LIFT_NOT_FOUND"


class SearchExhausted(SgfError):
    """Raised when a quotient search runs out of its configured budget."""

    reason = "SEARCH_EXHAUSTED"
