"""Domain errors carrying stable machine-readable codes."""

from __future__ import annotations


class AethonError(Exception):
    """Raised for every domain-level failure.

    ``code`` is a stable upper-snake name (e.g. ``UNKNOWN_LAYER``,
    ``CAPABILITY_WIDENING``) suitable for scripting against; the message
    is human-oriented detail.
    """

    def __init__(self, code: str, message: str = "") -> None:
        super().__init__(message or code)
        self.code = code

    def __repr__(self) -> str:
        return f"AethonError({self.code!r}, {str(self)!r})"
