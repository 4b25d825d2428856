"""Canonical encoding, content hashing, and key/value validation.

Every durable artifact (journal payloads, snapshots, content hashes, CLI
output) uses one canonical form: UTF-8 JSON with lexicographically sorted
map keys and no insignificant whitespace. Identical logical content always
serializes to identical bytes, which is what makes hashing and replay
deterministic.
"""

from __future__ import annotations

import hashlib
import json
from typing import Union

from .errors import AethonError

# Stored values are JSON-shaped: text, integer, decimal, boolean, and
# finite-depth lists/string-keyed maps of the same.
Value = Union[str, int, float, bool, list, dict]

MAX_VALUE_DEPTH = 64


def canonical_json(doc: object) -> str:
    """Serialize ``doc`` to the canonical single-line JSON form."""
    return json.dumps(
        doc,
        sort_keys=True,
        separators=(",", ":"),
        ensure_ascii=False,
        allow_nan=False,
    )


def sha256_hex(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def content_digest(doc: object) -> str:
    """Hex digest of the canonical serialization of ``doc``."""
    return sha256_hex(canonical_json(doc))


def validate_key(key: object) -> str:
    """Check a memory key: non-empty dot-separated segments, no whitespace.

    Whitespace (which includes the journal's record separator, a newline)
    is rejected so keys can appear verbatim in journal lines and reports.
    """
    if not isinstance(key, str) or not key:
        raise AethonError("INVALID_KEY", f"key must be a non-empty string, got {key!r}")
    if any(ch.isspace() for ch in key):
        raise AethonError("INVALID_KEY", f"key contains whitespace: {key!r}")
    if any(not segment for segment in key.split(".")):
        raise AethonError("INVALID_KEY", f"key has an empty dot-segment: {key!r}")
    return key


def validate_value(value: object, _depth: int = 0) -> Value:
    """Check that ``value`` is storable and canonically serializable."""
    if _depth > MAX_VALUE_DEPTH:
        raise AethonError("INVALID_VALUE", "value nesting exceeds maximum depth")
    if isinstance(value, bool) or isinstance(value, int) or isinstance(value, str):
        return value
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise AethonError("INVALID_VALUE", "non-finite numbers are not storable")
        return value
    if isinstance(value, list):
        for item in value:
            validate_value(item, _depth + 1)
        return value
    if isinstance(value, dict):
        for k, v in value.items():
            if not isinstance(k, str):
                raise AethonError("INVALID_VALUE", f"map keys must be strings, got {k!r}")
            validate_value(v, _depth + 1)
        return value
    raise AethonError("INVALID_VALUE", f"unsupported value type: {type(value).__name__}")
