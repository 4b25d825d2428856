"""Monotonic, lexicographically sortable identifier generation.

Identifiers are runtime-assigned strings like ``D00000003``: a one-letter
kind prefix and a zero-padded counter, so lineage listings and journal
payloads sort in creation order. Replay never regenerates ids; it observes
the ids carried in journal payloads and advances the counters past them.
"""

from __future__ import annotations

from .errors import AethonError

KIND_PREFIX = {
    "definition": "D",
    "layer": "L",
    "overlay": "O",
    "instance": "I",
}
_PAD = 8


class IdGenerator:
    def __init__(self) -> None:
        self._last = {kind: 0 for kind in KIND_PREFIX}

    def fresh(self, kind: str) -> str:
        self._last[kind] += 1
        return f"{KIND_PREFIX[kind]}{self._last[kind]:0{_PAD}d}"

    def observe(self, kind: str, identifier: str) -> None:
        """Advance the counter so a replayed id is never handed out again."""
        prefix = KIND_PREFIX[kind]
        if not identifier.startswith(prefix) or not identifier[len(prefix):].isdigit():
            raise AethonError("MALFORMED_RECORD", f"bad {kind} identifier: {identifier!r}")
        number = int(identifier[len(prefix):])
        if number > self._last[kind]:
            self._last[kind] = number

    def state_doc(self) -> dict:
        return dict(sorted(self._last.items()))
