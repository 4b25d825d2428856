"""Operation counters proving what work an operation actually performed.

The complexity story of this runtime is structural, so the substrate is
instrumented at its data accessors: any code path that reads a stored
entry, copies one into a detached structure, or touches definition body
bytes goes through a method here. Spawning and deriving instances must
leave every counter untouched; flattening and materializing must not.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass


@dataclass(frozen=True)
class CounterSnapshot:
    entry_reads: int = 0
    entry_copies: int = 0
    bytes_copied: int = 0
    definition_bytes_read: int = 0
    capability_copies: int = 0

    def __sub__(self, other: "CounterSnapshot") -> "CounterSnapshot":
        return CounterSnapshot(
            entry_reads=self.entry_reads - other.entry_reads,
            entry_copies=self.entry_copies - other.entry_copies,
            bytes_copied=self.bytes_copied - other.bytes_copied,
            definition_bytes_read=self.definition_bytes_read - other.definition_bytes_read,
            capability_copies=self.capability_copies - other.capability_copies,
        )

    def as_doc(self) -> dict:
        return {
            "bytes_copied": self.bytes_copied,
            "capability_copies": self.capability_copies,
            "definition_bytes_read": self.definition_bytes_read,
            "entry_copies": self.entry_copies,
            "entry_reads": self.entry_reads,
        }


class OpCounters:
    """Mutable, thread-safe counter block shared by one store."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.entry_reads = 0
        self.entry_copies = 0
        self.bytes_copied = 0
        self.definition_bytes_read = 0
        self.capability_copies = 0

    def read_entries(self, n: int = 1) -> None:
        with self._lock:
            self.entry_reads += n

    def copy_entries(self, n: int = 1) -> None:
        with self._lock:
            self.entry_copies += n

    def copy_bytes(self, n: int) -> None:
        with self._lock:
            self.bytes_copied += n

    def read_definition_bytes(self, n: int) -> None:
        with self._lock:
            self.definition_bytes_read += n

    def copy_capabilities(self, n: int = 1) -> None:
        with self._lock:
            self.capability_copies += n

    def snapshot(self) -> CounterSnapshot:
        with self._lock:
            return CounterSnapshot(
                entry_reads=self.entry_reads,
                entry_copies=self.entry_copies,
                bytes_copied=self.bytes_copied,
                definition_bytes_read=self.definition_bytes_read,
                capability_copies=self.capability_copies,
            )
